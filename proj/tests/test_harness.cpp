#include <fstream>

#include "doctest.h"
#include "semilink/harness.hpp"
#include "semilink/io.hpp"
#include "test_rings.hpp"

using namespace semilink;
using namespace testutil;

namespace {

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() / ("semilink_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

const char* kCubic = "ring R { field = QQ; vars = [x]; relations = [\"x^3\"] }\n";

RunOptions quick() {
  RunOptions o;
  o.jobs = 1;
  return o;
}

}  // namespace

TEST_CASE("ring files") {
  auto R = parse_ring(
      "# comment\nring S { field = GF(32003); vars = [x:3, y:4, z:5];\n"
      "  relations = [\"y^2 - x*z\", \"x^3 - y*z\", \"x^2*y - z^2\"] }");
  CHECK(R->name() == "S");
  CHECK(R->ambient()->nvars() == 3);
  CHECK(R->dim() == 1);
  auto f = semigroup();
  CHECK(R->hilbert_series() == f.R->hilbert_series());

  auto P = parse_ring("ring P { vars = [x, y]; relations = [] }");
  CHECK(P->dim() == 2);

  CHECK_THROWS_AS(parse_ring("ring R { vars = [x]; relations = [\"x + x^2\"] }"), Error);
  CHECK_THROWS_AS(parse_ring("ring R { vars = [x]; relations = [\"y\"] }"), Error);
  CHECK_THROWS_AS(parse_ring("ring R { vars = [x] relations = [] }"), ParseError);
  CHECK_THROWS_AS(parse_ring("ring R { field = GF(32003); vars = [x]"), ParseError);
}

TEST_CASE("module files") {
  auto f = square_zero();
  auto M = parse_module("module M over R { generators = [a:0, b:1]; relations = [\"x*a - b\", \"y*b\", \"(x + y)*a\"] }",
                        f.R);
  CHECK(M->degrees() == std::vector<int>{0, 1});
  // quotient_dim oracle: R^2 has 6 basis elements, the relations span x a - b, y b, x a + y a, and x b.
  CHECK(M->hilbert_series().length().value() == 2);

  auto k = residue_field(f);
  auto back = parse_module(format_module(k), f.R);
  CHECK(iso_test(back, k).verdict == IsoVerdict::ProvenIso);
  auto w = canonical_module(f.R);
  CHECK(iso_test(parse_module(format_module(w), f.R), w).verdict == IsoVerdict::ProvenIso);

  CHECK_THROWS_AS(parse_module("module M over R { generators = [g:0]; relations = [\"x*g + g\"] }", f.R), Error);
  CHECK_THROWS_AS(parse_module("module M over R { generators = [x:0]; relations = [] }", f.R), Error);
  CHECK_THROWS_AS(parse_module("module M over R { generators = [g:0]; relations = [\"x*y\"] }", f.R), Error);
  CHECK_THROWS_AS(parse_module("module M over R { generators = [g:0]; relations = [\"g*g\"] }", f.R), Error);
}

TEST_CASE("ideal files") {
  auto f = plane();
  auto a = parse_ideal("ideal a over R { generators = [\"x^2\", \"x*y\"] }", f.R);
  REQUIRE(a.size() == 2);
  CHECK(a[1] == polys(f.S, {"x*y"})[0]);
  CHECK_THROWS_AS(parse_ideal("ideal a over R { generators = [\"x + y^2\"] }", f.R), Error);
}

TEST_CASE("corpus index") {
  auto doc = parse_toml(
      "# top\nversion = 2\nflag = true\nnames = [\"a\", \"b\"]\n\n"
      "[[item]]\nname = \"one\" # trailing\nring = \"r.ring\"\n\n[[item]]\nname = \"two\"\n");
  CHECK(std::get<long>(doc.top["version"]) == 2);
  CHECK(std::get<bool>(doc.top["flag"]));
  CHECK(std::get<std::vector<std::string>>(doc.top["names"]).size() == 2);
  REQUIRE(doc.arrays["item"].size() == 2);
  CHECK(std::get<std::string>(doc.arrays["item"][0]["ring"]) == "r.ring");
  CHECK_THROWS_AS(parse_toml("key = \"open"), ParseError);
  CHECK_THROWS_AS(parse_toml("[[item]\n"), ParseError);

  TempDir dir("index");
  dir.write("corpus.toml",
            "[[item]]\nname = \"b\"\nring = \"r\"\nmodule = \"k\"\nexpect_linkage = \"not_linked\"\n"
            "[[item]]\nname = \"a\"\nring = \"r\"\nmodule = \"k\"\nwrt = \"self\"\n");
  auto items = load_corpus(dir.path);
  REQUIRE(items.size() == 2);
  CHECK(items[0].name == "a");
  CHECK(items[0].wrt == "self");
  CHECK(items[1].wrt == "omega");
  CHECK(items[1].pins.at("expect_linkage") == "not_linked");

  dir.write("corpus.toml", "[[item]]\nname = \"a\"\nring = \"r\"\n");
  CHECK_THROWS_AS(load_corpus(dir.path), ParseError);
}

TEST_CASE("empty corpus") {
  TempDir dir("empty");
  auto results = run_suites(dir.path, suite_names(), quick());
  REQUIRE(results.size() == suite_names().size());
  for (const auto& s : results) CHECK(s.items.empty());
  CHECK(report_passed(results));
  auto j = report_json(results, quick());
  CHECK(j["results"].empty());
  CHECK(j["status"] == "pass");
  CHECK(j["bounds"]["B"] == kDefaultBound);
  CHECK_FALSE(j.contains("timings"));
}

TEST_CASE("pins and load errors") {
  TempDir dir("pins");
  dir.write("cubic.ring", kCubic);
  dir.write("q.mod", "module M over R { generators = [g:0]; relations = [\"x^2*g\"] }\n");
  dir.write("bad.mod", "module M over R { generators = [g:0]; relations = [\"w*g\"] }\n");
  dir.write("corpus.toml",
            "[[item]]\nname = \"agrees\"\nring = \"cubic.ring\"\nmodule = \"k\"\n"
            "expect_linkage = \"horizontally_linked\"\nexpect_lambda = \"q.mod\"\n"
            "[[item]]\nname = \"broken\"\nring = \"cubic.ring\"\nmodule = \"bad.mod\"\n"
            "[[item]]\nname = \"wrong_pin\"\nring = \"cubic.ring\"\nmodule = \"k\"\nexpect_lambda = \"k\"\n");
  auto results = run_suites(dir.path, {"L"}, quick());
  REQUIRE(results[0].items.size() == 3);
  const auto& ok = results[0].items[0];
  const auto& broken = results[0].items[1];
  const auto& wrong = results[0].items[2];
  CHECK(ok.status == ItemStatus::Pass);
  CHECK(ok.conclusions["pins"]["expect_lambda"]["iso"] == "proven_iso");
  CHECK(broken.status == ItemStatus::Fail);
  CHECK(broken.detail.find("load error") != std::string::npos);
  CHECK(wrong.status == ItemStatus::Fail);
  CHECK(wrong.detail.find("expect_lambda") != std::string::npos);
  CHECK(wrong.detail.find("HS(") != std::string::npos);
  CHECK_FALSE(report_passed(results));
  CHECK(report_json(results, quick())["status"] == "fail");
}

TEST_CASE("skips are reported, never passed") {
  TempDir dir("skips");
  dir.write("sz.ring", "ring R { vars = [x, y]; relations = [\"x^2\", \"x*y\", \"y^2\"] }\n");
  dir.write("corpus.toml",
            "[[item]]\nname = \"k\"\nring = \"sz.ring\"\nmodule = \"k\"\n"
            "[[item]]\nname = \"not_semidualizing\"\nring = \"sz.ring\"\nmodule = \"k\"\nwrt = \"k\"\n");
  auto results = run_suites(dir.path, {"L", "A", "C"}, quick());
  for (const auto& s : results)
    for (const auto& r : s.items) {
      CHECK(r.status == ItemStatus::Skipped);
      CHECK(r.detail.rfind("hypothesis unmet: ", 0) == 0);
    }
  const auto& k = results[0].items[0];
  CHECK(k.hypotheses["bass_class"]["verdict"] == "refuted");
  CHECK(k.conclusions["linkage"]["verdict"] == "not_linked");
  CHECK(results[0].items[1].detail.find("not semidualizing") != std::string::npos);
  CHECK(results[2].items[0].detail.find("dim R = 0") != std::string::npos);
  CHECK(report_passed(results));
}

TEST_CASE("ideal items") {
  TempDir dir("ideal");
  dir.write("plane.ring", "ring R { vars = [x, y]; relations = [] }\n");
  dir.write("x.mod", "module M over R { generators = [g:0]; relations = [\"x*g\"] }\n");
  dir.write("y.mod", "module M over R { generators = [g:0]; relations = [\"y*g\"] }\n");
  dir.write("xy.ideal", "ideal a over R { generators = [\"x*y\"] }\n");
  dir.write("corpus.toml",
            "[[item]]\nname = \"xy\"\nring = \"plane.ring\"\nideal = \"xy.ideal\"\nmodule = \"x.mod\"\n"
            "expect_lambda = \"y.mod\"\n");
  auto items = load_corpus(dir.path);
  ItemContext ctx(dir.path, items[0]);
  CHECK(ctx.quotient()->dim() == 1);
  CHECK(ctx.module()->ring() == ctx.quotient());
  CHECK(ctx.module_over_ring()->ring() == ctx.ring());
  CHECK(ctx.module_over_ring()->hilbert_series() == ctx.module()->hilbert_series());
  auto r = suite_theorem_A(ctx, quick());
  CHECK(r.status == ItemStatus::Pass);
  CHECK(r.hypotheses["grade_ideal"] == 1);
  CHECK(r.conclusions["lambda_grade"] == 1);
  CHECK(suite_linkage(ctx, quick()).status == ItemStatus::Pass);
}

TEST_CASE("report determinism") {
  TempDir dir("det");
  dir.write("cubic.ring", kCubic);
  dir.write("two.ring", "ring R { vars = [x, y]; relations = [\"x^2\", \"y^2\"] }\n");
  dir.write("x.mod", "module M over R { generators = [g:0]; relations = [\"x*g\"] }\n");
  dir.write("corpus.toml",
            "[[item]]\nname = \"c\"\nring = \"cubic.ring\"\nmodule = \"k\"\n"
            "[[item]]\nname = \"t\"\nring = \"two.ring\"\nmodule = \"x.mod\"\n"
            "[[item]]\nname = \"u\"\nring = \"two.ring\"\nmodule = \"k\"\nwrt = \"self\"\n");
  RunOptions serial = quick();
  RunOptions parallel = quick();
  parallel.jobs = 3;
  auto a = report_json(run_suites(dir.path, suite_names(), serial), serial).dump();
  auto b = report_json(run_suites(dir.path, suite_names(), parallel), parallel).dump();
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["results"].size() == 3 * suite_names().size());
  CHECK(j["results"][0]["suite"] == "L");
  CHECK(j["results"][0]["item"] == "c");
}
