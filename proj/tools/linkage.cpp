#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "semilink/harness.hpp"
#include "semilink/io.hpp"

using namespace semilink;
using nlohmann::json;

namespace {

void emit(const json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + out);
  f << text;
}

CorpusItem single_item(const std::string& ring, const std::string& module, const std::string& wrt,
                       const std::string& ideal) {
  CorpusItem item;
  item.name = module;
  item.ring = ring;
  item.module = module;
  item.wrt = wrt;
  item.ideal = ideal;
  return item;
}

json local_cohomology_json(const ModulePtr& M) {
  auto t = local_cohomology_table(M);
  json rows = json::array();
  for (std::size_t i = 0; i < t.dual.size(); ++i) {
    const auto& h = t.dual[i];
    json row = {{"i", i}, {"dual_hilbert_series", h.to_string()}, {"zero", h.is_zero()}};
    row["finite_length"] = !h.is_zero() && t.finite_length(static_cast<int>(i));
    if (!h.is_zero() && h.dim() <= 0) {
      json values = json::object();
      int lo = h.initial_degree(), hi = h.top_degree().value();
      for (int e = lo; e <= hi; ++e)
        if (h.coefficient(e) != 0) values[std::to_string(-e)] = h.coefficient(e);
      row["dimensions_by_degree"] = values;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linkage of modules with respect to semidualizing modules"};
  app.require_subcommand(1);

  RunOptions ro;
  std::string out, ring, module, wrt = "omega", ideal, other;

  auto* check = app.add_subcommand("check", "Horizontal linkage check for one module");
  check->add_option("--ring", ring, "ring file")->required();
  check->add_option("--module", module, "module file, or k, R, omega")->required();
  check->add_option("--wrt", wrt, "omega, self, or a module file")->capture_default_str();
  check->add_option("--ideal", ideal, "link by an ideal file");
  check->add_option("--bound", ro.bound, "homological bound")->capture_default_str();
  check->add_option("--trials", ro.trials, "isomorphism search trials")->capture_default_str();
  check->add_option("--seed", ro.seed, "random seed")->capture_default_str();
  check->add_option("--out", out, "report file (default stdout)");

  std::string suite_name = "all", corpus;
  auto* suite = app.add_subcommand("suite", "Run theorem suites over a corpus");
  suite->add_option("--name", suite_name, "A, B, C, L, I or all")
      ->check(CLI::IsMember({"A", "B", "C", "L", "I", "all"}))
      ->capture_default_str();
  suite->add_option("--corpus", corpus, "corpus directory")->required();
  suite->add_option("--bound", ro.bound, "homological bound")->capture_default_str();
  suite->add_option("--trials", ro.trials, "isomorphism search trials")->capture_default_str();
  suite->add_option("--seed", ro.seed, "random seed")->capture_default_str();
  suite->add_option("--jobs", ro.jobs, "worker threads (0: all cores)")->capture_default_str();
  suite->add_flag("--timings", ro.timings, "include wall times in the report");
  suite->add_option("--out", out, "report file (default stdout)");

  std::string op;
  int index = 1;
  auto* compute = app.add_subcommand("compute", "Single operation");
  compute->add_option("op", op, "lambda, transpose, ext or localcoh")
      ->required()
      ->check(CLI::IsMember({"lambda", "transpose", "ext", "localcoh"}));
  compute->add_option("--ring", ring, "ring file")->required();
  compute->add_option("--module", module, "module file, or k, R, omega")->required();
  compute->add_option("--wrt", wrt, "omega, self, or a module file")->capture_default_str();
  compute->add_option("--other", other, "second argument of ext (default: the --wrt module)");
  compute->add_option("--index", index, "ext index")->capture_default_str();
  compute->add_option("--bound", ro.bound, "homological bound")->capture_default_str();
  compute->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*suite) {
      std::vector<std::string> names;
      if (suite_name == "all")
        names = suite_names();
      else
        names = {suite_name};
      auto results = run_suites(corpus, names, ro);
      emit(report_json(results, ro), out);
      return report_passed(results) ? 0 : 1;
    }

    ItemContext ctx(".", single_item(ring, module, wrt, ideal));
    if (*check) {
      json j;
      j["bounds"] = {{"B", ro.bound}, {"trials", ro.trials}, {"seed", ro.seed}};
      j["module"] = module_json(ctx.module());
      LinkageReport rep;
      if (ideal.empty()) {
        rep = horizontal_linkage_check(ctx.wrt(), ctx.module(), ro.linkage());
      } else {
        auto il = ideal_linkage_check(ctx.ring(), ctx.ideal(), ctx.wrt(), ctx.module_over_ring(), ro.linkage());
        j["grade_module"] = il.grade_module;
        j["grade_ideal"] = il.grade_ideal;
        rep = il.linkage;
      }
      j["linkage"] = linkage_json(rep);
      emit(j, out);
      return 0;
    }

    const ModulePtr& M = ctx.module();
    const ModulePtr& C = ctx.wrt();
    json j;
    if (op == "lambda") {
      j = module_json(lambda_wrt(C, M, ro.bound));
    } else if (op == "transpose") {
      j = module_json(transpose_wrt(C, M, ro.bound));
    } else if (op == "ext") {
      ModulePtr N = other.empty() ? C : ctx.load(other);
      j = module_json(ext_module(index, M, N));
      j["index"] = index;
    } else {
      j["local_cohomology"] = local_cohomology_json(M);
    }
    emit(j, out);
    return 0;
  } catch (const Error& e) {
    std::cerr << "linkage: " << e.what() << "\n";
    return 2;
  }
}
