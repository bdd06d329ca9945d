#include "semilink/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "semilink/io.hpp"

namespace semilink {

using nlohmann::json;

const char* item_status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass:
      return "pass";
    case ItemStatus::Fail:
      return "fail";
    case ItemStatus::Skipped:
      return "skipped";
  }
  return "?";
}

int SuiteResult::count(ItemStatus s) const {
  return static_cast<int>(std::count_if(items.begin(), items.end(), [&](const ItemResult& r) { return r.status == s; }));
}

LinkageOptions RunOptions::linkage() const {
  LinkageOptions o;
  o.bound = bound;
  o.iso.trials = trials;
  o.iso.seed = seed;
  return o;
}

std::vector<CorpusItem> load_corpus(const std::filesystem::path& dir) {
  std::vector<CorpusItem> out;
  auto index = dir / "corpus.toml";
  if (!std::filesystem::exists(index)) {
    if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::InvalidArgument, "no corpus at " + dir.string());
    return out;
  }
  TomlDoc doc = parse_toml(read_file(index));
  auto str = [](const TomlDoc::Table& t, const std::string& key, const std::string& fallback) {
    auto it = t.find(key);
    if (it == t.end()) return fallback;
    if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
    throw ParseError("key '" + key + "' must be a string", 0);
  };
  for (const auto& t : doc.arrays["item"]) {
    CorpusItem item;
    item.name = str(t, "name", "");
    item.ring = str(t, "ring", "");
    item.module = str(t, "module", "");
    if (item.name.empty() || item.ring.empty() || item.module.empty())
      throw ParseError("corpus item needs name, ring and module", 0);
    item.wrt = str(t, "wrt", "omega");
    item.ideal = str(t, "ideal", "");
    item.tensor_with = str(t, "tensor_with", "");
    for (const auto& [k, v] : t)
      if (k.rfind("expect_", 0) == 0) item.pins[k] = str(t, k, "");
    out.push_back(std::move(item));
  }
  std::sort(out.begin(), out.end(), [](const CorpusItem& a, const CorpusItem& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].name == out[i - 1].name) throw ParseError("duplicate corpus item '" + out[i].name + "'", 0);
  return out;
}

RingPtr CorpusCache::ring(const std::string& key, const std::function<RingPtr()>& make) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = rings_.find(key);
    if (it != rings_.end()) return it->second;
  }
  RingPtr R = make();
  std::lock_guard<std::mutex> lock(mu_);
  return rings_.emplace(key, R).first->second;
}

ModulePtr CorpusCache::canonical(const RingPtr& R) {
  Omega* entry;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = omega_[R.get()];
    if (!slot) slot = std::make_unique<Omega>();
    entry = slot.get();
  }
  std::call_once(entry->once, [&] { entry->module = canonical_module(R); });
  return entry->module;
}

ItemContext::ItemContext(const std::filesystem::path& dir, const CorpusItem& item, CorpusCache* cache)
    : dir_(dir), item_(item), cache_(cache) {
  auto cached = [&](const std::string& key, const std::function<RingPtr()>& make) {
    return cache_ ? cache_->ring(key, make) : make();
  };
  R_ = cached(item.ring, [&] { return load_ring(dir / item.ring); });
  if (!item.ideal.empty()) {
    for (const auto& f : load_ideal(dir / item.ideal, R_)) {
      Poly g = R_->reduce(f);
      if (!g.is_zero()) a_.push_back(g);
    }
  }
  Rbar_ = a_.empty() ? R_
                     : cached(item.ring + "|" + item.ideal, [&] { return quotient_by(R_, a_, R_->name() + "/a"); });
  Mbar_ = load(item.module);
  if (item.tensor_with == "omega")
    Mbar_ = tensor(Mbar_, omega_quotient());
  else if (!item.tensor_with.empty())
    throw ParseError("unknown tensor_with '" + item.tensor_with + "'", 0);
  M_ = Rbar_ == R_ ? Mbar_ : restrict_scalars(Mbar_, R_);
  C_ = item.wrt == "self" ? FPModule::free(Rbar_, {0}) : load(item.wrt);
}

const ModulePtr& ItemContext::omega_ring() const {
  std::call_once(omega_r_once_, [&] { omega_r_ = cache_ ? cache_->canonical(R_) : canonical_module(R_); });
  return omega_r_;
}

const ModulePtr& ItemContext::omega_quotient() const {
  if (Rbar_ == R_) return omega_ring();
  std::call_once(omega_q_once_, [&] { omega_q_ = cache_ ? cache_->canonical(Rbar_) : canonical_module(Rbar_); });
  return omega_q_;
}

ModulePtr ItemContext::load(const std::string& spec) const {
  if (spec == "k") return residue_field(Rbar_);
  if (spec == "R") return FPModule::free(Rbar_, {0});
  if (spec == "omega") return omega_quotient();
  return load_module(dir_ / spec, Rbar_);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"L", "I", "A", "B", "C"};
  return names;
}

json module_json(const ModulePtr& M) {
  json j;
  j["generators"] = M->degrees();
  j["presentation"] = format_module(M);
  const auto& hs = M->hilbert_series();
  j["hilbert_series"] = hs.to_string();
  if (!hs.is_zero()) {
    int lo = hs.initial_degree();
    j["hilbert_function"] = {{"from", lo}, {"values", hs.expand(lo, lo + 12)}};
  }
  return j;
}

namespace {

json bounded_json(const BoundedResult& r) {
  json j;
  j["verdict"] = bounded_verdict_name(r.verdict);
  j["bound"] = r.bound;
  if (!r.certified()) {
    j["failed"] = r.failed;
    j["index"] = r.index;
  }
  return j;
}

json class_json(const ClassMembershipReport& r) {
  json j = bounded_json(r.result);
  j["label"] = r.label;
  j["natural_map_iso"] = r.natural_map_iso;
  return j;
}

std::string hs_pair(const std::string& a, const ModulePtr& A, const std::string& b, const ModulePtr& B) {
  return "HS(" + a + ") = " + A->hilbert_series().to_string() + ", HS(" + b + ") = " + B->hilbert_series().to_string();
}

using Clock = std::chrono::steady_clock;

ItemResult start(const std::string& suite, const ItemContext& ctx) {
  ItemResult r;
  r.suite = suite;
  r.item = ctx.item().name;
  return r;
}

void skip(ItemResult& r, const std::string& why) {
  r.status = ItemStatus::Skipped;
  r.detail = "hypothesis unmet: " + why;
}

void fail(ItemResult& r, const std::string& why) {
  if (r.status == ItemStatus::Fail) return;
  r.status = ItemStatus::Fail;
  r.detail = why;
}

// Pins compare engine output with recorded expectations.
bool check_pins(ItemResult& r, const ItemContext& ctx, const LinkageReport& rep) {
  const auto& pins = ctx.item().pins;
  json pj = json::object();
  bool ok = true;
  if (auto it = pins.find("expect_linkage"); it != pins.end()) {
    std::string got = linkage_verdict_name(rep.verdict);
    pj["expect_linkage"] = {{"expected", it->second}, {"got", got}};
    if (got != it->second) {
      fail(r, "pin expect_linkage: expected " + it->second + ", got " + got);
      ok = false;
    }
  }
  if (auto it = pins.find("expect_lambda"); it != pins.end()) {
    ModulePtr want = ctx.load(it->second);
    auto ev = iso_test_up_to_twist(rep.lambda, want);
    pj["expect_lambda"] = {{"expected", it->second}, {"iso", iso_verdict_name(ev.verdict)}};
    if (ev.verdict != IsoVerdict::ProvenIso) {
      fail(r, "pin expect_lambda: lambda is not isomorphic to " + it->second + "; " +
                  hs_pair("lambda", rep.lambda, it->second, want));
      ok = false;
    }
  }
  if (!pj.empty()) r.conclusions["pins"] = pj;
  return ok;
}

bool semidualizing(const ModulePtr& C, int bound) {
  try {
    return is_semidualizing(C, bound).result.certified();
  } catch (const Error&) {
    return false;
  }
}

// Hilbert function of a finite-length local cohomology module over its
// support, in increasing degree.
std::vector<std::int64_t> finite_hf(const LocalCohomologyTable& t, int i) {
  const HilbertSeries& h = t.dual.at(i);
  if (h.is_zero()) return {};
  int lo = h.initial_degree(), hi = h.top_degree().value();
  auto v = h.expand(lo, hi);
  std::reverse(v.begin(), v.end());  // H^i_n is the coefficient of -n
  return v;
}

}  // namespace

json hypotheses_json(const LinkageHypotheses& h) {
  json j;
  if (!h.computed) return j;
  j["bass_class"] = class_json(h.bass);
  j["c_syzygy"] = h.c_syzygy;
  j["c_stable"] = h.c_stable;
  j["ext1_vanishes"] = h.ext1_vanishes;
  j["stable_hom_zero"] = h.stable_hom_zero;
  j["x1_hypothesis"] = h.x1;
  j["certified"] = h.all_certified();
  return j;
}

json linkage_json(const LinkageReport& rep) {
  json j;
  j["verdict"] = linkage_verdict_name(rep.verdict);
  if (!rep.reason.empty()) j["reason"] = rep.reason;
  j["iso"] = iso_verdict_name(rep.iso.verdict);
  if (!rep.iso.mismatch.empty()) j["iso_mismatch"] = rep.iso.mismatch;
  j["lambda"] = module_json(rep.lambda);
  j["lambda_squared_hilbert_series"] = rep.lambda_squared->hilbert_series().to_string();
  j["hypotheses"] = hypotheses_json(rep.hypotheses);
  return j;
}

ItemResult suite_linkage(const ItemContext& ctx, const RunOptions& opts) {
  ItemResult r = start("L", ctx);
  const ModulePtr& C = ctx.wrt();
  if (!semidualizing(C, opts.bound)) {
    skip(r, "C is not semidualizing");
    return r;
  }
  LinkageReport rep;
  if (ctx.ideal().empty()) {
    rep = horizontal_linkage_check(C, ctx.module(), opts.linkage());
  } else {
    auto il = ideal_linkage_check(ctx.ring(), ctx.ideal(), C, ctx.module_over_ring(), opts.linkage());
    r.conclusions["grade_module"] = il.grade_module;
    r.conclusions["grade_ideal"] = il.grade_ideal;
    rep = il.linkage;
  }
  r.hypotheses = hypotheses_json(rep.hypotheses);
  r.conclusions["linkage"] = linkage_json(rep);
  if (!check_pins(r, ctx, rep)) return r;
  if (!rep.hypotheses.all_certified()) {
    std::vector<std::string> unmet;
    const auto& h = rep.hypotheses;
    if (!h.bass.result.certified()) unmet.push_back("bass_class");
    if (!h.c_syzygy) unmet.push_back("c_syzygy");
    if (!h.c_stable) unmet.push_back("c_stable");
    if (!h.ext1_vanishes) unmet.push_back("ext1_vanishes");
    if (!h.stable_hom_zero) unmet.push_back("stable_hom_zero");
    if (!h.c_is_canonical) unmet.push_back("x1_hypothesis");
    std::string s;
    for (const auto& u : unmet) s += (s.empty() ? "" : ", ") + u;
    skip(r, s);
    return r;
  }
  if (rep.verdict != LinkageVerdict::HorizontallyLinked) {
    fail(r, "certified hypotheses but verdict " + std::string(linkage_verdict_name(rep.verdict)) + "; " +
                hs_pair("M", ctx.module(), "lambda^2", rep.lambda_squared));
    return r;
  }
  r.status = ItemStatus::Pass;
  return r;
}

ItemResult suite_identities(const ItemContext& ctx, const RunOptions& opts) {
  ItemResult r = start("I", ctx);
  const ModulePtr& C = ctx.wrt();
  const ModulePtr& M = ctx.module();
  if (!semidualizing(C, opts.bound)) {
    skip(r, "C is not semidualizing");
    return r;
  }
  IsoOptions io{opts.trials, opts.seed};
  r.status = ItemStatus::Pass;

  auto seq = exact_sequence_check(C, M, 12);
  r.conclusions["lambda_sequence"] = seq.lambda_sequence;
  r.conclusions["transpose_sequence"] = seq.transpose_sequence;
  if (!seq.holds()) fail(r, seq.detail);

  ModulePtr R = FPModule::free(ctx.quotient(), {0});
  ModulePtr lhs = tensor(transpose(M, R), C);
  ModulePtr rhs = transpose_wrt(C, M, opts.bound);
  auto tr = iso_test(lhs, rhs, io);
  r.conclusions["transpose_tensor_iso"] = iso_verdict_name(tr.verdict);
  if (tr.verdict != IsoVerdict::ProvenIso) fail(r, "Tr M (x) C vs Tr_C M: " + hs_pair("Tr M (x) C", lhs, "Tr_C M", rhs));

  ModulePtr a = lambda_wrt(R, M, opts.bound);
  ModulePtr b = classical_lambda(M);
  auto sp = iso_test(a, b, io);
  r.conclusions["classical_lambda_iso"] = iso_verdict_name(sp.verdict);
  if (sp.verdict != IsoVerdict::ProvenIso) fail(r, "lambda(R, M) vs Omega Tr M: " + hs_pair("lambda", a, "Omega Tr", b));
  return r;
}

ItemResult suite_theorem_A(const ItemContext& ctx, const RunOptions& opts) {
  ItemResult r = start("A", ctx);
  const RingPtr& R = ctx.ring();
  auto& h = r.hypotheses;
  h["ring_cm"] = is_cohen_macaulay_ring(R);
  if (!h["ring_cm"]) return skip(r, "ring not Cohen-Macaulay"), r;
  auto qg = quasi_gorenstein_check(R, ctx.ideal(), opts.bound);
  h["quasi_gorenstein"] = bounded_json(qg.result);
  h["complete_intersection"] = qg.is_complete_intersection_shortcut;
  if (!qg.result.certified()) return skip(r, "ideal not quasi-Gorenstein"), r;
  h["quotient_cm"] = is_cohen_macaulay_ring(ctx.quotient());
  if (!h["quotient_cm"]) return skip(r, "R/a not Cohen-Macaulay"), r;
  const ModulePtr& M = ctx.module_over_ring();
  if (M->is_zero()) return skip(r, "zero module"), r;
  auto prof = homological_profile(M);
  const int grade_a = homological_profile(FPModule::cyclic(R, ctx.ideal())).grade;
  h["module_cm"] = prof.is_cm;
  h["grade_module"] = prof.grade;
  h["grade_ideal"] = grade_a;
  if (!prof.is_cm) return skip(r, "module not Cohen-Macaulay"), r;
  if (prof.grade != grade_a) return skip(r, "grade of M differs from grade of a"), r;
  auto gid = gid_finite_proxy(M, ctx.omega_ring(), opts.bound);
  h["gid_finite"] = class_json(gid);
  if (!gid.result.certified()) return skip(r, "Gorenstein injective dimension not certified finite"), r;
  const ModulePtr& wq = ctx.omega_quotient();
  bool stable = is_c_stable(wq, ctx.module(), opts.bound);
  h["omega_stable"] = stable;
  if (!stable) return skip(r, "module not omega-stable over R/a"), r;

  auto il = ideal_linkage_check(R, ctx.ideal(), wq, M, opts.linkage());
  r.conclusions["linkage"] = linkage_json(il.linkage);
  r.status = ItemStatus::Pass;
  if (il.linkage.verdict != LinkageVerdict::HorizontallyLinked) {
    fail(r, "(i) not linked: " + il.linkage.reason + "; " +
                hs_pair("M", ctx.module(), "lambda^2", il.linkage.lambda_squared));
    return r;
  }
  ModulePtr lam = restrict_scalars(il.linkage.lambda, R);
  auto lg = gid_finite_proxy(lam, ctx.omega_ring(), opts.bound);
  r.conclusions["lambda_gid_finite"] = class_json(lg);
  if (!lg.result.certified()) fail(r, "(ii) lambda outside the Bass class: failed " + lg.result.failed);
  auto lp = homological_profile(lam);
  r.conclusions["lambda_cm"] = lp.is_cm;
  r.conclusions["lambda_grade"] = lp.grade;
  if (!lp.is_cm || lp.grade != grade_a)
    fail(r, "(iii) lambda CM = " + std::to_string(lp.is_cm) + ", grade " + std::to_string(lp.grade) +
                " vs " + std::to_string(grade_a) + "; HS(lambda) = " + lam->hilbert_series().to_string());
  return r;
}

ItemResult suite_theorem_B(const ItemContext& ctx, const RunOptions& opts) {
  ItemResult r = start("B", ctx);
  const RingPtr& R = ctx.ring();
  auto& h = r.hypotheses;
  h["ring_cm"] = is_cohen_macaulay_ring(R);
  if (!h["ring_cm"]) return skip(r, "ring not Cohen-Macaulay"), r;
  auto qg = quasi_gorenstein_check(R, ctx.ideal(), opts.bound);
  h["quasi_gorenstein"] = bounded_json(qg.result);
  if (!qg.result.certified()) return skip(r, "ideal not quasi-Gorenstein"), r;
  h["quotient_cm"] = is_cohen_macaulay_ring(ctx.quotient());
  if (!h["quotient_cm"]) return skip(r, "R/a not Cohen-Macaulay"), r;
  const ModulePtr& M = ctx.module();
  if (M->is_zero()) return skip(r, "zero module"), r;
  const bool cm = homological_profile(ctx.module_over_ring()).is_cm;
  h["module_cm"] = cm;
  if (!cm) return skip(r, "module not Cohen-Macaulay"), r;

  const ModulePtr& w = ctx.omega_quotient();
  ModulePtr Rq = FPModule::free(ctx.quotient(), {0});
  IsoOptions io{opts.trials, opts.seed};
  LinkageOptions lo = opts.linkage();
  lo.hypotheses = false;
  auto linked = [&](const ModulePtr& C, const ModulePtr& X) {
    return horizontal_linkage_check(C, X, lo);
  };
  auto self_linked = [&](const LinkageReport& rep, const ModulePtr& X) {
    return iso_test_up_to_twist(rep.lambda, X, io).verdict == IsoVerdict::ProvenIso;
  };
  bool any = false;
  r.status = ItemStatus::Pass;

  // M in the Auslander class: M -> M (x) omega
  auto ac = class_membership(ClassSide::Auslander, w, M, opts.bound);
  h["auslander_class"] = class_json(ac);
  if (ac.result.certified()) {
    any = true;
    ModulePtr N = tensor(M, w);
    auto rt = iso_test(hom_module(w, N), M, io);
    r.conclusions["auslander_round_trip"] = iso_verdict_name(rt.verdict);
    if (rt.verdict != IsoVerdict::ProvenIso) fail(r, "Hom(omega, M (x) omega) vs M: " + hs_pair("Hom", hom_module(w, N), "M", M));
    auto cl = linked(Rq, M);
    r.conclusions["classically_linked"] = linkage_verdict_name(cl.verdict);
    if (cl.verdict == LinkageVerdict::HorizontallyLinked) {
      auto tl = linked(w, N);
      r.conclusions["transport_to_omega"] = linkage_verdict_name(tl.verdict);
      if (tl.verdict != LinkageVerdict::HorizontallyLinked)
        fail(r, "M linked but M (x) omega not linked w.r.t. omega; " + hs_pair("N", N, "lambda^2", tl.lambda_squared));
      if (self_linked(cl, M)) {
        bool s = self_linked(tl, N);
        r.conclusions["self_linked_transport"] = s;
        if (!s) fail(r, "M self-linked but M (x) omega is not; " + hs_pair("N", N, "lambda", tl.lambda));
      }
    }
  }

  // M in the Bass class: Hom(omega, M) -> M
  auto bc = class_membership(ClassSide::Bass, w, M, opts.bound);
  h["bass_class"] = class_json(bc);
  if (bc.result.certified()) {
    any = true;
    ModulePtr X = hom_module(w, M);
    ModulePtr back = tensor(X, w);
    auto rt = iso_test(back, M, io);
    r.conclusions["bass_round_trip"] = iso_verdict_name(rt.verdict);
    if (rt.verdict != IsoVerdict::ProvenIso) fail(r, "Hom(omega, N) (x) omega vs N: " + hs_pair("round trip", back, "N", M));
    auto wl = linked(w, M);
    r.conclusions["linked_wrt_omega"] = linkage_verdict_name(wl.verdict);
    if (wl.verdict == LinkageVerdict::HorizontallyLinked) {
      auto cl = linked(Rq, X);
      r.conclusions["transport_to_classical"] = linkage_verdict_name(cl.verdict);
      if (cl.verdict != LinkageVerdict::HorizontallyLinked)
        fail(r, "N linked w.r.t. omega but Hom(omega, N) not linked; " + hs_pair("X", X, "lambda^2", cl.lambda_squared));
      if (self_linked(wl, M)) {
        bool s = self_linked(cl, X);
        r.conclusions["self_linked_transport"] = s;
        if (!s) fail(r, "N self-linked but Hom(omega, N) is not; " + hs_pair("X", X, "lambda", cl.lambda));
      }
    }
  }
  if (!any) skip(r, "module in neither the Auslander nor the Bass class");
  return r;
}

ItemResult suite_theorem_C(const ItemContext& ctx, const RunOptions& opts) {
  ItemResult r = start("C", ctx);
  const RingPtr& Rq = ctx.quotient();
  auto& h = r.hypotheses;
  h["ring_cm"] = is_cohen_macaulay_ring(Rq);
  if (!h["ring_cm"]) return skip(r, "ring not Cohen-Macaulay"), r;
  const int d = Rq->dim();
  h["dim"] = d;
  if (d <= 0) return skip(r, "dim R = 0"), r;
  const ModulePtr& M = ctx.module();
  if (M->is_zero()) return skip(r, "zero module"), r;
  const ModulePtr& w = ctx.omega_quotient();
  auto gid = gid_finite_proxy(M, w, opts.bound);
  h["gid_finite"] = class_json(gid);
  if (!gid.result.certified()) return skip(r, "Gorenstein injective dimension not certified finite"), r;
  LinkageOptions lo = opts.linkage();
  lo.hypotheses = false;
  auto rep = horizontal_linkage_check(w, M, lo);
  h["linked_wrt_omega"] = linkage_verdict_name(rep.verdict);
  if (rep.verdict != LinkageVerdict::HorizontallyLinked) return skip(r, "module not linked w.r.t. omega"), r;

  r.status = ItemStatus::Pass;
  const ModulePtr& lam = rep.lambda;
  auto lc = local_cohomology_table(lam);
  json serre = json::array();
  for (int n = 1; n <= d; ++n) {
    bool sn = serre_condition(M, n).holds;
    bool window = true;
    for (int i = d - n + 1; i < d; ++i)
      if (!lc.is_zero(i)) window = false;
    serre.push_back({{"n", n}, {"serre", sn}, {"window_vanishes", window}});
    if (sn != window)
      fail(r, "(i) S_" + std::to_string(n) + " = " + std::to_string(sn) + " but local cohomology window = " +
                  std::to_string(window) + "; " + hs_pair("M", M, "lambda", lam));
  }
  r.conclusions["serre"] = serre;
  bool mcm_m = homological_profile(M).is_mcm, mcm_l = homological_profile(lam).is_mcm;
  r.conclusions["mcm"] = {{"module", mcm_m}, {"lambda", mcm_l}};
  if (mcm_m != mcm_l) fail(r, "(ii) MCM mismatch; " + hs_pair("M", M, "lambda", lam));

  if (d > 1) {
    bool gcm = generalized_cm_test(M).holds;
    r.conclusions["generalized_cm"] = gcm;
    if (gcm) {
      auto lm = local_cohomology_table(hom_module(w, M));
      json duality = json::array();
      for (int i = 1; i < d; ++i) {
        bool finite = lm.finite_length(i) && lc.finite_length(d - i);
        std::vector<std::int64_t> a, b;
        if (finite) {
          a = finite_hf(lm, i);
          b = finite_hf(lc, d - i);
          std::reverse(b.begin(), b.end());
        }
        bool ok = finite && a == b;
        duality.push_back({{"i", i}, {"hom_side", a}, {"lambda_side_reversed", b}, {"match", ok}});
        if (!ok)
          fail(r, "(iii) H^" + std::to_string(i) + "(Hom(omega, M)) is not Matlis dual to H^" + std::to_string(d - i) +
                      "(lambda)");
      }
      r.conclusions["duality"] = duality;
    }
  }
  return r;
}

ItemResult run_suite_item(const std::string& suite, const ItemContext& ctx, const RunOptions& opts) {
  auto t0 = Clock::now();
  ItemResult r;
  try {
    if (suite == "L")
      r = suite_linkage(ctx, opts);
    else if (suite == "I")
      r = suite_identities(ctx, opts);
    else if (suite == "A")
      r = suite_theorem_A(ctx, opts);
    else if (suite == "B")
      r = suite_theorem_B(ctx, opts);
    else if (suite == "C")
      r = suite_theorem_C(ctx, opts);
    else
      throw Error(ErrorCode::InvalidArgument, "unknown suite " + suite);
  } catch (const Error& e) {
    r = ItemResult{};
    r.suite = suite;
    r.item = ctx.item().name;
    r.status = ItemStatus::Fail;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::vector<SuiteResult> run_suites(const std::filesystem::path& dir, const std::vector<std::string>& suites,
                                    const RunOptions& opts) {
  auto items = load_corpus(dir);
  std::vector<std::vector<ItemResult>> per_item(items.size());
  std::atomic<std::size_t> next{0};
  CorpusCache cache;
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      std::unique_ptr<ItemContext> ctx;
      std::string load_error;
      try {
        ctx = std::make_unique<ItemContext>(dir, items[i], &cache);
      } catch (const Error& e) {
        load_error = e.what();
      }
      for (const auto& s : suites) {
        if (ctx) {
          per_item[i].push_back(run_suite_item(s, *ctx, opts));
        } else {
          ItemResult r;
          r.suite = s;
          r.item = items[i].name;
          r.status = ItemStatus::Fail;
          r.detail = "load error: " + load_error;
          per_item[i].push_back(std::move(r));
        }
      }
    }
  };
  int jobs = opts.jobs > 0 ? opts.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, std::max<std::size_t>(1, items.size()));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<SuiteResult> out;
  for (std::size_t s = 0; s < suites.size(); ++s) {
    SuiteResult sr;
    sr.name = suites[s];
    for (auto& v : per_item) sr.items.push_back(v[s]);
    out.push_back(std::move(sr));
  }
  return out;
}

json report_json(const std::vector<SuiteResult>& results, const RunOptions& opts) {
  json j;
  j["bounds"] = {{"B", opts.bound}, {"trials", opts.trials}, {"seed", opts.seed}};
  j["results"] = json::array();
  json summary = json::object();
  json timings = json::object();
  for (const auto& sr : results) {
    summary[sr.name] = {{"pass", sr.count(ItemStatus::Pass)},
                        {"fail", sr.count(ItemStatus::Fail)},
                        {"skipped", sr.count(ItemStatus::Skipped)}};
    double total = 0;
    for (const auto& r : sr.items) {
      json e;
      e["suite"] = r.suite;
      e["item"] = r.item;
      e["status"] = item_status_name(r.status);
      if (!r.detail.empty()) e["detail"] = r.detail;
      e["hypotheses"] = r.hypotheses;
      e["conclusions"] = r.conclusions;
      e["bounds"] = j["bounds"];
      if (opts.timings) e["timings"] = {{"seconds", r.seconds}};
      j["results"].push_back(std::move(e));
      total += r.seconds;
    }
    timings[sr.name] = total;
  }
  j["summary"] = summary;
  j["status"] = report_passed(results) ? "pass" : "fail";
  if (opts.timings) j["timings"] = timings;
  return j;
}

bool report_passed(const std::vector<SuiteResult>& results) {
  for (const auto& sr : results)
    if (sr.count(ItemStatus::Fail) > 0) return false;
  return true;
}

}  // namespace semilink
