#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "semilink/linkage.hpp"

namespace semilink {

/// One entry of a corpus index. `module` and `wrt` name a `.mod` file relative
/// to the corpus directory or one of the builtins `k`, `R`, `omega`
/// (`wrt` also accepts `self`, meaning R). Builtins and files are read over
/// R / a when an ideal is given.
struct CorpusItem {
  std::string name;
  std::string ring;
  std::string module;
  std::string wrt = "omega";
  std::string ideal;        // optional `.ideal` file
  std::string tensor_with;  // "omega": use M (x) omega instead of M
  std::map<std::string, std::string> pins;  // expect_linkage, expect_lambda
};

std::vector<CorpusItem> load_corpus(const std::filesystem::path& dir);

enum class ItemStatus { Pass, Fail, Skipped };
const char* item_status_name(ItemStatus s);

struct ItemResult {
  std::string suite;
  std::string item;
  ItemStatus status = ItemStatus::Skipped;
  std::string detail;
  nlohmann::json hypotheses = nlohmann::json::object();
  nlohmann::json conclusions = nlohmann::json::object();
  double seconds = 0;
};

struct SuiteResult {
  std::string name;
  std::vector<ItemResult> items;
  int count(ItemStatus s) const;
};

struct RunOptions {
  int bound = kDefaultBound;
  int trials = 20;
  std::uint64_t seed = 42;
  bool timings = false;
  int jobs = 0;  // 0: hardware concurrency
  LinkageOptions linkage() const;
};

/// Rings and canonical modules shared between items of one run, keyed by the
/// ring and ideal file names.
class CorpusCache {
 public:
  RingPtr ring(const std::string& key, const std::function<RingPtr()>& make);
  ModulePtr canonical(const RingPtr& R);

 private:
  struct Omega {
    std::once_flag once;
    ModulePtr module;
  };
  std::mutex mu_;
  std::map<std::string, RingPtr> rings_;
  std::map<const GradedQuotientRing*, std::unique_ptr<Omega>> omega_;
};

/// Loaded rings and modules of a corpus item, shared by all suites.
class ItemContext {
 public:
  ItemContext(const std::filesystem::path& dir, const CorpusItem& item, CorpusCache* cache = nullptr);

  const CorpusItem& item() const { return item_; }
  const RingPtr& ring() const { return R_; }
  const std::vector<Poly>& ideal() const { return a_; }
  const RingPtr& quotient() const { return Rbar_; }
  /// The module over R / a and the same module over R.
  const ModulePtr& module() const { return Mbar_; }
  const ModulePtr& module_over_ring() const { return M_; }
  const ModulePtr& wrt() const { return C_; }
  const ModulePtr& omega_ring() const;
  const ModulePtr& omega_quotient() const;
  ModulePtr load(const std::string& spec) const;

 private:
  std::filesystem::path dir_;
  CorpusItem item_;
  CorpusCache* cache_;
  RingPtr R_, Rbar_;
  std::vector<Poly> a_;
  ModulePtr M_, Mbar_, C_;
  mutable std::once_flag omega_r_once_, omega_q_once_;
  mutable ModulePtr omega_r_, omega_q_;
};

/// Suite names: L (linkage implication), I (structural identities), A, B, C.
const std::vector<std::string>& suite_names();

ItemResult suite_linkage(const ItemContext& ctx, const RunOptions& opts);
ItemResult suite_identities(const ItemContext& ctx, const RunOptions& opts);
ItemResult suite_theorem_A(const ItemContext& ctx, const RunOptions& opts);
ItemResult suite_theorem_B(const ItemContext& ctx, const RunOptions& opts);
ItemResult suite_theorem_C(const ItemContext& ctx, const RunOptions& opts);

ItemResult run_suite_item(const std::string& suite, const ItemContext& ctx, const RunOptions& opts);

/// Runs the named suites over every item (items in parallel) and returns the
/// results grouped by suite, items ordered by name.
std::vector<SuiteResult> run_suites(const std::filesystem::path& dir, const std::vector<std::string>& suites,
                                    const RunOptions& opts);

nlohmann::json report_json(const std::vector<SuiteResult>& results, const RunOptions& opts);
bool report_passed(const std::vector<SuiteResult>& results);

/// JSON rendering helpers shared with the CLI.
nlohmann::json module_json(const ModulePtr& M);
nlohmann::json hypotheses_json(const LinkageHypotheses& h);
nlohmann::json linkage_json(const LinkageReport& rep);

}  // namespace semilink
