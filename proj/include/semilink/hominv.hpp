#pragma once

#include <map>
#include <optional>
#include <vector>

#include "semilink/modules.hpp"

namespace semilink {

struct HomologicalProfile {
  bool zero = false;
  int depth = 0;
  int dim = -1;
  /// Least i with Ext^i_R(M, R) != 0; -1 for the zero module.
  int grade = -1;
  int pd_over_S = -1;
  std::map<std::pair<int, int>, int> betti;  // over the ambient ring
  bool is_cm = false;
  bool is_mcm = false;
  /// Set when R is Cohen-Macaulay and grade was compared with dim R - dim M.
  bool grade_cross_checked = false;
  bool grade_consistent = true;
};

HomologicalProfile homological_profile(const ModulePtr& M);
/// depth via Auslander-Buchsbaum over the ambient ring; throws ZeroModule.
int depth(const ModulePtr& M);
bool is_cohen_macaulay_ring(const RingPtr& R);

struct SerreReport {
  int n = 0;
  bool holds = true;
  std::optional<int> witness;  // failing Ext index over the ambient ring
};

/// The condition depth M_p >= min(n, depth R_p) for all primes p, decided
/// through dim Ext^i_S(M, S) <= dim S - i - n for i > codim R.
SerreReport serre_condition(const ModulePtr& M, int n);

/// Graded local cohomology through local duality. `dual[i]` is the Hilbert
/// series of Ext^{s-i}_S(M, S(-sigma)); H^i_m(M)_n has dimension
/// dual[i].coefficient(-n).
struct LocalCohomologyTable {
  int s = 0;
  int sigma = 0;
  std::vector<HilbertSeries> dual;
  std::int64_t value(int i, int n) const { return dual.at(i).coefficient(-n); }
  bool is_zero(int i) const { return dual.at(i).is_zero(); }
  bool finite_length(int i) const { return dual.at(i).dim() <= 0; }
  std::optional<std::int64_t> length(int i) const { return dual.at(i).length(); }
};

LocalCohomologyTable local_cohomology_table(const ModulePtr& M);

struct GeneralizedCMReport {
  bool holds = true;
  std::optional<int> offending;  // least i < dim M with H^i_m(M) of infinite length
};

/// Throws DimensionZero when dim M <= 0.
GeneralizedCMReport generalized_cm_test(const ModulePtr& M);

/// Omega^n M: the image of d_n in a minimal free resolution (M itself for n = 0).
ModulePtr syzygy_module(const ModulePtr& M, int n);

}  // namespace semilink
