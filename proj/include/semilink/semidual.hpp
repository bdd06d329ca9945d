#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semilink/hominv.hpp"
#include "semilink/modules.hpp"

namespace semilink {

inline constexpr int kDefaultBound = 8;

enum class BoundedVerdict { CertifiedToBound, Refuted };
const char* bounded_verdict_name(BoundedVerdict v);

/// Result of a family of conditions checked up to a bound. When refuted,
/// `failed` names the least failing condition and `index` its homological
/// index (0 for a natural map).
struct BoundedResult {
  BoundedVerdict verdict = BoundedVerdict::CertifiedToBound;
  int bound = kDefaultBound;
  std::string failed;
  int index = 0;
  bool certified() const { return verdict == BoundedVerdict::CertifiedToBound; }
};

ModulePtr canonical_module(const RingPtr& R);

struct SemidualizingReport {
  bool homothety_iso = false;
  int ext_vanishing_checked_to = 0;
  BoundedResult result;
};

/// Throws ZeroModule for C = 0.
SemidualizingReport is_semidualizing(const ModulePtr& C, int bound = kDefaultBound);

/// Throws NotSemidualizing unless C is certified to the bound.
void require_semidualizing(const ModulePtr& C, int bound = kDefaultBound);

enum class ClassSide { Auslander, Bass };

struct ClassMembershipReport {
  ClassSide side = ClassSide::Auslander;
  bool natural_map_iso = false;
  int tor_vanishing_to = 0;
  int ext_vanishing_to = 0;
  BoundedResult result;
  std::string label;
};

/// Throws NotSemidualizing when C is refuted as semidualizing to the bound.
ClassMembershipReport class_membership(ClassSide side, const ModulePtr& C, const ModulePtr& M,
                                       int bound = kDefaultBound);

/// Ext^i(M, C) = 0 = Ext^i(Tr_C M, C) for 1 <= i <= bound.
BoundedResult gc_dim_zero(const ModulePtr& C, const ModulePtr& M, int bound = kDefaultBound);

/// Membership in the Bass class of the canonical module, the certificate used
/// for finite Gorenstein injective dimension.
ClassMembershipReport gid_finite_proxy(const ModulePtr& M, const ModulePtr& omega, int bound = kDefaultBound);

/// mu^i = dim_k Ext^i_R(k, M) for 0 <= i <= bound.
std::vector<std::int64_t> bass_numbers(const ModulePtr& M, int bound = kDefaultBound);

struct QuasiGorensteinReport {
  bool is_complete_intersection_shortcut = false;
  bool gdim_finite_evidence = false;
  std::vector<std::int64_t> bass_numbers_R;
  std::vector<std::int64_t> bass_numbers_quotient;
  bool shift_match = false;
  int bound = kDefaultBound;
  BoundedResult result;
  std::string caveat;
};

/// Whether the ideal `a` of R satisfies the quasi-Gorenstein conditions,
/// certified to the bound. Throws ImproperIdeal for a unit ideal.
QuasiGorensteinReport quasi_gorenstein_check(const RingPtr& R, const std::vector<Poly>& a,
                                             int bound = kDefaultBound);

/// True when the nonzero generators form a homogeneous R-regular sequence.
bool is_regular_sequence(const RingPtr& R, const std::vector<Poly>& seq);

/// Residue field R / m as a module.
ModulePtr residue_field(const RingPtr& R);

}  // namespace semilink
