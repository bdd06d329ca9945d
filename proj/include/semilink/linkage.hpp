#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semilink/hominv.hpp"
#include "semilink/modules.hpp"
#include "semilink/semidual.hpp"

namespace semilink {

/// Tr_C M: cokernel of Hom(f, C) for the minimal presentation f of M.
ModulePtr transpose_wrt(const ModulePtr& C, const ModulePtr& M, int bound = kDefaultBound);

/// lambda_R(C, M) = Omega_C Tr_C Hom(C, M), presented as the image of f^v
/// inside Hom(P_1, C).
ModulePtr lambda_wrt(const ModulePtr& C, const ModulePtr& M, int bound = kDefaultBound);

/// Omega Tr M over R, computed as the first syzygy of the Auslander transpose.
ModulePtr classical_lambda(const ModulePtr& M);

/// False exactly when some C(a) -> M -> C(a) composes to an automorphism.
bool is_c_stable(const ModulePtr& C, const ModulePtr& M, int bound = kDefaultBound);

/// Stable Hom(M, C) = Tor_1(Tr M, C) vanishes.
bool stable_hom_vanishes(const ModulePtr& M, const ModulePtr& C);

struct LinkageHypotheses {
  bool computed = false;
  ClassMembershipReport bass;  // M in B_C
  bool c_syzygy = false;       // Ext^1(Tr_C M, C) = 0
  bool c_stable = false;
  bool ext1_vanishes = false;   // Ext^1(M, C) = 0
  bool stable_hom_zero = false; // stable Hom(M^v, C) = 0
  bool c_is_canonical = false;
  std::string x1;               // "structural" or "assumed"

  bool all_certified() const {
    return computed && bass.result.certified() && c_syzygy && c_stable && ext1_vanishes && stable_hom_zero &&
           c_is_canonical;
  }
};

enum class LinkageVerdict { HorizontallyLinked, NotLinked, Inconclusive };
const char* linkage_verdict_name(LinkageVerdict v);

struct LinkageReport {
  ModulePtr operand;
  ModulePtr wrt;
  ModulePtr lambda;
  ModulePtr lambda_squared;
  IsoEvidence iso;
  LinkageHypotheses hypotheses;
  LinkageVerdict verdict = LinkageVerdict::Inconclusive;
  std::string reason;  // set for NotLinked and Inconclusive
};

struct LinkageOptions {
  int bound = kDefaultBound;
  IsoOptions iso;
  bool hypotheses = true;
};

LinkageReport horizontal_linkage_check(const ModulePtr& C, const ModulePtr& M, const LinkageOptions& opts = {});

/// M re-presented over another quotient of the same ambient ring.
ModulePtr change_ring(const ModulePtr& M, const RingPtr& ring);

/// M over R / a viewed as a module over R (same ambient ring).
ModulePtr restrict_scalars(const ModulePtr& M, const RingPtr& R);

struct IdealLinkageReport {
  std::vector<Poly> ideal;
  RingPtr quotient;
  ModulePtr K;
  bool annihilates = false;
  int grade_module = -1;  // gr_R(M)
  int grade_ideal = -1;   // gr_R(R / a)
  LinkageReport linkage;  // computed over the quotient
};

/// Linkage of M by the ideal a with respect to K over R / a. A null K means
/// the canonical module of R / a. Throws AnnihilationFailure unless a M = 0.
IdealLinkageReport ideal_linkage_check(const RingPtr& R, const std::vector<Poly>& a, const ModulePtr& K,
                                       const ModulePtr& M, const LinkageOptions& opts = {});

struct RelativeExt {
  ModulePtr module;  // Ext^i(Hom(C, M), Hom(C, N))
  bool both_in_bass = false;
  std::optional<bool> matches_absolute;  // Hilbert series vs Ext^i(M, N)
};

RelativeExt relative_ext(const ModulePtr& C, const ModulePtr& M, const ModulePtr& N, int i,
                         int bound = kDefaultBound);

/// Degreewise Hilbert bookkeeping of the two exact sequences attached to a
/// presentation P_1 -> P_0 of M^v = Hom(C, M):
///   0 -> lambda(C, M) -> Hom(P_1, C) -> Tr_C(M^v) -> 0
///   0 -> Hom(M^v, C) -> Hom(P_0, C) -> Hom(P_1, C) -> Tr_C(M^v) -> 0
struct SequenceCheck {
  bool lambda_sequence = false;
  bool transpose_sequence = false;
  int max_degree = 12;
  std::string detail;
  bool holds() const { return lambda_sequence && transpose_sequence; }
};

SequenceCheck exact_sequence_check(const ModulePtr& C, const ModulePtr& M, int max_degree = 12);

}  // namespace semilink
