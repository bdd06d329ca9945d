#include "semilink/hominv.hpp"

namespace semilink {

namespace {

ModulePtr ring_module(const RingPtr& R) { return FPModule::free(R, {0}); }

}  // namespace

int depth(const ModulePtr& M) {
  if (M->is_zero()) throw Error(ErrorCode::ZeroModule, "depth of the zero module");
  return M->ring()->nvars() - projective_dimension_over_ambient(M);
}

bool is_cohen_macaulay_ring(const RingPtr& R) { return depth(ring_module(R)) == R->dim(); }

HomologicalProfile homological_profile(const ModulePtr& M) {
  HomologicalProfile p;
  if (M->is_zero()) {
    p.zero = true;
    return p;
  }
  const RingPtr& R = M->ring();
  ResolutionPrefix amb = ambient_resolution(M);
  p.pd_over_S = amb.length();
  p.betti = amb.betti();
  p.depth = R->nvars() - p.pd_over_S;
  p.dim = M->hilbert_series().dim();
  p.is_cm = p.depth == p.dim;
  const int dimR = R->dim();
  p.is_mcm = p.is_cm && p.dim == dimR;
  // grade M <= depth R <= dim R, and Ext^{grade} != 0
  auto Rm = ring_module(R);
  for (int i = 0; i <= dimR; ++i)
    if (!ext_series(i, M, Rm).is_zero()) {
      p.grade = i;
      break;
    }
  if (is_cohen_macaulay_ring(R)) {
    p.grade_cross_checked = true;
    p.grade_consistent = p.grade == dimR - p.dim;
  }
  return p;
}

SerreReport serre_condition(const ModulePtr& M, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative Serre index");
  SerreReport rep;
  rep.n = n;
  if (M->is_zero()) return rep;
  const int s = M->ring()->nvars();
  const int c = M->ring()->codim();
  for (int i = c + 1; i <= s; ++i) {
    int d = ambient_ext_series(i, M).dim();  // -1 for zero
    if (d >= 0 && d > s - i - n) {
      rep.holds = false;
      rep.witness = i;
      return rep;
    }
  }
  return rep;
}

LocalCohomologyTable local_cohomology_table(const ModulePtr& M) {
  LocalCohomologyTable t;
  t.s = M->ring()->nvars();
  t.sigma = M->ring()->ambient()->weight_sum();
  for (int i = 0; i <= t.s; ++i) t.dual.push_back(ambient_ext_series(t.s - i, M).shifted(t.sigma));
  return t;
}

GeneralizedCMReport generalized_cm_test(const ModulePtr& M) {
  int d = M->hilbert_series().dim();
  if (d <= 0) throw Error(ErrorCode::DimensionZero, "module of dimension zero is Cohen-Macaulay");
  const int s = M->ring()->nvars();
  GeneralizedCMReport rep;
  for (int i = 0; i < d; ++i)
    if (ambient_ext_series(s - i, M).dim() > 0) {
      rep.holds = false;
      rep.offending = i;
      return rep;
    }
  return rep;
}

ModulePtr syzygy_module(const ModulePtr& M, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative syzygy index");
  if (n == 0) return M->minimal();
  ResolutionPrefix res = free_resolution(M, n + 1);
  if (res.rank(n) == 0) return FPModule::zero(M->ring());
  std::vector<Vec> rels = n < res.length() ? res.maps[n] : std::vector<Vec>{};
  return FPModule::make(M->ring(), res.twists[n], std::move(rels));
}

}  // namespace semilink
