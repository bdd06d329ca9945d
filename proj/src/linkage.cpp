#include "semilink/linkage.hpp"

#include <algorithm>

namespace semilink {

const char* linkage_verdict_name(LinkageVerdict v) {
  switch (v) {
    case LinkageVerdict::HorizontallyLinked:
      return "horizontally_linked";
    case LinkageVerdict::NotLinked:
      return "not_linked";
    case LinkageVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

ModulePtr transpose_wrt(const ModulePtr& C, const ModulePtr& M, int bound) {
  require_semidualizing(C, bound);
  return transpose(M, C)->minimal();
}

ModulePtr lambda_wrt(const ModulePtr& C, const ModulePtr& M, int bound) {
  require_semidualizing(C, bound);
  return syzygy_of_transpose(hom_module(C, M), C);
}

ModulePtr classical_lambda(const ModulePtr& M) {
  ModulePtr tr = transpose(M, FPModule::free(M->ring(), {0}));
  return syzygy_module(tr, 1)->minimal();
}

bool is_c_stable(const ModulePtr& C, const ModulePtr& M, int bound) {
  require_semidualizing(C, bound);
  if (M->is_zero()) return true;
  const GradedPolyRing& R = *M->ring()->ambient();
  HomModule into = hom(C, M);
  HomModule back = hom(M, C);
  if (into.module->is_zero() || back.module->is_zero()) return true;
  const ModulePtr& Cm = into.source;
  const HilbertSeries& h_into = into.module->hilbert_series();
  const HilbertSeries& h_back = back.module->hilbert_series();
  const int lo = h_into.initial_degree();
  const int hi = -h_back.initial_degree();
  for (int d = lo; d <= hi; ++d) {
    if (h_into.coefficient(d) == 0 || h_back.coefficient(-d) == 0) continue;
    auto phis = into.degree_basis(d);
    auto psis = back.degree_basis(-d);
    std::vector<std::vector<Vec>> psi_imgs;
    for (const auto& psi : psis) psi_imgs.push_back(back.images(psi));
    for (const auto& phi : phis) {
      auto phi_imgs = into.images(phi);
      for (const auto& psi : psi_imgs)
        for (const auto& src : phi_imgs) {
          Vec acc;
          for (const auto& t : src) acc = vec_axpy(R, acc, t.coeff, t.mono, psi[t.comp]);
          if (!Cm->is_zero_element(acc)) return false;
        }
    }
  }
  return true;
}

bool stable_hom_vanishes(const ModulePtr& M, const ModulePtr& C) {
  ModulePtr tr = transpose(M, FPModule::free(M->ring(), {0}));
  return tor_series(1, tr, C).is_zero();
}

namespace {

bool is_canonical(const ModulePtr& C) {
  const RingPtr& R = C->ring();
  if (!is_cohen_macaulay_ring(R)) return false;
  return iso_test_up_to_twist(C, canonical_module(R)).verdict == IsoVerdict::ProvenIso;
}

}  // namespace

LinkageReport horizontal_linkage_check(const ModulePtr& C, const ModulePtr& M, const LinkageOptions& opts) {
  require_semidualizing(C, opts.bound);
  LinkageReport rep;
  rep.operand = M;
  rep.wrt = C;
  rep.lambda = lambda_wrt(C, M, opts.bound);
  rep.lambda_squared = lambda_wrt(C, rep.lambda, opts.bound);
  rep.iso = iso_test(M, rep.lambda_squared, opts.iso);

  auto& h = rep.hypotheses;
  if (opts.hypotheses) {
    h.computed = true;
    h.bass = class_membership(ClassSide::Bass, C, M, opts.bound);
    h.c_syzygy = ext_series(1, transpose(M, C), C).is_zero();
    h.c_stable = is_c_stable(C, M, opts.bound);
    h.ext1_vanishes = ext_series(1, M, C).is_zero();
    h.stable_hom_zero = stable_hom_vanishes(hom_module(C, M), C);
    h.c_is_canonical = is_canonical(C);
    h.x1 = h.c_is_canonical ? "structural" : "assumed";
  }

  switch (rep.iso.verdict) {
    case IsoVerdict::ProvenIso:
      rep.verdict = LinkageVerdict::HorizontallyLinked;
      break;
    case IsoVerdict::ProvenNonIso: {
      rep.verdict = LinkageVerdict::NotLinked;
      bool stable = h.computed ? h.c_stable : is_c_stable(C, M, opts.bound);
      if (!stable)
        rep.reason = "not C-stable";
      else if (rep.lambda->is_zero())
        rep.reason = "lambda is zero";
      else
        rep.reason = "lambda^2 differs in " + rep.iso.mismatch;
      break;
    }
    case IsoVerdict::Inconclusive:
      rep.verdict = LinkageVerdict::Inconclusive;
      rep.reason = "no isomorphism found in " + std::to_string(rep.iso.trials) + " trials";
      break;
  }
  return rep;
}

ModulePtr change_ring(const ModulePtr& M, const RingPtr& ring) {
  if (!(*M->ring()->ambient() == *ring->ambient()))
    throw Error(ErrorCode::AmbientMismatch, "modules live over different polynomial rings");
  return FPModule::make(ring, M->degrees(), M->relations());
}

ModulePtr restrict_scalars(const ModulePtr& M, const RingPtr& R) {
  if (!(*M->ring()->ambient() == *R->ambient()))
    throw Error(ErrorCode::AmbientMismatch, "modules live over different polynomial rings");
  std::vector<Vec> rels = M->relations();
  for (const auto& f : M->ring()->ideal()->gb()) {
    if (R->reduce(f).is_zero()) continue;
    for (int i = 0; i < M->num_generators(); ++i) rels.push_back(poly_to_vec(f, i));
  }
  return FPModule::make(R, M->degrees(), std::move(rels));
}

IdealLinkageReport ideal_linkage_check(const RingPtr& R, const std::vector<Poly>& a, const ModulePtr& K,
                                       const ModulePtr& M, const LinkageOptions& opts) {
  IdealLinkageReport rep;
  for (const auto& f : a) {
    Poly g = R->reduce(f);
    if (!g.is_zero()) rep.ideal.push_back(g);
  }
  for (const auto& f : rep.ideal)
    for (int i = 0; i < M->num_generators(); ++i)
      if (!M->is_zero_element(poly_to_vec(f, i)))
        throw Error(ErrorCode::AnnihilationFailure,
                    f.to_string() + " does not annihilate generator " + std::to_string(i));
  rep.annihilates = true;
  rep.quotient = rep.ideal.empty() ? R : quotient_by(R, rep.ideal, R->name() + "/a");
  if (K) {
    if (!K->ring()->same_as(*rep.quotient)) throw Error(ErrorCode::RingMismatch, "K is not a module over R/a");
    rep.K = change_ring(K, rep.quotient);
  } else {
    rep.K = canonical_module(rep.quotient);
  }
  rep.grade_module = homological_profile(M).grade;
  rep.grade_ideal = homological_profile(FPModule::cyclic(R, rep.ideal)).grade;
  rep.linkage = horizontal_linkage_check(rep.K, change_ring(M, rep.quotient), opts);
  return rep;
}

RelativeExt relative_ext(const ModulePtr& C, const ModulePtr& M, const ModulePtr& N, int i, int bound) {
  require_semidualizing(C, bound);
  RelativeExt out;
  out.module = ext_module(i, hom_module(C, M), hom_module(C, N));
  out.both_in_bass = class_membership(ClassSide::Bass, C, M, bound).result.certified() &&
                     class_membership(ClassSide::Bass, C, N, bound).result.certified();
  if (out.both_in_bass) out.matches_absolute = out.module->hilbert_series() == ext_series(i, M, N);
  return out;
}

SequenceCheck exact_sequence_check(const ModulePtr& C, const ModulePtr& M, int max_degree) {
  SequenceCheck out;
  out.max_degree = max_degree;
  const RingPtr& ring = M->ring();
  ModulePtr Mv = hom_module(C, M)->minimal();
  ModulePtr lam = syzygy_of_transpose(Mv, C);
  ModulePtr tr = transpose(Mv, C);
  ModulePtr p1 = hom_free_module(ring, Mv->relation_degrees(), C);
  ModulePtr p0 = hom_free_module(ring, Mv->degrees(), C);
  ModulePtr dual = hom_module(Mv, C);
  std::vector<const HilbertSeries*> all = {&lam->hilbert_series(), &tr->hilbert_series(), &p1->hilbert_series(),
                                           &p0->hilbert_series(), &dual->hilbert_series()};
  int lo = max_degree;
  for (const auto* h : all)
    if (!h->is_zero()) lo = std::min(lo, h->initial_degree());
  out.lambda_sequence = out.transpose_sequence = true;
  for (int d = lo; d <= max_degree; ++d) {
    auto c = [&](const ModulePtr& X) { return X->hilbert_series().coefficient(d); };
    if (c(lam) + c(tr) != c(p1)) {
      out.lambda_sequence = false;
      if (out.detail.empty()) out.detail = "lambda sequence fails in degree " + std::to_string(d);
    }
    if (c(dual) - c(p0) + c(p1) - c(tr) != 0) {
      out.transpose_sequence = false;
      if (out.detail.empty()) out.detail = "transpose sequence fails in degree " + std::to_string(d);
    }
  }
  return out;
}

}  // namespace semilink
