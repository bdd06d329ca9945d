#include <algorithm>
#include <numeric>

#include "semilink/modules.hpp"

namespace semilink {

namespace {

HilbertSeries zero_series(const RingPtr& ring) { return HilbertSeries(ring->hilbert_series().weights()); }

// Copies of the relations of N in blocks 0..blocks-1 of width s.
std::vector<Vec> relation_blocks(const FPModule& N, int blocks) {
  const int s = N.num_generators();
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(blocks) * N.relations().size());
  for (int b = 0; b < blocks; ++b)
    for (const auto& l : N.relations()) out.push_back(vec_shift_components(l, b * s));
  return out;
}

std::vector<Vec> unit_basis(const GradedPolyRing& R, int n) {
  std::vector<Vec> out;
  for (int i = 0; i < n; ++i) out.push_back(Vec{VTerm{i, R.one(), R.one_scalar()}});
  return out;
}

std::vector<int> degrees_of(const std::vector<Vec>& vs, const std::vector<int>& twists) {
  std::vector<int> out;
  for (const auto& v : vs) out.push_back(vec_degree(v, twists));
  return out;
}

// Hom(F, N) and F (x) N for a free module F with the given twists: generator
// (g, n) sits in component g * s + n.
std::vector<int> hom_twists(const std::vector<int>& F, const FPModule& N) {
  std::vector<int> out;
  for (int d : F)
    for (int e : N.degrees()) out.push_back(e - d);
  return out;
}

std::vector<int> tensor_twists(const std::vector<int>& F, const FPModule& N) {
  std::vector<int> out;
  for (int d : F)
    for (int e : N.degrees()) out.push_back(e + d);
  return out;
}

HilbertSeries hom_free_series(const std::vector<int>& F, const FPModule& N) {
  HilbertSeries out = zero_series(N.ring());
  for (int d : F) out += N.hilbert_series().shifted(-d);
  return out;
}

HilbertSeries tensor_free_series(const std::vector<int>& F, const FPModule& N) {
  HilbertSeries out = zero_series(N.ring());
  for (int d : F) out += N.hilbert_series().shifted(d);
  return out;
}

// Images of Hom(F_j, N) -> Hom(F_{j+1}, N) induced by the columns of d_{j+1}.
std::vector<Vec> dual_images(const GradedPolyRing& R, const std::vector<Vec>& cols, int rank_j, int s) {
  std::vector<Vec> out(static_cast<std::size_t>(rank_j) * s);
  for (std::size_t h = 0; h < cols.size(); ++h)
    for (const auto& t : cols[h])
      for (int n = 0; n < s; ++n)
        out[t.comp * s + n].push_back(VTerm{static_cast<int>(h) * s + n, t.mono, t.coeff});
  for (auto& v : out) vec_normalize(R, v);
  return out;
}

// Images of F_j (x) N -> F_{j-1} (x) N induced by the columns of d_j.
std::vector<Vec> tensor_images(const std::vector<Vec>& cols, int s) {
  std::vector<Vec> out;
  out.reserve(cols.size() * s);
  for (const auto& c : cols)
    for (int n = 0; n < s; ++n) {
      Vec v;
      v.reserve(c.size());
      for (const auto& t : c) v.push_back(VTerm{t.comp * s + n, t.mono, t.coeff});
      out.push_back(std::move(v));
    }
  return out;
}

HilbertSeries coker_series(const RingPtr& ring, const std::vector<int>& twists, std::vector<Vec> rels,
                           const std::vector<Vec>& more) {
  if (twists.empty()) return zero_series(ring);
  rels.insert(rels.end(), more.begin(), more.end());
  return FPModule(ring, twists, std::move(rels)).hilbert_series();
}

HilbertSeries ext_series_from(int i, const ResolutionPrefix& res, const RingPtr& ring, const FPModule& N) {
  if (res.rank(i) == 0 || N.num_generators() == 0) return zero_series(ring);
  const GradedPolyRing& R = *ring->ambient();
  const int s = N.num_generators();
  HilbertSeries out = zero_series(ring);
  // coker a_{i-1}
  if (i == 0) {
    out += hom_free_series(res.twists[0], N);
  } else {
    auto imgs = dual_images(R, res.maps[i - 1], res.rank(i - 1), s);
    out += coker_series(ring, hom_twists(res.twists[i], N), relation_blocks(N, res.rank(i)), imgs);
  }
  if (res.rank(i + 1) > 0) {
    auto imgs = dual_images(R, res.maps[i], res.rank(i), s);
    out += coker_series(ring, hom_twists(res.twists[i + 1], N), relation_blocks(N, res.rank(i + 1)), imgs);
    out -= hom_free_series(res.twists[i + 1], N);
  }
  return out;
}

}  // namespace

std::vector<Vec> HomModule::images(const Vec& flat) const {
  const int r0 = source->num_generators();
  const int s = target->num_generators();
  std::vector<Vec> out(r0);
  for (const auto& t : flat) out[t.comp / s].push_back(VTerm{t.comp % s, t.mono, t.coeff});
  return out;
}

std::vector<Vec> HomModule::degree_spanning_set(int d) const {
  std::vector<Vec> out;
  const GradedPolyRing& R = *module->ring()->ambient();
  for (int g = 0; g < module->num_generators(); ++g) {
    int k = d - module->degrees()[g];
    if (k < 0) continue;
    for (const auto& m : R.monomials_of_degree(k)) {
      Vec v = ambient_gb->normal_form(vec_mul_term(R, homs[g], m, R.one_scalar()));
      if (!v.empty()) out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Vec> HomModule::degree_basis(int d) const {
  VecEchelon e(*module->ring()->ambient());
  std::vector<Vec> out;
  for (auto& v : degree_spanning_set(d))
    if (e.insert(v)) out.push_back(std::move(v));
  return out;
}

HomModule hom(const ModulePtr& M, const ModulePtr& N) {
  if (!M->ring()->same_as(*N->ring())) throw Error(ErrorCode::RingMismatch, "modules over different rings");
  const RingPtr& ring = M->ring();
  const GradedPolyRing& R = *ring->ambient();
  HomModule h;
  h.source = M->minimal();
  h.target = N->minimal();
  const int r0 = h.source->num_generators();
  const int s = h.target->num_generators();
  h.ambient_twists = hom_twists(h.source->degrees(), *h.target);
  std::vector<Vec> Lblocks = relation_blocks(*h.target, r0);
  h.ambient_gb = std::make_shared<const ModuleGB>(
      ModuleGB::compute(ring->ambient(), ring->reducer(), h.ambient_twists, Lblocks));
  if (r0 == 0 || s == 0) {
    h.module = FPModule::zero(ring);
    return h;
  }
  const auto& rels = h.source->relations();
  std::vector<Vec> K;
  if (rels.empty()) {
    K = unit_basis(R, r0 * s);
  } else {
    std::vector<int> rel_deg = h.source->relation_degrees();
    std::vector<int> target_twists = hom_twists(rel_deg, *h.target);
    auto images = dual_images(R, rels, r0, s);
    K = preimage_generators(ring, h.ambient_twists, target_twists, images,
                            relation_blocks(*h.target, static_cast<int>(rels.size())));
  }
  ModulePtr sub = subquotient(ring, h.ambient_twists, K, Lblocks, degrees_of(K, h.ambient_twists));
  const MinimalPresentation& mp = sub->minimal_info();
  h.module = mp.module;
  for (int g : mp.kept) h.homs.push_back(h.ambient_gb->normal_form(K[g]));
  return h;
}

ModulePtr hom_module(const ModulePtr& M, const ModulePtr& N) { return hom(M, N).module; }

ModulePtr tensor(const ModulePtr& M0, const ModulePtr& N0) {
  if (!M0->ring()->same_as(*N0->ring())) throw Error(ErrorCode::RingMismatch, "modules over different rings");
  ModulePtr M = M0->minimal(), N = N0->minimal();
  const int r = M->num_generators(), s = N->num_generators();
  std::vector<int> tw = tensor_twists(M->degrees(), *N);
  std::vector<Vec> rels = tensor_images(M->relations(), s);
  auto blocks = relation_blocks(*N, r);
  rels.insert(rels.end(), blocks.begin(), blocks.end());
  return FPModule::make(M->ring(), std::move(tw), std::move(rels))->minimal();
}

ModulePtr direct_sum(const ModulePtr& M, const ModulePtr& N) {
  if (!M->ring()->same_as(*N->ring())) throw Error(ErrorCode::RingMismatch, "modules over different rings");
  std::vector<int> d = M->degrees();
  d.insert(d.end(), N->degrees().begin(), N->degrees().end());
  std::vector<Vec> rels = M->relations();
  for (const auto& v : N->relations()) rels.push_back(vec_shift_components(v, M->num_generators()));
  return FPModule::make(M->ring(), std::move(d), std::move(rels));
}

HilbertSeries ext_series(int i, const ModulePtr& M, const ModulePtr& N) {
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "negative homological degree");
  if (!M->ring()->same_as(*N->ring())) throw Error(ErrorCode::RingMismatch, "modules over different rings");
  ResolutionPrefix res = free_resolution(M, i + 1);
  return ext_series_from(i, res, M->ring(), *N->minimal());
}

HilbertSeries tor_series(int i, const ModulePtr& M, const ModulePtr& N0) {
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "negative homological degree");
  if (!M->ring()->same_as(*N0->ring())) throw Error(ErrorCode::RingMismatch, "modules over different rings");
  const RingPtr& ring = M->ring();
  ModulePtr N = N0->minimal();
  ResolutionPrefix res = free_resolution(M, i + 1);
  if (res.rank(i) == 0 || N->num_generators() == 0) return zero_series(ring);
  const int s = N->num_generators();
  HilbertSeries out = zero_series(ring);
  if (i > 0) {
    out += coker_series(ring, tensor_twists(res.twists[i - 1], *N), relation_blocks(*N, res.rank(i - 1)),
                        tensor_images(res.maps[i - 1], s));
    out -= tensor_free_series(res.twists[i - 1], *N);
  }
  if (res.rank(i + 1) > 0)
    out += coker_series(ring, tensor_twists(res.twists[i], *N), relation_blocks(*N, res.rank(i)),
                        tensor_images(res.maps[i], s));
  else
    out += tensor_free_series(res.twists[i], *N);
  return out;
}

ModulePtr ext_module(int i, const ModulePtr& M, const ModulePtr& N0) {
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "negative homological degree");
  if (!M->ring()->same_as(*N0->ring())) throw Error(ErrorCode::RingMismatch, "modules over different rings");
  const RingPtr& ring = M->ring();
  const GradedPolyRing& R = *ring->ambient();
  ModulePtr N = N0->minimal();
  ResolutionPrefix res = free_resolution(M, i + 1);
  if (res.rank(i) == 0 || N->num_generators() == 0) return FPModule::zero(ring);
  const int s = N->num_generators();
  std::vector<int> Xi = hom_twists(res.twists[i], *N);
  std::vector<Vec> V;
  if (res.rank(i + 1) > 0) {
    V = preimage_generators(ring, Xi, hom_twists(res.twists[i + 1], *N), dual_images(R, res.maps[i], res.rank(i), s),
                            relation_blocks(*N, res.rank(i + 1)));
  } else {
    V = unit_basis(R, static_cast<int>(Xi.size()));
  }
  std::vector<Vec> W = relation_blocks(*N, res.rank(i));
  if (i > 0) {
    auto imgs = dual_images(R, res.maps[i - 1], res.rank(i - 1), s);
    W.insert(W.end(), imgs.begin(), imgs.end());
  }
  return subquotient(ring, Xi, V, W, degrees_of(V, Xi))->minimal();
}

ModulePtr tor_module(int i, const ModulePtr& M, const ModulePtr& N0) {
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "negative homological degree");
  if (!M->ring()->same_as(*N0->ring())) throw Error(ErrorCode::RingMismatch, "modules over different rings");
  const RingPtr& ring = M->ring();
  const GradedPolyRing& R = *ring->ambient();
  ModulePtr N = N0->minimal();
  ResolutionPrefix res = free_resolution(M, i + 1);
  if (res.rank(i) == 0 || N->num_generators() == 0) return FPModule::zero(ring);
  const int s = N->num_generators();
  std::vector<int> Xi = tensor_twists(res.twists[i], *N);
  std::vector<Vec> V;
  if (i > 0) {
    V = preimage_generators(ring, Xi, tensor_twists(res.twists[i - 1], *N), tensor_images(res.maps[i - 1], s),
                            relation_blocks(*N, res.rank(i - 1)));
  } else {
    V = unit_basis(R, static_cast<int>(Xi.size()));
  }
  std::vector<Vec> W = relation_blocks(*N, res.rank(i));
  if (res.rank(i + 1) > 0) {
    auto imgs = tensor_images(res.maps[i], s);
    W.insert(W.end(), imgs.begin(), imgs.end());
  }
  return subquotient(ring, Xi, V, W, degrees_of(V, Xi))->minimal();
}

HilbertSeries ambient_ext_series(int i, const ModulePtr& M) {
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "negative homological degree");
  ResolutionPrefix res = ambient_resolution(M);
  RingPtr S = make_quotient_ring(M->ring()->ambient(), {}, "S");
  FPModule free_rank_one(S, {0}, {});
  return ext_series_from(i, res, S, free_rank_one);
}

ModulePtr transpose(const ModulePtr& M0, const ModulePtr& C0) {
  if (!M0->ring()->same_as(*C0->ring())) throw Error(ErrorCode::RingMismatch, "modules over different rings");
  const RingPtr& ring = M0->ring();
  ModulePtr M = M0->minimal(), C = C0->minimal();
  const int r0 = M->num_generators();
  const int s = C->num_generators();
  if (M->num_relations() == 0 || s == 0) return FPModule::zero(ring);
  std::vector<int> tw = hom_twists(M->relation_degrees(), *C);
  std::vector<Vec> rels = relation_blocks(*C, M->num_relations());
  auto imgs = dual_images(*ring->ambient(), M->relations(), r0, s);
  rels.insert(rels.end(), imgs.begin(), imgs.end());
  return FPModule::make(ring, std::move(tw), std::move(rels));
}

ModulePtr syzygy_of_transpose(const ModulePtr& M0, const ModulePtr& C0) {
  if (!M0->ring()->same_as(*C0->ring())) throw Error(ErrorCode::RingMismatch, "modules over different rings");
  const RingPtr& ring = M0->ring();
  ModulePtr M = M0->minimal(), C = C0->minimal();
  const int r0 = M->num_generators();
  const int s = C->num_generators();
  if (M->num_relations() == 0 || s == 0) return FPModule::zero(ring);
  std::vector<int> tw = hom_twists(M->relation_degrees(), *C);
  std::vector<Vec> V = dual_images(*ring->ambient(), M->relations(), r0, s);
  return subquotient(ring, tw, V, relation_blocks(*C, M->num_relations()), hom_twists(M->degrees(), *C))->minimal();
}

ModulePtr hom_free_module(const RingPtr& ring, const std::vector<int>& twists, const ModulePtr& C0) {
  ModulePtr C = C0->minimal();
  if (twists.empty() || C->num_generators() == 0) return FPModule::zero(ring);
  return FPModule::make(ring, hom_twists(twists, *C), relation_blocks(*C, static_cast<int>(twists.size())));
}

}  // namespace semilink
