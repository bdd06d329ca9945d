#include <algorithm>
#include <random>

#include "semilink/modules.hpp"

namespace semilink {

const char* iso_verdict_name(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::ProvenIso: return "proven_iso";
    case IsoVerdict::ProvenNonIso: return "proven_non_iso";
    case IsoVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

Scalar random_scalar(const FieldDescriptor& f, std::mt19937_64& rng) {
  if (f.is_prime()) {
    std::uniform_int_distribution<long> dist(0, static_cast<long>(f.characteristic()) - 1);
    return Scalar::from_int(f, dist(rng));
  }
  std::uniform_int_distribution<long> dist(-10, 10);
  return Scalar::from_int(f, dist(rng));
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Images of the generators of M under a map M -> N are surjective onto N
// exactly when their scalar parts span k^{#gens N}.
bool scalar_surjective(const GradedPolyRing& R, const std::vector<Vec>& imgs, int target_gens) {
  std::vector<Vec> scalar_parts;
  for (const auto& v : imgs) {
    Vec c;
    for (const auto& t : v)
      if (t.mono.is_one()) c.push_back(t);
    scalar_parts.push_back(std::move(c));
  }
  return scalar_rank(R, scalar_parts) == target_gens;
}

}  // namespace

bool verify_iso_witness(const ModulePtr& M0, const ModulePtr& N0, const std::vector<Vec>& witness) {
  ModulePtr M = M0->minimal(), N = N0->minimal();
  if (static_cast<int>(witness.size()) != M->num_generators()) return false;
  if (M->hilbert_series() != N->hilbert_series()) return false;
  const GradedPolyRing& R = *M->ring()->ambient();
  for (int i = 0; i < M->num_generators(); ++i)
    if (!vec_is_homogeneous(witness[i], N->degrees()) ||
        (!witness[i].empty() && vec_degree(witness[i], N->degrees()) != M->degrees()[i]))
      return false;
  for (const auto& rel : M->relations()) {
    Vec img;
    for (const auto& t : rel) img = vec_axpy(R, img, t.coeff, t.mono, witness[t.comp]);
    if (!N->is_zero_element(img)) return false;
  }
  std::vector<Vec> rels = N->relations();
  rels.insert(rels.end(), witness.begin(), witness.end());
  return FPModule(N->ring(), N->degrees(), std::move(rels)).hilbert_series().is_zero();
}

IsoEvidence iso_test(const ModulePtr& M0, const ModulePtr& N0, IsoOptions opts) {
  if (!M0->ring()->same_as(*N0->ring())) throw Error(ErrorCode::RingMismatch, "modules over different rings");
  IsoEvidence ev;
  ModulePtr M = M0->minimal(), N = N0->minimal();
  if (M->hilbert_series() != N->hilbert_series()) {
    ev.verdict = IsoVerdict::ProvenNonIso;
    ev.mismatch = "hilbert_series";
    return ev;
  }
  if (sorted(M->degrees()) != sorted(N->degrees())) {
    ev.verdict = IsoVerdict::ProvenNonIso;
    ev.mismatch = "betti_0";
    return ev;
  }
  if (sorted(M->relation_degrees()) != sorted(N->relation_degrees())) {
    ev.verdict = IsoVerdict::ProvenNonIso;
    ev.mismatch = "betti_1";
    return ev;
  }
  if (M->num_generators() == 0) {
    ev.verdict = IsoVerdict::ProvenIso;
    ev.witness = std::vector<Vec>{};
    return ev;
  }
  HomModule H = hom(M, N);
  std::vector<Vec> span = H.degree_basis(0);
  if (span.empty()) {
    ev.verdict = IsoVerdict::ProvenNonIso;
    ev.mismatch = "hom_degree_zero";
    return ev;
  }
  const GradedPolyRing& R = *M->ring()->ambient();
  std::mt19937_64 rng(opts.seed);
  for (int trial = 0; trial < opts.trials; ++trial) {
    ev.trials = trial + 1;
    Vec phi;
    for (const auto& b : span) phi = vec_axpy(R, phi, random_scalar(R.field(), rng), R.one(), b);
    std::vector<Vec> imgs = H.images(phi);
    if (!scalar_surjective(R, imgs, N->num_generators())) continue;
    if (verify_iso_witness(M, N, imgs)) {
      ev.verdict = IsoVerdict::ProvenIso;
      ev.witness = std::move(imgs);
      return ev;
    }
  }
  ev.verdict = IsoVerdict::Inconclusive;
  return ev;
}

IsoEvidence iso_test_up_to_twist(const ModulePtr& M, const ModulePtr& N, IsoOptions opts) {
  const HilbertSeries& hm = M->hilbert_series();
  const HilbertSeries& hn = N->hilbert_series();
  if (hm.is_zero() || hn.is_zero()) {
    IsoEvidence ev = iso_test(M, N, opts);
    return ev;
  }
  int k = hn.initial_degree() - hm.initial_degree();
  // N(k) has series t^{-k} HS(N)
  IsoEvidence ev = iso_test(M, N->twisted(k), opts);
  ev.twist = k;
  return ev;
}

}  // namespace semilink
