#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "semilink/hilbert.hpp"
#include "semilink/polyring.hpp"
#include "semilink/vec.hpp"

namespace semilink {

class Ideal;
using IdealPtr = std::shared_ptr<const Ideal>;

struct GBOptions {
  /// Record syzygies among the inputs (Schreyer-style tracking).
  bool track = false;
  /// Inputs already in the span of earlier data are dropped instead of
  /// producing a syzygy; the kept inputs are then a minimal generating set.
  bool drop_redundant = false;
  /// Interreduce the final basis.
  bool reduce = true;
};

/// Groebner basis of U + I*F inside F = (+)_j S(-twist_j), where I is an
/// optional homogeneous ideal of S. The I*F part is never materialized: every
/// vector is reduced modulo GB(I) componentwise.
class ModuleGB {
 public:
  ModuleGB() = default;

  /// `input_degrees` fixes the degrees of the inputs (needed for zero
  /// inputs); when empty they are read off the vectors.
  static ModuleGB compute(PolyRingPtr ring, IdealPtr quotient, std::vector<int> twists,
                          const std::vector<Vec>& gens, GBOptions opts = {},
                          std::vector<int> input_degrees = {});

  const PolyRingPtr& ring() const { return ring_; }
  const IdealPtr& quotient() const { return quotient_; }
  const std::vector<int>& twists() const { return twists_; }
  int rank() const { return static_cast<int>(twists_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }

  /// Indices of inputs that survived (all nonzero inputs unless drop_redundant).
  const std::vector<int>& kept() const { return kept_; }
  /// Syzygies among the kept inputs, components indexed by position in kept().
  const std::vector<Vec>& syzygies() const { return syzygies_; }
  /// Twists of the free module the syzygies live in (degrees of kept inputs).
  const std::vector<int>& kept_degrees() const { return kept_degrees_; }

  /// Fully reduced remainder modulo the basis and the quotient ideal.
  Vec normal_form(const Vec& v) const;
  bool contains(const Vec& v) const { return normal_form(v).empty(); }

  /// Hilbert series of F / (U + I F).
  HilbertSeries hilbert_series() const;

  /// Lead monomials per component, including those of I.
  std::vector<std::vector<Monomial>> lead_monomials() const;

 private:
  PolyRingPtr ring_;
  IdealPtr quotient_;
  std::vector<int> twists_;
  std::vector<Vec> basis_;
  std::vector<int> kept_;
  std::vector<int> kept_degrees_;
  std::vector<Vec> syzygies_;
  std::vector<std::vector<int>> by_comp_;
  std::vector<std::uint32_t> sevs_;
};

/// Homogeneous ideal of a polynomial ring with a lazily computed reduced
/// Groebner basis.
class Ideal {
 public:
  Ideal(PolyRingPtr ring, std::vector<Poly> gens);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_zero() const;

  /// Reduced, monic Groebner basis sorted by increasing lead monomial.
  const std::vector<Poly>& gb() const;
  const std::vector<Monomial>& lead_monomials() const;

  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

  /// Normal form of every component of v.
  Vec reduce_vec(const Vec& v) const;

  /// Hilbert series of S / I.
  HilbertSeries quotient_series() const;
  int krull_dim() const { return quotient_series().dim(); }

 private:
  void ensure_gb() const;

  PolyRingPtr ring_;
  std::vector<Poly> gens_;
  mutable std::once_flag once_;
  mutable std::vector<Poly> gb_;
  mutable std::vector<Monomial> leads_;
  mutable std::vector<std::uint32_t> sevs_;
};

/// Short exponent vector: bit i set when variable i occurs.
std::uint32_t short_exponent(const GradedPolyRing& ring, const Monomial& m);

/// Syzygies of the columns of a matrix over S / I (I may be null). Returns
/// generators of the kernel of (+) S(-deg col_j) -> F.
std::vector<Vec> syzygy_basis(const PolyRingPtr& ring, const IdealPtr& quotient,
                              const std::vector<int>& target_twists, const std::vector<Vec>& columns,
                              std::vector<int>* source_twists = nullptr);

}  // namespace semilink
