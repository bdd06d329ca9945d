#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semilink/polyring.hpp"

namespace semilink {

/// Hilbert series N(t) / prod_i (1 - t^{w_i}) with N a Laurent polynomial over
/// the integers. All series of modules over one ambient ring share the
/// denominator weights.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  explicit HilbertSeries(std::vector<int> weights);
  HilbertSeries(std::vector<int> weights, int offset, std::vector<std::int64_t> numerator);

  const std::vector<int>& weights() const { return weights_; }
  /// numerator()[k] is the coefficient of t^{offset()+k}.
  int offset() const { return offset_; }
  const std::vector<std::int64_t>& numerator() const { return num_; }

  bool is_zero() const { return num_.empty(); }

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  HilbertSeries operator-() const;
  HilbertSeries& operator+=(const HilbertSeries& o) { return *this = *this + o; }
  HilbertSeries& operator-=(const HilbertSeries& o) { return *this = *this - o; }
  /// Multiplication by t^k.
  HilbertSeries shifted(int k) const;
  /// Multiplication by an integer Laurent polynomial sum_j p[j] t^{lo+j}.
  HilbertSeries times(int lo, const std::vector<std::int64_t>& p) const;

  bool operator==(const HilbertSeries& o) const;
  bool operator!=(const HilbertSeries& o) const { return !(*this == o); }

  /// Value of the Hilbert function in degree d.
  std::int64_t coefficient(int d) const;
  /// Hilbert function on [lo, hi].
  std::vector<std::int64_t> expand(int lo, int hi) const;

  /// Krull dimension (order of the pole at t = 1); -1 for the zero series.
  int dim() const;
  /// Total dimension when the series is a Laurent polynomial (dim <= 0).
  std::optional<std::int64_t> length() const;
  /// Lowest degree with a possibly nonzero coefficient.
  int initial_degree() const;
  /// For finite-length series: the highest degree with nonzero value.
  std::optional<int> top_degree() const;

  /// "N(t) / prod (1 - t^w)" rendering.
  std::string to_string() const;

 private:
  void trim();
  void check(const HilbertSeries& o) const;

  std::vector<int> weights_;
  int offset_ = 0;
  std::vector<std::int64_t> num_;
};

/// Hilbert series of S / J for the monomial ideal J generated by `gens`.
HilbertSeries monomial_quotient_series(const GradedPolyRing& ring, std::vector<Monomial> gens);

}  // namespace semilink
