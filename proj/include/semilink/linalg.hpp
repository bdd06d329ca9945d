#pragma once

#include <unordered_map>
#include <vector>

#include "semilink/vec.hpp"

namespace semilink {

/// Row echelon form of vectors viewed as finite k-linear combinations of the
/// terms m * e_c. Pivots are the lead terms.
class VecEchelon {
 public:
  explicit VecEchelon(const GradedPolyRing& ring) : ring_(&ring) {}

  /// Remainder after eliminating every pivot term.
  Vec reduce(Vec v) const;
  /// Adds v; returns false when v is already in the span.
  bool insert(const Vec& v);
  bool in_span(const Vec& v) const { return reduce(v).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<int, Monomial>& k) const;
  };
  const GradedPolyRing* ring_;
  std::vector<Vec> rows_;
  std::unordered_map<std::pair<int, Monomial>, int, KeyHash> pivots_;
};

int scalar_rank(const GradedPolyRing& ring, const std::vector<Vec>& vecs);

}  // namespace semilink
