#pragma once

#include <limits>
#include <string>
#include <vector>

#include "semilink/polyring.hpp"

namespace semilink {

/// One term c * m * e_comp of a vector in a free module.
struct VTerm {
  int comp;
  Monomial mono;
  Scalar coeff;
};

/// Sparse vector over a polynomial ring, terms sorted by strictly decreasing
/// position-over-term order: lower component index first, then the ring order.
using Vec = std::vector<VTerm>;

inline constexpr int kNoDegree = std::numeric_limits<int>::min();

int term_compare(const GradedPolyRing& r, const VTerm& a, const VTerm& b);

void vec_normalize(const GradedPolyRing& r, Vec& v);

Vec vec_add(const GradedPolyRing& r, const Vec& a, const Vec& b);
Vec vec_sub(const GradedPolyRing& r, const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Vec& a, const Scalar& c);
Vec vec_mul_term(const GradedPolyRing& r, const Vec& a, const Monomial& m, const Scalar& c);
Vec vec_mul_poly(const GradedPolyRing& r, const Vec& a, const Poly& p);

/// a + c * m * b, skipping the first `skip` terms of b.
Vec vec_axpy(const GradedPolyRing& r, const Vec& a, const Scalar& c, const Monomial& m, const Vec& b,
             std::size_t skip = 0);

/// Same over the term range [a, a_end); when comp >= 0 every term of b is
/// placed in component comp.
Vec vec_axpy_range(const GradedPolyRing& r, const VTerm* a, const VTerm* a_end, const Scalar& c,
                   const Monomial& m, const Vec& b, std::size_t skip, int comp = -1);

/// Shifts every component index by `offset`.
Vec vec_shift_components(const Vec& a, int offset);

Vec poly_to_vec(const Poly& p, int comp);
Poly vec_component(const PolyRingPtr& ring, const Vec& v, int comp);

/// Degree of the lead term under the twists (term degree = deg m + twist[comp]).
int vec_degree(const Vec& v, const std::vector<int>& twists);
bool vec_is_homogeneous(const Vec& v, const std::vector<int>& twists);

std::string vec_to_string(const PolyRingPtr& ring, const Vec& v);

}  // namespace semilink
