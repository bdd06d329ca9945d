#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "semilink/field.hpp"

namespace semilink {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 1 << 16;

/// Exponent vector with its cached weighted degree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exps{};
  std::int32_t degree = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.exps == b.exps;
  }
  bool is_one() const { return degree == 0; }
};

enum class OrderKind { GrevLex, Lex, WeightedGrevLex };

struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
};

struct Variable {
  std::string name;
  int weight = 1;
};

/// Positively graded polynomial ring k[x_1..x_n] with a monomial order.
class GradedPolyRing {
 public:
  GradedPolyRing(FieldDescriptor field, std::vector<Variable> vars,
                 MonomialOrder order = MonomialOrder{});

  const FieldDescriptor& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<Variable>& variables() const { return vars_; }
  int weight(int i) const { return vars_[i].weight; }
  int weight_sum() const;
  MonomialOrder order() const { return order_; }
  int variable_index(std::string_view name) const;  // -1 when absent

  Monomial one() const { return Monomial{}; }
  Monomial variable(int i) const;
  Monomial make_monomial(const std::vector<int>& exponents) const;

  Monomial mul(const Monomial& a, const Monomial& b) const;
  bool divides(const Monomial& a, const Monomial& b) const;  // a | b
  Monomial quotient(const Monomial& b, const Monomial& a) const;  // b / a, requires a | b
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  bool coprime(const Monomial& a, const Monomial& b) const;

  /// Three-way comparison under the ring order: >0 when a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  /// All monomials of the given weighted degree, in decreasing order.
  std::vector<Monomial> monomials_of_degree(int degree) const;

  std::string monomial_to_string(const Monomial& m) const;
  std::string to_string() const;

  bool operator==(const GradedPolyRing& other) const;

  Scalar zero() const { return Scalar::zero(field_); }
  Scalar one_scalar() const { return Scalar::one(field_); }

 private:
  FieldDescriptor field_;
  std::vector<Variable> vars_;
  MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const GradedPolyRing>;

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Polynomial with terms sorted by strictly decreasing monomial, no zero
/// coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(PolyRingPtr ring) : ring_(std::move(ring)) {}
  Poly(PolyRingPtr ring, std::vector<Term> terms);  // normalizes

  static Poly constant(PolyRingPtr ring, const Scalar& c);
  static Poly monomial(PolyRingPtr ring, const Monomial& m, const Scalar& c);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  bool is_homogeneous() const;
  int degree() const;  // degree of the leading term; -1 for zero

  Poly operator+(const Poly& g) const;
  Poly operator-(const Poly& g) const;
  Poly operator*(const Poly& g) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& m, const Scalar& c) const;

  bool operator==(const Poly& g) const;
  bool operator!=(const Poly& g) const { return !(*this == g); }

  std::string to_string() const;

 private:
  void check_ring(const Poly& g) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses integers/rationals, variable names, + - * ^ and parentheses.
Poly parse_poly(std::string_view text, const PolyRingPtr& ring);

/// Coefficient rendering used by printers: residues above p/2 print negative.
std::string scalar_to_signed_string(const Scalar& c);

}  // namespace semilink
