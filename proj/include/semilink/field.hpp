#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <variant>

#include "semilink/error.hpp"

namespace semilink {

enum class FieldKind { Rationals, PrimeField };

/// The coefficient field: QQ or GF(p) with p a prime below 2^31.
class FieldDescriptor {
 public:
  static FieldDescriptor rationals() { return FieldDescriptor(FieldKind::Rationals, 0); }
  static FieldDescriptor prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return characteristic_; }
  bool is_prime() const { return kind_ == FieldKind::PrimeField; }

  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  FieldDescriptor(FieldKind kind, std::uint32_t characteristic)
      : kind_(kind), characteristic_(characteristic) {}

  FieldKind kind_;
  std::uint32_t characteristic_;
};

bool is_prime_number(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues lie in [0, p).
class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(const FieldDescriptor& f) { return from_int(f, 0); }
  static Scalar one(const FieldDescriptor& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldDescriptor& f, long value);
  static Scalar from_rational(const FieldDescriptor& f, const mpq_class& q);

  FieldDescriptor field() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& b) const;
  Scalar operator-(const Scalar& b) const;
  Scalar operator*(const Scalar& b) const;
  Scalar operator/(const Scalar& b) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar inverse() const;

  /// Canonical forms are unique, so equality compares representations.
  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  std::string to_string() const;

  bool is_residue() const { return std::holds_alternative<Residue>(value_); }
  const Residue& residue() const { return std::get<Residue>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

 private:
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  void check_same(const Scalar& b) const;

  std::variant<Residue, mpq_class> value_;
};

}  // namespace semilink
