#include "semilink/field.hpp"

namespace semilink {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::NotCohenMacaulay: return "NotCohenMacaulay";
    case ErrorCode::NotSemidualizing: return "NotSemidualizing";
    case ErrorCode::ImproperIdeal: return "ImproperIdeal";
    case ErrorCode::AnnihilationFailure: return "AnnihilationFailure";
    case ErrorCode::DimensionZero: return "DimensionZero";
    case ErrorCode::AmbientNotCM: return "AmbientNotCM";
    case ErrorCode::ResolutionTooShort: return "ResolutionTooShort";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime_number(p))
    throw Error(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) +
                                                " is not a prime below 2^31");
  return FieldDescriptor(FieldKind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldDescriptor::to_string() const {
  if (kind_ == FieldKind::Rationals) return "QQ";
  return "GF(" + std::to_string(characteristic_) + ")";
}

namespace {

std::uint32_t mod_reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar Scalar::from_int(const FieldDescriptor& f, long value) {
  if (f.is_prime()) return Scalar(Residue{mod_reduce(value, f.characteristic()), f.characteristic()});
  return Scalar(mpq_class(value));
}

Scalar Scalar::from_rational(const FieldDescriptor& f, const mpq_class& q) {
  if (!f.is_prime()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
  }
  const std::uint32_t p = f.characteristic();
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (num < 0) num += p;
  if (den < 0) den += p;
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator divisible by the characteristic");
  std::uint32_t n = static_cast<std::uint32_t>(num.get_ui());
  std::uint32_t d = static_cast<std::uint32_t>(den.get_ui());
  std::uint64_t v = static_cast<std::uint64_t>(n) * mod_inverse(d, p) % p;
  return Scalar(Residue{static_cast<std::uint32_t>(v), p});
}

FieldDescriptor Scalar::field() const {
  if (is_residue()) return FieldDescriptor::prime(residue().modulus);
  return FieldDescriptor::rationals();
}

bool Scalar::is_zero() const {
  if (is_residue()) return residue().value == 0;
  return sgn(rational()) == 0;
}

bool Scalar::is_one() const {
  if (is_residue()) return residue().value == 1;
  return rational() == 1;
}

void Scalar::check_same(const Scalar& b) const {
  if (is_residue() != b.is_residue() || (is_residue() && residue().modulus != b.residue().modulus))
    throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
}

Scalar Scalar::operator+(const Scalar& b) const {
  check_same(b);
  if (is_residue()) {
    const auto& x = residue();
    std::uint64_t s = static_cast<std::uint64_t>(x.value) + b.residue().value;
    if (s >= x.modulus) s -= x.modulus;
    return Scalar(Residue{static_cast<std::uint32_t>(s), x.modulus});
  }
  return Scalar(mpq_class(rational() + b.rational()));
}

Scalar Scalar::operator-(const Scalar& b) const {
  check_same(b);
  if (is_residue()) {
    const auto& x = residue();
    std::uint64_t s = static_cast<std::uint64_t>(x.value) + x.modulus - b.residue().value;
    if (s >= x.modulus) s -= x.modulus;
    return Scalar(Residue{static_cast<std::uint32_t>(s), x.modulus});
  }
  return Scalar(mpq_class(rational() - b.rational()));
}

Scalar Scalar::operator*(const Scalar& b) const {
  check_same(b);
  if (is_residue()) {
    const auto& x = residue();
    std::uint64_t s = static_cast<std::uint64_t>(x.value) * b.residue().value % x.modulus;
    return Scalar(Residue{static_cast<std::uint32_t>(s), x.modulus});
  }
  return Scalar(mpq_class(rational() * b.rational()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_residue()) {
    const auto& x = residue();
    return Scalar(Residue{mod_inverse(x.value, x.modulus), x.modulus});
  }
  return Scalar(mpq_class(1 / rational()));
}

Scalar Scalar::operator/(const Scalar& b) const {
  check_same(b);
  return *this * b.inverse();
}

Scalar Scalar::operator-() const {
  if (is_residue()) {
    const auto& x = residue();
    return Scalar(Residue{x.value == 0 ? 0u : x.modulus - x.value, x.modulus});
  }
  return Scalar(mpq_class(-rational()));
}

bool Scalar::operator==(const Scalar& b) const {
  check_same(b);
  if (is_residue()) return residue().value == b.residue().value;
  return rational() == b.rational();
}

std::string Scalar::to_string() const {
  if (is_residue()) return std::to_string(residue().value);
  return rational().get_str();
}

}  // namespace semilink
