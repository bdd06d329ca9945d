#include "semilink/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace semilink {

GradedPolyRing::GradedPolyRing(FieldDescriptor field, std::vector<Variable> vars,
                               MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
  if (static_cast<int>(vars_.size()) > kMaxVars)
    throw Error(ErrorCode::InvalidArgument, "at most " + std::to_string(kMaxVars) + " variables");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.weight < 1) throw Error(ErrorCode::InvalidArgument, "variable weight must be >= 1: " + v.name);
    if (!seen.insert(v.name).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate variable name: " + v.name);
  }
}

int GradedPolyRing::weight_sum() const {
  int s = 0;
  for (const auto& v : vars_) s += v.weight;
  return s;
}

int GradedPolyRing::variable_index(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i].name == name) return i;
  return -1;
}

Monomial GradedPolyRing::variable(int i) const {
  Monomial m;
  m.exps[i] = 1;
  m.degree = vars_[i].weight;
  return m;
}

Monomial GradedPolyRing::make_monomial(const std::vector<int>& exponents) const {
  Monomial m;
  for (int i = 0; i < nvars() && i < static_cast<int>(exponents.size()); ++i) {
    if (exponents[i] < 0 || exponents[i] >= kMaxExponent)
      throw Error(ErrorCode::InvalidArgument, "exponent out of range");
    m.exps[i] = static_cast<std::uint16_t>(exponents[i]);
    m.degree += exponents[i] * vars_[i].weight;
  }
  return m;
}

Monomial GradedPolyRing::mul(const Monomial& a, const Monomial& b) const {
  Monomial m;
  const int n = nvars();
  for (int i = 0; i < n; ++i) {
    int e = a.exps[i] + b.exps[i];
    if (e >= kMaxExponent) throw Error(ErrorCode::InvalidArgument, "exponent overflow");
    m.exps[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = a.degree + b.degree;
  return m;
}

bool GradedPolyRing::divides(const Monomial& a, const Monomial& b) const {
  if (a.degree > b.degree) return false;
  const int n = nvars();
  for (int i = 0; i < n; ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial GradedPolyRing::quotient(const Monomial& b, const Monomial& a) const {
  Monomial m;
  const int n = nvars();
  for (int i = 0; i < n; ++i) m.exps[i] = static_cast<std::uint16_t>(b.exps[i] - a.exps[i]);
  m.degree = b.degree - a.degree;
  return m;
}

Monomial GradedPolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  const int n = nvars();
  for (int i = 0; i < n; ++i) {
    m.exps[i] = std::max(a.exps[i], b.exps[i]);
    m.degree += m.exps[i] * vars_[i].weight;
  }
  return m;
}

bool GradedPolyRing::coprime(const Monomial& a, const Monomial& b) const {
  const int n = nvars();
  for (int i = 0; i < n; ++i)
    if (a.exps[i] != 0 && b.exps[i] != 0) return false;
  return true;
}

int GradedPolyRing::compare(const Monomial& a, const Monomial& b) const {
  const int n = nvars();
  if (order_.kind == OrderKind::Lex) {
    for (int i = 0; i < n; ++i)
      if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
    return 0;
  }
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (int i = n - 1; i >= 0; --i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
  return 0;
}

std::vector<Monomial> GradedPolyRing::monomials_of_degree(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur;
  const int n = nvars();
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n) {
      if (remaining == 0) {
        cur.degree = degree;
        out.push_back(cur);
      }
      return;
    }
    const int w = vars_[var].weight;
    for (int e = remaining / w; e >= 0; --e) {
      cur.exps[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, remaining - e * w);
    }
    cur.exps[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [this](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

std::string GradedPolyRing::monomial_to_string(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[i].name;
    if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
  }
  return s.empty() ? "1" : s;
}

std::string GradedPolyRing::to_string() const {
  std::string s = field_.to_string() + "[";
  for (int i = 0; i < nvars(); ++i) {
    if (i) s += ", ";
    s += vars_[i].name;
    if (vars_[i].weight != 1) s += ":" + std::to_string(vars_[i].weight);
  }
  return s + "]";
}

bool GradedPolyRing::operator==(const GradedPolyRing& other) const {
  if (!(field_ == other.field_) || order_.kind != other.order_.kind || nvars() != other.nvars())
    return false;
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i].name != other.vars_[i].name || vars_[i].weight != other.vars_[i].weight)
      return false;
  return true;
}

// ---------------------------------------------------------------------------

Poly::Poly(PolyRingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const GradedPolyRing& r = *ring_;
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Poly Poly::constant(PolyRingPtr ring, const Scalar& c) {
  return monomial(ring, ring->one(), c);
}

Poly Poly::monomial(PolyRingPtr ring, const Monomial& m, const Scalar& c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree != terms_.front().mono.degree) return false;
  return true;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree; }

void Poly::check_ring(const Poly& g) const {
  if (ring_ && g.ring_ && ring_ != g.ring_ && !(*ring_ == *g.ring_))
    throw Error(ErrorCode::RingMismatch, "polynomials from different rings");
}

Poly Poly::operator+(const Poly& g) const {
  check_ring(g);
  const PolyRingPtr& ring = ring_ ? ring_ : g.ring_;
  Poly out(ring);
  if (!ring) return out;
  const GradedPolyRing& r = *ring;
  auto a = terms_.begin(), ae = terms_.end();
  auto b = g.terms_.begin(), be = g.terms_.end();
  out.terms_.reserve(terms_.size() + g.terms_.size());
  while (a != ae && b != be) {
    int c = r.compare(a->mono, b->mono);
    if (c > 0) out.terms_.push_back(*a++);
    else if (c < 0) out.terms_.push_back(*b++);
    else {
      Scalar s = a->coeff + b->coeff;
      if (!s.is_zero()) out.terms_.push_back(Term{a->mono, s});
      ++a;
      ++b;
    }
  }
  out.terms_.insert(out.terms_.end(), a, ae);
  out.terms_.insert(out.terms_.end(), b, be);
  return out;
}

Poly Poly::operator-() const {
  Poly out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.mono, -t.coeff});
  return out;
}

Poly Poly::operator-(const Poly& g) const { return *this + (-g); }

Poly Poly::scaled(const Scalar& c) const {
  Poly out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.mono, t.coeff * c});
  return out;
}

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const {
  Poly out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{ring_->mul(t.mono, m), t.coeff * c});
  return out;
}

Poly Poly::operator*(const Poly& g) const {
  check_ring(g);
  const PolyRingPtr& ring = ring_ ? ring_ : g.ring_;
  Poly out(ring);
  for (const auto& t : g.terms_) out = out + times_monomial(t.mono, t.coeff);
  return out;
}

bool Poly::operator==(const Poly& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == g.terms_[i].mono) || terms_[i].coeff != g.terms_[i].coeff) return false;
  return true;
}

std::string scalar_to_signed_string(const Scalar& c) {
  if (c.is_residue()) {
    const auto& r = c.residue();
    if (r.value > r.modulus / 2) return "-" + std::to_string(r.modulus - r.value);
    return std::to_string(r.value);
  }
  return c.rational().get_str();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = scalar_to_signed_string(t.coeff);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      s += c;
    } else {
      if (c != "1") s += c + "*";
      s += ring_->monomial_to_string(t.mono);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRingPtr& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip_ws();
    Poly acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Poly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", start);
      long e = std::stol(digits);
      if (e >= kMaxExponent) throw ParseError("exponent too large", start);
      Poly r = Poly::constant(ring_, ring_->one_scalar());
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      mpq_class q(mpz_class(num), 1);
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        std::size_t save = pos_;
        ++pos_;
        skip_ws();
        std::string den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", save);
        mpz_class d(den);
        if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in literal");
        q = mpq_class(mpz_class(num), d);
        q.canonicalize();
      }
      return Poly::constant(ring_, Scalar::from_rational(ring_->field(), q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->variable_index(name);
      if (idx < 0) throw Error(ErrorCode::UnknownVariable, "'" + name + "' at position " + std::to_string(start));
      return Poly::monomial(ring_, ring_->variable(idx), ring_->one_scalar());
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const PolyRingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const PolyRingPtr& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace semilink
