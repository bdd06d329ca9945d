#include "semilink/vec.hpp"

#include <algorithm>

namespace semilink {

int term_compare(const GradedPolyRing& r, const VTerm& a, const VTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return r.compare(a.mono, b.mono);
}

void vec_normalize(const GradedPolyRing& r, Vec& v) {
  std::sort(v.begin(), v.end(),
            [&r](const VTerm& a, const VTerm& b) { return term_compare(r, a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

Vec vec_axpy_range(const GradedPolyRing& r, const VTerm* a, const VTerm* a_end, const Scalar& c,
                   const Monomial& m, const Vec& b, std::size_t skip, int comp) {
  Vec out;
  if (c.is_zero() || skip >= b.size()) return Vec(a, a_end);
  out.reserve(static_cast<std::size_t>(a_end - a) + b.size() - skip);
  auto bi = b.begin() + static_cast<std::ptrdiff_t>(skip), be = b.end();
  const bool unit_mono = m.is_one();
  VTerm cur;
  bool have = false;
  auto load = [&]() {
    if (bi == be) {
      have = false;
      return;
    }
    cur.comp = comp >= 0 ? comp : bi->comp;
    cur.mono = unit_mono ? bi->mono : r.mul(bi->mono, m);
    cur.coeff = bi->coeff * c;
    have = true;
    ++bi;
  };
  load();
  while (a != a_end && have) {
    int cmp = term_compare(r, *a, cur);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back(cur);
      load();
    } else {
      Scalar s = a->coeff + cur.coeff;
      if (!s.is_zero()) out.push_back(VTerm{cur.comp, cur.mono, std::move(s)});
      ++a;
      load();
    }
  }
  while (a != a_end) out.push_back(*a++);
  while (have) {
    out.push_back(cur);
    load();
  }
  return out;
}

Vec vec_axpy(const GradedPolyRing& r, const Vec& a, const Scalar& c, const Monomial& m, const Vec& b,
             std::size_t skip) {
  return vec_axpy_range(r, a.data(), a.data() + a.size(), c, m, b, skip);
}

Vec vec_add(const GradedPolyRing& r, const Vec& a, const Vec& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  return vec_axpy(r, a, r.one_scalar(), r.one(), b);
}

Vec vec_sub(const GradedPolyRing& r, const Vec& a, const Vec& b) {
  if (b.empty()) return a;
  return vec_axpy(r, a, -r.one_scalar(), r.one(), b);
}

Vec vec_neg(const Vec& a) {
  Vec out = a;
  for (auto& t : out) t.coeff = -t.coeff;
  return out;
}

Vec vec_scale(const Vec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  Vec out = a;
  for (auto& t : out) t.coeff *= c;
  return out;
}

Vec vec_mul_term(const GradedPolyRing& r, const Vec& a, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return {};
  Vec out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(VTerm{t.comp, r.mul(t.mono, m), t.coeff * c});
  return out;
}

Vec vec_mul_poly(const GradedPolyRing& r, const Vec& a, const Poly& p) {
  Vec out;
  for (const auto& t : p.terms()) out = vec_axpy(r, out, t.coeff, t.mono, a);
  return out;
}

Vec vec_shift_components(const Vec& a, int offset) {
  Vec out = a;
  for (auto& t : out) t.comp += offset;
  return out;
}

Vec poly_to_vec(const Poly& p, int comp) {
  Vec out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back(VTerm{comp, t.mono, t.coeff});
  return out;
}

Poly vec_component(const PolyRingPtr& ring, const Vec& v, int comp) {
  std::vector<Term> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back(Term{t.mono, t.coeff});
  return Poly(ring, std::move(terms));
}

int vec_degree(const Vec& v, const std::vector<int>& twists) {
  if (v.empty()) return kNoDegree;
  return v.front().mono.degree + twists.at(v.front().comp);
}

bool vec_is_homogeneous(const Vec& v, const std::vector<int>& twists) {
  if (v.empty()) return true;
  int d = vec_degree(v, twists);
  for (const auto& t : v)
    if (t.mono.degree + twists.at(t.comp) != d) return false;
  return true;
}

std::string vec_to_string(const PolyRingPtr& ring, const Vec& v) {
  if (v.empty()) return "0";
  std::string s = "[";
  int comp = -1;
  std::vector<Term> terms;
  auto flush = [&]() {
    if (comp < 0) return;
    if (s.size() > 1) s += ", ";
    s += std::to_string(comp) + ": " + Poly(ring, terms).to_string();
    terms.clear();
  };
  for (const auto& t : v) {
    if (t.comp != comp) {
      flush();
      comp = t.comp;
    }
    terms.push_back(Term{t.mono, t.coeff});
  }
  flush();
  return s + "]";
}

}  // namespace semilink
