#include "semilink/hilbert.hpp"

#include <algorithm>
#include <map>

namespace semilink {

HilbertSeries::HilbertSeries(std::vector<int> weights) : weights_(std::move(weights)) {
  std::sort(weights_.begin(), weights_.end());
}

HilbertSeries::HilbertSeries(std::vector<int> weights, int offset, std::vector<std::int64_t> numerator)
    : weights_(std::move(weights)), offset_(offset), num_(std::move(numerator)) {
  std::sort(weights_.begin(), weights_.end());
  trim();
}

void HilbertSeries::trim() {
  std::size_t lo = 0;
  while (lo < num_.size() && num_[lo] == 0) ++lo;
  if (lo == num_.size()) {
    num_.clear();
    offset_ = 0;
    return;
  }
  while (num_.back() == 0) num_.pop_back();
  if (lo > 0) {
    num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(lo));
    offset_ += static_cast<int>(lo);
  }
}

void HilbertSeries::check(const HilbertSeries& o) const {
  if (weights_ != o.weights_)
    throw Error(ErrorCode::AmbientMismatch, "Hilbert series over different ambient gradings");
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  if (o.is_zero() && o.weights_.empty()) return *this;
  if (is_zero() && weights_.empty()) return o;
  check(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  int lo = std::min(offset_, o.offset_);
  int hi = std::max(offset_ + static_cast<int>(num_.size()), o.offset_ + static_cast<int>(o.num_.size()));
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t i = 0; i < num_.size(); ++i) c[offset_ - lo + i] += num_[i];
  for (std::size_t i = 0; i < o.num_.size(); ++i) c[o.offset_ - lo + i] += o.num_[i];
  return HilbertSeries(weights_, lo, std::move(c));
}

HilbertSeries HilbertSeries::operator-() const {
  HilbertSeries h = *this;
  for (auto& c : h.num_) c = -c;
  return h;
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const { return *this + (-o); }

HilbertSeries HilbertSeries::shifted(int k) const {
  HilbertSeries h = *this;
  if (!h.is_zero()) h.offset_ += k;
  return h;
}

HilbertSeries HilbertSeries::times(int lo, const std::vector<std::int64_t>& p) const {
  if (is_zero() || p.empty()) return HilbertSeries(weights_);
  std::vector<std::int64_t> c(num_.size() + p.size() - 1, 0);
  for (std::size_t i = 0; i < num_.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) c[i + j] += num_[i] * p[j];
  return HilbertSeries(weights_, offset_ + lo, std::move(c));
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
  if (is_zero() && o.is_zero()) return true;
  return weights_ == o.weights_ && offset_ == o.offset_ && num_ == o.num_;
}

std::vector<std::int64_t> HilbertSeries::expand(int lo, int hi) const {
  std::vector<std::int64_t> out(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0, 0);
  if (is_zero() || hi < offset_) return out;
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - offset_ + 1), 0);
  for (std::size_t i = 0; i < num_.size() && i < c.size(); ++i) c[i] = num_[i];
  for (int w : weights_)
    for (std::size_t k = static_cast<std::size_t>(w); k < c.size(); ++k) c[k] += c[k - w];
  for (int d = std::max(lo, offset_); d <= hi; ++d) out[d - lo] = c[d - offset_];
  return out;
}

std::int64_t HilbertSeries::coefficient(int d) const { return expand(d, d)[0]; }

int HilbertSeries::dim() const {
  if (is_zero()) return -1;
  std::vector<std::int64_t> p = num_;
  int order = 0;
  while (true) {
    std::int64_t at_one = 0;
    for (auto c : p) at_one += c;
    if (at_one != 0) break;
    // divide by (1 - t): q_k = sum_{j<=k} p_j
    std::vector<std::int64_t> q(p.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      acc += p[k];
      q[k] = acc;
    }
    p = std::move(q);
    ++order;
  }
  return static_cast<int>(weights_.size()) - order;
}

std::optional<std::int64_t> HilbertSeries::length() const {
  if (is_zero()) return 0;
  if (dim() > 0) return std::nullopt;
  int wsum = 0;
  for (int w : weights_) wsum += w;
  int hi = offset_ + static_cast<int>(num_.size()) - 1 - wsum;
  std::int64_t total = 0;
  for (auto c : expand(offset_, hi)) total += c;
  return total;
}

int HilbertSeries::initial_degree() const { return offset_; }

std::optional<int> HilbertSeries::top_degree() const {
  if (is_zero() || dim() > 0) return std::nullopt;
  int wsum = 0;
  for (int w : weights_) wsum += w;
  int hi = offset_ + static_cast<int>(num_.size()) - 1 - wsum;
  auto v = expand(offset_, hi);
  for (int d = hi; d >= offset_; --d)
    if (v[d - offset_] != 0) return d;
  return std::nullopt;
}

std::string HilbertSeries::to_string() const {
  std::string s;
  if (is_zero()) return "0";
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    std::int64_t c = num_[i];
    if (c == 0) continue;
    int e = offset_ + static_cast<int>(i);
    std::string mag = std::to_string(c < 0 ? -c : c);
    if (first) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0) s += mag;
    else {
      if (mag != "1") s += mag + "*";
      s += "t";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  if (weights_.empty()) return s;
  std::map<int, int> counts;
  for (int w : weights_) counts[w]++;
  std::string d;
  for (auto [w, n] : counts) {
    if (!d.empty()) d += "*";
    d += w == 1 ? "(1 - t)" : "(1 - t^" + std::to_string(w) + ")";
    if (n > 1) d += "^" + std::to_string(n);
  }
  return "(" + s + ") / " + d;
}

namespace {

using NumPoly = std::vector<std::int64_t>;

void add_into(NumPoly& a, const NumPoly& b, int shift, int sign) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
}

struct MonIdealCtx {
  const GradedPolyRing& ring;
  int n;

  bool divides(const Monomial& a, const Monomial& b) const { return ring.divides(a, b); }

  void minimize(std::vector<Monomial>& g) const {
    std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
    std::vector<Monomial> out;
    for (const auto& m : g) {
      bool red = false;
      for (const auto& o : out)
        if (divides(o, m)) {
          red = true;
          break;
        }
      if (!red) out.push_back(m);
    }
    g = std::move(out);
  }

  NumPoly numerator(std::vector<Monomial> g) const {
    minimize(g);
    // pairwise coprime generators: product formula
    bool coprime = true;
    for (std::size_t i = 0; i < g.size() && coprime; ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (!ring.coprime(g[i], g[j])) {
          coprime = false;
          break;
        }
    if (coprime) {
      NumPoly p{1};
      for (const auto& m : g) {
        NumPoly q(p.size() + m.degree, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
          q[i] += p[i];
          q[i + m.degree] -= p[i];
        }
        p = std::move(q);
      }
      return p;
    }
    // pivot on the most frequent variable, at the median exponent
    int best = -1, best_count = 0;
    for (int v = 0; v < n; ++v) {
      int cnt = 0;
      for (const auto& m : g)
        if (m.exps[v] > 0) ++cnt;
      if (cnt > best_count) {
        best_count = cnt;
        best = v;
      }
    }
    std::vector<int> es;
    for (const auto& m : g)
      if (m.exps[best] > 0) es.push_back(m.exps[best]);
    std::sort(es.begin(), es.end());
    int e = es[(es.size() - 1) / 2];
    Monomial p;
    p.exps[best] = static_cast<std::uint16_t>(e);
    p.degree = e * ring.weight(best);

    std::vector<Monomial> plus = g;
    plus.push_back(p);
    std::vector<Monomial> colon;
    colon.reserve(g.size());
    for (const auto& m : g) {
      Monomial q = m;
      int reduce = std::min<int>(m.exps[best], e);
      q.exps[best] = static_cast<std::uint16_t>(m.exps[best] - reduce);
      q.degree = m.degree - reduce * ring.weight(best);
      colon.push_back(q);
    }
    NumPoly a = numerator(std::move(plus));
    NumPoly b = numerator(std::move(colon));
    add_into(a, b, p.degree, 1);
    return a;
  }
};

}  // namespace

HilbertSeries monomial_quotient_series(const GradedPolyRing& ring, std::vector<Monomial> gens) {
  std::vector<int> weights;
  for (int i = 0; i < ring.nvars(); ++i) weights.push_back(ring.weight(i));
  MonIdealCtx ctx{ring, ring.nvars()};
  for (const auto& m : gens)
    if (m.is_one()) return HilbertSeries(weights);
  return HilbertSeries(weights, 0, ctx.numerator(std::move(gens)));
}

}  // namespace semilink
