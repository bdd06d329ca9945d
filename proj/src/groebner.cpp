#include "semilink/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace semilink {

std::uint32_t short_exponent(const GradedPolyRing& ring, const Monomial& m) {
  std::uint32_t s = 0;
  for (int i = 0; i < ring.nvars(); ++i)
    if (m.exps[i]) s |= 1u << i;
  return s;
}

namespace {

/// Reducer set: module elements indexed per component plus the quotient
/// ideal's basis acting in every component.
struct Reducers {
  const GradedPolyRing* ring = nullptr;
  const std::vector<Vec>* vecs = nullptr;
  const std::vector<std::uint32_t>* sevs = nullptr;
  const std::vector<std::vector<int>>* by_comp = nullptr;
  const std::vector<Vec>* reps = nullptr;
  const std::vector<Vec>* qvecs = nullptr;  // quotient GB in component 0
  const std::vector<std::uint32_t>* qsevs = nullptr;
  int exclude = -1;

  /// Full reduction. When rep is given, it is updated alongside
  /// (rep -= c * m * reps[g]).
  Vec reduce(Vec p, Vec* rep) const {
    const GradedPolyRing& R = *ring;
    Vec r;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const VTerm& t = p[pos];
      const std::uint32_t sev = short_exponent(R, t.mono);
      int found = -1;
      if (by_comp && t.comp < static_cast<int>(by_comp->size())) {
        for (int idx : (*by_comp)[t.comp]) {
          if (idx == exclude) continue;
          if (((*sevs)[idx] & ~sev) != 0) continue;
          if (R.divides((*vecs)[idx].front().mono, t.mono)) {
            found = idx;
            break;
          }
        }
      }
      if (found >= 0) {
        const Vec& g = (*vecs)[found];
        Monomial q = R.quotient(t.mono, g.front().mono);
        Scalar c = -(t.coeff / g.front().coeff);
        if (rep && reps) *rep = vec_axpy(R, *rep, c, q, (*reps)[found]);
        p = vec_axpy_range(R, p.data() + pos + 1, p.data() + p.size(), c, q, g, 1);
        pos = 0;
        continue;
      }
      int qfound = -1;
      if (qvecs) {
        for (std::size_t h = 0; h < qvecs->size(); ++h) {
          if (((*qsevs)[h] & ~sev) != 0) continue;
          if (R.divides((*qvecs)[h].front().mono, t.mono)) {
            qfound = static_cast<int>(h);
            break;
          }
        }
      }
      if (qfound >= 0) {
        const Vec& h = (*qvecs)[qfound];
        Monomial q = R.quotient(t.mono, h.front().mono);
        Scalar c = -(t.coeff / h.front().coeff);
        int comp = t.comp;
        p = vec_axpy_range(R, p.data() + pos + 1, p.data() + p.size(), c, q, h, 1, comp);
        pos = 0;
        continue;
      }
      r.push_back(t);
      ++pos;
      if (pos == p.size()) break;
      // drop the consumed prefix occasionally to keep p short
      if (pos > 64) {
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(pos));
        pos = 0;
      }
    }
    return r;
  }
};

struct QuotientData {
  std::vector<Vec> vecs;
  std::vector<std::uint32_t> sevs;
};

QuotientData quotient_data(const GradedPolyRing& R, const Ideal* q) {
  QuotientData d;
  if (!q) return d;
  for (const auto& g : q->gb()) {
    d.vecs.push_back(poly_to_vec(g, 0));
    d.sevs.push_back(short_exponent(R, g.leading().mono));
  }
  return d;
}

struct Pair {
  int i;
  int j;  // >= 0: element index; < 0: quotient generator -(j+1)
  Monomial lcm;
  int deg;
  int comp;
};

class Engine {
 public:
  Engine(const GradedPolyRing& R, const Ideal* Q, const std::vector<int>& twists, GBOptions opts)
      : R_(R), twists_(twists), opts_(opts), qd_(quotient_data(R, Q)), Q_(Q) {
    by_comp_.resize(twists.size());
    qactive_.assign(twists.size(), std::vector<char>(qd_.vecs.size(), 1));
  }

  void run(const std::vector<Vec>& inputs, const std::vector<int>& degrees) {
    const int n = static_cast<int>(inputs.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degrees[a] < degrees[b]; });
    std::size_t next_input = 0;
    redundant_.assign(n, 0);

    while (true) {
      int d = kNoDegree;
      bool have = false;
      for (const auto& p : pairs_)
        if (!have || p.deg < d) {
          d = p.deg;
          have = true;
        }
      if (next_input < order.size() && (!have || degrees[order[next_input]] <= d)) {
        d = degrees[order[next_input]];
        have = true;
      }
      if (!have) break;

      std::vector<Pair> batch;
      std::vector<Pair> rest;
      for (auto& p : pairs_) (p.deg == d ? batch : rest).push_back(std::move(p));
      pairs_ = std::move(rest);
      std::sort(batch.begin(), batch.end(), [this](const Pair& a, const Pair& b) {
        if (a.comp != b.comp) return a.comp > b.comp;
        return R_.compare(a.lcm, b.lcm) < 0;
      });
      for (const auto& p : batch) process_pair(p);

      while (next_input < order.size() && degrees[order[next_input]] == d) {
        int idx = order[next_input++];
        process_input(idx, inputs[idx], degrees[idx]);
      }
    }
  }

  std::vector<Vec> elems_;
  std::vector<Vec> reps_;
  std::vector<std::uint32_t> sevs_;
  std::vector<std::vector<int>> by_comp_;
  std::vector<Vec> syzygies_;
  std::vector<char> redundant_;

  Reducers reducers() const {
    Reducers r;
    r.ring = &R_;
    r.vecs = &elems_;
    r.sevs = &sevs_;
    r.by_comp = &by_comp_;
    r.reps = opts_.track ? &reps_ : nullptr;
    if (!qd_.vecs.empty()) {
      r.qvecs = &qd_.vecs;
      r.qsevs = &qd_.sevs;
    }
    return r;
  }

  const QuotientData& quotient() const { return qd_; }

 private:
  void process_pair(const Pair& p) {
    const Vec& gi = elems_[p.i];
    Monomial mi = R_.quotient(p.lcm, gi.front().mono);
    Vec s = vec_mul_term(R_, gi, mi, R_.one_scalar());
    Vec rep;
    if (opts_.track) rep = vec_mul_term(R_, reps_[p.i], mi, R_.one_scalar());
    if (p.j >= 0) {
      const Vec& gj = elems_[p.j];
      Monomial mj = R_.quotient(p.lcm, gj.front().mono);
      s = vec_axpy(R_, s, -R_.one_scalar(), mj, gj);
      if (opts_.track) rep = vec_axpy(R_, rep, -R_.one_scalar(), mj, reps_[p.j]);
    } else {
      const Vec& h = qd_.vecs[-(p.j + 1)];
      Monomial mh = R_.quotient(p.lcm, h.front().mono);
      Scalar c = -(s.front().coeff / h.front().coeff);
      s = vec_axpy_range(R_, s.data(), s.data() + s.size(), c, mh, h, 0, p.comp);
    }
    Vec nf = reducers().reduce(std::move(s), opts_.track ? &rep : nullptr);
    if (opts_.track && Q_) rep = Q_->reduce_vec(rep);
    if (nf.empty()) {
      if (opts_.track && !rep.empty()) syzygies_.push_back(std::move(rep));
      return;
    }
    add_element(std::move(nf), std::move(rep));
  }

  void process_input(int idx, const Vec& v, int) {
    Vec rep;
    if (opts_.track) rep.push_back(VTerm{idx, R_.one(), R_.one_scalar()});
    Vec nf = reducers().reduce(v, opts_.track ? &rep : nullptr);
    if (opts_.track && Q_) rep = Q_->reduce_vec(rep);
    if (nf.empty()) {
      redundant_[idx] = 1;
      if (opts_.track && !opts_.drop_redundant && !rep.empty()) syzygies_.push_back(std::move(rep));
      return;
    }
    add_element(std::move(nf), std::move(rep));
  }

  void add_element(Vec v, Vec rep) {
    Scalar inv = v.front().coeff.inverse();
    if (!inv.is_one()) {
      v = vec_scale(v, inv);
      if (opts_.track) rep = vec_scale(rep, inv);
    }
    const int t = static_cast<int>(elems_.size());
    const int c = v.front().comp;
    const Monomial lead = v.front().mono;
    update_pairs(t, c, lead);
    elems_.push_back(std::move(v));
    reps_.push_back(std::move(rep));
    sevs_.push_back(short_exponent(R_, lead));
    by_comp_[c].push_back(t);
    in_pairs_.push_back(1);
  }

  const Monomial& lead_of(int j) const {
    return j >= 0 ? elems_[j].front().mono : qd_.vecs[-(j + 1)].front().mono;
  }

  // Gebauer-Moeller installation of the pairs of a new element.
  void update_pairs(int t, int c, const Monomial& lead) {
    struct Cand {
      int j;
      Monomial lcm;
      bool disjoint;
      bool alive = true;
    };
    std::vector<Cand> cands;
    for (int j : by_comp_[c])
      if (in_pairs_[j]) cands.push_back(Cand{j, R_.lcm(lead, elems_[j].front().mono), false});
    for (std::size_t h = 0; h < qd_.vecs.size(); ++h) {
      if (!qactive_[c][h]) continue;
      const Monomial& hl = qd_.vecs[h].front().mono;
      cands.push_back(Cand{-static_cast<int>(h) - 1, R_.lcm(lead, hl), R_.coprime(lead, hl)});
    }
    // criterion M/F: keep p only if no other candidate's lcm properly
    // divides it; among equal lcms keep the last one examined.
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Cand& p = cands[a];
      bool keep = p.disjoint;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
          if (R_.divides(cands[b].lcm, p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (R_.divides(kept[b].lcm, p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    // criterion B on existing pairs of this component
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (p.comp == c && R_.divides(lead, p.lcm)) {
        Monomial l1 = R_.lcm(lead_of(p.i), lead);
        Monomial l2 = R_.lcm(lead_of(p.j), lead);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);
    for (const auto& p : kept) {
      if (p.disjoint) continue;
      pairs_.push_back(Pair{t, p.j, p.lcm, p.lcm.degree + twists_[c], c});
    }
    for (int j : by_comp_[c])
      if (in_pairs_[j] && R_.divides(lead, elems_[j].front().mono)) in_pairs_[j] = 0;
    for (std::size_t h = 0; h < qd_.vecs.size(); ++h)
      if (qactive_[c][h] && R_.divides(lead, qd_.vecs[h].front().mono)) qactive_[c][h] = 0;
  }

  const GradedPolyRing& R_;
  const std::vector<int>& twists_;
  GBOptions opts_;
  QuotientData qd_;
  const Ideal* Q_;
  std::vector<Pair> pairs_;
  std::vector<char> in_pairs_;
  std::vector<std::vector<char>> qactive_;
};

}  // namespace

ModuleGB ModuleGB::compute(PolyRingPtr ring, IdealPtr quotient, std::vector<int> twists,
                           const std::vector<Vec>& gens, GBOptions opts,
                           std::vector<int> input_degrees) {
  const GradedPolyRing& R = *ring;
  if (quotient && !(*quotient->ring() == R))
    throw Error(ErrorCode::RingMismatch, "quotient ideal over a different ring");
  const int n = static_cast<int>(gens.size());
  if (input_degrees.empty()) {
    input_degrees.resize(n, 0);
    for (int i = 0; i < n; ++i) {
      for (const auto& t : gens[i])
        if (t.comp < 0 || t.comp >= static_cast<int>(twists.size()))
          throw Error(ErrorCode::AmbientMismatch, "vector component outside the free module");
      input_degrees[i] = gens[i].empty() ? 0 : vec_degree(gens[i], twists);
    }
  } else if (static_cast<int>(input_degrees.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "input degree list has the wrong length");
  }
  for (int i = 0; i < n; ++i) {
    if (!vec_is_homogeneous(gens[i], twists))
      throw Error(ErrorCode::InvalidArgument, "inhomogeneous generator " + vec_to_string(ring, gens[i]));
    if (!gens[i].empty() && vec_degree(gens[i], twists) != input_degrees[i])
      throw Error(ErrorCode::InvalidArgument, "generator degree disagrees with its declared degree");
  }

  Engine eng(R, quotient.get(), twists, opts);
  eng.run(gens, input_degrees);

  ModuleGB out;
  out.ring_ = ring;
  out.quotient_ = quotient;
  out.twists_ = twists;

  std::vector<int> index_map(n, -1);
  if (opts.drop_redundant) {
    for (int i = 0; i < n; ++i)
      if (!eng.redundant_[i]) {
        index_map[i] = static_cast<int>(out.kept_.size());
        out.kept_.push_back(i);
      }
  } else {
    for (int i = 0; i < n; ++i) {
      index_map[i] = i;
      out.kept_.push_back(i);
    }
  }
  for (int i : out.kept_) out.kept_degrees_.push_back(input_degrees[i]);
  if (opts.track) {
    for (auto& s : eng.syzygies_) {
      Vec t;
      t.reserve(s.size());
      for (auto& term : s) t.push_back(VTerm{index_map[term.comp], term.mono, term.coeff});
      vec_normalize(R, t);
      if (!t.empty()) out.syzygies_.push_back(std::move(t));
    }
  }

  std::vector<Vec> basis = std::move(eng.elems_);
  if (opts.reduce) {
    // drop elements whose lead is divisible by another lead
    std::vector<char> alive(basis.size(), 1);
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (a == b || !alive[b]) continue;
        if (basis[a].front().comp == basis[b].front().comp &&
            R.divides(basis[b].front().mono, basis[a].front().mono)) {
          alive[a] = 0;
          break;
        }
      }
    std::vector<Vec> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a)
      if (alive[a]) minimal.push_back(std::move(basis[a]));
    std::sort(minimal.begin(), minimal.end(), [&R](const Vec& a, const Vec& b) {
      return term_compare(R, a.front(), b.front()) < 0;
    });
    std::vector<std::uint32_t> sevs;
    std::vector<std::vector<int>> by_comp(twists.size());
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      sevs.push_back(short_exponent(R, minimal[a].front().mono));
      by_comp[minimal[a].front().comp].push_back(static_cast<int>(a));
    }
    QuotientData qd = quotient_data(R, quotient.get());
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      Reducers red;
      red.ring = &R;
      red.vecs = &minimal;
      red.sevs = &sevs;
      red.by_comp = &by_comp;
      red.exclude = static_cast<int>(a);
      if (!qd.vecs.empty()) {
        red.qvecs = &qd.vecs;
        red.qsevs = &qd.sevs;
      }
      Vec tail(minimal[a].begin() + 1, minimal[a].end());
      Vec nt = red.reduce(std::move(tail), nullptr);
      Vec v;
      v.reserve(nt.size() + 1);
      v.push_back(minimal[a].front());
      v.insert(v.end(), nt.begin(), nt.end());
      minimal[a] = std::move(v);
    }
    basis = std::move(minimal);
  }
  out.basis_ = std::move(basis);
  out.by_comp_.assign(twists.size(), {});
  for (std::size_t a = 0; a < out.basis_.size(); ++a) {
    out.sevs_.push_back(short_exponent(R, out.basis_[a].front().mono));
    out.by_comp_[out.basis_[a].front().comp].push_back(static_cast<int>(a));
  }
  return out;
}

Vec ModuleGB::normal_form(const Vec& v) const {
  const GradedPolyRing& R = *ring_;
  for (const auto& t : v)
    if (t.comp < 0 || t.comp >= rank())
      throw Error(ErrorCode::AmbientMismatch, "vector component outside the free module");
  QuotientData qd = quotient_data(R, quotient_.get());
  Reducers red;
  red.ring = &R;
  red.vecs = &basis_;
  red.sevs = &sevs_;
  red.by_comp = &by_comp_;
  if (!qd.vecs.empty()) {
    red.qvecs = &qd.vecs;
    red.qsevs = &qd.sevs;
  }
  return red.reduce(v, nullptr);
}

std::vector<std::vector<Monomial>> ModuleGB::lead_monomials() const {
  std::vector<std::vector<Monomial>> out(twists_.size());
  std::vector<Monomial> qlead;
  if (quotient_) qlead = quotient_->lead_monomials();
  for (auto& l : out) l = qlead;
  for (const auto& g : basis_) out[g.front().comp].push_back(g.front().mono);
  return out;
}

HilbertSeries ModuleGB::hilbert_series() const {
  std::vector<int> weights;
  for (int i = 0; i < ring_->nvars(); ++i) weights.push_back(ring_->weight(i));
  HilbertSeries total(weights);
  auto leads = lead_monomials();
  for (std::size_t c = 0; c < twists_.size(); ++c)
    total += monomial_quotient_series(*ring_, leads[c]).shifted(twists_[c]);
  return total;
}

// ---------------------------------------------------------------------------

Ideal::Ideal(PolyRingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.ring() && !(*g.ring() == *ring_))
      throw Error(ErrorCode::RingMismatch, "ideal generator from a different ring");
    if (!g.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "inhomogeneous ideal generator " + g.to_string());
    if (!g.is_zero()) gens_.push_back(Poly(ring_, g.terms()));
  }
}

bool Ideal::is_zero() const { return gens_.empty(); }

void Ideal::ensure_gb() const {
  std::call_once(once_, [this]() {
    std::vector<Vec> in;
    for (const auto& g : gens_) in.push_back(poly_to_vec(g, 0));
    ModuleGB m = ModuleGB::compute(ring_, nullptr, {0}, in, GBOptions{false, false, true});
    std::vector<Poly> out;
    for (const auto& v : m.basis()) out.push_back(vec_component(ring_, v, 0));
    const GradedPolyRing& R = *ring_;
    std::sort(out.begin(), out.end(), [&R](const Poly& a, const Poly& b) {
      return R.compare(a.leading().mono, b.leading().mono) < 0;
    });
    for (const auto& p : out) {
      leads_.push_back(p.leading().mono);
      sevs_.push_back(short_exponent(R, p.leading().mono));
    }
    gb_ = std::move(out);
  });
}

const std::vector<Poly>& Ideal::gb() const {
  ensure_gb();
  return gb_;
}

const std::vector<Monomial>& Ideal::lead_monomials() const {
  ensure_gb();
  return leads_;
}

Vec Ideal::reduce_vec(const Vec& v) const {
  ensure_gb();
  if (gb_.empty() || v.empty()) return v;
  QuotientData qd = quotient_data(*ring_, this);
  Reducers red;
  red.ring = ring_.get();
  red.qvecs = &qd.vecs;
  red.qsevs = &qd.sevs;
  return red.reduce(v, nullptr);
}

Poly Ideal::normal_form(const Poly& f) const {
  if (f.ring() && !(*f.ring() == *ring_)) throw Error(ErrorCode::RingMismatch, "polynomial from a different ring");
  return vec_component(ring_, reduce_vec(poly_to_vec(f, 0)), 0);
}

HilbertSeries Ideal::quotient_series() const {
  return monomial_quotient_series(*ring_, lead_monomials());
}

std::vector<Vec> syzygy_basis(const PolyRingPtr& ring, const IdealPtr& quotient,
                              const std::vector<int>& target_twists, const std::vector<Vec>& columns,
                              std::vector<int>* source_twists) {
  std::vector<int> degrees;
  if (source_twists && !source_twists->empty()) degrees = *source_twists;
  ModuleGB m = ModuleGB::compute(ring, quotient, target_twists, columns, GBOptions{true, false, false}, degrees);
  if (source_twists) *source_twists = m.kept_degrees();
  return m.syzygies();
}

}  // namespace semilink
