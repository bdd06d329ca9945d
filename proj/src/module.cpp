#include <algorithm>
#include <numeric>

#include "semilink/modules.hpp"

namespace semilink {

namespace {

void validate(const GradedQuotientRing& ring, const std::vector<int>& degrees, const std::vector<Vec>& rels) {
  for (const auto& r : rels) {
    for (const auto& t : r)
      if (t.comp < 0 || t.comp >= static_cast<int>(degrees.size()))
        throw Error(ErrorCode::AmbientMismatch, "relation has a component outside the generators");
    if (!vec_is_homogeneous(r, degrees))
      throw Error(ErrorCode::InvalidArgument, "inhomogeneous relation " + vec_to_string(ring.ambient(), r));
  }
}

std::vector<Vec> reduced_nonzero(const GradedQuotientRing& ring, const std::vector<Vec>& rels) {
  std::vector<Vec> out;
  out.reserve(rels.size());
  for (const auto& r : rels) {
    Vec v = ring.reduce(r);
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

FPModule::FPModule(RingPtr ring, std::vector<int> degrees, std::vector<Vec> relations)
    : ring_(std::move(ring)), degrees_(std::move(degrees)) {
  validate(*ring_, degrees_, relations);
  relations_ = reduced_nonzero(*ring_, relations);
}

ModulePtr FPModule::make(RingPtr ring, std::vector<int> degrees, std::vector<Vec> relations) {
  return std::make_shared<FPModule>(std::move(ring), std::move(degrees), std::move(relations));
}

ModulePtr FPModule::zero(RingPtr ring) { return make(std::move(ring), {}, {}); }

ModulePtr FPModule::free(RingPtr ring, std::vector<int> twists) { return make(std::move(ring), std::move(twists), {}); }

ModulePtr FPModule::cyclic(RingPtr ring, const std::vector<Poly>& gens, int shift) {
  std::vector<Vec> rels;
  for (const auto& g : gens) {
    if (!g.is_zero() && g.degree() == 0) return zero(ring);
    if (!g.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "inhomogeneous generator " + g.to_string());
    rels.push_back(poly_to_vec(g, 0));
  }
  return make(std::move(ring), {shift}, std::move(rels));
}

ModulePtr FPModule::ideal(RingPtr ring, const std::vector<Poly>& gens) {
  std::vector<Vec> images;
  std::vector<int> degrees;
  for (const auto& g : gens) {
    Poly r = ring->reduce(g);
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "inhomogeneous generator " + g.to_string());
    images.push_back(poly_to_vec(r, 0));
    degrees.push_back(r.degree());
  }
  if (images.empty()) return zero(ring);
  return subquotient(ring, {0}, images, {}, degrees);
}

ModuleMap FPModule::presentation() const {
  return ModuleMap{FreeModule{ring_, relation_degrees()}, FreeModule{ring_, degrees_}, relations_};
}

std::vector<int> FPModule::relation_degrees() const {
  std::vector<int> out;
  out.reserve(relations_.size());
  for (const auto& r : relations_) out.push_back(vec_degree(r, degrees_));
  return out;
}

const ModuleGB& FPModule::relation_gb() const {
  std::call_once(gb_once_, [this] {
    gb_ = ModuleGB::compute(ring_->ambient(), ring_->reducer(), degrees_, relations_);
  });
  return gb_;
}

const HilbertSeries& FPModule::hilbert_series() const {
  std::call_once(hs_once_, [this] {
    if (degrees_.empty())
      hs_ = HilbertSeries(ring_->hilbert_series().weights());
    else
      hs_ = relation_gb().hilbert_series();
  });
  return hs_;
}

ModulePtr make_minimal_module(RingPtr ring, std::vector<int> degrees, std::vector<Vec> relations, ModuleGB gb) {
  auto m = std::make_shared<FPModule>(std::move(ring), std::move(degrees), std::move(relations));
  m->minimal_flag_ = true;
  (void)gb;
  return m;
}

const MinimalPresentation& FPModule::minimal_info() const {
  std::call_once(min_once_, [this] {
    const GradedPolyRing& R = *ring_->ambient();
    const int n = num_generators();
    auto mp = std::make_shared<MinimalPresentation>();
    if (minimal_flag_) {
      mp->module = shared_from_this();
      mp->kept.resize(n);
      std::iota(mp->kept.begin(), mp->kept.end(), 0);
      for (int j = 0; j < n; ++j) mp->to_minimal.push_back(Vec{VTerm{j, R.one(), R.one_scalar()}});
      min_ = mp;
      return;
    }

    // Eliminate generators that appear with a unit coefficient in a relation.
    std::vector<Vec> cols = relations_;
    std::vector<char> alive(n, 1);
    std::vector<Vec> expr(n);
    for (int j = 0; j < n; ++j) expr[j] = Vec{VTerm{j, R.one(), R.one_scalar()}};

    auto substitute = [&](Vec& v, int j, const Vec& p, const Scalar& a) {
      bool hit = false;
      for (const auto& t : v)
        if (t.comp == j) {
          hit = true;
          break;
        }
      if (!hit) return;
      std::vector<VTerm> at_j;
      for (const auto& t : v)
        if (t.comp == j) at_j.push_back(t);
      Vec out = v;
      Scalar inv = a.inverse();
      for (const auto& t : at_j) out = vec_axpy(R, out, -(t.coeff * inv), t.mono, p);
      v = ring_->reduce(out);
    };

    while (true) {
      int best = -1;
      std::size_t best_size = 0;
      int pivot_comp = -1;
      Scalar pivot_coeff;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (best >= 0 && cols[c].size() >= best_size) continue;
        for (const auto& t : cols[c])
          if (t.mono.is_one()) {
            best = static_cast<int>(c);
            best_size = cols[c].size();
            pivot_comp = t.comp;
            pivot_coeff = t.coeff;
            break;
          }
      }
      if (best < 0) break;
      Vec p = std::move(cols[best]);
      cols.erase(cols.begin() + best);
      for (auto& c : cols) substitute(c, pivot_comp, p, pivot_coeff);
      for (auto& e : expr) substitute(e, pivot_comp, p, pivot_coeff);
      cols.erase(std::remove_if(cols.begin(), cols.end(), [](const Vec& v) { return v.empty(); }), cols.end());
      alive[pivot_comp] = 0;
    }

    std::vector<int> renumber(n, -1);
    std::vector<int> degrees;
    for (int j = 0; j < n; ++j)
      if (alive[j]) {
        renumber[j] = static_cast<int>(mp->kept.size());
        mp->kept.push_back(j);
        degrees.push_back(degrees_[j]);
      }
    auto rename = [&](const Vec& v) {
      Vec out;
      out.reserve(v.size());
      for (const auto& t : v) out.push_back(VTerm{renumber[t.comp], t.mono, t.coeff});
      vec_normalize(R, out);
      return out;
    };
    std::vector<Vec> rels;
    for (const auto& c : cols) rels.push_back(rename(c));
    for (const auto& e : expr) mp->to_minimal.push_back(rename(e));

    ModuleGB gb = ModuleGB::compute(ring_->ambient(), ring_->reducer(), degrees, rels,
                                    GBOptions{false, true, true});
    std::vector<Vec> min_rels;
    for (int i : gb.kept()) min_rels.push_back(rels[i]);
    mp->module = make_minimal_module(ring_, degrees, std::move(min_rels), std::move(gb));
    min_ = mp;
  });
  return *min_;
}

ModulePtr FPModule::minimal() const { return minimal_info().module; }

ModulePtr minimal_presentation(const ModulePtr& m) { return m->minimal(); }

ModulePtr FPModule::twisted(int k) const {
  std::vector<int> d = degrees_;
  for (auto& x : d) x -= k;
  auto m = std::make_shared<FPModule>(ring_, std::move(d), relations_);
  m->minimal_flag_ = minimal_flag_;
  return m;
}

std::string FPModule::to_string() const {
  std::string s = "coker over " + ring_->to_string() + " gens(";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees_[i]);
  }
  s += ") rels{";
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (i) s += "; ";
    s += vec_to_string(ring_->ambient(), relations_[i]);
  }
  return s + "}";
}

ModulePtr subquotient(const RingPtr& ring, const std::vector<int>& twists, const std::vector<Vec>& V,
                      const std::vector<Vec>& W, const std::vector<int>& v_degrees) {
  if (V.size() != v_degrees.size()) throw Error(ErrorCode::InvalidArgument, "degree list has the wrong length");
  std::vector<Vec> inputs;
  std::vector<int> degrees = v_degrees;
  for (const auto& v : V) inputs.push_back(ring->reduce(v));
  for (const auto& w : W) {
    Vec r = ring->reduce(w);
    if (r.empty()) continue;
    degrees.push_back(vec_degree(r, twists));
    inputs.push_back(std::move(r));
  }
  ModuleGB gb = ModuleGB::compute(ring->ambient(), ring->reducer(), twists, inputs, GBOptions{true, false, false},
                                  degrees);
  const int nv = static_cast<int>(V.size());
  std::vector<Vec> rels;
  for (const auto& s : gb.syzygies()) {
    Vec r;
    for (const auto& t : s)
      if (t.comp < nv) r.push_back(t);
    if (!r.empty()) rels.push_back(std::move(r));
  }
  return FPModule::make(ring, v_degrees, std::move(rels));
}

std::vector<Vec> preimage_generators(const RingPtr& ring, const std::vector<int>& source_twists,
                                     const std::vector<int>& target_twists, const std::vector<Vec>& images,
                                     const std::vector<Vec>& L) {
  if (images.size() != source_twists.size())
    throw Error(ErrorCode::InvalidArgument, "image count differs from source rank");
  std::vector<Vec> inputs;
  std::vector<int> degrees = source_twists;
  for (const auto& v : images) inputs.push_back(ring->reduce(v));
  for (const auto& w : L) {
    Vec r = ring->reduce(w);
    if (r.empty()) continue;
    degrees.push_back(vec_degree(r, target_twists));
    inputs.push_back(std::move(r));
  }
  ModuleGB gb = ModuleGB::compute(ring->ambient(), ring->reducer(), target_twists, inputs,
                                  GBOptions{true, false, false}, degrees);
  const int ns = static_cast<int>(images.size());
  std::vector<Vec> out;
  for (const auto& s : gb.syzygies()) {
    Vec r;
    for (const auto& t : s)
      if (t.comp < ns) r.push_back(t);
    r = ring->reduce(r);
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace semilink
