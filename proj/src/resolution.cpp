#include <algorithm>

#include "semilink/modules.hpp"

namespace semilink {

struct ResolutionState {
  ResolutionPrefix prefix;
  std::vector<Vec> pending;  // generators of the next syzygy module, in F_len
};

namespace {

// Computes one more map of the resolution from `pending`.
void extend_once(ResolutionState& st, const PolyRingPtr& S, const IdealPtr& quotient) {
  auto& pre = st.prefix;
  if (st.pending.empty()) {
    pre.terminated = true;
    return;
  }
  const std::vector<int>& tw = pre.twists.back();
  ModuleGB gb = ModuleGB::compute(S, quotient, tw, st.pending, GBOptions{true, true, false});
  std::vector<Vec> cols;
  cols.reserve(gb.kept().size());
  for (int i : gb.kept()) cols.push_back(std::move(st.pending[i]));
  pre.maps.push_back(std::move(cols));
  pre.twists.push_back(gb.kept_degrees());
  st.pending = gb.syzygies();
  if (quotient)
    for (auto& v : st.pending) v = quotient->reduce_vec(v);
  st.pending.erase(std::remove_if(st.pending.begin(), st.pending.end(), [](const Vec& v) { return v.empty(); }),
                   st.pending.end());
  if (st.pending.empty()) pre.terminated = true;
}

}  // namespace

std::map<std::pair<int, int>, int> ResolutionPrefix::betti() const {
  std::map<std::pair<int, int>, int> out;
  for (std::size_t i = 0; i < twists.size(); ++i)
    for (int d : twists[i]) ++out[{static_cast<int>(i), d}];
  return out;
}

std::vector<int> ResolutionPrefix::total_betti() const {
  std::vector<int> out;
  for (const auto& t : twists) out.push_back(static_cast<int>(t.size()));
  return out;
}

ResolutionPrefix free_resolution(const ModulePtr& m0, int length) {
  ModulePtr m = m0->minimal();
  const FPModule& M = *m;
  std::lock_guard<std::mutex> lock(M.res_mutex_);
  if (!M.res_) {
    M.res_ = std::make_shared<ResolutionState>();
    M.res_->prefix.twists.push_back(M.degrees());
    M.res_->pending = M.relations();
    if (M.num_generators() == 0) M.res_->prefix.terminated = true;
  }
  ResolutionState& st = *M.res_;
  const RingPtr& ring = M.ring();
  while (!st.prefix.terminated && st.prefix.length() < length) extend_once(st, ring->ambient(), ring->reducer());
  ResolutionPrefix out = st.prefix;
  if (out.length() > length && length >= 0) {
    out.maps.resize(length);
    out.twists.resize(length + 1);
    out.terminated = false;
  }
  return out;
}

ResolutionPrefix ambient_resolution(const ModulePtr& m0) {
  ModulePtr m = m0->minimal();
  const FPModule& M = *m;
  std::call_once(M.amb_once_, [&M] {
    ResolutionState st;
    st.prefix.twists.push_back(M.degrees());
    if (M.num_generators() == 0) {
      st.prefix.terminated = true;
    } else {
      st.pending = M.relations();
      const auto& I = M.ring()->ideal()->gb();
      for (int j = 0; j < M.num_generators(); ++j)
        for (const auto& f : I) st.pending.push_back(poly_to_vec(f, j));
    }
    // Inputs include I*F0, so the first step may drop redundant ones.
    while (!st.prefix.terminated) extend_once(st, M.ring()->ambient(), nullptr);
    M.amb_res_ = std::make_shared<const ResolutionPrefix>(std::move(st.prefix));
  });
  return *M.amb_res_;
}

int projective_dimension_over_ambient(const ModulePtr& m) {
  ResolutionPrefix r = ambient_resolution(m);
  if (r.rank(0) == 0) return -1;
  return r.length();
}

}  // namespace semilink
