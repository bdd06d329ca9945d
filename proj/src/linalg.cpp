#include "semilink/linalg.hpp"

namespace semilink {

std::size_t VecEchelon::KeyHash::operator()(const std::pair<int, Monomial>& k) const {
  std::size_t h = static_cast<std::size_t>(k.first) * 0x9e3779b97f4a7c15ULL;
  for (auto e : k.second.exps) h = (h ^ e) * 0x100000001b3ULL;
  return h;
}

Vec VecEchelon::reduce(Vec v) const {
  std::size_t i = 0;
  while (i < v.size()) {
    auto it = pivots_.find({v[i].comp, v[i].mono});
    if (it == pivots_.end()) {
      ++i;
      continue;
    }
    const Vec& row = rows_[it->second];
    Scalar c = -(v[i].coeff / row.front().coeff);
    v = vec_axpy(*ring_, v, c, ring_->one(), row);
  }
  return v;
}

bool VecEchelon::insert(const Vec& v) {
  Vec r = reduce(v);
  if (r.empty()) return false;
  Scalar inv = r.front().coeff.inverse();
  r = vec_scale(r, inv);
  pivots_.emplace(std::make_pair(r.front().comp, r.front().mono), static_cast<int>(rows_.size()));
  rows_.push_back(std::move(r));
  return true;
}

int scalar_rank(const GradedPolyRing& ring, const std::vector<Vec>& vecs) {
  VecEchelon e(ring);
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

}  // namespace semilink
