#include "semilink/modules.hpp"

namespace semilink {

GradedQuotientRing::GradedQuotientRing(PolyRingPtr ambient, std::vector<Poly> relations, std::string name)
    : ambient_(std::move(ambient)), name_(std::move(name)) {
  for (const auto& r : relations) {
    if (!r.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "inhomogeneous ring relation " + r.to_string());
    if (!r.is_zero() && r.degree() == 0)
      throw Error(ErrorCode::ImproperIdeal, "ring relations generate the unit ideal");
  }
  ideal_ = std::make_shared<Ideal>(ambient_, std::move(relations));
}

bool GradedQuotientRing::same_as(const GradedQuotientRing& o) const {
  if (this == &o) return true;
  if (!(*ambient_ == *o.ambient_)) return false;
  const auto& a = ideal_->gb();
  const auto& b = o.ideal_->gb();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string GradedQuotientRing::to_string() const {
  std::string s = ambient_->to_string();
  if (ideal_->is_zero()) return s;
  s += " / (";
  for (std::size_t i = 0; i < ideal_->generators().size(); ++i) {
    if (i) s += ", ";
    s += ideal_->generators()[i].to_string();
  }
  return s + ")";
}

RingPtr make_quotient_ring(PolyRingPtr ambient, std::vector<Poly> relations, std::string name) {
  return std::make_shared<GradedQuotientRing>(std::move(ambient), std::move(relations), std::move(name));
}

RingPtr quotient_by(const RingPtr& ring, const std::vector<Poly>& extra, std::string name) {
  std::vector<Poly> rel = ring->ideal()->generators();
  for (const auto& p : extra) {
    if (!p.is_zero() && p.degree() == 0) throw Error(ErrorCode::ImproperIdeal, "ideal contains a unit");
    rel.push_back(p);
  }
  return make_quotient_ring(ring->ambient(), std::move(rel), std::move(name));
}

void ModuleMap::check() const {
  if (static_cast<int>(columns.size()) != source.rank())
    throw Error(ErrorCode::InvalidArgument, "column count differs from source rank");
  for (int j = 0; j < source.rank(); ++j) {
    const Vec& c = columns[j];
    if (c.empty()) continue;
    for (const auto& t : c) {
      if (t.comp < 0 || t.comp >= target.rank())
        throw Error(ErrorCode::AmbientMismatch, "column entry outside the target");
      if (t.mono.degree + target.twists[t.comp] != source.twists[j])
        throw Error(ErrorCode::InvalidArgument, "map is not homogeneous of degree 0");
    }
  }
}

Vec ModuleMap::apply(const Vec& v) const {
  const GradedPolyRing& R = *target.ring->ambient();
  Vec out;
  for (const auto& t : v) out = vec_axpy(R, out, t.coeff, t.mono, columns.at(t.comp));
  return target.ring->reduce(out);
}

ModuleMap ModuleMap::compose(const ModuleMap& other) const {
  if (other.target.twists != source.twists)
    throw Error(ErrorCode::AmbientMismatch, "maps cannot be composed");
  ModuleMap out{other.source, target, {}};
  for (const auto& c : other.columns) out.columns.push_back(apply(c));
  return out;
}

Poly ModuleMap::entry(int i, int j) const { return vec_component(target.ring->ambient(), columns.at(j), i); }

bool ModuleMap::has_unit_entry() const {
  for (const auto& c : columns)
    for (const auto& t : c)
      if (t.mono.is_one()) return true;
  return false;
}

}  // namespace semilink
