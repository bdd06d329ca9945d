#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "semilink/groebner.hpp"
#include "semilink/linalg.hpp"

namespace semilink {

/// R = S / I for a positively graded polynomial ring S and a homogeneous
/// proper ideal I.
class GradedQuotientRing {
 public:
  GradedQuotientRing(PolyRingPtr ambient, std::vector<Poly> relations, std::string name = "R");

  const PolyRingPtr& ambient() const { return ambient_; }
  const IdealPtr& ideal() const { return ideal_; }
  const FieldDescriptor& field() const { return ambient_->field(); }
  int nvars() const { return ambient_->nvars(); }
  const std::string& name() const { return name_; }

  /// Null when I = 0, so the GB engine can skip quotient reduction.
  IdealPtr reducer() const { return ideal_->is_zero() ? nullptr : ideal_; }

  Poly reduce(const Poly& f) const { return ideal_->normal_form(f); }
  Vec reduce(const Vec& v) const { return ideal_->is_zero() ? v : ideal_->reduce_vec(v); }

  HilbertSeries hilbert_series() const { return ideal_->quotient_series(); }
  int dim() const { return hilbert_series().dim(); }
  /// Codimension of R in S.
  int codim() const { return nvars() - dim(); }

  /// Same ambient ring and same ideal (compared through reduced GBs).
  bool same_as(const GradedQuotientRing& o) const;

  std::string to_string() const;

 private:
  PolyRingPtr ambient_;
  IdealPtr ideal_;
  std::string name_;
};

using RingPtr = std::shared_ptr<const GradedQuotientRing>;

RingPtr make_quotient_ring(PolyRingPtr ambient, std::vector<Poly> relations, std::string name = "R");
/// R / (image of a): same ambient, ideal I + a.
RingPtr quotient_by(const RingPtr& ring, const std::vector<Poly>& extra, std::string name);

/// (+)_i R(-d_i).
struct FreeModule {
  RingPtr ring;
  std::vector<int> twists;
  int rank() const { return static_cast<int>(twists.size()); }
};

/// Degree-0 homogeneous map between free modules, stored by columns: column j
/// is the image of the j-th basis vector of the source.
struct ModuleMap {
  FreeModule source;
  FreeModule target;
  std::vector<Vec> columns;

  /// Throws InvalidArgument when a column is not homogeneous of the source
  /// twist.
  void check() const;
  Vec apply(const Vec& v) const;
  /// this o other
  ModuleMap compose(const ModuleMap& other) const;
  /// Entry (i, j) as a polynomial.
  Poly entry(int i, int j) const;
  bool has_unit_entry() const;
};

class FPModule;
using ModulePtr = std::shared_ptr<const FPModule>;

struct MinimalPresentation;
struct ResolutionPrefix;
struct ResolutionState;

/// Finitely presented graded module: the cokernel of a degree-0 map
/// F1 -> F0. Stored as generator degrees (the twists of F0) and relation
/// vectors in F0. Caches are filled once and are safe to share across threads.
class FPModule : public std::enable_shared_from_this<FPModule> {
 public:
  FPModule(RingPtr ring, std::vector<int> degrees, std::vector<Vec> relations);

  static ModulePtr make(RingPtr ring, std::vector<int> degrees, std::vector<Vec> relations);
  static ModulePtr zero(RingPtr ring);
  static ModulePtr free(RingPtr ring, std::vector<int> twists);
  /// R / (gens), generated in degree `shift`.
  static ModulePtr cyclic(RingPtr ring, const std::vector<Poly>& gens, int shift = 0);
  /// The ideal (gens) as a module (generators may be redundant).
  static ModulePtr ideal(RingPtr ring, const std::vector<Poly>& gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<Vec>& relations() const { return relations_; }
  int num_generators() const { return static_cast<int>(degrees_.size()); }
  int num_relations() const { return static_cast<int>(relations_.size()); }

  ModuleMap presentation() const;
  std::vector<int> relation_degrees() const;

  /// GB of the relations plus I*F0.
  const ModuleGB& relation_gb() const;
  Vec normal_form(const Vec& v) const { return relation_gb().normal_form(v); }
  bool is_zero_element(const Vec& v) const { return normal_form(v).empty(); }

  const HilbertSeries& hilbert_series() const;
  bool is_zero() const { return hilbert_series().is_zero(); }

  /// Minimal presentation, with the comparison maps to this presentation.
  const MinimalPresentation& minimal_info() const;
  ModulePtr minimal() const;
  bool is_minimal() const { return minimal_flag_; }

  /// Same module shifted: M(k) has generators in degrees d_i - k.
  ModulePtr twisted(int k) const;

  std::string to_string() const;

 private:
  friend ModulePtr make_minimal_module(RingPtr, std::vector<int>, std::vector<Vec>, ModuleGB);
  friend ResolutionPrefix free_resolution(const ModulePtr&, int);
  friend ResolutionPrefix ambient_resolution(const ModulePtr&);

  RingPtr ring_;
  std::vector<int> degrees_;
  std::vector<Vec> relations_;
  bool minimal_flag_ = false;

  mutable std::once_flag gb_once_;
  mutable ModuleGB gb_;
  mutable std::once_flag hs_once_;
  mutable HilbertSeries hs_;
  mutable std::once_flag min_once_;
  mutable std::shared_ptr<const MinimalPresentation> min_;
  mutable std::mutex res_mutex_;
  mutable std::shared_ptr<ResolutionState> res_;
  mutable std::once_flag amb_once_;
  mutable std::shared_ptr<const ResolutionPrefix> amb_res_;
};

/// The minimal presentation N of a module M. Generator i of N is generator
/// kept[i] of M; generator j of M equals to_minimal[j] in N.
struct MinimalPresentation {
  ModulePtr module;
  std::vector<int> kept;
  std::vector<Vec> to_minimal;
};

/// Minimal presentation of an arbitrary presentation (free function form).
ModulePtr minimal_presentation(const ModulePtr& m);

/// Module presented by generators `gens` of (V + W) / W inside the free
/// module with the given twists. Generators equal the entries of V.
ModulePtr subquotient(const RingPtr& ring, const std::vector<int>& twists, const std::vector<Vec>& V,
                      const std::vector<Vec>& W, const std::vector<int>& v_degrees);

/// Generators of {v in F : phi(v) in span(L)} for phi: F -> G given by the
/// images of the basis of F.
std::vector<Vec> preimage_generators(const RingPtr& ring, const std::vector<int>& source_twists,
                                     const std::vector<int>& target_twists, const std::vector<Vec>& images,
                                     const std::vector<Vec>& L);

/// Minimal free resolution prefix F_len -> ... -> F_0.
struct ResolutionPrefix {
  std::vector<std::vector<int>> twists;          // twists[i]: generator degrees of F_i
  std::vector<std::vector<Vec>> maps;            // maps[i]: columns of d_{i+1}: F_{i+1} -> F_i
  bool terminated = false;                       // true when F_{len+1} = 0 is certified
  int length() const { return static_cast<int>(maps.size()); }
  int rank(int i) const { return i < static_cast<int>(twists.size()) ? static_cast<int>(twists[i].size()) : 0; }
  /// beta_{i,j}
  std::map<std::pair<int, int>, int> betti() const;
  std::vector<int> total_betti() const;
};

/// Resolution of M over R, extended lazily to at least `length` maps.
/// Thread-safe; cached per module.
ResolutionPrefix free_resolution(const ModulePtr& m, int length);
/// Resolution of M viewed as a module over the ambient polynomial ring S.
/// Always terminates (length at most the number of variables).
ResolutionPrefix ambient_resolution(const ModulePtr& m);
int projective_dimension_over_ambient(const ModulePtr& m);

/// Hom_R(M, N) with the decoded homomorphisms attached to its generators.
struct HomModule {
  ModulePtr module;              // minimal presentation of Hom(M, N)
  ModulePtr source;              // minimal presentation of M used for decoding
  ModulePtr target;              // minimal presentation of N
  std::vector<int> ambient_twists;
  /// homs[g]: images of the generators of `source` under generator g,
  /// flattened: component i * target->num_generators() + j.
  std::vector<Vec> homs;
  /// Basis of the relations of `target` in every block of the ambient module.
  std::shared_ptr<const ModuleGB> ambient_gb;

  /// Images of the generators of `source` for an ambient vector.
  std::vector<Vec> images(const Vec& flat) const;
  /// k-spanning set of the degree-d part as ambient vectors.
  std::vector<Vec> degree_spanning_set(int d) const;
  /// k-basis of the degree-d part (reduced modulo N's relations).
  std::vector<Vec> degree_basis(int d) const;
};

HomModule hom(const ModulePtr& M, const ModulePtr& N);
ModulePtr hom_module(const ModulePtr& M, const ModulePtr& N);
ModulePtr tensor(const ModulePtr& M, const ModulePtr& N);
ModulePtr direct_sum(const ModulePtr& M, const ModulePtr& N);

/// Ext^i_R(M, N) and Tor_i^R(M, N) as modules.
ModulePtr ext_module(int i, const ModulePtr& M, const ModulePtr& N);
ModulePtr tor_module(int i, const ModulePtr& M, const ModulePtr& N);
/// Hilbert series only (cokernel bookkeeping, no subquotient presentation).
HilbertSeries ext_series(int i, const ModulePtr& M, const ModulePtr& N);
HilbertSeries tor_series(int i, const ModulePtr& M, const ModulePtr& N);
/// Ext^i_S(M, S) over the ambient polynomial ring (Hilbert series only).
HilbertSeries ambient_ext_series(int i, const ModulePtr& M);

/// Transpose of M with respect to C: coker Hom(f, C) for the minimal
/// presentation f of M.
ModulePtr transpose(const ModulePtr& M, const ModulePtr& C);
/// Image of Hom(f, C) inside Hom(P_1, C) for the minimal presentation f of M.
ModulePtr syzygy_of_transpose(const ModulePtr& M, const ModulePtr& C);
/// Hom((+)_i R(-d_i), C).
ModulePtr hom_free_module(const RingPtr& ring, const std::vector<int>& twists, const ModulePtr& C);

enum class IsoVerdict { ProvenIso, ProvenNonIso, Inconclusive };
const char* iso_verdict_name(IsoVerdict v);

struct IsoEvidence {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  /// Images of the generators of minimal(M) in minimal(N) (ProvenIso only).
  std::optional<std::vector<Vec>> witness;
  std::string mismatch;  // name of the differing invariant (ProvenNonIso)
  int trials = 0;
  int twist = 0;         // N was compared as N(twist)
};

struct IsoOptions {
  int trials = 20;
  std::uint64_t seed = 42;
};

/// Isomorphism test by invariants and random degree-0 homomorphisms.
IsoEvidence iso_test(const ModulePtr& M, const ModulePtr& N, IsoOptions opts = {});
/// Isomorphism up to a twist: finds the shift k with M ~ N(k) if any.
IsoEvidence iso_test_up_to_twist(const ModulePtr& M, const ModulePtr& N, IsoOptions opts = {});
/// Re-checks a ProvenIso witness: the map M -> N is well defined, surjective
/// and the Hilbert series agree.
bool verify_iso_witness(const ModulePtr& M, const ModulePtr& N, const std::vector<Vec>& witness);

}  // namespace semilink
