#pragma once

// Groebner-free degreewise linear algebra used as an independent check of the
// engine. Everything is computed from spanning sets of monomial multiples and
// plain Gaussian elimination.

#include <map>
#include <vector>

#include "semilink/polyring.hpp"
#include "semilink/vec.hpp"

namespace oracle {

using semilink::FieldDescriptor;
using semilink::GradedPolyRing;
using semilink::Monomial;
using semilink::Poly;
using semilink::Scalar;
using semilink::Vec;

using Row = std::vector<Scalar>;

/// Rank by Gaussian elimination.
inline int rank_of(std::vector<Row> rows, const FieldDescriptor& f) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  int r = 0;
  for (std::size_t c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (!rows[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x = x * inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar m = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k) rows[i][k] = rows[i][k] - m * rows[r][k];
    }
    ++r;
  }
  (void)f;
  return r;
}

/// Coordinates of degree-d pieces of a free S-module (+) S(-t_j).
struct DegreePiece {
  std::vector<std::pair<int, Monomial>> basis;  // (component, monomial)
  std::map<std::pair<int, std::vector<int>>, int> index;

  DegreePiece(const GradedPolyRing& S, const std::vector<int>& twists, int d) {
    for (int j = 0; j < static_cast<int>(twists.size()); ++j)
      for (const auto& m : S.monomials_of_degree(d - twists[j])) {
        std::vector<int> key(m.exps.begin(), m.exps.begin() + S.nvars());
        index[{j, key}] = static_cast<int>(basis.size());
        basis.emplace_back(j, m);
      }
  }

  Row coords(const GradedPolyRing& S, const Vec& v) const {
    Row r(basis.size(), S.zero());
    for (const auto& t : v) {
      std::vector<int> key(t.mono.exps.begin(), t.mono.exps.begin() + S.nvars());
      r.at(index.at({t.comp, key})) = t.coeff;
    }
    return r;
  }
};

/// Spanning set of (I * F)_d for the free module with the given twists.
inline std::vector<Vec> ideal_multiples(const GradedPolyRing& S, const std::vector<Poly>& ideal_gens,
                                        const std::vector<int>& twists, int d) {
  std::vector<Vec> out;
  for (int j = 0; j < static_cast<int>(twists.size()); ++j)
    for (const auto& g : ideal_gens)
      for (const auto& m : S.monomials_of_degree(d - twists[j] - g.degree()))
        out.push_back(semilink::vec_mul_term(S, semilink::poly_to_vec(g, j), m, S.one_scalar()));
  return out;
}

/// dim_k of (F / (U + I F))_d with U spanned by `gens` (homogeneous).
inline long quotient_dim(const GradedPolyRing& S, const std::vector<Poly>& ideal_gens,
                         const std::vector<int>& twists, const std::vector<Vec>& gens,
                         const std::vector<int>& gen_degrees, int d) {
  DegreePiece piece(S, twists, d);
  std::vector<Row> rows;
  for (const auto& v : ideal_multiples(S, ideal_gens, twists, d)) rows.push_back(piece.coords(S, v));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (const auto& m : S.monomials_of_degree(d - gen_degrees[g]))
      rows.push_back(piece.coords(S, semilink::vec_mul_term(S, gens[g], m, S.one_scalar())));
  return static_cast<long>(piece.basis.size()) - rank_of(rows, S.field());
}

/// dim_k of the degree-d kernel of R^n -> R^r, R = S / I, columns given.
inline long kernel_dim(const GradedPolyRing& S, const std::vector<Poly>& ideal_gens,
                       const std::vector<int>& target_twists, const std::vector<Vec>& columns,
                       const std::vector<int>& source_twists, int d) {
  // dim source_d - rank of the induced map on quotients
  long src = quotient_dim(S, ideal_gens, source_twists, {}, {}, d);
  DegreePiece piece(S, target_twists, d);
  std::vector<Row> irows;
  for (const auto& v : ideal_multiples(S, ideal_gens, target_twists, d)) irows.push_back(piece.coords(S, v));
  int rank_i = rank_of(irows, S.field());
  std::vector<Row> rows = irows;
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& m : S.monomials_of_degree(d - source_twists[j]))
      rows.push_back(piece.coords(S, semilink::vec_mul_term(S, columns[j], m, S.one_scalar())));
  long image = rank_of(rows, S.field()) - rank_i;
  return src - image;
}

/// Rank in degree d of the map (F / (U + I F)) -> (G / (W + I G)) sending basis
/// vector k of F to images[k]. Well-definedness is the caller's business.
inline long map_rank(const GradedPolyRing& S, const std::vector<Poly>& ideal_gens,
                     const std::vector<int>& src_twists, const std::vector<int>& tgt_twists,
                     const std::vector<Vec>& tgt_rels, const std::vector<Vec>& images, int d) {
  DegreePiece piece(S, tgt_twists, d);
  std::vector<Row> rows;
  for (const auto& v : ideal_multiples(S, ideal_gens, tgt_twists, d)) rows.push_back(piece.coords(S, v));
  for (const auto& w : tgt_rels) {
    if (w.empty()) continue;
    int wd = semilink::vec_degree(w, tgt_twists);
    for (const auto& m : S.monomials_of_degree(d - wd))
      rows.push_back(piece.coords(S, semilink::vec_mul_term(S, w, m, S.one_scalar())));
  }
  int base = rank_of(rows, S.field());
  for (std::size_t k = 0; k < images.size(); ++k)
    for (const auto& m : S.monomials_of_degree(d - src_twists[k]))
      rows.push_back(piece.coords(S, semilink::vec_mul_term(S, images[k], m, S.one_scalar())));
  return rank_of(rows, S.field()) - base;
}

/// Brute-force Hom(F, N) with F free: returns (twists, relations) of the
/// free cover (+)_{g,n} S(e_n - d_g) of Hom(F, N), component g * s + n.
struct HomFree {
  std::vector<int> twists;
  std::vector<Vec> rels;
};

inline HomFree hom_free(const std::vector<int>& F, const std::vector<int>& n_twists, const std::vector<Vec>& n_rels) {
  HomFree h;
  const int s = static_cast<int>(n_twists.size());
  for (int d : F)
    for (int e : n_twists) h.twists.push_back(e - d);
  for (std::size_t g = 0; g < F.size(); ++g)
    for (const auto& l : n_rels) {
      Vec v = l;
      for (auto& t : v) t.comp += static_cast<int>(g) * s;
      h.rels.push_back(v);
    }
  return h;
}

/// Images of basis vectors (g, n) of Hom(F_j, N) under precomposition with
/// the matrix whose columns are `cols` (columns indexed by F_{j+1}).
inline std::vector<Vec> precompose(const semilink::PolyRingPtr& S, const std::vector<Vec>& cols, int rank_j, int s) {
  std::vector<Vec> out;
  for (int g = 0; g < rank_j; ++g)
    for (int n = 0; n < s; ++n) {
      Vec v;
      for (std::size_t h = 0; h < cols.size(); ++h) {
        Poly e = semilink::vec_component(S, cols[h], g);
        for (const auto& t : e.terms()) v.push_back(semilink::VTerm{static_cast<int>(h) * s + n, t.mono, t.coeff});
      }
      semilink::vec_normalize(*S, v);
      out.push_back(v);
    }
  return out;
}

/// dim_k of the degree-d cohomology at spot i of Hom(F_., N) for a complex
/// F_. given by twists and column matrices (maps[j]: F_{j+1} -> F_j).
inline long hom_cohomology_dim(const semilink::PolyRingPtr& S, const std::vector<Poly>& ideal_gens,
                               const std::vector<std::vector<int>>& twists, const std::vector<std::vector<Vec>>& maps,
                               const std::vector<int>& n_twists, const std::vector<Vec>& n_rels, int i, int d) {
  auto rank = [&](int j) { return j < static_cast<int>(twists.size()) ? static_cast<int>(twists[j].size()) : 0; };
  if (rank(i) == 0) return 0;
  const int s = static_cast<int>(n_twists.size());
  auto X = [&](int j) { return hom_free(twists[j], n_twists, n_rels); };
  auto Xi = X(i);
  std::vector<int> rel_deg;
  for (const auto& r : Xi.rels) rel_deg.push_back(semilink::vec_degree(r, Xi.twists));
  long total = quotient_dim(*S, ideal_gens, Xi.twists, Xi.rels, rel_deg, d);
  if (rank(i + 1) > 0) {
    auto Xn = X(i + 1);
    total -= map_rank(*S, ideal_gens, Xi.twists, Xn.twists, Xn.rels, precompose(S, maps[i], rank(i), s), d);
  }
  if (i > 0) {
    auto Xp = X(i - 1);
    total -= map_rank(*S, ideal_gens, Xp.twists, Xi.twists, Xi.rels, precompose(S, maps[i - 1], rank(i - 1), s), d);
  }
  return total;
}

/// F (x) N with F free: (+)_{g,n} S(-d_g - e_n), component g * s + n.
inline HomFree tensor_free(const std::vector<int>& F, const std::vector<int>& n_twists, const std::vector<Vec>& n_rels) {
  HomFree h;
  const int s = static_cast<int>(n_twists.size());
  for (int d : F)
    for (int e : n_twists) h.twists.push_back(d + e);
  for (std::size_t g = 0; g < F.size(); ++g)
    for (const auto& l : n_rels) {
      Vec v = l;
      for (auto& t : v) t.comp += static_cast<int>(g) * s;
      h.rels.push_back(v);
    }
  return h;
}

/// Images of basis vectors (h, n) of F_{j+1} (x) N under cols (x) N.
inline std::vector<Vec> postcompose(const semilink::PolyRingPtr& S, const std::vector<Vec>& cols, int s) {
  std::vector<Vec> out;
  for (const auto& c : cols)
    for (int n = 0; n < s; ++n) {
      Vec v = c;
      for (auto& t : v) t.comp = t.comp * s + n;
      semilink::vec_normalize(*S, v);
      out.push_back(v);
    }
  return out;
}

/// dim_k of the degree-d homology at spot i of F_. (x) N.
inline long tensor_homology_dim(const semilink::PolyRingPtr& S, const std::vector<Poly>& ideal_gens,
                                const std::vector<std::vector<int>>& twists,
                                const std::vector<std::vector<Vec>>& maps, const std::vector<int>& n_twists,
                                const std::vector<Vec>& n_rels, int i, int d) {
  auto rank = [&](int j) { return j < static_cast<int>(twists.size()) ? static_cast<int>(twists[j].size()) : 0; };
  if (rank(i) == 0) return 0;
  const int s = static_cast<int>(n_twists.size());
  auto X = [&](int j) { return tensor_free(twists[j], n_twists, n_rels); };
  auto Xi = X(i);
  std::vector<int> rel_deg;
  for (const auto& r : Xi.rels) rel_deg.push_back(semilink::vec_degree(r, Xi.twists));
  long total = quotient_dim(*S, ideal_gens, Xi.twists, Xi.rels, rel_deg, d);
  if (i > 0) {
    auto Xp = X(i - 1);
    total -= map_rank(*S, ideal_gens, Xi.twists, Xp.twists, Xp.rels, postcompose(S, maps[i - 1], s), d);
  }
  if (rank(i + 1) > 0 && i < static_cast<int>(maps.size())) {
    auto Xn = X(i + 1);
    total -= map_rank(*S, ideal_gens, Xn.twists, Xi.twists, Xi.rels, postcompose(S, maps[i], s), d);
  }
  return total;
}

}  // namespace oracle
