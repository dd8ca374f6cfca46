#pragma once

// Lattice-preserving affine isomorphism testing for smooth polytopes via
// corner normalization: the canonical form of P is the lexicographically
// minimal sorted lattice-point set over all frames that send a vertex to the
// origin and its edge directions to the standard basis.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slp/polytope.hpp"

namespace slp {

struct CanonicalForm {
  std::vector<Vec> points;  // sorted lexicographically; first point is 0
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.points == b.points;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) {
    return !(a == b);
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.points < b.points;
  }
};

// All maps sending vertex vi to the origin and an ordering of its primitive
// edge directions to the standard basis. Smoothness at vi makes every
// ordering valid; d! maps in total.
inline std::vector<AffineMap> corner_frames(const Polytope& P, int vi) {
  std::vector<Vec> dirs = P.vertex_edge_dirs(vi);
  if (static_cast<int>(dirs.size()) != P.dim() || !is_lattice_basis(dirs))
    throw std::invalid_argument("polytope is not smooth at the given vertex");
  std::sort(dirs.begin(), dirs.end());
  std::vector<AffineMap> out;
  do {
    Mat m = Mat::from_columns(dirs);
    Int d = m.det();  // +-1
    Mat adj = m.adjugate();
    Mat inv(P.dim());
    for (int i = 0; i < P.dim(); ++i)
      for (int j = 0; j < P.dim(); ++j) inv.at(i, j) = adj.at(i, j) * d;
    const Vec& v = P.vertices()[vi];
    out.emplace_back(inv, -(inv * v));
  } while (std::next_permutation(dirs.begin(), dirs.end()));
  return out;
}

inline std::vector<Polytope> corner_normalizations(const Polytope& P, int vi) {
  std::vector<Polytope> out;
  for (const auto& m : corner_frames(P, vi)) out.push_back(P.mapped(m));
  return out;
}

// Canonical form plus the witnessing frame that attains it.
inline std::pair<CanonicalForm, AffineMap> canonical_form_with_witness(const Polytope& P) {
  if (!P.is_smooth()) throw std::invalid_argument("canonical form requires a smooth polytope");
  std::vector<Vec> pts = P.lattice_points();
  std::optional<std::vector<Vec>> best;
  AffineMap best_map = AffineMap::identity(P.dim());
  for (int v = 0; v < P.num_vertices(); ++v) {
    for (const auto& m : corner_frames(P, v)) {
      std::vector<Vec> mapped;
      mapped.reserve(pts.size());
      for (const auto& p : pts) mapped.push_back(m.apply(p));
      std::sort(mapped.begin(), mapped.end());
      if (!best || mapped < *best) {
        best = std::move(mapped);
        best_map = m;
      }
    }
  }
  return {CanonicalForm{*best}, best_map};
}

inline CanonicalForm canonical_form(const Polytope& P) {
  return canonical_form_with_witness(P).first;
}

inline bool are_isomorphic(const Polytope& P, const Polytope& Q) {
  if (P.dim() != Q.dim()) return false;
  return canonical_form(P) == canonical_form(Q);
}

// Witness map sending P onto Q when they are isomorphic.
inline std::optional<AffineMap> isomorphism_witness(const Polytope& P, const Polytope& Q) {
  if (P.dim() != Q.dim()) return std::nullopt;
  auto [cp, mp] = canonical_form_with_witness(P);
  auto [cq, mq] = canonical_form_with_witness(Q);
  if (!(cp == cq)) return std::nullopt;
  return mp.then(mq.inverse());
}

}  // namespace slp
