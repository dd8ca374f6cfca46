#pragma once

// Complete rational fans given by maximal cones with primitive ray
// generators; normal fans, unimodularity, Hirzebruch fans, stellar
// subdivision and its inverse.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "slp/polytope.hpp"

namespace slp {

struct Cone {
  std::vector<Vec> gens;  // primitive, sorted, deduplicated

  explicit Cone(std::vector<Vec> g = {}) : gens(std::move(g)) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  }

  bool contains_gens(const Cone& other) const {
    return std::includes(gens.begin(), gens.end(), other.gens.begin(), other.gens.end());
  }

  friend bool operator==(const Cone& a, const Cone& b) { return a.gens == b.gens; }
  friend bool operator<(const Cone& a, const Cone& b) { return a.gens < b.gens; }
};

class Fan {
 public:
  Fan(int dim, std::vector<Cone> maximal) : dim_(dim), cones_(std::move(maximal)) {
    std::sort(cones_.begin(), cones_.end());
    cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
  }

  int dim() const { return dim_; }
  const std::vector<Cone>& maximal_cones() const { return cones_; }

  std::vector<Vec> rays() const {
    std::set<Vec> r;
    for (const auto& c : cones_) r.insert(c.gens.begin(), c.gens.end());
    return {r.begin(), r.end()};
  }

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim_ == b.dim_ && a.cones_ == b.cones_;
  }
  friend bool operator!=(const Fan& a, const Fan& b) { return !(a == b); }

 private:
  int dim_;
  std::vector<Cone> cones_;
};

// One maximal cone per vertex, generated by the primitive inner normals of
// the facets through that vertex. Rays biject with facets.
inline Fan normal_fan(const Polytope& P) {
  std::vector<Cone> cones;
  for (int v = 0; v < P.num_vertices(); ++v) {
    std::vector<Vec> gens;
    for (int f : P.vertex_facets(v)) gens.push_back(P.facets()[f].normal);
    cones.emplace_back(std::move(gens));
  }
  return Fan(P.dim(), std::move(cones));
}

// A maximal cone is unimodular iff its generators form a lattice basis.
// Faces of unimodular cones are automatically unimodular, so checking the
// maximal cones decides the whole fan.
inline bool is_unimodular(const Fan& f) {
  for (const auto& c : f.maximal_cones()) {
    if (static_cast<int>(c.gens.size()) != f.dim()) return false;
    if (!is_lattice_basis(c.gens)) return false;
  }
  return true;
}

namespace detail {

// Membership of a direction in a simplicial full-dimensional cone, by
// Cramer's rule. Returns 0 outside, 1 on the boundary, 2 in the interior.
inline int cone_position(const Cone& c, const Vec& x) {
  Mat m = Mat::from_columns(c.gens);
  Int d = m.det();
  if (d == 0) return 0;
  Mat adj = m.adjugate();
  // coords = adj * x / d
  bool boundary = false;
  for (int i = 0; i < x.dim(); ++i) {
    Int num = 0;
    for (int j = 0; j < x.dim(); ++j) num += adj.at(i, j) * x[j];
    if (d < 0) num = -num;
    if (num < 0) return 0;
    if (num == 0) boundary = true;
  }
  return boundary ? 1 : 2;
}

inline std::vector<Vec> sample_directions(int dim) {
  std::vector<Vec> out;
  int B = 3;
  if (dim == 2) {
    for (int x = -B; x <= B; ++x)
      for (int y = -B; y <= B; ++y) {
        if (x == 0 && y == 0) continue;
        Vec v(x, y);
        if (primitive(v).second == 1) out.push_back(v);
      }
  } else {
    for (int x = -B; x <= B; ++x)
      for (int y = -B; y <= B; ++y)
        for (int z = -B; z <= B; ++z) {
          if (x == 0 && y == 0 && z == 0) continue;
          Vec v(x, y, z);
          if (primitive(v).second == 1) out.push_back(v);
        }
  }
  return out;
}

}  // namespace detail

// Completeness check for simplicial fans: every ridge of every maximal cone
// is shared by exactly one other maximal cone, every sample direction is
// covered, and directions interior to some cone are covered exactly once.
inline bool is_complete(const Fan& f) {
  for (const auto& c : f.maximal_cones())
    if (static_cast<int>(c.gens.size()) != f.dim())
      throw std::logic_error("completeness check requires a simplicial fan");

  std::map<std::vector<Vec>, int> ridge_count;
  for (const auto& c : f.maximal_cones()) {
    for (size_t drop = 0; drop < c.gens.size(); ++drop) {
      std::vector<Vec> ridge;
      for (size_t i = 0; i < c.gens.size(); ++i)
        if (i != drop) ridge.push_back(c.gens[i]);
      ridge_count[ridge]++;
    }
  }
  for (const auto& [ridge, count] : ridge_count)
    if (count != 2) return false;

  for (const auto& dir : detail::sample_directions(f.dim())) {
    int interior_hits = 0, hits = 0;
    for (const auto& c : f.maximal_cones()) {
      int pos = detail::cone_position(c, dir);
      if (pos > 0) ++hits;
      if (pos == 2) ++interior_hits;
    }
    if (hits == 0) return false;
    if (interior_hits > 1) return false;
  }
  return true;
}

// The fan with rays (1,0), (0,1), (0,-1), (-1,r) and four 2-cones.
inline Fan hirzebruch_fan(long r) {
  if (r < 0) throw std::invalid_argument("hirzebruch_fan: r must be nonnegative");
  Vec e1(1, 0), e2(0, 1), me2(0, -1), vr(-1, r);
  return Fan(2, {Cone({e1, e2}), Cone({e1, me2}), Cone({me2, vr}), Cone({vr, e2})});
}

// Stellar subdivision of a unimodular fan at the cone spanned by sigma_gens,
// inserting the ray through the sum of the generators. The result is again
// unimodular and complete.
inline Fan stellar_subdivide(const Fan& f, const Cone& sigma) {
  if (sigma.gens.size() < 2)
    throw std::invalid_argument("stellar subdivision at a ray is a no-op");
  if (static_cast<int>(sigma.gens.size()) > f.dim())
    throw std::invalid_argument("cone dimension exceeds fan dimension");
  Vec p = Vec::zero(f.dim());
  for (const auto& g : sigma.gens) p = p + g;
  if (primitive(p).second != 1)
    throw std::logic_error("generator sum is not primitive; fan not unimodular at sigma");

  std::vector<Cone> out;
  bool found = false;
  for (const auto& c : f.maximal_cones()) {
    if (!c.contains_gens(sigma)) {
      out.push_back(c);
      continue;
    }
    found = true;
    for (const auto& dropped : sigma.gens) {
      std::vector<Vec> gens;
      for (const auto& g : c.gens)
        if (g != dropped) gens.push_back(g);
      gens.push_back(p);
      out.emplace_back(std::move(gens));
    }
  }
  if (!found) throw std::invalid_argument("sigma is not a cone of the fan");
  Fan result(f.dim(), std::move(out));
  if (!is_unimodular(result) || !is_complete(result))
    throw std::logic_error("stellar subdivision produced an invalid fan");
  return result;
}

// Inverse stellar subdivisions: all pairs (ray rho, cone sigma) such that
// coarsening Star(rho) back to Star(sigma) yields a complete unimodular fan
// whose stellar subdivision at sigma returns the input fan. The generators
// of sigma sum to rho's generator.
inline std::vector<std::pair<Vec, Cone>> blowdown_candidates(const Fan& f) {
  std::vector<std::pair<Vec, Cone>> out;
  for (const Vec& rho : f.rays()) {
    std::vector<Cone> star;
    for (const auto& c : f.maximal_cones())
      if (std::binary_search(c.gens.begin(), c.gens.end(), rho)) star.push_back(c);
    std::set<Vec> link;
    for (const auto& c : star)
      for (const auto& g : c.gens)
        if (g != rho) link.insert(g);
    std::vector<Vec> link_rays(link.begin(), link.end());

    for (int r = 2; r <= f.dim(); ++r) {
      std::vector<int> idx(r);
      std::vector<std::vector<Vec>> subsets;
      // all r-subsets of link_rays
      std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == r) {
          std::vector<Vec> s;
          for (int i : idx) s.push_back(link_rays[i]);
          subsets.push_back(std::move(s));
          return;
        }
        for (int i = start; i < static_cast<int>(link_rays.size()); ++i) {
          idx[depth] = i;
          rec(i + 1, depth + 1);
        }
      };
      rec(0, 0);

      for (auto& gens : subsets) {
        Vec sum = Vec::zero(f.dim());
        for (const auto& g : gens) sum = sum + g;
        if (sum != rho) continue;
        Cone sigma(gens);
        // Reconstruct the coarse star: each star cone must arise from a
        // unique maximal cone B = sigma + (outer part).
        std::map<Cone, int> coarse;
        bool ok = true;
        for (const auto& c : star) {
          std::vector<Vec> rest;
          int in_sigma = 0;
          for (const auto& g : c.gens) {
            if (g == rho) continue;
            if (std::binary_search(sigma.gens.begin(), sigma.gens.end(), g))
              ++in_sigma;
            rest.push_back(g);
          }
          if (in_sigma != r - 1) {
            ok = false;
            break;
          }
          std::vector<Vec> b = rest;
          b.insert(b.end(), sigma.gens.begin(), sigma.gens.end());
          coarse[Cone(std::move(b))]++;
        }
        if (!ok) continue;
        if (static_cast<int>(star.size()) != r * static_cast<int>(coarse.size())) continue;
        for (const auto& [cone, count] : coarse)
          if (count != r) ok = false;
        if (!ok) continue;

        std::vector<Cone> coarse_cones;
        for (const auto& c : f.maximal_cones())
          if (!std::binary_search(c.gens.begin(), c.gens.end(), rho))
            coarse_cones.push_back(c);
        for (const auto& [cone, count] : coarse) coarse_cones.push_back(cone);
        Fan candidate(f.dim(), std::move(coarse_cones));
        if (!is_unimodular(candidate)) continue;
        try {
          if (!is_complete(candidate)) continue;
          if (stellar_subdivide(candidate, sigma) != f) continue;
        } catch (const std::exception&) {
          continue;
        }
        out.emplace_back(rho, sigma);
      }
    }
  }
  return out;
}

}  // namespace slp
