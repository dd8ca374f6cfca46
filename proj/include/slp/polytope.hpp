#pragma once

// Exact convex hulls, facet inequalities and face lattices for
// full-dimensional lattice polytopes of dimension 2 or 3.
//
// All predicates are exact. Coordinates in this project are tiny, so the
// hull and point-enumeration cores run on int64 whenever the input fits a
// conservative magnitude bound, with an identical arbitrary-precision path
// as fallback.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "slp/core.hpp"

namespace slp {

// Thrown by hull() when the input is not full-dimensional.
class LowDimensionalInput : public std::runtime_error {
 public:
  LowDimensionalInput(int affine_dim, int ambient_dim)
      : std::runtime_error("input has affine dimension " + std::to_string(affine_dim) +
                           " inside ambient dimension " + std::to_string(ambient_dim)),
        affine_dim_(affine_dim) {}
  int affine_dim() const { return affine_dim_; }

 private:
  int affine_dim_;
};

// Inner facet inequality: normal . x >= offset on the polytope,
// with a primitive normal and equality exactly on the facet.
struct Facet {
  Vec normal;
  Int offset;
  // Vertex indices in cyclic order. In 3-D the cycle is counterclockwise as
  // seen from inside (cross of consecutive edges points along the inner
  // normal); OFF export reverses it. In 2-D the cycle is the two endpoints.
  std::vector<int> cycle;
};

struct EdgeRec {
  int a, b;    // vertex indices, a < b
  int f1, f2;  // incident facets (f1 < f2); equal only in dimension 2
};

namespace detail {

template <class T>
inline T tabs(const T& a) {
  return a < 0 ? T(-a) : a;
}

template <class T>
inline T tgcd(T a, T b) {
  a = tabs(a);
  b = tabs(b);
  while (b != 0) {
    T r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Affine rank of a point set (exact fraction-free Gaussian elimination).
inline int affine_rank(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  int d = pts[0].dim();
  std::vector<Vec> rows;
  for (size_t i = 1; i < pts.size(); ++i) rows.push_back(pts[i] - pts[0]);
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Vec nr = rows[rank][col] * rows[r] - rows[r][col] * rows[rank];
      rows[r] = nr;
    }
    ++rank;
  }
  return rank;
}

// Strict 2-D convex hull (Andrew monotone chain), counterclockwise,
// collinear points dropped. Input must have affine rank 2.
template <class T>
inline std::vector<std::array<T, 2>> hull2_ccw(std::vector<std::array<T, 2>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto cross = [](const std::array<T, 2>& o, const std::array<T, 2>& a,
                  const std::array<T, 2>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  auto build = [&](auto begin, auto end) {
    std::vector<std::array<T, 2>> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), *it) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  auto lower = build(pts.begin(), pts.end());
  auto upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

// Raw hull-3 output in the scalar type T.
template <class T>
struct RawHull3 {
  struct F {
    std::array<T, 3> normal;
    T offset;
    std::vector<std::array<T, 3>> cycle;
  };
  std::vector<F> facets;
};

template <class T>
inline RawHull3<T> hull3_core(const std::vector<std::array<T, 3>>& pts) {
  const int n = static_cast<int>(pts.size());
  auto sub = [](const std::array<T, 3>& a, const std::array<T, 3>& b) {
    return std::array<T, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  };
  auto cross3 = [](const std::array<T, 3>& a, const std::array<T, 3>& b) {
    return std::array<T, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                            a[0] * b[1] - a[1] * b[0]};
  };
  auto dot3 = [](const std::array<T, 3>& a, const std::array<T, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };

  std::map<std::pair<std::array<T, 3>, T>, std::vector<int>> planes;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::array<T, 3> nrm = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        if (nrm[0] == 0 && nrm[1] == 0 && nrm[2] == 0) continue;
        T g = tgcd(tgcd(tabs(nrm[0]), tabs(nrm[1])), tabs(nrm[2]));
        for (auto& c : nrm) c /= g;
        T c0 = dot3(nrm, pts[i]);
        bool above = false, below = false;
        for (int t = 0; t < n && !(above && below); ++t) {
          T s = dot3(nrm, pts[t]) - c0;
          if (s > 0) above = true;
          if (s < 0) below = true;
        }
        if (above && below) continue;
        if (below) {
          for (auto& c : nrm) c = -c;
          c0 = -c0;
        }
        auto key = std::make_pair(nrm, c0);
        if (planes.count(key)) continue;
        std::vector<int> incident;
        for (int t = 0; t < n; ++t)
          if (dot3(nrm, pts[t]) == c0) incident.push_back(t);
        planes.emplace(std::move(key), std::move(incident));
      }

  RawHull3<T> out;
  for (const auto& [key, incident] : planes) {
    const auto& nrm = key.first;
    int drop = 0;
    for (int i = 1; i < 3; ++i)
      if (tabs(nrm[i]) > tabs(nrm[drop])) drop = i;
    std::vector<std::array<T, 2>> proj;
    std::map<std::array<T, 2>, std::array<T, 3>> lift;
    for (int t : incident) {
      const auto& p = pts[t];
      std::array<T, 2> q = drop == 0   ? std::array<T, 2>{p[1], p[2]}
                           : drop == 1 ? std::array<T, 2>{p[0], p[2]}
                                       : std::array<T, 2>{p[0], p[1]};
      proj.push_back(q);
      lift[q] = p;
    }
    auto cyc2 = hull2_ccw<T>(std::move(proj));
    typename RawHull3<T>::F f;
    f.normal = nrm;
    f.offset = key.second;
    for (const auto& q : cyc2) f.cycle.push_back(lift.at(q));
    // Orient so consecutive edge cross products point along the inner normal.
    auto cr = cross3(sub(f.cycle[1], f.cycle[0]), sub(f.cycle[2], f.cycle[1]));
    if (dot3(cr, nrm) < 0) std::reverse(f.cycle.begin(), f.cycle.end());
    out.facets.push_back(std::move(f));
  }
  return out;
}

inline bool fits_small(const std::vector<Vec>& pts, long bound) {
  for (const auto& p : pts)
    for (int i = 0; i < p.dim(); ++i)
      if (abs_int(p[i]) > bound) return false;
  return true;
}

}  // namespace detail

class Polytope {
 public:
  // Convex hull of the given lattice points. Throws LowDimensionalInput if
  // the points do not span the ambient dimension (2 or 3). Exhaustive
  // supporting-plane search with exact predicates; the scale here never
  // exceeds a few dozen points.
  static Polytope hull(const std::vector<Vec>& points);

  // Empty polytope; only meaningful as a placeholder before assignment.
  Polytope() = default;

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return verts_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<EdgeRec>& edges() const { return edges_; }

  int num_vertices() const { return static_cast<int>(verts_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_facets() const { return static_cast<int>(facets_.size()); }

  bool contains(const Vec& p) const {
    for (const auto& f : facets_)
      if (dot(f.normal, p) < f.offset) return false;
    return true;
  }

  // All lattice points of the polytope, sorted lexicographically.
  std::vector<Vec> lattice_points() const;

  // |P cap Z^d|. In the plane this is Pick's theorem (area + boundary/2 + 1);
  // in 3-D the bounding box is scanned. Cached.
  long num_lattice_points() const;

  // Vertex indices of a 2-polytope in counterclockwise cyclic order.
  std::vector<int> polygon_cycle() const {
    if (dim_ != 2) throw std::logic_error("polygon_cycle requires a 2-polytope");
    std::map<int, std::vector<int>> adj;
    for (const auto& e : edges_) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    std::vector<int> order = {0};
    int prev = -1, cur = 0;
    while (static_cast<int>(order.size()) < num_vertices()) {
      const auto& nb = adj.at(cur);
      int next = (nb[0] == prev) ? nb[1] : nb[0];
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    Int twice_area = 0;
    int n = static_cast<int>(order.size());
    for (int i = 0; i < n; ++i)
      twice_area += cross2(verts_[order[i]], verts_[order[(i + 1) % n]]);
    if (twice_area < 0) std::reverse(order.begin(), order.end());
    return order;
  }

  // (V, E, F); 3-dimensional polytopes only.
  std::array<long, 3> f_vector() const {
    if (dim_ != 3) throw std::logic_error("f_vector requires a 3-polytope");
    return {static_cast<long>(verts_.size()), static_cast<long>(edges_.size()),
            static_cast<long>(facets_.size())};
  }

  std::vector<int> vertex_edges(int vi) const {
    std::vector<int> out;
    for (size_t e = 0; e < edges_.size(); ++e)
      if (edges_[e].a == vi || edges_[e].b == vi) out.push_back(static_cast<int>(e));
    return out;
  }

  std::vector<int> vertex_facets(int vi) const {
    std::vector<int> out;
    for (size_t f = 0; f < facets_.size(); ++f)
      for (int c : facets_[f].cycle)
        if (c == vi) {
          out.push_back(static_cast<int>(f));
          break;
        }
    return out;
  }

  // Primitive directions of the edges leaving vertex vi.
  std::vector<Vec> vertex_edge_dirs(int vi) const {
    std::vector<Vec> dirs;
    for (int e : vertex_edges(vi)) {
      int other = edges_[e].a == vi ? edges_[e].b : edges_[e].a;
      dirs.push_back(primitive_dir(verts_[other] - verts_[vi]));
    }
    return dirs;
  }

  bool is_simple() const {
    if (dim_ == 2) return true;
    for (int v = 0; v < num_vertices(); ++v)
      if (vertex_edges(v).size() != 3) return false;
    return true;
  }

  // Smooth: simple, and at every vertex the primitive edge directions form a
  // lattice basis.
  bool is_smooth() const {
    for (int v = 0; v < num_vertices(); ++v) {
      auto dirs = vertex_edge_dirs(v);
      if (static_cast<int>(dirs.size()) != dim_) return false;
      if (!is_lattice_basis(dirs)) return false;
    }
    return true;
  }

  // Lattice length of edge e: the edge carries length+1 lattice points.
  Int edge_lattice_length(int e) const {
    const EdgeRec& r = edges_.at(e);
    return primitive(verts_[r.b] - verts_[r.a]).second;
  }

  std::optional<int> find_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (size_t e = 0; e < edges_.size(); ++e)
      if (edges_[e].a == a && edges_[e].b == b) return static_cast<int>(e);
    return std::nullopt;
  }

  std::optional<int> find_vertex(const Vec& v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it != verts_.end() && *it == v) return static_cast<int>(it - verts_.begin());
    return std::nullopt;
  }

  // Image under a unimodular affine map (a new hull is built; combinatorics
  // are preserved but indices may change).
  Polytope mapped(const AffineMap& m) const {
    std::vector<Vec> imgs;
    imgs.reserve(verts_.size());
    for (const auto& v : verts_) imgs.push_back(m.apply(v));
    return hull(imgs);
  }

  // Equality of vertex sets (vertices are stored sorted, so this is exact
  // geometric equality).
  friend bool operator==(const Polytope& p, const Polytope& q) {
    return p.dim_ == q.dim_ && p.verts_ == q.verts_;
  }
  friend bool operator<(const Polytope& p, const Polytope& q) {
    if (p.dim_ != q.dim_) return p.dim_ < q.dim_;
    return p.verts_ < q.verts_;
  }

 private:
  static Polytope hull2(std::vector<Vec> pts);
  static Polytope hull3(std::vector<Vec> pts);
  void build_edges_and_validate();

  int dim_ = 0;
  std::vector<Vec> verts_;  // sorted lexicographically
  std::vector<Facet> facets_;
  std::vector<EdgeRec> edges_;
  mutable long cached_points_ = -1;
};

inline Polytope Polytope::hull(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("hull of empty point set");
  int d = points[0].dim();
  for (const auto& p : points)
    if (p.dim() != d) throw std::invalid_argument("mixed dimensions in hull input");
  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  int rank = detail::affine_rank(pts);
  if (rank != d) throw LowDimensionalInput(rank, d);
  return d == 2 ? hull2(std::move(pts)) : hull3(std::move(pts));
}

inline Polytope Polytope::hull2(std::vector<Vec> pts) {
  std::vector<Vec> cyc;
  if (detail::fits_small(pts, 1000000)) {
    std::vector<std::array<long, 2>> small;
    small.reserve(pts.size());
    for (const auto& p : pts)
      small.push_back({p[0].convert_to<long>(), p[1].convert_to<long>()});
    for (const auto& q : detail::hull2_ccw<long>(std::move(small))) cyc.emplace_back(q[0], q[1]);
  } else {
    std::vector<std::array<Int, 2>> big;
    big.reserve(pts.size());
    for (const auto& p : pts) big.push_back({p[0], p[1]});
    for (const auto& q : detail::hull2_ccw<Int>(std::move(big))) cyc.emplace_back(q[0], q[1]);
  }

  Polytope P;
  P.dim_ = 2;
  P.verts_ = cyc;
  std::sort(P.verts_.begin(), P.verts_.end());
  auto index_of = [&](const Vec& v) {
    return static_cast<int>(std::lower_bound(P.verts_.begin(), P.verts_.end(), v) -
                            P.verts_.begin());
  };
  int n = static_cast<int>(cyc.size());
  for (int i = 0; i < n; ++i) {
    const Vec& a = cyc[i];
    const Vec& b = cyc[(i + 1) % n];
    Vec dir = b - a;
    // Interior lies to the left of the CCW edge.
    Vec normal = primitive_dir(Vec(-dir[1], dir[0]));
    Facet f;
    f.normal = normal;
    f.offset = dot(normal, a);
    f.cycle = {index_of(a), index_of(b)};
    P.facets_.push_back(std::move(f));
  }
  std::sort(P.facets_.begin(), P.facets_.end(), [](const Facet& x, const Facet& y) {
    if (x.normal != y.normal) return x.normal < y.normal;
    return x.offset < y.offset;
  });
  P.build_edges_and_validate();
  return P;
}

inline Polytope Polytope::hull3(std::vector<Vec> pts) {
  struct PlainFacet {
    Vec normal;
    Int offset;
    std::vector<Vec> cycle;
  };
  std::vector<PlainFacet> raw;
  // Magnitude bound keeping all int64 intermediates (double cross products
  // and offsets) far below overflow.
  if (detail::fits_small(pts, 100000)) {
    std::vector<std::array<long long, 3>> small;
    small.reserve(pts.size());
    for (const auto& p : pts)
      small.push_back({p[0].convert_to<long long>(), p[1].convert_to<long long>(),
                       p[2].convert_to<long long>()});
    for (auto& f : detail::hull3_core<long long>(small).facets) {
      PlainFacet g;
      g.normal = Vec(f.normal[0], f.normal[1], f.normal[2]);
      g.offset = f.offset;
      for (const auto& q : f.cycle) g.cycle.emplace_back(q[0], q[1], q[2]);
      raw.push_back(std::move(g));
    }
  } else {
    std::vector<std::array<Int, 3>> big;
    big.reserve(pts.size());
    for (const auto& p : pts) big.push_back({p[0], p[1], p[2]});
    for (auto& f : detail::hull3_core<Int>(big).facets) {
      PlainFacet g;
      g.normal = Vec(f.normal[0], f.normal[1], f.normal[2]);
      g.offset = f.offset;
      for (const auto& q : f.cycle) g.cycle.emplace_back(q[0], q[1], q[2]);
      raw.push_back(std::move(g));
    }
  }

  std::set<Vec> vertex_set;
  for (const auto& f : raw)
    for (const auto& v : f.cycle) vertex_set.insert(v);

  Polytope P;
  P.dim_ = 3;
  P.verts_.assign(vertex_set.begin(), vertex_set.end());
  auto index_of = [&](const Vec& v) {
    return static_cast<int>(std::lower_bound(P.verts_.begin(), P.verts_.end(), v) -
                            P.verts_.begin());
  };
  for (auto& f : raw) {
    Facet g;
    g.normal = f.normal;
    g.offset = f.offset;
    for (const auto& v : f.cycle) g.cycle.push_back(index_of(v));
    P.facets_.push_back(std::move(g));
  }
  std::sort(P.facets_.begin(), P.facets_.end(), [](const Facet& x, const Facet& y) {
    if (x.normal != y.normal) return x.normal < y.normal;
    return x.offset < y.offset;
  });
  P.build_edges_and_validate();
  return P;
}

inline void Polytope::build_edges_and_validate() {
  std::map<std::pair<int, int>, std::vector<int>> edge_facets;
  for (size_t f = 0; f < facets_.size(); ++f) {
    const auto& cyc = facets_[f].cycle;
    size_t m = cyc.size();
    if (dim_ == 2) {
      int a = std::min(cyc[0], cyc[1]), b = std::max(cyc[0], cyc[1]);
      edge_facets[{a, b}].push_back(static_cast<int>(f));
      continue;
    }
    for (size_t i = 0; i < m; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % m];
      if (a > b) std::swap(a, b);
      edge_facets[{a, b}].push_back(static_cast<int>(f));
    }
  }
  edges_.clear();
  for (const auto& [ab, fs] : edge_facets) {
    if (dim_ == 3) {
      if (fs.size() != 2) throw std::logic_error("hull: edge not shared by two facets");
      edges_.push_back({ab.first, ab.second, std::min(fs[0], fs[1]), std::max(fs[0], fs[1])});
    } else {
      if (fs.size() != 1) throw std::logic_error("hull: duplicate polygon edge");
      edges_.push_back({ab.first, ab.second, fs[0], fs[0]});
    }
  }
  long V = static_cast<long>(verts_.size());
  long E = static_cast<long>(edges_.size());
  long F = static_cast<long>(facets_.size());
  if (dim_ == 3 && V - E + F != 2) throw std::logic_error("hull: Euler check failed");
  if (dim_ == 2 && (V != E || V != F)) throw std::logic_error("hull: polygon check failed");
}

inline std::vector<Vec> Polytope::lattice_points() const {
  std::array<long, 3> lo{0, 0, 0}, hi{0, 0, 0};
  for (int i = 0; i < dim_; ++i) {
    Int mn = verts_[0][i], mx = verts_[0][i];
    for (const auto& v : verts_) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = mn.convert_to<long>();
    hi[i] = mx.convert_to<long>();
  }
  std::vector<Vec> out;
  if (dim_ == 2) {
    for (long x = lo[0]; x <= hi[0]; ++x)
      for (long y = lo[1]; y <= hi[1]; ++y) {
        Vec p(x, y);
        if (contains(p)) out.push_back(p);
      }
    return out;
  }
  // int64 fast path mirroring contains().
  if (detail::fits_small(verts_, 100000)) {
    std::vector<std::array<long long, 4>> ineqs;  // (n0, n1, n2, offset)
    for (const auto& f : facets_)
      ineqs.push_back({f.normal[0].convert_to<long long>(), f.normal[1].convert_to<long long>(),
                       f.normal[2].convert_to<long long>(), f.offset.convert_to<long long>()});
    for (long x = lo[0]; x <= hi[0]; ++x)
      for (long y = lo[1]; y <= hi[1]; ++y)
        for (long z = lo[2]; z <= hi[2]; ++z) {
          bool ok = true;
          for (const auto& q : ineqs)
            if (q[0] * x + q[1] * y + q[2] * z < q[3]) {
              ok = false;
              break;
            }
          if (ok) out.emplace_back(x, y, z);
        }
    return out;
  }
  for (long x = lo[0]; x <= hi[0]; ++x)
    for (long y = lo[1]; y <= hi[1]; ++y)
      for (long z = lo[2]; z <= hi[2]; ++z) {
        Vec p(x, y, z);
        if (contains(p)) out.push_back(p);
      }
  return out;  // lexicographic by construction
}

inline long Polytope::num_lattice_points() const {
  if (cached_points_ >= 0) return cached_points_;
  if (dim_ == 2) {
    Int twice_area = 0;
    std::vector<int> order = polygon_cycle();
    int n = static_cast<int>(order.size());
    Int boundary = 0;
    for (int i = 0; i < n; ++i) {
      const Vec& a = verts_[order[i]];
      const Vec& b = verts_[order[(i + 1) % n]];
      twice_area += cross2(a, b);
      boundary += primitive(b - a).second;
    }
    twice_area = abs_int(twice_area);
    Int count = (twice_area + boundary) / 2 + 1;
    cached_points_ = count.convert_to<long>();
    return cached_points_;
  }
  cached_points_ = static_cast<long>(lattice_points().size());
  return cached_points_;
}

}  // namespace slp
