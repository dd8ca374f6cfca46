#pragma once

// Classification of smooth 2-polytopes with a bounded number of lattice
// points, up to lattice isomorphism. Primary method: enumerate minimal
// smooth polygons (dilated simplices and smooth trapezoids) and close under
// corner chops. Certified against an independent boundary-walk search over a
// box.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "slp/constructions.hpp"
#include "slp/fan.hpp"
#include "slp/isomorphism.hpp"

namespace slp {

namespace detail {

// Rays of a complete 2-D fan in counterclockwise cyclic order, starting from
// the smallest direction in the upper half plane.
inline std::vector<Vec> rays_ccw(const Fan& f) {
  std::vector<Vec> rays = f.rays();
  auto half = [](const Vec& v) {
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;  // angle in [0,pi) first
  };
  std::sort(rays.begin(), rays.end(), [&](const Vec& a, const Vec& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return cross2(a, b) > 0;
  });
  return rays;
}

}  // namespace detail

// The cyclic word (a_i) with r_{i-1} + r_{i+1} = a_i r_i over the rays of a
// complete unimodular 2-D fan; it classifies the fan up to lattice
// equivalence.
inline std::vector<int> fan_selfintersection_cycle(const Fan& f) {
  std::vector<Vec> rays = detail::rays_ccw(f);
  int n = static_cast<int>(rays.size());
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) {
    const Vec& prev = rays[(i + n - 1) % n];
    const Vec& cur = rays[i];
    const Vec& next = rays[(i + 1) % n];
    Vec sum = prev + next;
    // sum = a * cur for unimodular complete fans
    Int a;
    if (cur[0] != 0) {
      if (sum[0] % cur[0] != 0) throw std::logic_error("fan is not unimodular");
      a = sum[0] / cur[0];
    } else {
      if (sum[1] % cur[1] != 0) throw std::logic_error("fan is not unimodular");
      a = sum[1] / cur[1];
    }
    if (!(a * cur == sum)) throw std::logic_error("fan is not unimodular");
    cyc[i] = a.convert_to<int>();
  }
  return cyc;
}

// Human-readable class of a smooth complete 2-D fan.
inline std::string fan_class_name(const Fan& f) {
  auto cyc = fan_selfintersection_cycle(f);
  int n = static_cast<int>(cyc.size());
  if (n == 3) return "P2";
  if (n == 4) {
    int r = 0;
    for (int a : cyc) r = std::max(r, std::abs(a));
    return "F" + std::to_string(r);
  }
  return "Bl" + std::to_string(n - 3) + "(P2)";
}

struct Polygon2Class {
  Polytope rep;  // positioned at its canonical form
  CanonicalForm canon;
  long num_points = 0;
  int num_vertices = 0;
  bool minimal = false;
  std::string fan_class;
};

namespace detail {

// Minimal smooth polygons with at most `budget` lattice points: dilated
// 2-simplices and smooth trapezoids conv((0,0),(a,0),(0,s),(b,s)) with
// s | a-b (includes rectangles).
inline std::vector<Polytope> minimal_polygon_seeds(long budget) {
  std::vector<Polytope> out;
  for (long k = 1; (k + 1) * (k + 2) / 2 <= budget; ++k) out.push_back(k_delta(2, k));
  for (long s = 1; 2 * s + 2 <= budget; ++s)
    for (long a = 1; (s + 1) * (a + 2) / 2 <= budget; ++a)
      for (long b = 1; b <= a && (s + 1) * (a + b + 2) / 2 <= budget; ++b) {
        if ((a - b) % s != 0) continue;
        out.push_back(Polytope::hull({Vec(0, 0), Vec(a, 0), Vec(0, s), Vec(b, s)}));
      }
  return out;
}

inline std::map<CanonicalForm, Polytope> chop_closure(long max_points, long seed_budget) {
  // Chops commute coordinate-wise, so exact vertex-set dedup collapses the
  // per-seed trees; canonical forms are computed only for the final output.
  std::set<Polytope> seen;
  std::deque<Polytope> work;
  auto push = [&](const Polytope& P) {
    if (seen.insert(P).second) work.push_back(P);
  };
  for (const auto& seed : minimal_polygon_seeds(seed_budget)) push(seed);
  while (!work.empty()) {
    Polytope P = work.front();
    work.pop_front();
    for (int v = 0; v < P.num_vertices(); ++v) {
      for (long k = 1;; ++k) {
        try {
          push(blow_up_face(P, FaceRef::vertex(v), k));
        } catch (const BlowUpError&) {
          break;
        }
      }
    }
  }
  std::map<CanonicalForm, Polytope> out;
  for (const auto& P : seen)
    if (P.num_lattice_points() <= max_points) out.emplace(canonical_form(P), P);
  return out;
}

}  // namespace detail

// Independent oracle: enumerate smooth polygons directly as closed
// counterclockwise boundary walks with unimodular corners, pinned at the
// origin with the first edge along the x-axis, inside the box [0,B]^2.
inline std::set<CanonicalForm> box_walk_smooth_polygons(long max_points, long box) {
  std::set<CanonicalForm> out;
  struct State {
    std::vector<std::pair<long, long>> verts;
    std::pair<long, long> dir;
    long boundary = 0;
  };
  auto in_box = [&](long x, long y) { return 0 <= x && x <= box && 0 <= y && y <= box; };
  // Edge directions of a counterclockwise convex polygon are strictly
  // increasing in angle; with the first direction pinned to (1,0) this
  // bounds the walk to a single turn.
  auto angle_less = [](std::pair<long, long> a, std::pair<long, long> b) {
    auto half = [](std::pair<long, long> v) {
      return (v.second > 0 || (v.second == 0 && v.first > 0)) ? 0 : 1;
    };
    if (half(a) != half(b)) return half(a) < half(b);
    return a.first * b.second - a.second * b.first > 0;
  };

  std::function<void(State&)> dfs = [&](State& st) {
    auto [cx, cy] = st.verts.back();
    auto [dx, dy] = st.dir;
    // Next corner: directions d' with det(d, d') = 1; d' = d0 + t*d.
    long px = 0, py = 0;
    {
      // Extended gcd on (dx, dy); the direction is primitive, so gcd = 1.
      long a = dx, b = dy, x0 = 1, y0 = 0, x1 = 0, y1 = 1;
      while (b != 0) {
        long q = a / b;
        long a2 = a - q * b, x2 = x0 - q * x1, y2 = y0 - q * y1;
        a = b;
        x0 = x1;
        y0 = y1;
        b = a2;
        x1 = x2;
        y1 = y2;
      }
      // a = dx*x0 + dy*y0 = +-1; want dx*y' - dy*x' = 1.
      px = -y0 * a;
      py = x0 * a;
    }
    for (long t = -4 * box; t <= 4 * box; ++t) {
      long ex = px + t * dx, ey = py + t * dy;
      if (std::abs(ex) > box || std::abs(ey) > box) continue;
      if (!angle_less({dx, dy}, {ex, ey})) continue;
      for (long len = 1;; ++len) {
        long nx = cx + len * ex, ny = cy + len * ey;
        if (!in_box(nx, ny)) break;
        if (st.boundary + len > max_points) break;
        if (nx == 0 && ny == 0) {
          // Closing edge: corner at the origin back to the first direction.
          if (ex * 0 - ey * 1 == 1 && st.verts.size() >= 3) {
            std::vector<Vec> vs;
            for (auto [x, y] : st.verts) vs.emplace_back(x, y);
            try {
              Polytope P = Polytope::hull(vs);
              if (P.num_vertices() == static_cast<int>(vs.size()) && P.is_smooth() &&
                  P.num_lattice_points() <= max_points)
                out.insert(canonical_form(P));
            } catch (const std::exception&) {
            }
          }
          break;
        }
        State next = st;
        next.verts.emplace_back(nx, ny);
        next.dir = {ex, ey};
        next.boundary += len;
        dfs(next);
      }
    }
  };

  State st;
  st.verts.push_back({0, 0});
  for (long len = 1; len <= std::min(box, max_points); ++len) {
    State next;
    next.verts = {{0, 0}, {len, 0}};
    next.dir = {1, 0};
    next.boundary = len;
    dfs(next);
  }
  return out;
}

// All smooth 2-polytopes with at most max_points lattice points up to
// isomorphism. Seed budgets are raised until the chop closure stabilizes;
// for budgets within the certified range the box-walk oracle must agree
// exactly or this throws.
inline std::vector<Polygon2Class> enumerate_smooth_polygons(long max_points,
                                                            bool cross_check = true) {
  if (max_points < 3) throw std::invalid_argument("max_points must be at least 3");
  std::map<CanonicalForm, Polytope> result;
  long seed_budget = std::max<long>(max_points, 13);
  std::map<CanonicalForm, Polytope> prev = detail::chop_closure(max_points, seed_budget);
  for (int round = 0; round < 12; ++round) {
    seed_budget += 12;
    std::map<CanonicalForm, Polytope> cur = detail::chop_closure(max_points, seed_budget);
    if (cur.size() == prev.size() &&
        std::equal(cur.begin(), cur.end(), prev.begin(),
                   [](const auto& a, const auto& b) { return a.first == b.first; })) {
      result = std::move(cur);
      break;
    }
    prev = std::move(cur);
    if (round == 11) throw std::logic_error("2-D chop closure did not stabilize");
  }

  if (cross_check && max_points <= 13) {
    std::set<CanonicalForm> oracle = box_walk_smooth_polygons(max_points, 13);
    std::set<CanonicalForm> ours;
    for (const auto& [c, P] : result) ours.insert(c);
    if (oracle != ours)
      throw std::logic_error("2-D enumeration methods disagree: closure " +
                             std::to_string(ours.size()) + " vs box search " +
                             std::to_string(oracle.size()));
  }

  std::vector<Polygon2Class> out;
  for (const auto& [c, P] : result) {
    Polygon2Class e;
    e.rep = Polytope::hull(c.points);
    e.canon = c;
    e.num_points = P.num_lattice_points();
    e.num_vertices = P.num_vertices();
    e.minimal = is_minimal(P);
    e.fan_class = fan_class_name(normal_fan(P));
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const Polygon2Class& a, const Polygon2Class& b) {
    if (a.num_points != b.num_points) return a.num_points < b.num_points;
    return a.canon < b.canon;
  });
  return out;
}

// All polygons with normal fan exactly `fan` (given by a presentation whose
// rays include (1,0) and (0,1) spanning a cone), with at most max_points
// lattice points, pinned by their vertex dual to that cone. Vertices of
// such polygons are automatically lattice points.
inline std::vector<Polytope> polygons_with_fan(const Fan& fan, long max_points) {
  std::vector<Vec> rays = detail::rays_ccw(fan);
  int n = static_cast<int>(rays.size());
  int i10 = -1, i01 = -1;
  for (int i = 0; i < n; ++i) {
    if (rays[i] == Vec(1, 0)) i10 = i;
    if (rays[i] == Vec(0, 1)) i01 = i;
  }
  if (i10 < 0 || i01 < 0)
    throw std::invalid_argument("fan presentation must contain the rays (1,0) and (0,1)");

  std::vector<Int> offset(n, 0);
  std::vector<Polytope> out;
  std::vector<int> free_idx;
  for (int i = 0; i < n; ++i)
    if (i != i10 && i != i01) free_idx.push_back(i);

  auto vertex_at = [&](int i) -> Vec {
    const Vec& a = rays[i];
    const Vec& b = rays[(i + 1) % n];
    Int det = cross2(a, b);  // +-1 for adjacent rays of a unimodular fan
    Int ca = offset[i], cb = offset[(i + 1) % n];
    // solve a.x = ca, b.x = cb
    Int x = (ca * b[1] - cb * a[1]) / det;
    Int y = (cb * a[0] - ca * b[0]) / det;
    return Vec(x, y);
  };

  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == free_idx.size()) {
      std::vector<Vec> verts;
      for (int i = 0; i < n; ++i) verts.push_back(vertex_at(i));
      std::set<Vec> distinct(verts.begin(), verts.end());
      if (static_cast<int>(distinct.size()) != n) return;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (j == i || j == (i + 1) % n) continue;
          if (dot(rays[j], verts[i]) <= offset[j]) return;  // facet j degenerates
        }
      Polytope P = Polytope::hull(verts);
      if (P.num_lattice_points() > max_points) return;
      out.push_back(std::move(P));
      return;
    }
    for (long h = 1; h <= max_points + 1; ++h) {
      offset[free_idx[idx]] = -h;
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace slp
