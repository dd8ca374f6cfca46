#pragma once

// Triangulation labels of S^2: the word prod m^{v_m} recording v_m facets
// with m edges (equivalently vertex degrees of the dual triangulation),
// label arithmetic for blow-ups, exhaustive generation of small
// triangulations, and the facet-content lower bound used for pruning.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "slp/polytope.hpp"

namespace slp {

class Label {
 public:
  Label() = default;
  explicit Label(std::map<int, int> counts) : v_(std::move(counts)) {
    for (auto it = v_.begin(); it != v_.end();) {
      if (it->second == 0)
        it = v_.erase(it);
      else
        ++it;
    }
  }
  static Label from_bases(const std::vector<int>& bases) {
    std::map<int, int> c;
    for (int b : bases) c[b]++;
    return Label(std::move(c));
  }

  const std::map<int, int>& counts() const { return v_; }
  int count(int m) const {
    auto it = v_.find(m);
    return it == v_.end() ? 0 : it->second;
  }
  int num_facets() const {
    int s = 0;
    for (auto [m, v] : v_) s += v;
    return s;
  }
  int max_base() const { return v_.empty() ? 0 : v_.rbegin()->first; }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (auto [m, v] : v_) {
      if (!first) os << ' ';
      os << m << '^' << v;
      first = false;
    }
    return os.str();
  }
  static Label parse(const std::string& text) {
    std::map<int, int> c;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
      auto caret = tok.find('^');
      if (caret == std::string::npos) throw std::invalid_argument("bad label token: " + tok);
      c[std::stoi(tok.substr(0, caret))] += std::stoi(tok.substr(caret + 1));
    }
    return Label(std::move(c));
  }

  friend bool operator==(const Label& a, const Label& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
  friend bool operator<(const Label& a, const Label& b) { return a.v_ < b.v_; }

 private:
  std::map<int, int> v_;
};

// Multiset of facet edge-counts of a simple 3-polytope.
inline Label label_of(const Polytope& P) {
  if (P.dim() != 3 || !P.is_simple())
    throw std::invalid_argument("labels require a simple 3-polytope");
  std::vector<int> bases;
  for (const auto& f : P.facets()) bases.push_back(static_cast<int>(f.cycle.size()));
  return Label::from_bases(bases);
}

namespace detail {

// Enumerate all distinct sub-multisets of size r of the label's bases and
// apply: chosen bases are incremented, then `appended` is appended.
inline std::set<Label> raise_bases(const Label& L, int r, int appended) {
  std::vector<std::pair<int, int>> avail(L.counts().begin(), L.counts().end());
  std::set<Label> out;
  std::vector<int> take(avail.size(), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (left == 0) {
      std::map<int, int> c = L.counts();
      for (size_t i = 0; i < avail.size(); ++i) {
        if (!take[i]) continue;
        c[avail[i].first] -= take[i];
        c[avail[i].first + 1] += take[i];
      }
      c[appended] += 1;
      out.insert(Label(std::move(c)));
      return;
    }
    if (idx == static_cast<int>(avail.size())) return;
    int maxtake = std::min(left, avail[idx].second);
    for (int t = 0; t <= maxtake; ++t) {
      take[idx] = t;
      rec(idx + 1, left - t);
    }
    take[idx] = 0;
  };
  rec(0, r);
  return out;
}

}  // namespace detail

// Labels reachable by a vertex blow-up: append a '3' and raise 3 bases.
inline std::set<Label> vertex_blowup_labels(const Label& L) {
  return detail::raise_bases(L, 3, 3);
}

// Labels reachable by an edge blow-up: append a '4' and raise 2 bases.
inline std::set<Label> edge_blowup_labels(const Label& L) {
  return detail::raise_bases(L, 2, 4);
}

// --- Combinatorial triangulations of S^2 -----------------------------------

// A triangulation given by its faces on vertex set {0..n-1}.
struct Triangulation {
  int n = 0;
  std::vector<std::array<int, 3>> faces;  // each sorted; list sorted

  void normalize() {
    for (auto& f : faces) std::sort(f.begin(), f.end());
    std::sort(faces.begin(), faces.end());
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(n, 0);
    std::set<std::pair<int, int>> edges;
    for (const auto& f : faces)
      for (int i = 0; i < 3; ++i) {
        int a = f[i], b = f[(i + 1) % 3];
        if (a > b) std::swap(a, b);
        edges.insert({a, b});
      }
    for (auto [a, b] : edges) {
      deg[a]++;
      deg[b]++;
    }
    return deg;
  }

  Label label() const { return Label::from_bases(degrees()); }

  std::set<std::pair<int, int>> edge_set() const {
    std::set<std::pair<int, int>> edges;
    for (const auto& f : faces)
      for (int i = 0; i < 3; ++i) {
        int a = f[i], b = f[(i + 1) % 3];
        if (a > b) std::swap(a, b);
        edges.insert({a, b});
      }
    return edges;
  }

  // Cyclic order of the neighbours of v (the link cycle).
  std::vector<int> link_cycle(int v) const {
    std::map<int, std::vector<int>> adj;  // neighbour -> its two cycle mates
    for (const auto& f : faces) {
      if (f[0] != v && f[1] != v && f[2] != v) continue;
      std::vector<int> rest;
      for (int x : f)
        if (x != v) rest.push_back(x);
      adj[rest[0]].push_back(rest[1]);
      adj[rest[1]].push_back(rest[0]);
    }
    std::vector<int> cycle;
    int start = adj.begin()->first;
    int prev = -1, cur = start;
    do {
      cycle.push_back(cur);
      const auto& nb = adj.at(cur);
      int next = (nb[0] == prev) ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    } while (cur != start);
    return cycle;
  }

  // Canonical face list: lexicographic minimum over all vertex relabelings
  // that respect the degree partition.
  std::vector<std::array<int, 3>> canonical_key() const {
    std::vector<int> deg = degrees();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (deg[a] != deg[b]) return deg[a] > deg[b];
      return a < b;
    });
    // Blocks of equal degree.
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && deg[order[j]] == deg[order[i]]) ++j;
      blocks.emplace_back(i, j);
      i = j;
    }
    std::vector<std::array<int, 3>> best;
    std::vector<int> perm = order;
    auto consider = [&]() {
      std::vector<int> pos(n);
      for (int i = 0; i < n; ++i) pos[perm[i]] = i;
      std::vector<std::array<int, 3>> relabeled;
      relabeled.reserve(faces.size());
      for (const auto& f : faces) {
        std::array<int, 3> g{pos[f[0]], pos[f[1]], pos[f[2]]};
        std::sort(g.begin(), g.end());
        relabeled.push_back(g);
      }
      std::sort(relabeled.begin(), relabeled.end());
      if (best.empty() || relabeled < best) best = std::move(relabeled);
    };
    std::function<void(size_t)> rec = [&](size_t bi) {
      if (bi == blocks.size()) {
        consider();
        return;
      }
      auto [lo, hi] = blocks[bi];
      std::sort(perm.begin() + lo, perm.begin() + hi);
      do {
        rec(bi + 1);
      } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
    };
    rec(0);
    return best;
  }
};

inline Triangulation tetrahedron_triangulation() {
  Triangulation t;
  t.n = 4;
  t.faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return t;
}

// Split vertex v along the link positions i < j: v keeps the arc c[i..j],
// the new vertex keeps the complementary arc, and both stay adjacent to
// c[i], c[j] and to each other. Every triangulation with more than four
// vertices arises this way from a smaller one.
inline Triangulation split_vertex(const Triangulation& T, int v, int i, int j) {
  std::vector<int> cycle = T.link_cycle(v);
  int k = static_cast<int>(cycle.size());
  int w = T.n;
  std::vector<int> arcA, arcB;
  for (int t = i;; t = (t + 1) % k) {
    arcA.push_back(cycle[t]);
    if (t == j) break;
  }
  for (int t = j;; t = (t + 1) % k) {
    arcB.push_back(cycle[t]);
    if (t == i) break;
  }
  Triangulation R;
  R.n = T.n + 1;
  for (const auto& f : T.faces)
    if (f[0] != v && f[1] != v && f[2] != v) R.faces.push_back(f);
  for (size_t t = 0; t + 1 < arcA.size(); ++t)
    R.faces.push_back({v, arcA[t], arcA[t + 1]});
  for (size_t t = 0; t + 1 < arcB.size(); ++t)
    R.faces.push_back({w, arcB[t], arcB[t + 1]});
  R.faces.push_back({v, w, cycle[i]});
  R.faces.push_back({v, w, cycle[j]});
  R.normalize();
  return R;
}

// All combinatorial triangulations of S^2 with exactly n vertices, up to
// isomorphism, generated by recursive vertex splitting from the
// tetrahedron.
inline const std::vector<Triangulation>& triangulations_with(int n) {
  static std::map<int, std::vector<Triangulation>> cache;
  if (n < 4 || n > 8) throw std::invalid_argument("triangulation generation supports 4..8 vertices");
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 4) {
    cache[4] = {tetrahedron_triangulation()};
    return cache[4];
  }
  const auto& smaller = triangulations_with(n - 1);
  std::set<std::vector<std::array<int, 3>>> seen;
  std::vector<Triangulation> out;
  for (const auto& T : smaller) {
    for (int v = 0; v < T.n; ++v) {
      int k = static_cast<int>(T.link_cycle(v).size());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          Triangulation R = split_vertex(T, v, i, j);
          auto key = R.canonical_key();
          if (seen.insert(key).second) {
            Triangulation canon;
            canon.n = R.n;
            canon.faces = key;
            out.push_back(std::move(canon));
          }
        }
    }
  }
  cache[n] = std::move(out);
  return cache[n];
}

// Labels of all triangulations of S^2 with at most max_facets vertices
// (dually: facet-count words of simple 3-polytopes with that many facets).
inline std::set<Label> realizable_labels(int max_facets) {
  if (max_facets > 8) throw std::invalid_argument("supported up to 8 facets");
  std::set<Label> out;
  for (int n = 4; n <= max_facets; ++n)
    for (const auto& T : triangulations_with(n)) out.insert(T.label());
  return out;
}

inline bool label_realizable(const Label& L) {
  int F = L.num_facets();
  if (F < 4 || F > 8) return false;
  for (const auto& T : triangulations_with(F))
    if (T.label() == L) return true;
  return false;
}

// Minimal number of non-vertex lattice points a smooth m-gon facet must
// carry (from the two-dimensional classification: the smallest smooth
// pentagon has 8 lattice points, the smallest hexagon 7, and no smooth
// heptagon has fewer than 13).
inline int facet_extra_points(int m) {
  switch (m) {
    case 3:
    case 4:
      return 0;
    case 5:
      return 3;
    case 6:
      return 1;
    case 7:
      return 6;
    default:
      throw std::domain_error("no facet bound for " + std::to_string(m) + "-gons");
  }
}

// Lower bound on |P cap Z^3| for any smooth 3-polytope whose triangulation
// has label L: vertex count plus per-facet minima, discounting one point for
// every pair of pentagons that can share a long edge (at most two long edges
// per pentagon), minimized over all realizable triangulations with label L.
inline int facet_point_lower_bound(const Label& L) {
  int F = L.num_facets();
  if (!label_realizable(L)) throw std::invalid_argument("label is not realizable: " + L.str());
  int V = 2 * (F - 2);
  int extras = 0;
  for (auto [m, v] : L.counts()) extras += v * facet_extra_points(m);

  int best = -1;
  for (const auto& T : triangulations_with(F)) {
    if (T.label() != L) continue;
    std::vector<int> deg = T.degrees();
    // Long-edge-capable facets: pentagons (and heptagons, conservatively).
    std::vector<int> capable;
    for (int v = 0; v < T.n; ++v)
      if (deg[v] == 5 || deg[v] == 7) capable.push_back(v);
    std::vector<std::pair<int, int>> shared;
    auto edges = T.edge_set();
    for (size_t a = 0; a < capable.size(); ++a)
      for (size_t b = a + 1; b < capable.size(); ++b) {
        int x = capable[a], y = capable[b];
        if (edges.count({std::min(x, y), std::max(x, y)})) shared.emplace_back(x, y);
      }
    int max_saving = 0;
    int nedges = static_cast<int>(shared.size());
    for (int mask = 0; mask < (1 << nedges); ++mask) {
      std::map<int, int> used;
      bool ok = true;
      int cnt = 0;
      for (int e = 0; e < nedges; ++e) {
        if (!(mask >> e & 1)) continue;
        ++cnt;
        if (++used[shared[e].first] > 2 || ++used[shared[e].second] > 2) {
          ok = false;
          break;
        }
      }
      if (ok) max_saving = std::max(max_saving, cnt);
    }
    int bound = V + extras - max_saving;
    if (best < 0 || bound < best) best = bound;
  }
  return best;
}

}  // namespace slp
