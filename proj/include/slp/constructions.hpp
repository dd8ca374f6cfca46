#pragma once

// Cayley polytopes, dilated simplices, and polytope-level blow-ups along
// vertices and edges (cutting a face at lattice depth k) together with the
// inverse operation and minimality.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slp/fan.hpp"
#include "slp/polytope.hpp"

namespace slp {

class BlowUpError : public std::runtime_error {
 public:
  explicit BlowUpError(const std::string& what) : std::runtime_error(what) {}
};

struct FaceRef {
  enum class Kind { vertex, edge };
  Kind kind;
  int a = -1;  // vertex index
  int b = -1;  // second vertex index (edges only)

  static FaceRef vertex(int v) { return {Kind::vertex, v, -1}; }
  static FaceRef edge(int a, int b) {
    if (a > b) std::swap(a, b);
    return {Kind::edge, a, b};
  }
};

// conv(0, k e_1, ..., k e_d)
inline Polytope k_delta(int d, long k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<Vec> pts = {Vec::zero(d)};
  for (int i = 0; i < d; ++i) pts.push_back(Int(k) * Vec::unit(d, i));
  return Polytope::hull(pts);
}

// conv([0,i] x {(0,0)}, [0,j] x {(s,0)}, [0,k] x {(0,s)})
inline Polytope cayley_segments(long s, long i, long j, long k) {
  if (s < 1 || i < 1 || j < 1 || k < 1)
    throw std::invalid_argument("cayley_segments: parameters must be positive");
  return Polytope::hull({Vec(0, 0, 0), Vec(i, 0, 0), Vec(0, s, 0), Vec(j, s, 0),
                         Vec(0, 0, s), Vec(k, 0, s)});
}

// Divisibility criterion for smoothness of segment-type Cayley polytopes.
inline bool segments_smooth(long s, long i, long j, long k) {
  return (j - i) % s == 0 && (k - i) % s == 0 && (k - j) % s == 0;
}

// conv(P0 x {0}, (P1 + t) x {s}) for strictly isomorphic 2-polytopes.
inline Polytope cayley_pair(const Polytope& P0, const Polytope& P1, long s, const Vec& t) {
  if (P0.dim() != 2 || P1.dim() != 2)
    throw std::invalid_argument("cayley_pair: summands must be 2-polytopes");
  if (s < 1) throw std::invalid_argument("cayley_pair: order must be positive");
  if (normal_fan(P0) != normal_fan(P1))
    throw std::invalid_argument("not strictly isomorphic");
  std::vector<Vec> pts;
  for (const auto& v : P0.vertices()) pts.emplace_back(v[0], v[1], 0);
  for (const auto& v : P1.vertices()) pts.emplace_back(v[0] + t[0], v[1] + t[1], s);
  return Polytope::hull(pts);
}

namespace detail {

// Pair up vertices of two strictly isomorphic polygons by their normal cones.
inline std::vector<std::pair<int, int>> matched_vertices(const Polytope& P0,
                                                         const Polytope& P1) {
  auto cone_key = [](const Polytope& P, int v) {
    std::vector<Vec> key;
    for (int f : P.vertex_facets(v)) key.push_back(P.facets()[f].normal);
    std::sort(key.begin(), key.end());
    return key;
  };
  std::map<std::vector<Vec>, int> lookup;
  for (int w = 0; w < P1.num_vertices(); ++w) lookup[cone_key(P1, w)] = w;
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < P0.num_vertices(); ++v) {
    auto it = lookup.find(cone_key(P0, v));
    if (it == lookup.end()) throw std::logic_error("matched_vertices: fans differ");
    out.emplace_back(v, it->second);
  }
  return out;
}

}  // namespace detail

// Smoothness of a pair-type Cayley polytope, decided by the connecting-edge
// criterion: matched vertex differences must be divisible by s (so every
// level-crossing edge carries exactly s+1 lattice points), and the hull's
// level-crossing edges must join exactly the matched pairs. Independent of
// the vertex-basis test. Returns the constructed polytope when smooth.
inline std::optional<Polytope> try_smooth_cayley_pair(const Polytope& P0, const Polytope& P1,
                                                      long s, const Vec& t) {
  if (normal_fan(P0) != normal_fan(P1))
    throw std::invalid_argument("not strictly isomorphic");
  auto pairs = detail::matched_vertices(P0, P1);
  std::map<Vec, Vec> expected_top;  // bottom vertex -> matched top vertex
  for (auto [v, w] : pairs) {
    const Vec& bv = P0.vertices()[v];
    const Vec& tv = P1.vertices()[w];
    for (int i = 0; i < 2; ++i)
      if ((tv[i] + t[i] - bv[i]) % s != 0) return std::nullopt;
    expected_top[Vec(bv[0], bv[1], 0)] = Vec(tv[0] + t[0], tv[1] + t[1], s);
  }

  Polytope Q = cayley_pair(P0, P1, s, t);
  if (static_cast<size_t>(Q.num_vertices()) != 2 * pairs.size()) return std::nullopt;
  int rising = 0;
  std::map<Vec, int> rising_at;
  for (const auto& e : Q.edges()) {
    const Vec& a = Q.vertices()[e.a];
    const Vec& b = Q.vertices()[e.b];
    if (a[2] == b[2]) continue;
    const Vec& bottom = a[2] == 0 ? a : b;
    const Vec& top = a[2] == 0 ? b : a;
    auto it = expected_top.find(bottom);
    if (it == expected_top.end() || it->second != top) return std::nullopt;
    ++rising;
    rising_at[bottom]++;
  }
  if (rising != static_cast<int>(pairs.size())) return std::nullopt;
  for (const auto& [v, count] : rising_at)
    if (count != 1) return std::nullopt;
  return Q;
}

inline bool pair_smooth(const Polytope& P0, const Polytope& P1, long s, const Vec& t) {
  return try_smooth_cayley_pair(P0, P1, s, t).has_value();
}

// Cut the face F (a vertex or an edge) of a smooth polytope at lattice depth
// k >= 1. The new inequality is (sum of normals through F) . x >= (sum of
// offsets) + k. Throws BlowUpError unless the cut is valid: only F's
// vertices are removed, all cut points are lattice points, and the result is
// smooth with exactly one extra facet of the predicted shape.
inline Polytope blow_up_face(const Polytope& P, const FaceRef& F, long k) {
  if (k < 1) throw BlowUpError("invalid blow-up level");
  if (!P.is_smooth()) throw std::invalid_argument("blow_up_face requires a smooth polytope");

  std::vector<int> face_verts;
  std::vector<int> face_facets;
  if (F.kind == FaceRef::Kind::vertex) {
    face_verts = {F.a};
    face_facets = P.vertex_facets(F.a);
    if (static_cast<int>(face_facets.size()) != P.dim())
      throw BlowUpError("vertex is not simple");
  } else {
    if (P.dim() != 3) throw std::invalid_argument("edge blow-ups require a 3-polytope");
    auto e = P.find_edge(F.a, F.b);
    if (!e) throw std::invalid_argument("face is not an edge of the polytope");
    face_verts = {F.a, F.b};
    face_facets = {P.edges()[*e].f1, P.edges()[*e].f2};
  }

  Vec n_new = Vec::zero(P.dim());
  Int c_new = k;
  for (int f : face_facets) {
    n_new = n_new + P.facets()[f].normal;
    c_new += P.facets()[f].offset;
  }

  auto in_face = [&](int v) {
    return std::find(face_verts.begin(), face_verts.end(), v) != face_verts.end();
  };
  for (int v = 0; v < P.num_vertices(); ++v) {
    Int s = dot(n_new, P.vertices()[v]) - c_new;
    if (in_face(v)) {
      if (s >= 0) throw BlowUpError("face vertex not cut");
    } else if (s <= 0) {
      throw BlowUpError("invalid blow-up level");
    }
  }

  std::vector<Vec> pts;
  for (int v = 0; v < P.num_vertices(); ++v)
    if (!in_face(v)) pts.push_back(P.vertices()[v]);
  int new_count = 0;
  for (const auto& e : P.edges()) {
    bool ain = in_face(e.a), bin = in_face(e.b);
    if (ain == bin) continue;  // fully kept, or the blown-up edge itself
    const Vec& u = P.vertices()[ain ? e.a : e.b];
    const Vec& w = P.vertices()[ain ? e.b : e.a];
    Int d = dot(n_new, w - u);
    Vec x = Vec::zero(P.dim());
    for (int i = 0; i < P.dim(); ++i) {
      Int num = Int(k) * (w[i] - u[i]);
      if (num % d != 0) throw BlowUpError("cut point is not a lattice point");
      x[i] = u[i] + num / d;
    }
    pts.push_back(x);
    ++new_count;
  }

  Polytope Q = Polytope::hull(pts);
  int expect_new = P.dim() == 2 ? 2 : (F.kind == FaceRef::Kind::vertex ? 3 : 4);
  if (new_count != expect_new) throw BlowUpError("unexpected cut combinatorics");
  if (Q.num_vertices() != P.num_vertices() + expect_new - static_cast<int>(face_verts.size()))
    throw BlowUpError("cut vertices collapsed");
  if (Q.num_facets() != P.num_facets() + 1) throw BlowUpError("facet count changed unexpectedly");
  bool found = false;
  for (const auto& f : Q.facets())
    if (f.normal == n_new && f.offset == c_new) {
      found = true;
      if (static_cast<int>(f.cycle.size()) != expect_new)
        throw BlowUpError("new facet has unexpected shape");
    }
  if (!found) throw BlowUpError("new facet missing");
  if (!Q.is_smooth()) throw BlowUpError("result is not smooth");
  return Q;
}

struct BlowDownResult {
  Polytope parent;
  FaceRef face;  // face of the parent that was blown up
  long level;
};

// If facet fi is exceptional (its normal is the sum of the normals of the
// facets adjacent across its edges, per the unimodular stellar subdivision
// rule), undo the blow-up and return the parent. Otherwise nullopt.
inline std::optional<BlowDownResult> blow_down(const Polytope& P, int fi) {
  if (!P.is_smooth()) throw std::invalid_argument("blow_down requires a smooth polytope");
  const Facet& f = P.facets()[fi];

  auto facet_across = [&](int v1, int v2) -> int {
    auto e = P.find_edge(v1, v2);
    if (!e) return -1;
    const EdgeRec& r = P.edges()[*e];
    return r.f1 == fi ? r.f2 : r.f1;
  };

  auto solve3 = [&](const std::vector<int>& fs) -> std::optional<Vec> {
    int d = P.dim();
    Mat m(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = P.facets()[fs[i]].normal[j];
    Int det = m.det();
    if (det == 0) return std::nullopt;
    Mat adj = m.adjugate();
    Vec x = Vec::zero(d);
    for (int i = 0; i < d; ++i) {
      Int num = 0;
      for (int j = 0; j < d; ++j) num += adj.at(i, j) * P.facets()[fs[j]].offset;
      if (num % det != 0) return std::nullopt;
      x[i] = num / det;
    }
    return x;
  };

  auto kept_points = [&]() {
    std::vector<Vec> pts;
    for (int v = 0; v < P.num_vertices(); ++v) {
      bool on = std::find(f.cycle.begin(), f.cycle.end(), v) != f.cycle.end();
      if (!on) pts.push_back(P.vertices()[v]);
    }
    return pts;
  };

  auto try_candidate = [&](const std::vector<int>& gen_facets, const std::vector<Vec>& apexes,
                           FaceRef::Kind kind) -> std::optional<BlowDownResult> {
    Vec sum = Vec::zero(P.dim());
    Int csum = 0;
    for (int g : gen_facets) {
      sum = sum + P.facets()[g].normal;
      csum += P.facets()[g].offset;
    }
    if (sum != f.normal) return std::nullopt;
    Int level = f.offset - csum;
    if (level < 1) return std::nullopt;
    std::vector<Vec> pts = kept_points();
    for (const auto& a : apexes) pts.push_back(a);
    try {
      Polytope Q = Polytope::hull(pts);
      if (!Q.is_smooth()) return std::nullopt;
      if (Q.num_facets() != P.num_facets() - 1) return std::nullopt;
      FaceRef face = FaceRef::vertex(-1);
      if (kind == FaceRef::Kind::vertex) {
        auto v = Q.find_vertex(apexes[0]);
        if (!v) return std::nullopt;
        face = FaceRef::vertex(*v);
      } else {
        auto v1 = Q.find_vertex(apexes[0]);
        auto v2 = Q.find_vertex(apexes[1]);
        if (!v1 || !v2) return std::nullopt;
        if (!Q.find_edge(*v1, *v2)) return std::nullopt;
        face = FaceRef::edge(*v1, *v2);
      }
      Polytope back = blow_up_face(Q, face, level.convert_to<long>());
      if (!(back == P)) return std::nullopt;
      return BlowDownResult{std::move(Q), face, level.convert_to<long>()};
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };

  if (P.dim() == 2) {
    // Neighbouring edges at the two endpoints.
    std::vector<int> nb;
    for (int v : f.cycle)
      for (int g : P.vertex_facets(v))
        if (g != fi) nb.push_back(g);
    if (nb.size() != 2) return std::nullopt;
    auto apex = solve3(nb);
    if (!apex) return std::nullopt;
    if (dot(f.normal, *apex) >= f.offset) return std::nullopt;
    return try_candidate(nb, {*apex}, FaceRef::Kind::vertex);
  }

  const auto& cyc = f.cycle;
  if (cyc.size() == 3) {  // exceptional triangle: inverse vertex blow-up
    std::vector<int> nb;
    for (size_t i = 0; i < 3; ++i) nb.push_back(facet_across(cyc[i], cyc[(i + 1) % 3]));
    auto apex = solve3(nb);
    if (!apex) return std::nullopt;
    if (dot(f.normal, *apex) >= f.offset) return std::nullopt;
    return try_candidate(nb, {*apex}, FaceRef::Kind::vertex);
  }
  if (cyc.size() == 4) {  // exceptional quadrilateral: inverse edge blow-up
    std::array<int, 4> nb{};
    for (size_t i = 0; i < 4; ++i) nb[i] = facet_across(cyc[i], cyc[(i + 1) % 4]);
    for (int pair = 0; pair < 2; ++pair) {
      std::vector<int> gens = {nb[pair], nb[pair + 2]};
      std::vector<int> others = {nb[(pair + 1) % 4], nb[(pair + 3) % 4]};
      auto e1 = solve3({gens[0], gens[1], others[0]});
      auto e2 = solve3({gens[0], gens[1], others[1]});
      if (!e1 || !e2 || *e1 == *e2) continue;
      if (dot(f.normal, *e1) >= f.offset || dot(f.normal, *e2) >= f.offset) continue;
      auto res = try_candidate(gens, {*e1, *e2}, FaceRef::Kind::edge);
      if (res) return res;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

// Minimal: no facet blows down.
inline bool is_minimal(const Polytope& P) {
  for (int fi = 0; fi < P.num_facets(); ++fi)
    if (blow_down(P, fi)) return false;
  return true;
}

}  // namespace slp
