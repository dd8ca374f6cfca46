#include <catch2/catch_amalgamated.hpp>

#include "slp/constructions.hpp"
#include "slp/isomorphism.hpp"

using namespace slp;

TEST_CASE("dilated simplices", "[constructions]") {
  CHECK(k_delta(3, 1).num_lattice_points() == 4);
  CHECK(k_delta(3, 2).num_lattice_points() == 10);
  CHECK(k_delta(3, 3).num_lattice_points() == 20);
  CHECK(k_delta(2, 2).num_lattice_points() == 6);
}

TEST_CASE("segment Cayley point counts", "[constructions]") {
  for (long i = 1; i <= 6; ++i)
    for (long j = 1; j <= i; ++j)
      for (long k = 1; k <= j; ++k)
        CHECK(cayley_segments(1, i, j, k).num_lattice_points() == i + j + k + 3);
  CHECK(cayley_segments(2, 3, 1, 1).num_lattice_points() == 16);
  CHECK(cayley_segments(2, 2, 2, 2).num_lattice_points() == 18);
  CHECK(cayley_segments(2, 1, 1, 1).num_lattice_points() == 12);
}

TEST_CASE("segment smoothness criterion", "[constructions]") {
  CHECK(segments_smooth(1, 5, 3, 2));
  CHECK(segments_smooth(2, 3, 1, 1));
  CHECK_FALSE(segments_smooth(2, 2, 1, 1));
}

TEST_CASE("divisibility criterion agrees with the vertex test", "[constructions]") {
  for (long s = 1; s <= 3; ++s)
    for (long i = 1; i <= 5; ++i)
      for (long j = 1; j <= i; ++j)
        for (long k = 1; k <= j; ++k) {
          INFO("s=" << s << " i=" << i << " j=" << j << " k=" << k);
          CHECK(segments_smooth(s, i, j, k) == cayley_segments(s, i, j, k).is_smooth());
        }
}

TEST_CASE("pair Cayley prisms", "[constructions]") {
  Polytope d2 = k_delta(2, 1);
  Polytope prism4 = cayley_pair(d2, d2, 4, Vec(0, 0));
  CHECK(prism4.num_lattice_points() == 15);
  // Every vertical edge carries 5 lattice points.
  for (const auto& e : prism4.edges()) {
    const Vec& a = prism4.vertices()[e.a];
    const Vec& b = prism4.vertices()[e.b];
    if (a[2] != b[2]) CHECK(prism4.edge_lattice_length(*prism4.find_edge(e.a, e.b)) == 4);
  }
}

TEST_CASE("pair Cayley of dilated simplices matches segment Cayley", "[constructions]") {
  Polytope lhs = cayley_pair(k_delta(2, 2), k_delta(2, 2), 2, Vec(0, 0));
  CHECK(lhs.num_lattice_points() == 18);
  CHECK(are_isomorphic(lhs, cayley_segments(2, 2, 2, 2)));
}

TEST_CASE("truncated pyramids are not segment Cayley polytopes", "[constructions]") {
  Polytope pyr = cayley_pair(k_delta(2, 2), k_delta(2, 1), 1, Vec(0, 0));
  CHECK(pyr.is_smooth());
  long n = pyr.num_lattice_points();
  for (long i = 1; i <= 6; ++i)
    for (long j = 1; j <= i; ++j)
      for (long k = 1; k <= j; ++k) {
        Polytope seg = cayley_segments(1, i, j, k);
        if (seg.num_lattice_points() != n) continue;
        CHECK_FALSE(are_isomorphic(pyr, seg));
      }
}

TEST_CASE("strict isomorphism is required for pairs", "[constructions]") {
  Polytope square = Polytope::hull({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 1)});
  CHECK_THROWS(cayley_pair(k_delta(2, 1), square, 1, Vec(0, 0)));
}

TEST_CASE("pair smoothness criterion", "[constructions]") {
  Polytope d2 = k_delta(2, 1);
  Polytope twoD2 = k_delta(2, 2);
  CHECK(pair_smooth(d2, d2, 3, Vec(0, 0)));
  CHECK(pair_smooth(twoD2, d2, 1, Vec(0, 0)));
  CHECK_FALSE(pair_smooth(twoD2, d2, 2, Vec(0, 0)));
}

TEST_CASE("pair criterion agrees with the vertex test", "[constructions]") {
  std::vector<Polytope> polys = {k_delta(2, 1), k_delta(2, 2), k_delta(2, 3)};
  for (const auto& A : polys)
    for (const auto& B : polys)
      for (long s = 1; s <= 3; ++s)
        for (long tx = 0; tx < s; ++tx)
          for (long ty = 0; ty < s; ++ty) {
            Vec t(tx, ty);
            CHECK(pair_smooth(A, B, s, t) == cayley_pair(A, B, s, t).is_smooth());
          }
}

TEST_CASE("blow-ups of 3Delta3 at a vertex", "[constructions]") {
  Polytope P = k_delta(3, 3);
  int v0 = *P.find_vertex(Vec(0, 0, 0));
  Polytope b1 = blow_up_face(P, FaceRef::vertex(v0), 1);
  CHECK(b1.num_lattice_points() == 19);
  Polytope b2 = blow_up_face(P, FaceRef::vertex(v0), 2);
  CHECK(b2.num_lattice_points() == 16);
  CHECK_THROWS_AS(blow_up_face(P, FaceRef::vertex(v0), 3), BlowUpError);
}

TEST_CASE("blow-up bookkeeping", "[constructions]") {
  Polytope P = k_delta(3, 3);
  int v0 = *P.find_vertex(Vec(0, 0, 0));
  Polytope b1 = blow_up_face(P, FaceRef::vertex(v0), 1);
  CHECK(b1.num_vertices() == P.num_vertices() + 2);
  CHECK(b1.num_facets() == P.num_facets() + 1);
  auto [V, E, F] = b1.f_vector();
  CHECK(2 * E == 3 * V);
  CHECK(2 * F == 4 + V);

  // Edge blow-up of a prism.
  Polytope prism = cayley_pair(k_delta(2, 2), k_delta(2, 2), 2, Vec(0, 0));
  auto edge = [&]() -> FaceRef {
    for (const auto& e : prism.edges()) {
      const Vec& a = prism.vertices()[e.a];
      const Vec& b = prism.vertices()[e.b];
      if (a[2] != b[2]) return FaceRef::edge(e.a, e.b);  // a vertical edge
    }
    throw std::logic_error("no vertical edge");
  }();
  Polytope eb = blow_up_face(prism, edge, 1);
  CHECK(eb.num_vertices() == prism.num_vertices() + 2);
  CHECK(eb.num_facets() == prism.num_facets() + 1);
  bool has_quad = false;
  for (const auto& f : eb.facets())
    if (f.cycle.size() == 4) has_quad = true;
  CHECK(has_quad);
}

TEST_CASE("blow-up matches stellar subdivision of the normal fan", "[constructions]") {
  Polytope P = k_delta(3, 3);
  int v0 = *P.find_vertex(Vec(0, 0, 0));
  Polytope b = blow_up_face(P, FaceRef::vertex(v0), 1);
  std::vector<Vec> gens;
  for (int f : P.vertex_facets(v0)) gens.push_back(P.facets()[f].normal);
  Fan expected = stellar_subdivide(normal_fan(P), Cone(gens));
  CHECK(normal_fan(b) == expected);
}

TEST_CASE("blow-down inverts blow-up", "[constructions]") {
  Polytope P = k_delta(3, 3);
  int v0 = *P.find_vertex(Vec(0, 0, 0));
  for (long level = 1; level <= 2; ++level) {
    Polytope b = blow_up_face(P, FaceRef::vertex(v0), level);
    int found = 0;
    for (int fi = 0; fi < b.num_facets(); ++fi) {
      auto res = blow_down(b, fi);
      if (res) {
        ++found;
        CHECK(res->parent == P);
        CHECK(res->level == level);
      }
    }
    CHECK(found == 1);
  }
}

TEST_CASE("edge blow-down round trip", "[constructions]") {
  Polytope prism = cayley_pair(k_delta(2, 2), k_delta(2, 2), 2, Vec(0, 0));
  FaceRef edge = [&]() {
    for (const auto& e : prism.edges()) {
      if (prism.vertices()[e.a][2] != prism.vertices()[e.b][2])
        return FaceRef::edge(e.a, e.b);
    }
    throw std::logic_error("no vertical edge");
  }();
  Polytope eb = blow_up_face(prism, edge, 1);
  int found = 0;
  for (int fi = 0; fi < eb.num_facets(); ++fi) {
    auto res = blow_down(eb, fi);
    if (res && res->parent == prism) ++found;
  }
  CHECK(found >= 1);
}

TEST_CASE("minimality", "[constructions]") {
  CHECK(is_minimal(k_delta(3, 1)));
  CHECK(is_minimal(k_delta(3, 2)));
  Polytope P = k_delta(3, 3);
  Polytope b = blow_up_face(P, FaceRef::vertex(*P.find_vertex(Vec(0, 0, 0))), 1);
  CHECK_FALSE(is_minimal(b));
}

TEST_CASE("the order-2 segment Cayley polytope is an edge blow-up of 3Delta3",
          "[constructions]") {
  // Cay^2(3D1, D1, D1) is the depth-1 cut along an edge of 3Delta3 (the
  // blow-up of P^3 along a line), so it is not minimal.
  Polytope P = cayley_segments(2, 3, 1, 1);
  int found = 0;
  for (int fi = 0; fi < P.num_facets(); ++fi) {
    auto res = blow_down(P, fi);
    if (res) {
      ++found;
      CHECK(res->parent == k_delta(3, 3));
      CHECK(res->face.kind == FaceRef::Kind::edge);
      CHECK(res->level == 1);
    }
  }
  CHECK(found == 1);
}

TEST_CASE("blow-up of 3Delta3 at four vertices", "[constructions]") {
  Polytope P = k_delta(3, 3);
  for (const Vec& v : {Vec(0, 0, 0), Vec(3, 0, 0), Vec(0, 3, 0), Vec(0, 0, 3)})
    P = blow_up_face(P, FaceRef::vertex(*P.find_vertex(v)), 1);
  CHECK(P.num_lattice_points() == 16);
  CHECK(P.num_vertices() == 12);
  CHECK(P.num_facets() == 8);
  auto cands = blowdown_candidates(normal_fan(P));
  CHECK(cands.size() == 4);
}

TEST_CASE("the Cayley hexagon-pair polytope is a double vertex blow-up", "[constructions]") {
  // Hull of two copies of the invariant hexagon placed in the xy- and
  // xz-planes, sharing the unit edge along the x-axis.
  std::vector<Vec> pts;
  for (const Vec& v :
       {Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 2), Vec(2, 1), Vec(2, 2)}) {
    pts.emplace_back(v[0], v[1], 0);
    pts.emplace_back(v[0], 0, v[1]);
  }
  Polytope two_hex = Polytope::hull(pts);
  CHECK(two_hex.num_lattice_points() == 14);
  CHECK(two_hex.num_vertices() == 10);
  CHECK(two_hex.num_facets() == 7);

  Polytope Q = cayley_segments(2, 3, 1, 1);
  Q = blow_up_face(Q, FaceRef::vertex(*Q.find_vertex(Vec(0, 0, 0))), 1);
  Q = blow_up_face(Q, FaceRef::vertex(*Q.find_vertex(Vec(3, 0, 0))), 1);
  CHECK(Q.num_lattice_points() == 14);
  CHECK(are_isomorphic(two_hex, Q));
}

TEST_CASE("two-dimensional corner chops", "[constructions]") {
  Polytope P = k_delta(2, 2);
  Polytope chopped = blow_up_face(P, FaceRef::vertex(*P.find_vertex(Vec(2, 0))), 1);
  CHECK(chopped.num_vertices() == 4);
  CHECK(chopped.is_smooth());
  CHECK(chopped.num_lattice_points() == 5);
  int found = 0;
  for (int fi = 0; fi < chopped.num_facets(); ++fi) {
    auto res = blow_down(chopped, fi);
    if (res && res->parent == P) ++found;
  }
  CHECK(found == 1);
  // The unit square is minimal.
  Polytope square = Polytope::hull({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 1)});
  CHECK(is_minimal(square));
}
