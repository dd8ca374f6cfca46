#include <catch2/catch_amalgamated.hpp>

#include "slp/polytope.hpp"

using namespace slp;

namespace {

std::vector<Vec> cube_corners() {
  std::vector<Vec> pts;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) pts.emplace_back(x, y, z);
  return pts;
}

Polytope simplex3(long k = 1) {
  return Polytope::hull({Vec(0, 0, 0), Vec(k, 0, 0), Vec(0, k, 0), Vec(0, 0, k)});
}

}  // namespace

TEST_CASE("cube hull combinatorics", "[geometry]") {
  Polytope cube = Polytope::hull(cube_corners());
  auto fv = cube.f_vector();
  CHECK(fv[0] == 8);
  CHECK(fv[1] == 12);
  CHECK(fv[2] == 6);
  CHECK(cube.is_simple());
  CHECK(cube.is_smooth());
}

TEST_CASE("hull drops duplicates and interior points", "[geometry]") {
  std::vector<Vec> pts = {Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0),
                          Vec(0, 0, 1), Vec(0, 0, 0)};
  Polytope P = Polytope::hull(pts);
  CHECK(P.num_vertices() == 4);

  // Midpoints of edges and facet centroids must not appear as vertices.
  Polytope Q = Polytope::hull({Vec(0, 0, 0), Vec(2, 0, 0), Vec(0, 2, 0), Vec(0, 0, 2),
                               Vec(1, 0, 0), Vec(1, 1, 0)});
  CHECK(Q.num_vertices() == 4);
}

TEST_CASE("lower-dimensional input is rejected", "[geometry]") {
  try {
    Polytope::hull({Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0)});
    FAIL("expected LowDimensionalInput");
  } catch (const LowDimensionalInput& e) {
    CHECK(e.affine_dim() == 2);
  }
}

TEST_CASE("lattice point counts", "[geometry]") {
  CHECK(simplex3(2).num_lattice_points() == 10);

  Polytope hexagon = Polytope::hull(
      {Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 2), Vec(2, 1), Vec(2, 2)});
  CHECK(hexagon.num_lattice_points() == 7);
  CHECK(hexagon.num_vertices() == 6);
}

TEST_CASE("lattice points are sorted and exactly the contained points", "[geometry]") {
  Polytope P = simplex3(3);
  auto pts = P.lattice_points();
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(pts.size() == 20);  // C(6,3)
  for (const auto& p : pts) CHECK(P.contains(p));
  CHECK_FALSE(P.contains(Vec(2, 2, 2)));
  CHECK_FALSE(P.contains(Vec(-1, 0, 0)));
}

TEST_CASE("hull is idempotent on lattice points", "[geometry]") {
  for (const Polytope& P :
       {simplex3(1), simplex3(3), Polytope::hull(cube_corners())}) {
    Polytope Q = Polytope::hull(P.lattice_points());
    CHECK(P == Q);
  }
}

TEST_CASE("edge lattice lengths", "[geometry]") {
  Polytope P = Polytope::hull({Vec(0, 0, 0), Vec(0, 0, 4), Vec(2, 2, 0), Vec(3, 0, 0)});
  auto e1 = P.find_edge(*P.find_vertex(Vec(0, 0, 0)), *P.find_vertex(Vec(0, 0, 4)));
  REQUIRE(e1.has_value());
  CHECK(P.edge_lattice_length(*e1) == 4);
  auto e2 = P.find_edge(*P.find_vertex(Vec(0, 0, 0)), *P.find_vertex(Vec(2, 2, 0)));
  REQUIRE(e2.has_value());
  CHECK(P.edge_lattice_length(*e2) == 2);
}

TEST_CASE("simplicity", "[geometry]") {
  CHECK(simplex3().is_simple());
  Polytope pyramid = Polytope::hull(
      {Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(1, 1, 0), Vec(0, 0, 1)});
  CHECK_FALSE(pyramid.is_simple());
  CHECK_FALSE(pyramid.is_smooth());
}

TEST_CASE("smoothness in the plane", "[geometry]") {
  Polytope twoDelta2 = Polytope::hull({Vec(0, 0), Vec(2, 0), Vec(0, 2)});
  CHECK(twoDelta2.is_smooth());
  Polytope notSmooth = Polytope::hull({Vec(0, 0), Vec(2, 0), Vec(0, 1)});
  CHECK_FALSE(notSmooth.is_smooth());
}

TEST_CASE("face lattice consistency", "[geometry]") {
  for (const Polytope& P : {simplex3(2), Polytope::hull(cube_corners())}) {
    for (const auto& e : P.edges()) {
      CHECK(e.f1 != e.f2);
    }
    // Every vertex of a facet lies on exactly two of its edges.
    for (const auto& f : P.facets()) {
      CHECK(f.cycle.size() >= 3);
      for (int v : f.cycle) {
        int count = 0;
        size_t m = f.cycle.size();
        for (size_t i = 0; i < m; ++i) {
          int a = f.cycle[i], b = f.cycle[(i + 1) % m];
          if (a == v || b == v) ++count;
        }
        CHECK(count == 2);
      }
    }
    // Simple 3-polytopes satisfy E = 3V/2, F = 2 + V/2.
    if (P.is_simple()) {
      auto [V, E, F] = P.f_vector();
      CHECK(2 * E == 3 * V);
      CHECK(2 * F == 4 + V);
    }
  }
}

TEST_CASE("facet inequalities are tight and valid", "[geometry]") {
  Polytope P = simplex3(3);
  for (const auto& f : P.facets()) {
    Int mn;
    bool first = true;
    for (const auto& v : P.vertices()) {
      Int s = dot(f.normal, v);
      CHECK(s >= f.offset);
      if (first || s < mn) mn = s, first = false;
    }
    CHECK(mn == f.offset);
    auto [w, g] = primitive(f.normal);
    CHECK(g == 1);
  }
}
