#include <catch2/catch_amalgamated.hpp>

#include "slp/enumerate2d.hpp"

using namespace slp;

namespace {

const std::vector<Polygon2Class>& catalog12() {
  static std::vector<Polygon2Class> c = enumerate_smooth_polygons(12);
  return c;
}

bool contains_class(const std::vector<Polygon2Class>& cat, const Polytope& P) {
  CanonicalForm c = canonical_form(P);
  for (const auto& e : cat)
    if (e.canon == c) return true;
  return false;
}

}  // namespace

TEST_CASE("polygons with at least five vertices and at most 12 points", "[enumerate2d]") {
  int count = 0;
  for (const auto& e : catalog12())
    if (e.num_vertices >= 5) ++count;
  CHECK(count == 8);
}

TEST_CASE("the named hexagons and pentagon are present", "[enumerate2d]") {
  auto& cat = catalog12();
  CHECK(contains_class(cat, Polytope::hull({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 2),
                                            Vec(2, 1), Vec(2, 2)})));
  CHECK(contains_class(cat, Polytope::hull({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(2, 1),
                                            Vec(3, 3), Vec(3, 4)})));
  CHECK(contains_class(cat, Polytope::hull({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(2, 3),
                                            Vec(3, 2), Vec(3, 3)})));
  Polytope pentagon = Polytope::hull({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(2, 1), Vec(2, 3)});
  CHECK(contains_class(cat, pentagon));
  CHECK(pentagon.num_lattice_points() == 8);
}

TEST_CASE("outputs are smooth and pairwise non-isomorphic", "[enumerate2d]") {
  auto& cat = catalog12();
  std::set<CanonicalForm> forms;
  for (const auto& e : cat) {
    CHECK(e.rep.is_smooth());
    CHECK(e.num_points <= 12);
    forms.insert(e.canon);
  }
  CHECK(forms.size() == cat.size());
}

TEST_CASE("chop closure property", "[enumerate2d]") {
  auto& cat = catalog12();
  std::set<CanonicalForm> forms;
  for (const auto& e : cat) forms.insert(e.canon);
  for (const auto& e : cat) {
    for (int v = 0; v < e.rep.num_vertices(); ++v) {
      for (long k = 1;; ++k) {
        Polytope chopped;
        try {
          chopped = blow_up_face(e.rep, FaceRef::vertex(v), k);
        } catch (const BlowUpError&) {
          break;
        }
        if (chopped.num_lattice_points() <= 12) CHECK(forms.count(canonical_form(chopped)) == 1);
      }
    }
    if (!e.minimal) {
      bool has_blowdown = false;
      for (int fi = 0; fi < e.rep.num_facets(); ++fi)
        if (blow_down(e.rep, fi)) has_blowdown = true;
      CHECK(has_blowdown);
    }
  }
}

TEST_CASE("minimal outputs are the classical minimal surfaces", "[enumerate2d]") {
  for (const auto& e : catalog12()) {
    bool classical_minimal =
        e.fan_class == "P2" || e.fan_class == "F0" ||
        (e.fan_class.size() == 2 && e.fan_class[0] == 'F' && e.fan_class[1] >= '2');
    CHECK(e.minimal == classical_minimal);
  }
}

TEST_CASE("box walk agrees with the chop closure at a smaller budget too", "[enumerate2d]") {
  auto cat10 = enumerate_smooth_polygons(10);
  auto oracle = box_walk_smooth_polygons(10, 13);
  std::set<CanonicalForm> ours;
  for (const auto& e : cat10) ours.insert(e.canon);
  CHECK(ours == oracle);
}

TEST_CASE("fan classes", "[enumerate2d]") {
  CHECK(fan_class_name(normal_fan(k_delta(2, 2))) == "P2");
  CHECK(fan_class_name(hirzebruch_fan(0)) == "F0");
  CHECK(fan_class_name(hirzebruch_fan(3)) == "F3");
  Polytope pentagon = Polytope::hull({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(2, 1), Vec(2, 3)});
  CHECK(fan_class_name(normal_fan(pentagon)) == "Bl2(P2)");
  Polytope hexagon = Polytope::hull({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 2), Vec(2, 1),
                                     Vec(2, 2)});
  CHECK(fan_class_name(normal_fan(hexagon)) == "Bl3(P2)");
}

TEST_CASE("polygons with a fixed fan", "[enumerate2d]") {
  // P2 fan: the polygons are exactly the dilated simplices.
  Fan p2 = normal_fan(k_delta(2, 1));
  auto simplices = polygons_with_fan(p2, 15);
  CHECK(simplices.size() == 4);  // k = 1..4 within 15 points
  for (const auto& P : simplices) CHECK(fan_class_name(normal_fan(P)) == "P2");

  // Square fan: both a x b and b x a rectangles appear (distinct polygons,
  // isomorphic classes).
  auto rects = polygons_with_fan(hirzebruch_fan(0), 12);
  int asym = 0;
  for (const auto& P : rects) {
    CHECK(normal_fan(P) == hirzebruch_fan(0));
    auto pts = P.lattice_points();
    if (!(P == P.mapped(AffineMap(
              [] {
                Mat m(2);
                m.at(0, 1) = 1;
                m.at(1, 0) = 1;
                return m;
              }(),
              Vec(0, 0)))))
      ++asym;
  }
  CHECK(asym > 0);
  CHECK(asym % 2 == 0);  // swapped pairs both present
}
