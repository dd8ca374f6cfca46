#pragma once

// The classification pipeline for smooth 3-polytopes with a bounded number
// of lattice points: dilated simplices, segment-type and pair-type Cayley
// polytopes, and the blow-up closure, deduplicated by canonical form.

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slp/constructions.hpp"
#include "slp/enumerate2d.hpp"
#include "slp/isomorphism.hpp"
#include "slp/labels.hpp"

namespace slp {

struct Recipe {
  std::string kind;  // "simplex" | "segments" | "pair" | "blowup"
  long k = 0;        // simplex dilation
  long s = 0, seg_i = 0, seg_j = 0, seg_k = 0;
  std::string base;          // pair: base surface class
  Vec translation;           // pair: relative translation of the top summand
  std::vector<Vec> p0, p1;   // pair: summand vertices
  std::string root;          // blowup: textual root construction
  int cuts = 0;              // blowup: cuts applied to the root
  std::string parent_desc;   // blowup: description used to resolve parent id

  std::string describe() const {
    std::ostringstream os;
    if (kind == "simplex") {
      os << k << "Delta3";
    } else if (kind == "segments") {
      os << "Cay^" << s << "(" << seg_i << "D1," << seg_j << "D1," << seg_k << "D1)";
    } else if (kind == "pair") {
      os << "Cay^" << s << "(" << base << " pair, t=" << translation.str() << ")";
    } else {
      os << "blow-up (" << cuts << " cuts) of " << root;
    }
    return os.str();
  }
};

struct CatalogEntry {
  std::string id;
  Polytope polytope;  // positioned at its canonical form
  CanonicalForm canon;
  std::string category;  // "simplex" | "cayley_segments" | "cayley_pair" | "blowup"
  Recipe recipe;
  long num_points = 0;
  long embedding_dim = 0;
  std::array<long, 3> f_vector{0, 0, 0};
  std::string label;
  bool minimal = false;
  std::string parent;  // id of the blow-down parent when it is in the catalog
  std::string fiber_description;
  std::vector<std::string> provenance;  // every construction that produced it
};

struct ClassifyOptions {
  bool label_prune = true;
  long seed_cap_extra = 24;   // blow-up seeds up to max_points + extra lattice points
  bool twod_crosscheck = true;
};

struct CategoryIIIStats {
  std::map<std::string, int> classes_per_base;   // distinct classes seen per base fan
  std::map<std::string, int> overlap_per_base;   // ...of which also produced elsewhere
  int raw_candidates = 0;
};

struct Catalog {
  long max_points = 0;
  std::vector<CatalogEntry> entries;
  long segments_s1_parameter_count = 0;
  CategoryIIIStats cat3;
  std::map<std::string, long> category_tally;
  long overlap_ii_iii = 0;
};

namespace detail3 {

inline std::string fiber_description_for(const Recipe& r, const std::string& root_fiber) {
  if (r.kind == "simplex") return "P^3";
  if (r.kind == "segments") return "P^2-bundle over P^1";
  if (r.kind == "pair") return "P^1-bundle over " + r.base;
  std::string what = r.cuts == 1 ? "point" : "points";
  return "blow-up at " + std::to_string(r.cuts) + " " + what + " of a " + root_fiber;
}

// Blow-up closure node.
struct Node {
  Polytope poly;
  Recipe recipe;
  std::string root_fiber;  // fiber description of the closure root
  Polytope parent;         // immediate parent (empty for roots)
};

}  // namespace detail3

// Category i: dilated 3-simplices within budget.
inline std::vector<std::pair<Polytope, Recipe>> enumerate_category_i(long max_points) {
  std::vector<std::pair<Polytope, Recipe>> out;
  for (long k = 1;; ++k) {
    Polytope P = k_delta(3, k);
    if (P.num_lattice_points() > max_points) break;
    Recipe r;
    r.kind = "simplex";
    r.k = k;
    out.emplace_back(std::move(P), std::move(r));
  }
  return out;
}

// Category ii: segment-type Cayley polytopes within budget. Returns the
// polytopes and counts the raw s=1 parameter triples.
inline std::vector<std::pair<Polytope, Recipe>> enumerate_category_ii(long max_points,
                                                                      long* s1_params) {
  std::vector<std::pair<Polytope, Recipe>> out;
  if (s1_params) *s1_params = 0;
  for (long s = 1; 3 * (s + 1) <= max_points; ++s)
    for (long i = 1; i <= max_points; ++i)
      for (long j = 1; j <= i; ++j)
        for (long k = 1; k <= j; ++k) {
          if (!segments_smooth(s, i, j, k)) continue;
          Polytope P = cayley_segments(s, i, j, k);
          if (P.num_lattice_points() > max_points) continue;
          if (s == 1 && s1_params) ++*s1_params;
          Recipe r;
          r.kind = "segments";
          r.s = s;
          r.seg_i = i;
          r.seg_j = j;
          r.seg_k = k;
          out.emplace_back(std::move(P), std::move(r));
        }
  return out;
}

namespace detail3 {

// One fan presentation per lattice-equivalence class of base fans, collected
// from the 2-D catalog; each presentation contains the rays (1,0), (0,1).
struct BasePresentation {
  Fan fan;
  std::string name;
};

inline std::vector<int> canonical_cycle_key(const Fan& f) {
  std::vector<int> cyc = fan_selfintersection_cycle(f);
  int n = static_cast<int>(cyc.size());
  std::vector<int> best;
  for (int rev = 0; rev < 2; ++rev) {
    for (int rot = 0; rot < n; ++rot) {
      std::vector<int> cand(n);
      for (int i = 0; i < n; ++i) cand[i] = cyc[(rot + i) % n];
      if (best.empty() || cand < best) best = cand;
    }
    std::reverse(cyc.begin(), cyc.end());
  }
  return best;
}

inline std::vector<BasePresentation> base_fan_presentations(
    const std::vector<Polygon2Class>& polygons) {
  std::map<std::vector<int>, BasePresentation> by_key;
  for (const auto& e : polygons) {
    Fan f = normal_fan(e.rep);
    auto key = canonical_cycle_key(f);
    if (!by_key.count(key)) by_key.emplace(key, BasePresentation{f, fan_class_name(f)});
  }
  std::vector<BasePresentation> out;
  for (auto& [key, p] : by_key) out.push_back(std::move(p));
  return out;
}

}  // namespace detail3

// Category iii: pair-type Cayley polytopes within budget, with provenance by
// base-fan class. Candidates are deduplicated later; every raw candidate is
// reported to the stats object.
inline std::vector<std::pair<Polytope, Recipe>> enumerate_category_iii(
    long max_points, const std::vector<Polygon2Class>& polygons2d) {
  std::vector<std::pair<Polytope, Recipe>> out;
  for (const auto& base : detail3::base_fan_presentations(polygons2d)) {
    std::vector<Polytope> polys = polygons_with_fan(base.fan, max_points - 4);
    for (size_t a = 0; a < polys.size(); ++a)
      for (size_t b = a; b < polys.size(); ++b) {
        long base_pts = polys[a].num_lattice_points() + polys[b].num_lattice_points();
        if (base_pts > max_points) continue;
        for (long s = 1; base_pts + 3 * (s - 1) <= max_points; ++s) {
          for (long tx = 0; tx < s; ++tx)
            for (long ty = 0; ty < s; ++ty) {
              Vec t(tx, ty);
              auto built = try_smooth_cayley_pair(polys[a], polys[b], s, t);
              if (!built) continue;
              Polytope Q = std::move(*built);
              if (Q.num_lattice_points() > max_points) continue;
              Recipe r;
              r.kind = "pair";
              r.s = s;
              r.base = base.name;
              r.translation = t;
              r.p0 = polys[a].vertices();
              r.p1 = polys[b].vertices();
              out.emplace_back(std::move(Q), std::move(r));
            }
        }
      }
  }
  return out;
}

namespace detail3 {

// Can some chain of label moves starting at L reach, within the facet
// budget, a realizable label whose facet-content lower bound admits
// max_points? Over-approximates reachability, so pruning on a negative
// answer is sound.
inline bool label_chain_viable(const Label& L, long max_points,
                               std::map<Label, bool>& memo) {
  auto it = memo.find(L);
  if (it != memo.end()) return it->second;
  bool viable = false;
  if (L.num_facets() <= 8 && label_realizable(L)) {
    bool bound_ok = true;
    try {
      bound_ok = facet_point_lower_bound(L) <= max_points;
    } catch (const std::exception&) {
      bound_ok = true;  // no bound available: do not prune
    }
    if (bound_ok) viable = true;
  }
  if (!viable && L.num_facets() < 8) {
    for (const auto& next : vertex_blowup_labels(L))
      if (label_chain_viable(next, max_points, memo)) {
        viable = true;
        break;
      }
    if (!viable)
      for (const auto& next : edge_blowup_labels(L))
        if (label_chain_viable(next, max_points, memo)) {
          viable = true;
          break;
        }
  }
  memo.emplace(L, viable);
  return viable;
}

// Seeds for the blow-up closure: every catalog polytope found so far plus
// all strict-Cayley family members up to seed_cap lattice points. Families
// whose members admit no vertex cuts and only in-family edge cuts (order-1
// pair polytopes) are represented by their in-budget members.
inline std::vector<Node> closure_seeds(long max_points, long seed_cap,
                                       const std::vector<Polygon2Class>& polygons2d,
                                       const std::vector<std::pair<Polytope, Recipe>>& sofar) {
  std::vector<Node> seeds;
  auto add = [&](Polytope P, Recipe r, const std::string& fiber) {
    Node n;
    n.poly = std::move(P);
    n.recipe = std::move(r);
    n.root_fiber = fiber;
    seeds.push_back(std::move(n));
  };

  for (const auto& [P, r] : sofar)
    add(P, r, detail3::fiber_description_for(r, ""));

  for (long k = 1;; ++k) {
    Polytope P = k_delta(3, k);
    if (P.num_lattice_points() > seed_cap) break;
    Recipe r;
    r.kind = "simplex";
    r.k = k;
    add(std::move(P), r, "P^3");
  }
  for (long s = 1; 3 * (s + 1) <= seed_cap; ++s)
    for (long i = 1; i <= seed_cap; ++i)
      for (long j = 1; j <= i; ++j)
        for (long k = 1; k <= j; ++k) {
          if (!segments_smooth(s, i, j, k)) continue;
          Polytope P = cayley_segments(s, i, j, k);
          if (P.num_lattice_points() > seed_cap) continue;
          Recipe r;
          r.kind = "segments";
          r.s = s;
          r.seg_i = i;
          r.seg_j = j;
          r.seg_k = k;
          add(std::move(P), r, "P^2-bundle over P^1");
        }
  // Pair-type seeds of order >= 2. Order-1 pairs admit no vertex cuts
  // (vertical edges have lattice length 1) and their edge cuts along
  // vertical edges chop both summands at once, staying in the order-1 pair
  // family; the in-budget members are already seeded above.
  for (const auto& base : detail3::base_fan_presentations(polygons2d)) {
    std::vector<Polytope> polys = polygons_with_fan(base.fan, seed_cap - 8);
    for (size_t a = 0; a < polys.size(); ++a)
      for (size_t b = a; b < polys.size(); ++b) {
        long base_pts = polys[a].num_lattice_points() + polys[b].num_lattice_points();
        for (long s = 2; base_pts + 3 * (s - 1) <= seed_cap; ++s)
          for (long tx = 0; tx < s; ++tx)
            for (long ty = 0; ty < s; ++ty) {
              Vec t(tx, ty);
              auto built = try_smooth_cayley_pair(polys[a], polys[b], s, t);
              if (!built) continue;
              Polytope Q = std::move(*built);
              if (Q.num_lattice_points() > seed_cap) continue;
              if (Q.num_lattice_points() <= max_points) continue;  // already seeded
              Recipe r;
              r.kind = "pair";
              r.s = s;
              r.base = base.name;
              r.translation = t;
              add(std::move(Q), r, "P^1-bundle over " + base.name);
            }
      }
  }
  return seeds;
}

}  // namespace detail3

// Category iv input: exhaustive blow-up closure. Returns every smooth
// polytope with at most max_points lattice points reachable by consecutive
// blow-ups from the seeds (including the seeds themselves when in budget).
inline std::vector<detail3::Node> blowup_closure(
    long max_points, const ClassifyOptions& opts,
    const std::vector<Polygon2Class>& polygons2d,
    const std::vector<std::pair<Polytope, Recipe>>& sofar) {
  using detail3::Node;
  long seed_cap = max_points + opts.seed_cap_extra;
  std::vector<Node> seeds = detail3::closure_seeds(max_points, seed_cap, polygons2d, sofar);

  std::set<Polytope> seen;
  std::deque<Node> work;
  std::vector<Node> in_budget;
  std::map<Label, bool> label_memo;

  auto push = [&](Node n) {
    if (!seen.insert(n.poly).second) return;
    if (n.poly.num_lattice_points() <= max_points) in_budget.push_back(n);
    if (n.poly.num_facets() >= 8) return;  // a further cut would exceed 8 facets
    if (opts.label_prune && n.poly.num_lattice_points() > max_points) {
      if (!detail3::label_chain_viable(label_of(n.poly), max_points, label_memo)) return;
    }
    work.push_back(std::move(n));
  };

  for (auto& s : seeds) push(std::move(s));
  while (!work.empty()) {
    Node n = work.front();
    work.pop_front();
    auto expand = [&](const FaceRef& face) {
      for (long k = 1;; ++k) {
        Polytope child;
        try {
          child = blow_up_face(n.poly, face, k);
        } catch (const BlowUpError&) {
          break;
        }
        Node c;
        c.poly = std::move(child);
        c.recipe.kind = "blowup";
        c.recipe.root = n.recipe.kind == "blowup" ? n.recipe.root : n.recipe.describe();
        c.recipe.cuts = (n.recipe.kind == "blowup" ? n.recipe.cuts : 0) + 1;
        c.root_fiber = n.root_fiber;
        c.parent = n.poly;
        push(std::move(c));
      }
    };
    for (int v = 0; v < n.poly.num_vertices(); ++v) expand(FaceRef::vertex(v));
    for (const auto& e : n.poly.edges()) expand(FaceRef::edge(e.a, e.b));
  }
  return in_budget;
}

// Full classification within the lattice-point budget.
inline Catalog classify_all(long max_points, const ClassifyOptions& opts = {}) {
  Catalog cat;
  cat.max_points = max_points;
  long polygon_budget = std::min<long>(max_points - 4, 12);
  std::vector<Polygon2Class> polygons2d =
      enumerate_smooth_polygons(polygon_budget, opts.twod_crosscheck);

  std::map<CanonicalForm, size_t> index;
  auto register_candidate = [&](const Polytope& P, const Recipe& r,
                                const std::string& category, const std::string& fiber,
                                const std::string& tag) -> bool {
    CanonicalForm c = canonical_form(P);
    auto it = index.find(c);
    if (it != index.end()) {
      cat.entries[it->second].provenance.push_back(tag);
      return false;
    }
    CatalogEntry e;
    e.polytope = Polytope::hull(c.points);
    e.canon = c;
    e.category = category;
    e.recipe = r;
    e.num_points = e.polytope.num_lattice_points();
    e.embedding_dim = e.num_points - 1;
    e.f_vector = e.polytope.f_vector();
    e.label = label_of(e.polytope).str();
    e.minimal = is_minimal(e.polytope);
    e.fiber_description = fiber;
    e.provenance.push_back(tag);
    index.emplace(c, cat.entries.size());
    cat.entries.push_back(std::move(e));
    return true;
  };

  // Categories i and ii.
  std::vector<std::pair<Polytope, Recipe>> sofar;
  for (auto& [P, r] : enumerate_category_i(max_points)) {
    register_candidate(P, r, "simplex", "P^3", "i:" + r.describe());
    sofar.emplace_back(P, r);
  }
  long s1 = 0;
  for (auto& [P, r] : enumerate_category_ii(max_points, &s1)) {
    register_candidate(P, r, "cayley_segments", "P^2-bundle over P^1", "ii:" + r.describe());
    sofar.emplace_back(P, r);
  }
  cat.segments_s1_parameter_count = s1;

  // Category iii with per-base statistics.
  {
    std::map<std::string, std::set<CanonicalForm>> per_base;
    std::map<std::string, std::set<CanonicalForm>> per_base_overlap;
    for (auto& [P, r] : enumerate_category_iii(max_points, polygons2d)) {
      cat.cat3.raw_candidates++;
      CanonicalForm c = canonical_form(P);
      bool fresh = !index.count(c);
      register_candidate(P, r, "cayley_pair", "P^1-bundle over " + r.base,
                         "iii:" + r.base + ":" + r.describe());
      if (per_base[r.base].insert(c).second) {
        // First time this base produces this class; overlap when some other
        // construction already produced it.
        bool elsewhere = !fresh;
        if (!elsewhere)
          for (auto& [other, forms] : per_base)
            if (other != r.base && forms.count(c)) elsewhere = true;
        if (elsewhere) per_base_overlap[r.base].insert(c);
      }
      sofar.emplace_back(P, r);
    }
    for (auto& [base, forms] : per_base)
      cat.cat3.classes_per_base[base] = static_cast<int>(forms.size());
    for (auto& [base, forms] : per_base_overlap)
      cat.cat3.overlap_per_base[base] = static_cast<int>(forms.size());
  }

  // Count ii/iii overlap before category iv is added.
  {
    std::set<CanonicalForm> ii_forms, iii_forms;
    for (const auto& e : cat.entries)
      for (const auto& tag : e.provenance) {
        if (tag.rfind("ii:", 0) == 0) ii_forms.insert(e.canon);
        if (tag.rfind("iii:", 0) == 0) iii_forms.insert(e.canon);
      }
    long overlap = 0;
    for (const auto& f : iii_forms)
      if (ii_forms.count(f)) ++overlap;
    cat.overlap_ii_iii = overlap;
  }

  // Category iv: blow-up closure.
  for (auto& node : blowup_closure(max_points, opts, polygons2d, sofar)) {
    if (node.recipe.kind != "blowup") continue;  // seeds in budget are already present
    std::string tag = "iv:" + node.recipe.describe();
    CanonicalForm c = canonical_form(node.poly);
    auto it = index.find(c);
    if (it != index.end()) {
      cat.entries[it->second].provenance.push_back(tag);
      continue;
    }
    register_candidate(node.poly, node.recipe, "blowup",
                       detail3::fiber_description_for(node.recipe, node.root_fiber), tag);
    // Resolve the parent when it sits in the catalog.
    auto pit = index.find(canonical_form(node.parent));
    if (pit != index.end())
      cat.entries.back().recipe.parent_desc = std::to_string(pit->second);
  }

  // Deterministic ordering and ids.
  std::vector<size_t> order(cat.entries.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const auto& x = cat.entries[a];
    const auto& y = cat.entries[b];
    if (x.num_points != y.num_points) return x.num_points < y.num_points;
    return x.canon < y.canon;
  });
  std::vector<CatalogEntry> sorted;
  std::map<size_t, std::string> new_ids;
  long prev_points = -1;
  int idx_in_group = 0;
  for (size_t pos : order) {
    CatalogEntry e = std::move(cat.entries[pos]);
    if (e.num_points != prev_points) {
      prev_points = e.num_points;
      idx_in_group = 0;
    }
    e.id = "smooth3-" + std::to_string(e.num_points) + "-" + std::to_string(idx_in_group++);
    new_ids[pos] = e.id;
    sorted.push_back(std::move(e));
  }
  for (auto& e : sorted) {
    if (!e.recipe.parent_desc.empty()) {
      size_t old_pos = static_cast<size_t>(std::stoul(e.recipe.parent_desc));
      e.parent = new_ids.at(old_pos);
      e.recipe.parent_desc.clear();
    }
  }
  cat.entries = std::move(sorted);

  for (const auto& e : cat.entries) cat.category_tally[e.category]++;
  return cat;
}

struct VerifyReport {
  std::vector<std::string> violations;
  std::map<std::string, long> checks_run;
  bool ok() const { return violations.empty(); }
};

// Materialized structural assertions over a catalog.
inline VerifyReport verify_catalog(const Catalog& cat) {
  VerifyReport rep;
  auto fail = [&](const std::string& id, const std::string& what) {
    rep.violations.push_back(id + ": " + what);
  };
  std::set<CanonicalForm> forms;
  std::map<CanonicalForm, const CatalogEntry*> by_form;
  static const std::set<std::string> minimal_labels = {
      "3^4", "3^2 4^3", "4^6", "4^5 5^2", "4^6 6^2"};

  for (const auto& e : cat.entries) {
    const Polytope& P = e.polytope;
    rep.checks_run["entries"]++;
    if (!P.is_smooth()) fail(e.id, "not smooth");
    if (P.num_lattice_points() != e.num_points) fail(e.id, "stored point count is stale");
    if (e.num_points > cat.max_points) fail(e.id, "exceeds the lattice-point budget");
    if (P.num_facets() > 8) fail(e.id, "more than 8 facets");
    if (P.num_vertices() > 12) fail(e.id, "more than 12 vertices");
    auto [V, E, F] = P.f_vector();
    if (2 * E != 3 * V || 2 * F != 4 + V) fail(e.id, "simple f-vector identities violated");
    if (!forms.insert(e.canon).second) fail(e.id, "canonical form collides");
    by_form[e.canon] = &e;

    // Facets are smooth 2-polytopes: at every facet corner the primitive
    // edge directions span the facet-plane lattice (cross product equals the
    // primitive facet normal up to sign).
    for (const auto& f : P.facets()) {
      int m = static_cast<int>(f.cycle.size());
      for (int i = 0; i < m; ++i) {
        const Vec& v = P.vertices()[f.cycle[i]];
        const Vec& nxt = P.vertices()[f.cycle[(i + 1) % m]];
        const Vec& prv = P.vertices()[f.cycle[(i + m - 1) % m]];
        Vec c = cross(primitive_dir(nxt - v), primitive_dir(prv - v));
        if (!(c == f.normal) && !(c == -f.normal)) {
          fail(e.id, "facet is not smooth as a 2-polytope");
          break;
        }
      }
    }

    if (e.minimal != is_minimal(P)) fail(e.id, "stored minimality is stale");
    if (e.minimal && !minimal_labels.count(e.label))
      fail(e.id, "minimal entry with unexpected label " + e.label);
  }

  // Blow-up closure: every valid blow-up within budget lands in the catalog.
  for (const auto& e : cat.entries) {
    const Polytope& P = e.polytope;
    auto try_face = [&](const FaceRef& face) {
      for (long k = 1;; ++k) {
        Polytope child;
        try {
          child = blow_up_face(P, face, k);
        } catch (const BlowUpError&) {
          break;
        }
        rep.checks_run["blowups"]++;
        if (child.num_lattice_points() <= cat.max_points &&
            !forms.count(canonical_form(child)))
          fail(e.id, "a blow-up within budget is missing from the catalog");
      }
    };
    for (int v = 0; v < P.num_vertices(); ++v) try_face(FaceRef::vertex(v));
    for (const auto& ed : P.edges()) try_face(FaceRef::edge(ed.a, ed.b));

    // Blow-down closure: non-minimal entries blow down, and blow-downs
    // within budget stay in the catalog (parents may leave the budget).
    if (!e.minimal) {
      bool found = false;
      for (int fi = 0; fi < P.num_facets(); ++fi) {
        auto res = blow_down(P, fi);
        if (!res) continue;
        found = true;
        rep.checks_run["blowdowns"]++;
        if (res->parent.num_lattice_points() <= cat.max_points &&
            !forms.count(canonical_form(res->parent)))
          fail(e.id, "a blow-down within budget is missing from the catalog");
      }
      if (!found) fail(e.id, "non-minimal entry has no blow-down");
    }
  }
  return rep;
}

}  // namespace slp
