#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "lcl/digital.hpp"
#include "lcl/generators.hpp"
#include "oracles.hpp"

using namespace lcl;

namespace {

Graph cycle(int n, Id base = 0) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_point(base + i);
  for (int i = 0; i < n; ++i) g.add_edge(base + i, base + (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_point(i);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_point(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph octahedron() {
  // K_{2,2,2}: three antipodal pairs
  Graph g;
  for (int i = 0; i < 6; ++i) g.add_point(i);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j != i + 3) g.add_edge(i, j);
  return g;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g;
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) g.add_point(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("intersection graph of the T-junction fixture is a triangle") {
  for (const auto& fx : fixtures::tile_collection_fixtures())
    if (fx.name == "tiles-d-t-junction") {
      Graph g = intersection_graph(fx.complex, fx.faces);
      CHECK(g.point_count() == 3);
      CHECK(g.edge_count() == 3);
    }
}

TEST_CASE("rim and ball") {
  Graph g = cycle(5);
  Graph r = rim(g, 0);
  CHECK(r.point_set() == std::set<Id>{1, 4});
  CHECK(!r.has_edge(1, 4));
  CHECK(is_digital_0_sphere(r));
  Graph b = ball(g, 0);
  CHECK(b.point_set() == std::set<Id>{0, 1, 4});
  CHECK(b.has_edge(0, 1));
  CHECK(b.has_edge(0, 4));
}

TEST_CASE("clique counts match the subset oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 9, 0.4);
    CHECK(clique_counts(g) == oracle::clique_counts(g));
    CHECK(euler_characteristic(g) == oracle::euler(g));
  }
}

TEST_CASE("clique budget") {
  CHECK_THROWS_AS(clique_counts(complete(18), 100), Error);
  CHECK(clique_number(complete(5)) == 5);
}

TEST_CASE("euler characteristic of standard graphs") {
  CHECK(euler_characteristic(cycle(4)) == 0);
  CHECK(euler_characteristic(cycle(7)) == 0);
  CHECK(euler_characteristic(complete(1)) == 1);
  CHECK(euler_characteristic(complete(4)) == 1);
  CHECK(euler_characteristic(path(6)) == 1);
  CHECK(euler_characteristic(octahedron()) == 2);
}

TEST_CASE("contractibility") {
  CHECK(is_contractible(complete(1)) == Tri::Yes);
  CHECK(is_contractible(complete(4)) == Tri::Yes);
  CHECK(is_contractible(path(7)) == Tri::Yes);
  CHECK(is_contractible(cycle(4)) == Tri::No);
  CHECK(is_contractible(cycle(9)) == Tri::No);
  CHECK(is_contractible(octahedron()) == Tri::No);

  // disconnected graphs are never contractible
  Graph two = complete(1);
  two.add_point(10);
  CHECK(is_contractible(two) == Tri::No);
}

TEST_CASE("contraction witnesses replay to a point") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 7, 0.5);
    ContractionWitness w = contract_to_point(g);
    if (w.verdict != Tri::Yes) continue;
    Graph h = g;
    for (Id v : w.deletions) h = apply_ct(h, DeleteVertex{v});
    CHECK(h.point_count() == 1);
    CHECK(euler_characteristic(g) == 1);
  }
}

TEST_CASE("apply_ct guards and invariants") {
  SUBCASE("deleting a cycle vertex is not allowed") {
    CHECK_THROWS_AS(apply_ct(cycle(5), DeleteVertex{0}), Error);
  }
  SUBCASE("deleting a vertex with a path rim is allowed") {
    Graph g = path(3);
    g.add_point(9);
    for (int i = 0; i < 3; ++i) g.add_edge(9, i);
    Graph h = apply_ct(g, DeleteVertex{9});
    CHECK(h == path(3));
  }
  SUBCASE("a cone apex over a cycle has a non-contractible rim") {
    Graph g = cycle(4);
    g.add_point(9);
    for (int i = 0; i < 4; ++i) g.add_edge(9, i);
    CHECK_THROWS_AS(apply_ct(g, DeleteVertex{9}), Error);
  }
  SUBCASE("gluing a vertex over a contractible set") {
    Graph g = path(3);
    Graph h = apply_ct(g, GlueVertex{7, {0, 1}});
    CHECK(h.point_count() == 4);
    CHECK(h.has_edge(7, 0));
    CHECK(h.has_edge(7, 1));
    CHECK(euler_characteristic(h) == euler_characteristic(g));
  }
  SUBCASE("gluing over a non-contractible set is refused") {
    Graph g = cycle(4);
    CHECK_THROWS_AS(apply_ct(g, GlueVertex{7, {0, 2}}), Error);
  }
  SUBCASE("edge deletion needs a contractible common neighborhood") {
    Graph g = complete(3);
    Graph h = apply_ct(g, DeleteEdge{0, 1});
    CHECK(h.edge_count() == 2);
    CHECK(euler_characteristic(h) == 1);
    CHECK_THROWS_AS(apply_ct(cycle(4), DeleteEdge{0, 1}), Error);
  }
  SUBCASE("edge glue on a square diagonal is refused") {
    // common neighborhood of the diagonal is a digital 0-sphere
    CHECK_THROWS_AS(apply_ct(cycle(4), GlueEdge{0, 2}), Error);
  }
  SUBCASE("edge glue across a path is allowed") {
    Graph g = path(3);
    Graph h = apply_ct(g, GlueEdge{0, 2});
    CHECK(h.has_edge(0, 2));
    CHECK(euler_characteristic(h) == 1);
  }
}

TEST_CASE("digital sphere recognizers") {
  CHECK(is_digital_0_sphere(rim(cycle(6), 0)));
  CHECK(!is_digital_0_sphere(complete(2)));

  for (int n = 4; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(is_digital_1_sphere_fast(cycle(n)));
    CHECK(is_digital_sphere_def(cycle(n), 1) == Tri::Yes);
  }
  CHECK(!is_digital_1_sphere_fast(cycle(3)));
  CHECK(is_digital_sphere_def(complete(3), 1) == Tri::No);
  CHECK(is_digital_sphere_def(path(5), 1) == Tri::No);
  CHECK(is_digital_sphere_def(complete(2), 0) == Tri::No);
  Graph s0;
  s0.add_point(0);
  s0.add_point(1);
  CHECK(is_digital_sphere_def(s0, 0) == Tri::Yes);
}

TEST_CASE("manifold checks on generated models") {
  SUBCASE("torus brick model is a (6,6) 2-manifold") {
    Tiling2 t = gen_brick(4, 4, true);
    Graph g = intersection_graph(t.complex, t.faces);
    CHECK(is_digital_2_manifold(g, g.point_set()));
    CHECK(format_manifold_type(manifold_type(g, g.point_set())) == "(6,6)");
  }
  SUBCASE("torus truncated-square model is a (4,8) 2-manifold") {
    Tiling2 t = gen_trunc_square(4, 4, true);
    Graph g = intersection_graph(t.complex, t.faces);
    CHECK(is_digital_2_manifold(g, g.point_set()));
    CHECK(format_manifold_type(manifold_type(g, g.point_set())) == "(4,8)");
  }
  SUBCASE("circle model is a 1-manifold but not a 2-manifold") {
    Graph g = intersection_graph(gen_circle_arcs(6));
    CHECK(is_digital_1_manifold(g, g.point_set()));
    CHECK(!is_digital_2_manifold(g, g.point_set()));
    CHECK(is_digital_1_sphere_fast(g));
  }
  SUBCASE("segment model is a boundary 1-manifold") {
    Graph g = intersection_graph(gen_segment_arcs(6));
    std::set<Id> interior = g.point_set();
    interior.erase(0);
    interior.erase(5);
    CHECK(is_digital_1_manifold(g, interior));
    CHECK(!is_digital_1_manifold(g, g.point_set()));  // ends have point rims
  }
  SUBCASE("square4 diagonal model is not a 2-manifold") {
    Tiling2 t = gen_square4(3, 3);
    Graph g = intersection_graph(t.complex, t.faces);
    CHECK(!is_digital_2_manifold(g, g.point_set()));
  }
}

TEST_CASE("manifold_type refuses non-manifolds") {
  CHECK_THROWS_AS(manifold_type(path(4), path(4).point_set()), Error);
}

TEST_CASE("graph isomorphism") {
  CHECK(graphs_isomorphic(cycle(5), cycle(5, 100)));
  CHECK(!graphs_isomorphic(cycle(5), path(5)));
  CHECK(!graphs_isomorphic(cycle(6), cycle(5)));
  CHECK(graphs_isomorphic(complete(4), complete(4)));

  // same degree sequence, different structure: C6 vs two triangles
  Graph two_tri = cycle(3);
  Graph t2 = cycle(3, 10);
  for (Id v : t2.points()) two_tri.add_point(v);
  for (auto [u, v] : t2.edges()) two_tri.add_edge(u, v);
  CHECK(!graphs_isomorphic(cycle(6), two_tri));

  CHECK_THROWS_AS(graphs_isomorphic(cycle(5), cycle(5), 4), Error);
}
