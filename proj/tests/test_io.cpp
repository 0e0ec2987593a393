#include "doctest.h"
#include "fixtures.hpp"
#include "lcl/digital.hpp"
#include "lcl/generators.hpp"
#include "lcl/io.hpp"

using namespace lcl;

namespace {

bool same_complex(const CellComplex2& a, const CellComplex2& b) {
  return a.vertices == b.vertices && a.edges == b.edges && a.faces == b.faces &&
         a.torus == b.torus;
}

}  // namespace

TEST_CASE("tiling JSON round trips") {
  for (const auto& fx : fixtures::tile_collection_fixtures()) {
    CAPTURE(fx.name);
    CellComplex2 back = read_tiling(write_tiling(fx.complex));
    CHECK(same_complex(fx.complex, back));
  }
  Tiling2 torus = gen_brick(4, 3, true);
  CHECK(same_complex(torus.complex, read_tiling(write_tiling(torus.complex))));
  CHECK(read_tiling(write_tiling(torus.complex)).torus);
}

TEST_CASE("tiling writer is deterministic") {
  Tiling2 t = gen_trunc_square(3, 3, false);
  CHECK(write_tiling(t.complex) == write_tiling(t.complex));
}

TEST_CASE("read_tiling rejects malformed documents") {
  CHECK_THROWS_AS(read_tiling("not json"), Error);
  CHECK_THROWS_AS(read_tiling("{}"), Error);
  CHECK_THROWS_AS(read_tiling(R"({"vertices": 5})"), Error);
}

TEST_CASE("arc tiling documents") {
  ArcTiling1D c = gen_circle_arcs(5);
  std::string text = write_arc_tiling(c);
  CHECK(is_arc_tiling_document(text));
  CHECK(read_arc_tiling(text) == c);

  ArcTiling1D s = gen_segment_arcs(3);
  CHECK(read_arc_tiling(write_arc_tiling(s)) == s);

  CHECK(!is_arc_tiling_document(write_tiling(gen_brick(3, 3, false).complex)));
  CHECK(!is_arc_tiling_document("p 3"));
}

TEST_CASE("edge list round trips") {
  Graph g;
  for (Id v : {0, 1, 2, 7}) g.add_point(v);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  std::string text = write_edge_list(g);
  CHECK(read_edge_list(text) == g);  // isolated point 7 must survive

  CHECK_THROWS_AS(read_edge_list("p two\n0 1\n"), Error);
  CHECK_THROWS_AS(read_edge_list("p 4\n0 1\n"), Error);  // count mismatch
}

TEST_CASE("dot export") {
  Graph g;
  g.add_point(0);
  g.add_point(1);
  g.add_edge(0, 1);
  std::string dot = to_dot(g);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
}

TEST_CASE("report JSON carries the verdict and violations") {
  Tiling2 bad = gen_square4(2, 2);
  LclReport r = check_lcl_2d(bad.complex, bad.faces);
  std::string j = report_to_json(r);
  CHECK(j.find("\"pass\": false") != std::string::npos);
  CHECK(j.find("QuadNonempty") != std::string::npos);

  Tiling2 good = gen_brick(3, 3, false);
  std::string j2 = report_to_json(check_lcl_2d(good.complex, good.faces));
  CHECK(j2.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("svg rendering") {
  Tiling2 t = gen_hex(3, 3, false);
  std::string svg = render_svg(t.complex, false);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("<circle") == std::string::npos);

  std::string overlay = render_svg(t.complex, true);
  CHECK(overlay.find("<circle") != std::string::npos);
  CHECK(overlay.size() > svg.size());
}
