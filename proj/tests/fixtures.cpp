#include "fixtures.hpp"

#include <map>

namespace lcl::fixtures {

CellComplex2 complex_from_loops(
    const std::vector<std::vector<Vec2>>& loops) {
  std::map<Vec2, Id> by_coord;
  std::map<Id, Vec2> vertices;
  std::map<std::pair<Id, Id>, Id> edge_lookup;
  std::map<Id, EdgeDef> edges;
  std::map<Id, std::vector<EdgeRef>> faces;

  auto vid = [&](const Vec2& p) {
    auto it = by_coord.find(p);
    if (it != by_coord.end()) return it->second;
    Id id = static_cast<Id>(by_coord.size());
    by_coord[p] = id;
    vertices[id] = p;
    return id;
  };

  Id next_edge = 0;
  for (std::size_t fi = 0; fi < loops.size(); ++fi) {
    std::vector<EdgeRef> walk;
    for (std::size_t i = 0; i < loops[fi].size(); ++i) {
      Id a = vid(loops[fi][i]);
      Id b = vid(loops[fi][(i + 1) % loops[fi].size()]);
      auto key = std::minmax(a, b);
      auto it = edge_lookup.find(key);
      Id e;
      if (it == edge_lookup.end()) {
        e = next_edge++;
        edges[e] = {a, b, {}};
        edge_lookup[key] = e;
      } else {
        e = it->second;
      }
      walk.push_back({e, edges[e].a != a});
    }
    faces[static_cast<Id>(fi)] = std::move(walk);
  }
  return build_complex(std::move(vertices), std::move(edges), std::move(faces));
}

namespace {

// chain of unit edges 0-1-...-n with edge i = (i, i+1)
CellComplex2 path_skeleton(int n) {
  std::map<Id, Vec2> vs;
  std::map<Id, EdgeDef> es;
  for (int i = 0; i <= n; ++i) vs[i] = {i, 0};
  for (int i = 0; i < n; ++i) es[i] = {i, i + 1, {}};
  return build_complex(std::move(vs), std::move(es), {});
}

CellComplex2 cycle_skeleton(int n) {
  std::map<Id, Vec2> vs;
  std::map<Id, EdgeDef> es;
  for (int i = 0; i < n; ++i) vs[i] = {i, i == 0 ? 0 : 1};
  for (int i = 0; i < n; ++i) es[i] = {i, (i + 1) % n, {}};
  // distinct coordinates: lay the cycle out on two rows
  for (int i = 0; i < n; ++i) vs[i] = {i, 0};
  return build_complex(std::move(vs), std::move(es), {});
}

}  // namespace

std::vector<Collection1D> arc_collection_fixtures() {
  std::vector<Collection1D> out;

  // (a) two arcs overlapping in a sub-arc: LC holds, LL fails
  out.push_back({"arcs-a-overlap", path_skeleton(3), {{0, 1}, {1, 2}}, true,
                 false});

  // (b) circle split into three arcs: pairwise single points, empty common
  out.push_back({"arcs-b-three-arc-circle", cycle_skeleton(6),
                 {{0, 1}, {2, 3}, {4, 5}}, false, true});

  // (c) two arcs meeting in one point
  out.push_back({"arcs-c-two-on-line", path_skeleton(2), {{0}, {1}}, true,
                 true});

  // (d) circle split into four arcs
  out.push_back({"arcs-d-four-arc-circle", cycle_skeleton(8),
                 {{0, 1}, {2, 3}, {4, 5}, {6, 7}}, true, true});

  // (e) segment split into five arcs of varying length
  out.push_back({"arcs-e-five-on-segment", path_skeleton(7),
                 {{0}, {1, 2}, {3}, {4, 5}, {6}}, true, true});

  return out;
}

std::vector<Collection2D> tile_collection_fixtures() {
  std::vector<Collection2D> out;

  auto add = [&](std::string name, std::vector<std::vector<Vec2>> loops,
                 bool lc, bool ll) {
    CellComplex2 c = complex_from_loops(loops);
    std::set<Id> faces;
    for (const auto& [fid, _] : c.faces) faces.insert(fid);
    out.push_back({std::move(name), std::move(c), std::move(faces), lc, ll});
  };

  // (a) three quads around a triangular hole: pairwise arcs, empty common
  add("tiles-a-ring-of-three",
      {{{0, 0}, {4, 0}, {2, 1}, {1, 1}},
       {{4, 0}, {2, 3}, {2, 2}, {2, 1}},
       {{2, 3}, {0, 0}, {1, 1}, {2, 2}}},
      false, true);

  // (b) two squares meeting in a single corner
  add("tiles-b-corner-contact",
      {{{0, 0}, {1, 0}, {1, 1}, {0, 1}},
       {{1, 1}, {2, 1}, {2, 2}, {1, 2}}},
      true, false);

  // (c) two tiles sharing one full edge (bent boundary, same topology)
  {
    CellComplex2 c = complex_from_loops({{{0, 0}, {2, 0}, {2, 2}, {0, 2}},
                                         {{2, 0}, {4, 0}, {4, 2}, {2, 2}}});
    // bend the shared edge; render-only
    for (auto& [eid, e] : c.edges) {
      const Vec2 a = c.vertices.at(e.a), b = c.vertices.at(e.b);
      if (a.x == 2 && b.x == 2) e.bend = {{3, 1}};
    }
    std::set<Id> faces;
    for (const auto& [fid, _] : c.faces) faces.insert(fid);
    out.push_back({"tiles-c-bent-shared-edge", std::move(c), std::move(faces),
                   true, true});
  }

  // (d) two bricks under one spanning brick; triple meets in a T-point
  add("tiles-d-t-junction",
      {{{0, 0}, {2, 0}, {2, 1}, {0, 1}},
       {{2, 0}, {4, 0}, {4, 1}, {2, 1}},
       {{0, 1}, {2, 1}, {4, 1}, {4, 2}, {0, 2}}},
      true, true);

  // (e) four tiles of mixed sizes, cuts disjoint between the rows
  add("tiles-e-mixed-sizes",
      {{{0, 0}, {3, 0}, {3, 2}, {1, 2}, {0, 2}},
       {{3, 0}, {6, 0}, {6, 2}, {3, 2}},
       {{0, 2}, {1, 2}, {1, 4}, {0, 4}},
       {{1, 2}, {3, 2}, {6, 2}, {6, 4}, {1, 4}}},
      true, true);

  return out;
}

}  // namespace lcl::fixtures
