#include "lcl/lcl_check.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace lcl {

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::PairNotArc: return "PairNotArc";
    case ViolationKind::TripleNotPoint: return "TripleNotPoint";
    case ViolationKind::QuadNonempty: return "QuadNonempty";
    case ViolationKind::TripleEmptyButPairwise: return "TripleEmptyButPairwise";
    case ViolationKind::OversizeCliqueNoCommon: return "OversizeCliqueNoCommon";
  }
  return "?";
}

namespace {

SharedCells intersect(const SharedCells& a, const SharedCells& b) {
  SharedCells out;
  std::ranges::set_intersection(a.vertices, b.vertices,
                                std::inserter(out.vertices, out.vertices.end()));
  std::ranges::set_intersection(a.edges, b.edges,
                                std::inserter(out.edges, out.edges.end()));
  return out;
}

bool is_lc_kind(ViolationKind k) {
  return k == ViolationKind::TripleEmptyButPairwise ||
         k == ViolationKind::OversizeCliqueNoCommon;
}

// Shared LC/LL engine over precomputed tile cell sets. `dim` is the tile
// dimension: pairs of 2-tiles must meet in arcs and triples in points;
// pairs of 1-tiles must meet in points and triples must be empty.
LclReport check_collection(const CellComplex2& c, const std::vector<Id>& ids,
                           const std::vector<SharedCells>& cells, int dim) {
  const std::size_t n = ids.size();
  LclReport rep;

  auto add = [&](ViolationKind kind, std::vector<Id> faces, SharedCells w) {
    std::ranges::sort(faces);
    if (is_lc_kind(kind)) rep.lc_ok = false;
    else rep.ll_ok = false;
    rep.violations.push_back({kind, std::move(faces), std::move(w)});
  };

  if (dim == 1) {
    // each 1-tile must itself be an arc
    for (std::size_t i = 0; i < n; ++i)
      if (classify_cells(c, cells[i]) != CellClass::Arc)
        add(ViolationKind::PairNotArc, {ids[i]}, cells[i]);
  }

  // candidate pairs share at least one vertex
  std::map<Id, std::vector<std::size_t>> at_vertex;
  for (std::size_t i = 0; i < n; ++i)
    for (Id v : cells[i].vertices) at_vertex[v].push_back(i);

  std::vector<std::vector<std::size_t>> adj(n);  // ascending neighbor indices
  {
    std::set<std::pair<std::size_t, std::size_t>> candidates;
    for (const auto& [v, tiles] : at_vertex)
      for (std::size_t a = 0; a < tiles.size(); ++a)
        for (std::size_t b = a + 1; b < tiles.size(); ++b)
          candidates.emplace(std::min(tiles[a], tiles[b]),
                             std::max(tiles[a], tiles[b]));
    for (auto [i, j] : candidates) {
      SharedCells sh = intersect(cells[i], cells[j]);
      if (sh.empty()) continue;
      CellClass cls = classify_cells(c, sh);
      CellClass want = dim == 2 ? CellClass::Arc : CellClass::Point;
      if (cls != want) add(ViolationKind::PairNotArc, {ids[i], ids[j]}, sh);
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
    for (auto& row : adj) std::ranges::sort(row);
  }

  auto common_above = [&](const std::vector<std::size_t>& a,
                          const std::vector<std::size_t>& b, std::size_t floor) {
    std::vector<std::size_t> out;
    std::ranges::set_intersection(a, b, std::back_inserter(out));
    std::erase_if(out, [&](std::size_t x) { return x <= floor; });
    return out;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : adj[i]) {
      if (j <= i) continue;
      for (std::size_t k : common_above(adj[i], adj[j], j)) {
        SharedCells sh3 =
            intersect(intersect(cells[i], cells[j]), cells[k]);
        if (sh3.empty()) {
          add(ViolationKind::TripleEmptyButPairwise, {ids[i], ids[j], ids[k]},
              sh3);
        } else if (dim == 1 ||
                   classify_cells(c, sh3) != CellClass::Point) {
          add(ViolationKind::TripleNotPoint, {ids[i], ids[j], ids[k]}, sh3);
        }
        if (dim == 2) {
          for (std::size_t l : common_above(common_above(adj[i], adj[j], k),
                                            adj[k], k)) {
            SharedCells sh4 = intersect(sh3, cells[l]);
            if (!sh4.empty())
              add(ViolationKind::QuadNonempty, {ids[i], ids[j], ids[k], ids[l]},
                  sh4);
            else
              add(ViolationKind::OversizeCliqueNoCommon,
                  {ids[i], ids[j], ids[k], ids[l]}, sh4);
          }
        }
      }
    }
  }

  return rep;
}

}  // namespace

LclReport check_lcl_2d(const CellComplex2& c, const std::set<Id>& faces) {
  std::vector<Id> ids;
  std::vector<SharedCells> cells;
  for (Id f : faces) {
    if (!c.has_face(f)) throw Error(Errc::UnknownFace, std::to_string(f));
    ids.push_back(f);
    cells.push_back(boundary_cells(c, f));
  }
  return check_collection(c, ids, cells, 2);
}

LclReport check_lcl_1d_paths(const CellComplex2& c,
                             const std::vector<std::vector<Id>>& tiles) {
  std::vector<Id> ids;
  std::vector<SharedCells> cells;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    SharedCells s;
    for (Id eid : tiles[i]) {
      auto it = c.edges.find(eid);
      if (it == c.edges.end()) throw Error(Errc::DanglingReference, std::to_string(eid));
      s.edges.insert(eid);
      s.vertices.insert(it->second.a);
      s.vertices.insert(it->second.b);
    }
    ids.push_back(static_cast<Id>(i));
    cells.push_back(std::move(s));
  }
  return check_collection(c, ids, cells, 1);
}

LclReport check_lcl_1d(const ArcTiling1D& t) {
  // Skeleton complex: one private midpoint per arc so that arcs meet in
  // shared breakpoints only.
  Id fresh = 0;
  for (Id b : t.breakpoints) fresh = std::max(fresh, b + 1);
  std::map<Id, Vec2> vs;
  std::map<Id, EdgeDef> es;
  long long x = 0;
  for (Id b : t.breakpoints) vs[b] = {x++, 0};
  std::vector<std::vector<Id>> tiles;
  Id eid = 0;
  for (const ArcSpan& a : t.arcs) {
    Id mid = fresh++;
    vs[mid] = {x++, 1};
    es[eid] = {a.start, mid, {}};
    es[eid + 1] = {mid, a.end, {}};
    tiles.push_back({eid, eid + 1});
    eid += 2;
  }
  CellComplex2 c = build_complex(std::move(vs), std::move(es), {}, false);
  return check_lcl_1d_paths(c, tiles);
}

LclReport subcollection_check(const CellComplex2& c, const std::set<Id>& faces,
                              const std::set<Id>& subset) {
  if (!std::ranges::includes(faces, subset))
    throw Error(Errc::SubsetNotContained, "subset escapes the collection");
  return check_lcl_2d(c, subset);
}

NeighborhoodPair neighborhood_collection(const CellComplex2& c,
                                         const std::set<Id>& faces, Id d0) {
  if (!faces.count(d0) || !c.has_face(d0))
    throw Error(Errc::UnknownFace, std::to_string(d0));
  if (!check_lcl_2d(c, faces).pass())
    throw Error(Errc::NotLcl, "collection fails LCL");

  const std::vector<Id> walk_vs = c.face_vertices(d0);
  const std::vector<Id> walk_es = c.face_edge_ids(d0);
  std::map<Id, std::size_t> pos;
  for (std::size_t i = 0; i < walk_vs.size(); ++i) pos[walk_vs[i]] = i;

  struct ArcInfo {
    Id face;
    Id start, end;
    std::size_t start_pos;
    SharedCells cells;
  };
  std::vector<ArcInfo> arcs;

  for (Id f : faces) {
    if (f == d0) continue;
    SharedCells sh = shared_subcomplex(c, {d0, f});
    if (sh.empty()) continue;
    // LCL guarantees an arc; orient it along d0's walk
    std::map<Id, int> deg;
    for (Id v : sh.vertices) deg[v] = 0;
    for (Id e : sh.edges) {
      ++deg[c.edges.at(e).a];
      ++deg[c.edges.at(e).b];
    }
    Id start = -1, end = -1;
    for (const auto& [v, d] : deg) {
      if (d != 1) continue;
      std::size_t p = pos.at(v);
      if (sh.edges.count(walk_es[p]))
        start = v;
      else
        end = v;
    }
    if (start < 0 || end < 0)
      throw Error(Errc::NotLcl, "shared cells of face " + std::to_string(f) +
                                    " are not an open arc");
    arcs.push_back({f, start, end, pos.at(start), std::move(sh)});
  }

  if (arcs.empty())
    throw Error(Errc::NonContiguousNeighborhood,
                "face " + std::to_string(d0) + " has no neighbors");

  std::map<Id, std::size_t> by_start;
  std::set<Id> ends;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    by_start[arcs[i].start] = i;
    ends.insert(arcs[i].end);
  }

  // A circle covering closes the chain; otherwise find the unique chain head.
  std::size_t head = arcs.size();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!ends.count(arcs[i].start)) {
      if (head != arcs.size())
        throw Error(Errc::NonContiguousNeighborhood,
                    "neighbors of " + std::to_string(d0) +
                        " do not chain around its boundary");
      head = i;
    }
  }
  bool circle = head == arcs.size();
  if (circle) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < arcs.size(); ++i)
      if (arcs[i].start_pos < arcs[best].start_pos) best = i;
    head = best;
  }

  NeighborhoodPair out;
  out.center = d0;
  std::vector<Id> breakpoints;
  std::size_t cur = head;
  for (std::size_t step = 0; step < arcs.size(); ++step) {
    const ArcInfo& a = arcs[cur];
    out.u.push_back(a.face);
    out.shared.push_back(a.cells);
    breakpoints.push_back(a.start);
    if (step + 1 < arcs.size()) {
      auto it = by_start.find(a.end);
      if (it == by_start.end())
        throw Error(Errc::NonContiguousNeighborhood,
                    "neighbors of " + std::to_string(d0) +
                        " do not chain around its boundary");
      cur = it->second;
    } else if (circle && a.end != arcs[head].start) {
      throw Error(Errc::NonContiguousNeighborhood, "chain does not close");
    } else if (!circle) {
      breakpoints.push_back(a.end);
    }
  }
  out.v = make_arc_tiling(circle ? ArcKind::Circle : ArcKind::Segment,
                          std::move(breakpoints));
  return out;
}

}  // namespace lcl
