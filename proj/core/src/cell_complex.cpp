#include "lcl/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lcl {

const char* cell_class_name(CellClass c) {
  switch (c) {
    case CellClass::Empty: return "Empty";
    case CellClass::Point: return "Point";
    case CellClass::Arc: return "Arc";
    case CellClass::Circle: return "Circle";
    case CellClass::Disconnected: return "Disconnected";
    case CellClass::Branching: return "Branching";
  }
  return "?";
}

std::vector<Id> CellComplex2::face_vertices(Id f) const {
  auto it = faces.find(f);
  if (it == faces.end()) throw Error(Errc::UnknownFace, std::to_string(f));
  std::vector<Id> out;
  out.reserve(it->second.size());
  for (const EdgeRef& r : it->second) out.push_back(walk_source(r));
  return out;
}

std::vector<Id> CellComplex2::face_edge_ids(Id f) const {
  auto it = faces.find(f);
  if (it == faces.end()) throw Error(Errc::UnknownFace, std::to_string(f));
  std::vector<Id> out;
  out.reserve(it->second.size());
  for (const EdgeRef& r : it->second) out.push_back(r.edge);
  return out;
}

CellComplex2 build_complex(std::map<Id, Vec2> vertices,
                           std::map<Id, EdgeDef> edges,
                           std::map<Id, std::vector<EdgeRef>> faces,
                           bool torus) {
  CellComplex2 c;
  c.vertices = std::move(vertices);
  c.edges = std::move(edges);
  c.faces = std::move(faces);
  c.torus = torus;

  for (const auto& [eid, e] : c.edges) {
    if (!c.vertices.count(e.a) || !c.vertices.count(e.b))
      throw Error(Errc::DanglingReference,
                  "edge " + std::to_string(eid) + " endpoint missing");
  }

  if (!c.torus) {
    std::set<Vec2> seen;
    for (const auto& [vid, p] : c.vertices) {
      if (!seen.insert(p).second)
        throw Error(Errc::DuplicateCoordinate,
                    "vertex " + std::to_string(vid) + " shares coordinates");
    }
  }

  for (const auto& [eid, _] : c.edges) c.edge_face_count[eid] = 0;

  for (const auto& [fid, walk] : c.faces) {
    if (walk.empty())
      throw Error(Errc::OpenFaceWalk, "face " + std::to_string(fid) + " empty");
    for (const EdgeRef& r : walk)
      if (!c.edges.count(r.edge))
        throw Error(Errc::DanglingReference, "face " + std::to_string(fid) +
                                                 " uses missing edge " +
                                                 std::to_string(r.edge));
    std::set<Id> visited;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const EdgeRef& r = walk[i];
      Id from = c.walk_source(r);
      Id to = c.walk_target(r);
      const EdgeRef& next = walk[(i + 1) % walk.size()];
      if (to != c.walk_source(next))
        throw Error(Errc::OpenFaceWalk,
                    "face " + std::to_string(fid) + " breaks after edge " +
                        std::to_string(r.edge));
      if (!visited.insert(from).second)
        throw Error(Errc::PinchedFace, "face " + std::to_string(fid) +
                                           " revisits vertex " +
                                           std::to_string(from));
      int& count = c.edge_face_count[r.edge];
      if (++count > 2)
        throw Error(Errc::OverusedEdge,
                    "edge " + std::to_string(r.edge) + " in 3+ face walks");
    }
  }

  return c;
}

SharedCells boundary_cells(const CellComplex2& c, Id face) {
  SharedCells s;
  for (Id v : c.face_vertices(face)) s.vertices.insert(v);
  for (Id e : c.face_edge_ids(face)) s.edges.insert(e);
  return s;
}

SharedCells shared_subcomplex(const CellComplex2& c, const std::set<Id>& faces) {
  if (faces.empty()) throw Error(Errc::UnknownFace, "empty face set");
  auto it = faces.begin();
  SharedCells acc = boundary_cells(c, *it);
  for (++it; it != faces.end(); ++it) {
    SharedCells b = boundary_cells(c, *it);
    SharedCells next;
    std::ranges::set_intersection(acc.vertices, b.vertices,
                                  std::inserter(next.vertices, next.vertices.end()));
    std::ranges::set_intersection(acc.edges, b.edges,
                                  std::inserter(next.edges, next.edges.end()));
    acc = std::move(next);
  }
  return acc;
}

CellClass classify_cells(const CellComplex2& c, const SharedCells& s) {
  if (s.empty()) return CellClass::Empty;
  if (s.vertices.size() == 1 && s.edges.empty()) return CellClass::Point;
  if (s.edges.empty()) return CellClass::Disconnected;  // 2+ isolated vertices

  std::map<Id, int> deg;
  for (Id v : s.vertices) deg[v] = 0;
  for (Id eid : s.edges) {
    const EdgeDef& e = c.edges.at(eid);
    ++deg[e.a];
    ++deg[e.b];
  }

  // connectivity over the listed vertices via the listed edges
  std::map<Id, std::vector<Id>> adj;
  for (Id eid : s.edges) {
    const EdgeDef& e = c.edges.at(eid);
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::set<Id> seen;
  std::vector<Id> stack{*s.vertices.begin()};
  seen.insert(stack.back());
  while (!stack.empty()) {
    Id v = stack.back();
    stack.pop_back();
    for (Id u : adj[v])
      if (seen.insert(u).second) stack.push_back(u);
  }
  if (seen.size() != s.vertices.size()) return CellClass::Disconnected;

  int deg1 = 0;
  for (const auto& [v, d] : deg) {
    if (d >= 3) return CellClass::Branching;
    if (d == 0) return CellClass::Disconnected;
    if (d == 1) ++deg1;
  }
  if (deg1 == 2 && s.edges.size() + 1 == s.vertices.size()) return CellClass::Arc;
  if (deg1 == 0 && s.edges.size() == s.vertices.size()) return CellClass::Circle;
  return CellClass::Disconnected;
}

std::set<Id> interior_faces(const CellComplex2& c) {
  std::set<Id> out;
  for (const auto& [fid, walk] : c.faces) {
    bool interior = true;
    if (!c.torus) {
      for (const EdgeRef& r : walk) {
        if (c.edge_face_count.at(r.edge) < 2) {
          interior = false;
          break;
        }
      }
    }
    if (interior) out.insert(fid);
  }
  return out;
}

ArcTiling1D make_arc_tiling(ArcKind kind, std::vector<Id> breakpoints) {
  if (breakpoints.empty())
    throw Error(Errc::TooSmall, "arc tiling needs breakpoints");
  if (kind == ArcKind::Segment && breakpoints.size() < 2)
    throw Error(Errc::TooSmall, "segment tiling needs 2+ breakpoints");
  ArcTiling1D t;
  t.kind = kind;
  t.breakpoints = std::move(breakpoints);
  std::size_t n = t.breakpoints.size();
  std::size_t arcs = kind == ArcKind::Circle ? n : n - 1;
  for (std::size_t i = 0; i < arcs; ++i)
    t.arcs.push_back({t.breakpoints[i], t.breakpoints[(i + 1) % n]});
  return t;
}

}  // namespace lcl
