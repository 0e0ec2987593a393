#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "lcl/errors.hpp"
#include "lcl/graph.hpp"

namespace lcl {

struct Vec2 {
  long long x = 0;
  long long y = 0;
  auto operator<=>(const Vec2&) const = default;
};

struct EdgeDef {
  Id a = 0;
  Id b = 0;
  std::vector<Vec2> bend;  // render-only interior points
  bool operator==(const EdgeDef&) const = default;
};

struct EdgeRef {
  Id edge = 0;
  bool rev = false;
  bool operator==(const EdgeRef&) const = default;
};

/// Planar subdivision with disk-like faces given as closed boundary walks.
/// Coordinates are for generation and rendering only; every topology check
/// is an incidence check on ids. Immutable after build_complex.
struct CellComplex2 {
  std::map<Id, Vec2> vertices;
  std::map<Id, EdgeDef> edges;
  std::map<Id, std::vector<EdgeRef>> faces;
  bool torus = false;

  // derived by build_complex
  std::map<Id, int> edge_face_count;

  Id walk_source(const EdgeRef& r) const {
    const EdgeDef& e = edges.at(r.edge);
    return r.rev ? e.b : e.a;
  }
  Id walk_target(const EdgeRef& r) const {
    const EdgeDef& e = edges.at(r.edge);
    return r.rev ? e.a : e.b;
  }

  /// Boundary-walk vertices of `f`, in walk order.
  std::vector<Id> face_vertices(Id f) const;
  /// Boundary-walk edge ids of `f`, in walk order.
  std::vector<Id> face_edge_ids(Id f) const;

  bool has_face(Id f) const { return faces.count(f) != 0; }
};

/// Validates all CellComplex2 invariants and fills the derived tables.
CellComplex2 build_complex(std::map<Id, Vec2> vertices,
                           std::map<Id, EdgeDef> edges,
                           std::map<Id, std::vector<EdgeRef>> faces,
                           bool torus = false);

struct SharedCells {
  std::set<Id> vertices;
  std::set<Id> edges;
  bool empty() const { return vertices.empty() && edges.empty(); }
  bool operator==(const SharedCells&) const = default;
};

enum class CellClass { Empty, Point, Arc, Circle, Disconnected, Branching };

const char* cell_class_name(CellClass c);

/// All boundary cells (vertices and edges) of one face.
SharedCells boundary_cells(const CellComplex2& c, Id face);

/// Cells lying on the boundary walk of every face in `faces`; a singleton
/// returns the face's own boundary.
SharedCells shared_subcomplex(const CellComplex2& c, const std::set<Id>& faces);

/// Shape of a subcomplex: point, open arc, closed circle, or invalid.
CellClass classify_cells(const CellComplex2& c, const SharedCells& s);

/// Faces none of whose boundary edges are complex-boundary edges.
/// On a torus complex this is every face.
std::set<Id> interior_faces(const CellComplex2& c);

// ---------------------------------------------------------------------------
// 1D tilings: cyclic or linear sequences of arcs meeting at endpoints.

enum class ArcKind { Circle, Segment };

struct ArcSpan {
  Id start = 0;
  Id end = 0;
  bool operator==(const ArcSpan&) const = default;
};

struct ArcTiling1D {
  ArcKind kind = ArcKind::Circle;
  std::vector<Id> breakpoints;
  std::vector<ArcSpan> arcs;
  bool operator==(const ArcTiling1D&) const = default;
};

/// Consecutive arcs over the given breakpoints; Circle kind closes up.
ArcTiling1D make_arc_tiling(ArcKind kind, std::vector<Id> breakpoints);

}  // namespace lcl
