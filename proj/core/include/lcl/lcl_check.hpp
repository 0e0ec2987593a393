#pragma once

#include <set>
#include <vector>

#include "lcl/cell_complex.hpp"

namespace lcl {

/// Violation kinds are dimension-relative: for 2-tiles a pair must meet in an
/// arc and a triple in a point; for 1-tiles a pair must meet in a point and a
/// triple must be empty. PairNotArc / TripleNotPoint name the 2D reading.
enum class ViolationKind {
  PairNotArc,
  TripleNotPoint,
  QuadNonempty,
  TripleEmptyButPairwise,
  OversizeCliqueNoCommon,
};

const char* violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::vector<Id> faces;  // sorted tile ids involved
  SharedCells witness;
};

struct LclReport {
  bool lc_ok = true;
  bool ll_ok = true;
  std::vector<Violation> violations;
  bool pass() const { return lc_ok && ll_ok; }
};

/// LC + LL verdict for a collection of 2-tiles (faces of a valid complex).
LclReport check_lcl_2d(const CellComplex2& c, const std::set<Id>& faces);

/// LC + LL verdict for a collection of 1-tiles given as edge paths over the
/// complex skeleton (faces of `c` are ignored). Tile index = position.
LclReport check_lcl_1d_paths(const CellComplex2& c,
                             const std::vector<std::vector<Id>>& tiles);

/// LC + LL verdict for an arc tiling of a circle or segment.
LclReport check_lcl_1d(const ArcTiling1D& t);

/// Re-runs check_lcl_2d on `subset`; requires subset of `faces`.
LclReport subcollection_check(const CellComplex2& c, const std::set<Id>& faces,
                              const std::set<Id>& subset);

/// U: tiles adjacent to the center, in arc order around its boundary.
/// V: the tiling of the center's boundary by the shared arcs C_i.
struct NeighborhoodPair {
  Id center = 0;
  std::vector<Id> u;
  ArcTiling1D v;
  std::vector<SharedCells> shared;  // shared[i] = center ∩ u[i]
};

/// Requires LCL to hold on `faces` (NotLcl otherwise).
NeighborhoodPair neighborhood_collection(const CellComplex2& c,
                                         const std::set<Id>& faces, Id d0);

}  // namespace lcl
