#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lcl/cell_complex.hpp"

namespace lcl {

struct Tiling2 {
  CellComplex2 complex;
  std::set<Id> faces;
  std::map<Id, int> face_level;  // refinement level per face; 0 for uniform families
};

/// Offset rows of equal rectangles; interior/torus tiles have six neighbors.
/// Torus mode needs cols, rows >= 3.
Tiling2 gen_brick(int cols, int rows, bool torus);

/// Hexagonal tiling (same adjacency family as brick, hexagon geometry).
Tiling2 gen_hex(int cols, int rows, bool torus);

/// Truncated-square tiling: octagons with squares at alternate corners.
/// Torus mode needs m, n >= 3.
Tiling2 gen_trunc_square(int m, int n, bool torus);

/// Axis-aligned square grid with 4-fold corners; fails LCL whenever both
/// dimensions are >= 2. Deliberate negative fixture.
Tiling2 gen_square4(int cols, int rows);

ArcTiling1D gen_circle_arcs(int k);
ArcTiling1D gen_segment_arcs(int k);

/// Per-unit-cell refinement levels over an integer domain.
struct DensityField {
  int width = 0;
  int height = 0;
  int base_size = 0;  // coarse tile edge, units
  int ratio = 2;      // size divisor per level
  std::vector<std::uint8_t> level;  // row-major width*height

  int level_at(int x, int y) const { return level[static_cast<std::size_t>(y) * width + x]; }
  int max_level() const;
  /// base_size / ratio^l
  int size_at_level(int l) const;
};

DensityField uniform_density(int width, int height, int base_size, int ratio,
                             int lvl = 0);

/// Row-graded brick construction: row heights follow the finest level in the
/// band, vertical cuts follow the local level, and interior cut x-coordinates
/// of vertically adjacent rows are kept disjoint (half-spacing offset, then
/// ±1 shifts). Every interior vertex is a T-junction.
Tiling2 gen_graded_brick(const DensityField& d);

}  // namespace lcl
