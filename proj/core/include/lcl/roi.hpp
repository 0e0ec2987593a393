#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lcl/generators.hpp"
#include "lcl/graph.hpp"
#include "lcl/lcl_check.hpp"

namespace lcl {

struct Mask {
  int width = 0;
  int height = 0;
  int maxval = 255;
  int threshold = 127;  // pixel is in the ROI when value > threshold
  std::vector<int> values;  // row-major

  bool in_roi(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x] > threshold;
  }
  std::size_t roi_count() const;
};

/// PGM reader, P2 (ASCII) and P5 (binary), `#` comments allowed in the
/// header. Threshold defaults to maxval/2.
Mask read_pgm(std::istream& in);
Mask read_pgm_file(const std::string& path);

/// Chessboard distance to the nearest ROI pixel, row-major; INT_MAX/2 when
/// the mask has no ROI pixels.
std::vector<int> chessboard_distance(const Mask& m);

/// ROI cells get level levels-1; the level drops by one per `halo` band of
/// chessboard distance outward until 0.
DensityField mask_to_density(const Mask& m, int levels, int base_size,
                             int ratio, int halo);

struct PipelineParams {
  int levels = 3;
  int base_size = 8;
  int ratio = 2;
  int halo = 4;
  int threshold = -1;  // -1: use maxval/2
};

struct PipelineStats {
  std::size_t tile_count = 0;
  long long min_tile_width = 0;
  long long max_tile_width = 0;
  std::map<int, std::size_t> per_level;
};

struct PipelineResult {
  Tiling2 tiling;
  Graph model;
  LclReport lcl;
  bool manifold_ok = false;
  std::map<int, int> type_report;  // interior rim length -> count
  PipelineStats stats;
};

/// mask -> density field -> graded brick grid -> LCL check -> digital model
/// -> 2-manifold check. A failed internal validation surfaces as
/// PipelineInvariantBroken.
PipelineResult discretize(const Mask& m, const PipelineParams& p);

}  // namespace lcl
