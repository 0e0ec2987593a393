#pragma once

#include <string>

#include "lcl/cell_complex.hpp"
#include "lcl/graph.hpp"
#include "lcl/lcl_check.hpp"

namespace lcl {

/// Tiling file format (JSON, see FORMATS.md). Round trips losslessly.
std::string write_tiling(const CellComplex2& c);
CellComplex2 read_tiling(const std::string& text);

std::string write_arc_tiling(const ArcTiling1D& t);
ArcTiling1D read_arc_tiling(const std::string& text);
/// True when the document carries a 1D tiling ("kind": circle|segment).
bool is_arc_tiling_document(const std::string& text);

/// Plain edge-list format: `p N` header, `v id` lines for isolated points,
/// `u v` lines per edge, `c` comments.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(const std::string& text);

std::string to_dot(const Graph& g);

std::string report_to_json(const LclReport& r);

/// Tiles as filled polygons; optionally the digital model overlaid as a
/// node-link diagram at face centroids.
std::string render_svg(const CellComplex2& c, bool overlay_model);

}  // namespace lcl
