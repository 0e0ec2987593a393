#pragma once

#include <string>
#include <vector>

#include "lcl/cell_complex.hpp"

namespace lcl::fixtures {

// Hand-encoded combinatorial fixtures: small collections of 1-tiles and
// 2-tiles with known LC/LL verdicts.

struct Collection1D {
  std::string name;
  CellComplex2 skeleton;                // vertices + edges only
  std::vector<std::vector<Id>> tiles;   // each tile is an edge path
  bool lc = false;
  bool ll = false;
};

struct Collection2D {
  std::string name;
  CellComplex2 complex;
  std::set<Id> faces;
  bool lc = false;
  bool ll = false;
};

/// Build a complex from closed coordinate loops; vertices and edges are
/// shared by coordinate.
CellComplex2 complex_from_loops(
    const std::vector<std::vector<Vec2>>& loops);

/// Five collections of 1-tiles: overlapping arcs (LC only), a three-arc
/// circle (LL only), and three LCL collections.
std::vector<Collection1D> arc_collection_fixtures();

/// Five collections of 2-tiles: a ring of three tiles around a hole (LL
/// only), two corner-touching squares (LC only), and three LCL collections.
std::vector<Collection2D> tile_collection_fixtures();

}  // namespace lcl::fixtures
