#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lcl/cell_complex.hpp"
#include "lcl/graph.hpp"

namespace lcl {

enum class Tri { Yes, No, Unknown };

inline constexpr std::uint64_t kDefaultCliqueCap = 1'000'000;
inline constexpr std::uint64_t kDefaultContractBudget = 200'000;
inline constexpr std::size_t kIsoSizeCap = 64;

/// Digital model: one point per tile, edge iff the pair's intersection is
/// nonempty.
Graph intersection_graph(const CellComplex2& c, const std::set<Id>& faces);
/// Digital model of an arc tiling; points are arc indices.
Graph intersection_graph(const ArcTiling1D& t);

/// Subgraph induced by the neighbors of v, v excluded.
Graph rim(const Graph& g, Id v);
/// Rim plus v with all its edges.
Graph ball(const Graph& g, Id v);

/// Exactly two points and no edge.
bool is_digital_0_sphere(const Graph& g);

/// counts[k-1] = number of complete subgraphs on k points, k >= 1.
std::vector<std::uint64_t> clique_counts(const Graph& g,
                                         std::uint64_t cap = kDefaultCliqueCap);
std::size_t clique_number(const Graph& g,
                          std::uint64_t cap = kDefaultCliqueCap);
/// χ = Σ_{k>=1} (−1)^{k+1} · #(k-cliques).
long long euler_characteristic(const Graph& g,
                               std::uint64_t cap = kDefaultCliqueCap);

struct DeleteVertex { Id v = 0; };
struct GlueVertex { Id v = 0; std::set<Id> neighbors; };
struct DeleteEdge { Id u = 0, v = 0; };
struct GlueEdge { Id u = 0, v = 0; };
using CtMove = std::variant<DeleteVertex, GlueVertex, DeleteEdge, GlueEdge>;

std::string ct_move_name(const CtMove& m);

/// Applies one contractible transformation after checking its guard:
/// vertex moves need a contractible rim / neighbor set, edge moves a
/// contractible common neighborhood. Preserves the Euler characteristic.
Graph apply_ct(const Graph& g, const CtMove& m,
               std::uint64_t budget = kDefaultContractBudget);

struct ContractionWitness {
  Tri verdict = Tri::Unknown;
  std::vector<Id> deletions;  // replayable DeleteVertex sequence when Yes
};

/// Search for a vertex-deletion sequence down to a single point. No is
/// definitive whenever the search space was exhausted within budget
/// (always the case for graphs with few points); Unknown otherwise.
ContractionWitness contract_to_point(const Graph& g,
                                     std::uint64_t budget = kDefaultContractBudget);
Tri is_contractible(const Graph& g,
                    std::uint64_t budget = kDefaultContractBudget);

/// Definitional recognizer: n=0 is the two-point test; n=1 additionally
/// requires S⁰ rims everywhere and contractible point-deleted subgraphs.
Tri is_digital_sphere_def(const Graph& g, int n,
                          std::uint64_t budget = kDefaultContractBudget);

/// Fast path: a single cycle on >= 4 points.
bool is_digital_1_sphere_fast(const Graph& g);

/// Interior points need S⁰ rims; points outside `interior` need a
/// single-point rim (boundary of a finite truncation).
bool is_digital_1_manifold(const Graph& g, const std::set<Id>& interior);

/// Interior points need cycle rims of length >= 4; points outside `interior`
/// need a nonempty simple-path rim.
bool is_digital_2_manifold(const Graph& g, const std::set<Id>& interior);

/// Rim cycle length -> count over interior points. NotAManifold if the
/// 2-manifold check fails.
std::map<int, int> manifold_type(const Graph& g, const std::set<Id>& interior);

/// "(6,6)" for {6}, "(4,8)" for {4,8}, general "(a,b,...)" otherwise.
std::string format_manifold_type(const std::map<int, int>& type);

/// Exact isomorphism by backtracking with degree pruning; SizeCapExceeded
/// above `size_cap` points.
bool graphs_isomorphic(const Graph& a, const Graph& b,
                       std::size_t size_cap = kIsoSizeCap);

}  // namespace lcl
