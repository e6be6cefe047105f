#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gshi/graph.hpp"

namespace gshi {

/// Position of a region relative to the hyperplane pair of edge {i, j}, i < j:
///   below    x_i - x_j < 0
///   between  0 < x_i - x_j < 1
///   above    x_i - x_j > 1
/// The fourth sign combination is unrepresentable by construction.
enum class EdgeState : std::uint8_t { below = 0, between = 1, above = 2 };

/// One EdgeState per edge, in canonical edge order. A region of the
/// arrangement is exactly a feasible state vector.
using StateVector = std::vector<EdgeState>;

/// Nonnegative count vector over the vertices; a Pak-Stanley label, equally
/// an outcome multiset stored as counts. Same representation as ChipConfig.
using Label = std::vector<int>;

struct Region {
  SimpleGraph graph;
  StateVector states;
};

struct Rational {
  long long num = 0;
  long long den = 1;
};

inline constexpr long long kDefaultCap = 4782969;  // 3^14

/// Exact feasibility of the strict inequality system induced by the states.
/// Each strict constraint x_a - x_b < w becomes an arc of composite weight
/// (w, 1 strictness); the system is infeasible iff some cycle has total
/// integer weight < 0, or = 0 with positive strictness.
bool is_feasible(const SimpleGraph& g, const StateVector& s);
bool is_feasible(const Region& r);

/// A rational point strictly inside the region, built from shortest-path
/// potentials with slack 1/(2m+2); every inequality is re-checked exactly.
/// Throws infeasible when the region is empty.
std::vector<Rational> region_witness(const SimpleGraph& g, const StateVector& s);

/// All feasible state vectors in lexicographic order
/// (below < between < above). DFS over edges with incremental pruning.
std::vector<StateVector> enumerate_regions(const SimpleGraph& g, long long cap = kDefaultCap);

/// The all-between region: x_0 > x_1 > ... > x_{n-1} with x_0 - x_{n-1} < 1
/// restricted to the edges of g. Always feasible.
Region base_region(const SimpleGraph& g);

enum class Hyperplane : std::uint8_t { lower, upper };  // x_i - x_j = 0 / = 1

struct FacetCrossing {
  int edge = -1;
  Hyperplane plane = Hyperplane::lower;
};

/// Present iff the two regions differ in exactly one edge coordinate by one
/// step and share a full facet: the crossed hyperplane taken as an equality
/// together with all remaining strict inequalities must be solvable.
std::optional<FacetCrossing> facet_adjacent(const SimpleGraph& g, const StateVector& a,
                                            const StateVector& b);
std::optional<FacetCrossing> facet_adjacent(const Region& a, const Region& b);

struct AdjacencyDigraph {
  SimpleGraph graph;
  std::vector<StateVector> nodes;  // lexicographic

  struct Arc {
    int from = -1;
    int to = -1;
    int increment = -1;  // label coordinate bumped along this arc
  };

  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;  // arc indices per source node
  int source = -1;                    // the all-between node
};

/// Region adjacency directed away from the base region: arcs run
/// between -> below (labelled i) and between -> above (labelled j).
/// Acyclic with unique source.
AdjacencyDigraph adjacency_digraph(const SimpleGraph& g, long long cap = kDefaultCap);

/// Labels from the digraph: the source gets all zeros, each arc adds a unit
/// at its increment coordinate. Every parent of a node must agree; a
/// disagreement throws inconsistent_labels.
std::vector<Label> pak_stanley_labels(const AdjacencyDigraph& d);

/// The no-traversal shortcut: coordinate i counts below-edges with head i
/// plus above-edges with tail i. Equals the digraph labelling everywhere.
Label direct_label(const SimpleGraph& g, const StateVector& s);

/// Nodes with out-degree zero.
std::vector<int> sink_nodes(const AdjacencyDigraph& d);

struct MultiplicityReport {
  long long regions = 0;
  std::map<Label, long long> counts;
};

/// Counts of direct_label over all regions.
MultiplicityReport multiplicity_census(const SimpleGraph& g, long long cap = kDefaultCap);

/// Brute-force list of the regions carrying a given label.
std::vector<StateVector> regions_with_label(const SimpleGraph& g, const Label& p,
                                            long long cap = kDefaultCap);

/// Rendering used everywhere a region keys an output: T = below, M = between,
/// B = above (top / middle / bottom of the corresponding game column).
std::string state_string(const StateVector& s);
StateVector parse_state_string(const std::string& text);

}  // namespace gshi
