#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gshi/errors.hpp"

namespace gshi {

using Int = boost::multiprecision::cpp_int;

/// Simple connected graph on vertices 0..n-1. The edge list is canonical:
/// every pair is stored (i, j) with i < j and the list is sorted, so two
/// structurally equal graphs compare equal. Vertex numbering is significant
/// and is never permuted by the library.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const;
  bool has_edge(int i, int j) const;
  std::vector<std::vector<int>> adjacency() const;
  int edge_index(int i, int j) const;  // -1 if absent

  bool operator==(const SimpleGraph&) const = default;
};

/// The base graph plus a sink vertex (index base.n) adjacent to every base
/// vertex exactly once.
struct ConedGraph {
  SimpleGraph base;

  int sink() const { return base.n; }
  int vertex_count() const { return base.n + 1; }
  int degree(int v) const;
};

/// Validates and canonicalizes. Throws self_loop, duplicate_edge,
/// vertex_out_of_range or disconnected.
SimpleGraph make_graph(int n, std::vector<std::pair<int, int>> edges);

SimpleGraph path_graph(int n);                     // vertices 0-1-...-(n-1)
SimpleGraph cycle_graph(int n);                    // path plus edge {0, n-1}
SimpleGraph star_graph(int n);                     // center 0, spokes 1..n
SimpleGraph complete_graph(int n);
SimpleGraph complete_minus(int n, int i, int j);   // K_n without edge {i, j}

struct FamilySpec {
  std::string kind;  // path | cycle | star | complete | complete_minus
  int n = 0;
  int i = -1, j = -1;  // removed edge, complete_minus only
};

SimpleGraph build_family(const FamilySpec& spec);

/// One representative per isomorphism class of trees on n vertices.
std::vector<SimpleGraph> all_trees(int n);

ConedGraph cone(SimpleGraph g);

/// Number of edges from v to vertices outside s. With s empty this is deg(v).
int outdeg(const SimpleGraph& g, const std::vector<int>& s, int v);
int outdeg(const ConedGraph& cg, const std::vector<int>& s, int v);

/// Dense square matrix of exact integers.
struct IntMatrix {
  int d = 0;
  std::vector<Int> a;

  static IntMatrix zero(int d);
  Int& at(int r, int c) { return a[static_cast<size_t>(r) * d + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * d + c]; }
};

/// Laplacian of the cone with the sink row and column deleted: diagonal holds
/// cone degrees, off-diagonal entries are -1 per base edge.
IntMatrix reduced_laplacian(const ConedGraph& cg);

/// Exact determinant via Bareiss fraction-free elimination.
Int det_exact(IntMatrix m);

}  // namespace gshi
