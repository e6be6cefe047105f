#pragma once

#include <vector>

#include "gshi/graph.hpp"

namespace gshi {

/// Chips on the non-sink vertices of a coned graph; entry v counts the chips
/// at vertex v. All entries stay non-negative. The sink carries no count.
using ChipConfig = std::vector<int>;

/// Fire a single non-sink vertex: it loses its cone degree, each base
/// neighbor gains one chip, chips sent to the sink vanish.
ChipConfig fire(const ConedGraph& cg, const ChipConfig& c, int v);

/// Simultaneous fire of every vertex in s, i.e. c minus the reduced Laplacian
/// applied to the indicator of s. Net effect: v in s loses outdeg_s(v).
ChipConfig cluster_fire(const ConedGraph& cg, const ChipConfig& c, const std::vector<int>& s);

bool is_stable(const ConedGraph& cg, const ChipConfig& c);

/// Burning fixpoint started at the sink: a vertex burns once its burning
/// incident edges outnumber its chips. Returns the vertices never burnt,
/// sorted ascending. Order-independent (fixpoint of a monotone process).
std::vector<int> dhar_burn(const ConedGraph& cg, const ChipConfig& c);

/// True iff dhar_burn leaves no survivors, i.e. no legal cluster-fire exists.
bool is_superstable(const ConedGraph& cg, const ChipConfig& c);

/// Brute-force oracle: quantifies over every nonempty vertex subset and asks
/// for a member with fewer chips than its outdegree relative to the subset.
/// Agrees with is_superstable on every input. Requires n <= 20.
bool is_parking_function(const ConedGraph& cg, const ChipConfig& c);

/// All superstable configurations in lexicographic order. Search space is the
/// box 0 <= c_v <= deg(v)-1 filtered by the burning algorithm.
std::vector<ChipConfig> enumerate_superstables(const ConedGraph& cg);

/// Componentwise deg(v) - 1 over the cone.
ChipConfig max_config(const ConedGraph& cg);

/// Duality check: c is critical iff max_config - c is superstable. Throws
/// not_dominated if the difference has a negative entry.
bool is_critical(const ConedGraph& cg, const ChipConfig& c);

/// Maximal contiguous stretches of 0/1 entries between occurrences of 2;
/// k twos yield k+1 blocks, empty blocks included.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;
};

BlockDecomposition two_free_blocks(const ChipConfig& a);

/// Path criterion: superstable iff every 2-free block contains a 0. Empty
/// blocks contain no 0 and therefore fail.
bool path_superstable_by_blocks(const ChipConfig& a);

/// Cycle criterion: same rule with the entries arranged on a circle, so the
/// first and last blocks merge.
bool cycle_superstable_by_blocks(const ChipConfig& a);

/// Largest i < n such that the prefix (a_0, ..., a_{i-1}) is superstable on
/// the coned path P_i; 0 if no nonempty prefix qualifies.
int bucket_index(const ChipConfig& a);

}  // namespace gshi
