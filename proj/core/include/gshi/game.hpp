#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gshi/regions.hpp"

namespace gshi {

/// One choice per board column. A column for edge {i, j} with i < j shows i
/// in the top square and j in the bottom square; the middle square is blank.
/// Choices and edge states share one representation:
/// top = below, mid = between, bottom = above.
enum class Choice : std::uint8_t { top = 0, mid = 1, bottom = 2 };

using History = std::vector<Choice>;

StateVector to_states(const History& h);
History to_history(const StateVector& s);

History parse_history(const std::string& text);  // over {T, M, B}
std::string history_string(const History& h);

/// Multiset of the numbers chosen, as counts per vertex. Middle squares
/// contribute nothing. Equals direct_label of the corresponding region.
Label outcome_of(const SimpleGraph& board, const History& h);

/// L1 distance between outcome count vectors.
int outcome_distance(const Label& a, const Label& b);

/// Half-open column interval of one prepattern. Breaks fall before every
/// descent and before a second middle square would enter a block; the blocks
/// holding a middle square are the patterns.
struct Prepattern {
  int begin = 0;
  int end = 0;
  bool is_pattern = false;

  int length() const { return end - begin; }
};

/// Requires a path board (columns (i, i+1) in order).
std::vector<Prepattern> prepattern_split(const SimpleGraph& board, const History& h);

/// Number of feasible histories with the given outcome, by exhaustive region
/// enumeration.
long long brute_multiplicity(const SimpleGraph& g, const Label& o, long long cap = kDefaultCap);

/// Maximal section of the form (0, 1, ..., 1, 0): `length` consecutive
/// entries equal to 1 starting at `start`, with zero entries on both sides.
struct Run {
  int start = 0;
  int length = 0;
};

std::vector<Run> runs_of(const Label& label);

/// Product of (run length + 1) over the runs of a path label. Throws
/// not_a_parking_function unless the label is superstable on the coned path.
long long path_multiplicity(const Label& label);

/// True iff the label appears exactly once: between every two successive
/// zeros that are not adjacent there must be a 2.
bool unique_label_check_path(const Label& label);

/// All histories of the path game with the given outcome, lexicographic in
/// (T < M < B). Forced columns are pinned first; each run contributes a
/// sliding block of bottoms, one middle, then tops. Throws unachievable.
std::vector<History> enumerate_histories_for_outcome_path(const Label& o);

/// Union of the chosen cells per column over all histories with the label,
/// rendered as one constraint per column.
struct ColumnConstraint {
  enum class Kind : std::uint8_t {
    below,         // x_i - x_j < 0
    between,       // 0 < x_i - x_j < 1
    above,         // x_i - x_j > 1
    greater_zero,  // bottom-or-middle: x_i - x_j > 0
    less_one,      // middle-or-top:    x_i - x_j < 1
    free,          // all three cells occur
  };

  Kind kind = Kind::free;
  int i = 0, j = 0;
};

std::vector<ColumnConstraint> bounding_constraints_for_label_path(const Label& label);
std::string constraint_string(const ColumnConstraint& c);

/// binomial(c0 + free, c0) where c0 is the count at the center and `free` the
/// columns pinned neither by a spoke nor by the center count.
long long star_multiplicity(int n, const Label& label);

/// Number of distinct labels of the star with n spokes: (n+2) * 2^(n-1).
long long star_distinct_label_count(int n);

/// All histories of the star game with the given outcome.
std::vector<History> star_enumerate_histories_for_label(int n, const Label& label);

/// Board order for the cycle game on n columns: path columns
/// (0,1), (1,2), ..., (n-2, n-1) and then the cycle column {0, n-1} last.
StateVector states_from_cycle_board(const History& board);
History cycle_board_from_states(const StateVector& states);

/// Legality of a cycle-game history in board order, by the three rules:
/// all-T path forces cycle T; one-M-rest-T path forbids cycle B; an all-M/B
/// path forces cycle B unless every path choice is M.
bool cycle_history_legal(const History& h);

/// The four-step listing of cycle-game histories with a given label: path
/// enumerations for the outcome with cycle choice M, minus one 0 with cycle
/// choice T, minus one n-1 with cycle choice B, each filtered for legality.
/// Returned in board order, deduplicated and sorted. Throws unachievable.
std::vector<History> cycle_enumerate_histories_for_label(const Label& label);

/// Largest product of positive integers summing to n.
long long max_product_partition(int n);

/// The path labels of maximal multiplicity together with that multiplicity.
std::pair<std::vector<Label>, long long> max_multiplicity_labels_path(int n);

/// Three-row board rendering with the chosen cells bracketed.
std::string render_board(const std::vector<std::pair<int, int>>& columns, const History& h);

}  // namespace gshi
