#include "gshi/game.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "gshi/chips.hpp"

namespace gshi {

StateVector to_states(const History& h) {
  StateVector s(h.size());
  for (size_t k = 0; k < h.size(); ++k) s[k] = static_cast<EdgeState>(h[k]);
  return s;
}

History to_history(const StateVector& s) {
  History h(s.size());
  for (size_t k = 0; k < s.size(); ++k) h[k] = static_cast<Choice>(s[k]);
  return h;
}

History parse_history(const std::string& text) { return to_history(parse_state_string(text)); }

std::string history_string(const History& h) { return state_string(to_states(h)); }

Label outcome_of(const SimpleGraph& board, const History& h) {
  return direct_label(board, to_states(h));
}

int outcome_distance(const Label& a, const Label& b) {
  if (a.size() != b.size()) fail(errc::bad_parameter, "outcomes over different vertex ranges");
  int d = 0;
  for (size_t v = 0; v < a.size(); ++v) d += std::abs(a[v] - b[v]);
  return d;
}

std::vector<Prepattern> prepattern_split(const SimpleGraph& board, const History& h) {
  if (!(board == path_graph(board.n))) fail(errc::not_a_path, "board must be a path");
  if (static_cast<int>(h.size()) != board.m())
    fail(errc::bad_parameter, "history length does not match the board");
  int cols = static_cast<int>(h.size());
  std::vector<Prepattern> blocks;
  if (cols == 0) return blocks;

  int start = 0;
  bool mid_in_block = h[0] == Choice::mid;
  for (int c = 1; c < cols; ++c) {
    bool descent = static_cast<int>(h[c]) > static_cast<int>(h[c - 1]);
    bool second_mid = h[c] == Choice::mid && mid_in_block;
    if (descent || second_mid) {
      blocks.push_back({start, c, mid_in_block});
      start = c;
      mid_in_block = false;
    }
    mid_in_block = mid_in_block || h[c] == Choice::mid;
  }
  blocks.push_back({start, cols, mid_in_block});
  return blocks;
}

long long brute_multiplicity(const SimpleGraph& g, const Label& o, long long cap) {
  if (static_cast<int>(o.size()) != g.n) fail(errc::bad_parameter, "label length must equal n");
  long long count = 0;
  for (const StateVector& s : enumerate_regions(g, cap))
    if (direct_label(g, s) == o) count++;
  return count;
}

std::vector<Run> runs_of(const Label& label) {
  int n = static_cast<int>(label.size());
  std::vector<Run> runs;
  // a run needs bounding zero entries on both sides, so it lives in [1, n-2]
  int v = 1;
  while (v < n) {
    if (label[v] == 1 && label[v - 1] == 0) {
      int b = v;
      while (b + 1 < n && label[b + 1] == 1) b++;
      if (b + 1 < n && label[b + 1] == 0) runs.push_back({v, b - v + 1});
      v = b + 1;
    } else {
      v++;
    }
  }
  return runs;
}

namespace {

void check_path_label(const Label& label) {
  int n = static_cast<int>(label.size());
  if (n < 1) fail(errc::not_a_parking_function, "empty label");
  for (int x : label)
    if (x < 0) fail(errc::not_a_parking_function, "negative entry");
  if (!is_superstable(cone(path_graph(n)), label))
    fail(errc::not_a_parking_function, "label is not superstable on the coned path");
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// Column plan for the path game with a fixed outcome: every column is either
// pinned to one choice or belongs to a run's sliding pattern.
struct PathPlan {
  int cols = 0;
  std::vector<Run> runs;        // run r occupies columns [start-1, start+length-1]
  std::vector<int> pattern_of;  // per column: run index, or -1
  std::vector<Choice> fixed;    // per pinned column
};

constexpr std::uint8_t kT = 1, kM = 2, kB = 4;

std::optional<PathPlan> plan_path_histories(const Label& o) {
  int n = static_cast<int>(o.size());
  if (n < 1) return std::nullopt;
  for (int x : o)
    if (x < 0) return std::nullopt;
  int cols = n - 1;

  PathPlan plan;
  plan.cols = cols;
  plan.pattern_of.assign(cols, -1);
  plan.fixed.assign(cols, Choice::mid);
  if (cols == 0) {
    if (o[0] != 0) return std::nullopt;
    return plan;
  }
  if (o[0] > 1 || o[n - 1] > 1) return std::nullopt;
  for (int v = 1; v + 1 < n; ++v)
    if (o[v] > 2) return std::nullopt;

  plan.runs = runs_of(o);
  for (int r = 0; r < static_cast<int>(plan.runs.size()); ++r)
    for (int c = plan.runs[r].start - 1; c <= plan.runs[r].start + plan.runs[r].length - 1; ++c)
      plan.pattern_of[c] = r;

  // residual needs once each run vertex is supplied by its pattern
  std::vector<int> need(o.begin(), o.end());
  for (const Run& r : plan.runs)
    for (int v = r.start; v < r.start + r.length; ++v) need[v]--;

  std::vector<std::uint8_t> allowed(cols, kT | kM | kB);
  bool dead = false;
  auto restrict = [&](int c, std::uint8_t keep) {
    if (c < 0 || c >= cols || plan.pattern_of[c] >= 0) return;
    allowed[c] &= keep;
    if (allowed[c] == 0) dead = true;
  };

  // vertex v is chosen at the bottom of column v-1 or the top of column v
  auto left_col = [&](int v) { return v - 1; };
  auto right_col = [&](int v) { return v < cols ? v : -1; };
  auto usable = [&](int c, std::uint8_t bit) {
    return c >= 0 && c < cols && plan.pattern_of[c] < 0 && (allowed[c] & bit);
  };
  auto committed = [&](int c, std::uint8_t bit) {
    return c >= 0 && c < cols && plan.pattern_of[c] < 0 && allowed[c] == bit;
  };

  // run vertices have need 0 and never border a non-pattern column, so the
  // two rules below concern only the vertices outside every run
  for (int v = 0; v < n; ++v) {
    if (o[v] == 0) {
      restrict(left_col(v), static_cast<std::uint8_t>(~kB));
      restrict(right_col(v), static_cast<std::uint8_t>(~kT));
    } else if (need[v] == 2) {
      int lc = left_col(v), rc = right_col(v);
      if (lc < 0 || rc < 0 || plan.pattern_of[lc] >= 0 || plan.pattern_of[rc] >= 0) return std::nullopt;
      restrict(lc, kB);
      restrict(rc, kT);
    }
    if (dead) return std::nullopt;
  }

  // propagate single-source choices for the remaining need-1 vertices
  bool changed = true;
  while (changed && !dead) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (need[v] != 1) continue;
      int lc = left_col(v), rc = right_col(v);
      bool l_ok = usable(lc, kB), r_ok = usable(rc, kT);
      bool l_set = committed(lc, kB), r_set = committed(rc, kT);
      if (l_set && r_set) return std::nullopt;
      if (l_set && r_ok && !r_set) {
        restrict(rc, static_cast<std::uint8_t>(~kT));
        changed = true;
      } else if (r_set && l_ok && !l_set) {
        restrict(lc, static_cast<std::uint8_t>(~kB));
        changed = true;
      } else if (!l_set && !r_set) {
        if (!l_ok && !r_ok) return std::nullopt;
        if (l_ok != r_ok) {
          if (l_ok && allowed[lc] != kB) {
            restrict(lc, kB);
            changed = true;
          }
          if (r_ok && allowed[rc] != kT) {
            restrict(rc, kT);
            changed = true;
          }
        }
      }
      if (dead) return std::nullopt;
    }
  }
  if (dead) return std::nullopt;

  // every pinned column must now be a single cell
  for (int c = 0; c < cols; ++c) {
    if (plan.pattern_of[c] >= 0) continue;
    switch (allowed[c]) {
      case kT: plan.fixed[c] = Choice::top; break;
      case kM: plan.fixed[c] = Choice::mid; break;
      case kB: plan.fixed[c] = Choice::bottom; break;
      default: return std::nullopt;  // residual freedom outside a run
    }
  }

  // exact supply check
  std::vector<int> supplied(n, 0);
  for (const Run& r : plan.runs)
    for (int v = r.start; v < r.start + r.length; ++v) supplied[v]++;
  for (int c = 0; c < cols; ++c) {
    if (plan.pattern_of[c] >= 0) continue;
    if (plan.fixed[c] == Choice::top) supplied[c]++;
    if (plan.fixed[c] == Choice::bottom) supplied[c + 1]++;
  }
  for (int v = 0; v < n; ++v)
    if (supplied[v] != o[v]) return std::nullopt;
  return plan;
}

// Slide t for a run of length k: t bottoms, one middle, k - t tops.
void apply_slide(const Run& run, int t, History& h) {
  int base = run.start - 1;
  for (int s = 0; s <= run.length; ++s) {
    if (s < t)
      h[base + s] = Choice::bottom;
    else if (s == t)
      h[base + s] = Choice::mid;
    else
      h[base + s] = Choice::top;
  }
}

std::vector<History> histories_from_plan(const PathPlan& plan) {
  std::vector<History> out;
  History h(plan.cols, Choice::mid);
  for (int c = 0; c < plan.cols; ++c)
    if (plan.pattern_of[c] < 0) h[c] = plan.fixed[c];

  std::vector<int> slide(plan.runs.size(), 0);
  while (true) {
    for (size_t r = 0; r < plan.runs.size(); ++r) apply_slide(plan.runs[r], slide[r], h);
    out.push_back(h);
    int r = static_cast<int>(plan.runs.size()) - 1;
    while (r >= 0 && slide[r] == plan.runs[r].length) slide[r--] = 0;
    if (r < 0) break;
    slide[r]++;
  }
  return out;
}

std::optional<std::vector<History>> try_histories_for_outcome(const Label& o) {
  auto plan = plan_path_histories(o);
  if (!plan) return std::nullopt;
  auto out = histories_from_plan(*plan);
  const SimpleGraph board = path_graph(static_cast<int>(o.size()));
  for (const History& h : out)
    if (outcome_of(board, h) != o)
      throw std::logic_error("path history plan produced a history with the wrong outcome");
  return out;
}

}  // namespace

long long path_multiplicity(const Label& label) {
  check_path_label(label);
  long long mu = 1;
  for (const Run& r : runs_of(label)) mu *= r.length + 1;
  return mu;
}

bool unique_label_check_path(const Label& label) {
  check_path_label(label);
  int n = static_cast<int>(label.size());
  int prev_zero = -1;
  for (int v = 0; v < n; ++v) {
    if (label[v] != 0) continue;
    if (prev_zero >= 0 && v - prev_zero >= 2) {
      bool has_two = false;
      for (int u = prev_zero + 1; u < v; ++u)
        if (label[u] == 2) has_two = true;
      if (!has_two) return false;
    }
    prev_zero = v;
  }
  return true;
}

std::vector<History> enumerate_histories_for_outcome_path(const Label& o) {
  auto histories = try_histories_for_outcome(o);
  if (!histories) fail(errc::unachievable, "no path history has this outcome");
  return *histories;
}

std::vector<ColumnConstraint> bounding_constraints_for_label_path(const Label& label) {
  auto plan = plan_path_histories(label);
  if (!plan) fail(errc::unachievable, "no path history has this outcome");
  std::vector<ColumnConstraint> out(plan->cols);
  for (int c = 0; c < plan->cols; ++c) {
    ColumnConstraint& cc = out[c];
    cc.i = c;
    cc.j = c + 1;
    int r = plan->pattern_of[c];
    if (r < 0) {
      switch (plan->fixed[c]) {
        case Choice::top: cc.kind = ColumnConstraint::Kind::below; break;
        case Choice::mid: cc.kind = ColumnConstraint::Kind::between; break;
        case Choice::bottom: cc.kind = ColumnConstraint::Kind::above; break;
      }
    } else {
      const Run& run = plan->runs[r];
      int offset = c - (run.start - 1);
      if (offset == 0)
        cc.kind = ColumnConstraint::Kind::greater_zero;
      else if (offset == run.length)
        cc.kind = ColumnConstraint::Kind::less_one;
      else
        cc.kind = ColumnConstraint::Kind::free;
    }
  }
  return out;
}

std::string constraint_string(const ColumnConstraint& c) {
  std::string xi = "x" + std::to_string(c.i);
  std::string xj = "x" + std::to_string(c.j);
  std::string diff = xi + " - " + xj;
  switch (c.kind) {
    case ColumnConstraint::Kind::below: return diff + " < 0";
    case ColumnConstraint::Kind::between: return "0 < " + diff + " < 1";
    case ColumnConstraint::Kind::above: return diff + " > 1";
    case ColumnConstraint::Kind::greater_zero: return diff + " > 0";
    case ColumnConstraint::Kind::less_one: return diff + " < 1";
    case ColumnConstraint::Kind::free: return "";
  }
  return "";
}

long long star_multiplicity(int n, const Label& label) {
  if (n < 1) fail(errc::bad_parameter, "star needs n >= 1");
  if (static_cast<int>(label.size()) != n + 1)
    fail(errc::not_a_parking_function, "label length must be n + 1");
  for (int x : label)
    if (x < 0) fail(errc::not_a_parking_function, "negative entry");
  if (!is_superstable(cone(star_graph(n)), label))
    fail(errc::not_a_parking_function, "label is not superstable on the coned star");
  int c0 = label[0];
  int nonzero_spokes = 0;
  for (int i = 1; i <= n; ++i)
    if (label[i] > 0) nonzero_spokes++;
  int free_cols = n - c0 - nonzero_spokes;
  if (free_cols < 0) throw std::logic_error("superstable star label with negative free columns");
  return binomial(c0 + free_cols, c0);
}

long long star_distinct_label_count(int n) {
  if (n < 1) fail(errc::bad_parameter, "star needs n >= 1");
  if (n > 60) fail(errc::too_large, "count overflows 64 bits");
  return (n + 2LL) << (n - 1);
}

std::vector<History> star_enumerate_histories_for_label(int n, const Label& label) {
  if (n < 1) fail(errc::bad_parameter, "star needs n >= 1");
  if (static_cast<int>(label.size()) != n + 1) fail(errc::unachievable, "label length must be n + 1");
  int c0 = label[0];
  if (c0 < 0) fail(errc::unachievable, "negative center count");
  std::vector<int> free_cols;
  History base(n, Choice::mid);
  for (int i = 1; i <= n; ++i) {
    if (label[i] == 0)
      free_cols.push_back(i - 1);
    else if (label[i] == 1)
      base[i - 1] = Choice::bottom;  // spoke i only appears at the bottom of column i-1
    else
      fail(errc::unachievable, "spoke counts exceed 1");
  }
  if (c0 > static_cast<int>(free_cols.size())) fail(errc::unachievable, "center count exceeds free columns");

  // choose which free columns show the center; combinations in lex order
  std::vector<History> out;
  std::vector<int> pick(c0);
  for (int t = 0; t < c0; ++t) pick[t] = t;
  while (true) {
    History h = base;
    for (int t : pick) h[free_cols[t]] = Choice::top;
    out.push_back(std::move(h));
    if (c0 == 0) break;
    int t = c0 - 1;
    while (t >= 0 && pick[t] == static_cast<int>(free_cols.size()) - c0 + t) t--;
    if (t < 0) break;
    pick[t]++;
    for (int u = t + 1; u < c0; ++u) pick[u] = pick[u - 1] + 1;
  }
  return out;
}

StateVector states_from_cycle_board(const History& board) {
  int n = static_cast<int>(board.size());
  if (n < 3) fail(errc::not_a_cycle, "cycle board needs at least 3 columns");
  SimpleGraph g = cycle_graph(n);
  StateVector s(n);
  for (int k = 0; k + 1 < n; ++k) s[g.edge_index(k, k + 1)] = static_cast<EdgeState>(board[k]);
  s[g.edge_index(0, n - 1)] = static_cast<EdgeState>(board[n - 1]);
  return s;
}

History cycle_board_from_states(const StateVector& states) {
  int n = static_cast<int>(states.size());
  if (n < 3) fail(errc::not_a_cycle, "cycle needs at least 3 edges");
  SimpleGraph g = cycle_graph(n);
  History board(n);
  for (int k = 0; k + 1 < n; ++k) board[k] = static_cast<Choice>(states[g.edge_index(k, k + 1)]);
  board[n - 1] = static_cast<Choice>(states[g.edge_index(0, n - 1)]);
  return board;
}

bool cycle_history_legal(const History& h) {
  int n = static_cast<int>(h.size());
  if (n < 3) fail(errc::not_a_cycle, "cycle board needs at least 3 columns");
  Choice cycle_choice = h[n - 1];
  int tops = 0, mids = 0, bottoms = 0;
  for (int k = 0; k + 1 < n; ++k) {
    tops += h[k] == Choice::top;
    mids += h[k] == Choice::mid;
    bottoms += h[k] == Choice::bottom;
  }
  int path_cols = n - 1;
  if (tops == path_cols) return cycle_choice == Choice::top;
  if (tops == path_cols - 1 && mids == 1) return cycle_choice != Choice::bottom;
  if (tops == 0) {  // every path choice is M or B
    if (bottoms == 0) return cycle_choice != Choice::top;  // all M
    return cycle_choice == Choice::bottom;
  }
  return true;
}

std::vector<History> cycle_enumerate_histories_for_label(const Label& label) {
  int n = static_cast<int>(label.size());
  if (n < 3) fail(errc::not_a_cycle, "cycle needs n >= 3");
  for (int x : label)
    if (x < 0) fail(errc::unachievable, "negative entry");

  std::set<History> found;
  auto add_step = [&](const Label& path_outcome, Choice cycle_choice) {
    auto histories = try_histories_for_outcome(path_outcome);
    if (!histories) return;
    for (const History& hp : *histories) {
      History full = hp;
      full.push_back(cycle_choice);
      if (cycle_history_legal(full)) found.insert(std::move(full));
    }
  };

  add_step(label, Choice::mid);
  if (label[0] >= 1) {
    Label reduced = label;
    reduced[0]--;
    add_step(reduced, Choice::top);
  }
  if (label[n - 1] >= 1) {
    Label reduced = label;
    reduced[n - 1]--;
    add_step(reduced, Choice::bottom);
  }

  if (found.empty()) fail(errc::unachievable, "label is not a cycle label");
  return {found.begin(), found.end()};
}

long long max_product_partition(int n) {
  if (n < 2) fail(errc::bad_parameter, "need n >= 2");
  auto pow3 = [](int k) {
    long long p = 1;
    while (k-- > 0) p *= 3;
    return p;
  };
  switch (n % 3) {
    case 0: return pow3(n / 3);
    case 1: return 4 * pow3((n - 4) / 3);
    default: return 2 * pow3((n - 2) / 3);
  }
}

std::pair<std::vector<Label>, long long> max_multiplicity_labels_path(int n) {
  if (n <= 2) fail(errc::bad_parameter, "need n > 2");
  // A maximal-multiplicity label is a 0 followed by run blocks; a run of
  // length k fills k+1 entries and contributes the factor k+1, so the blocks
  // realize a maximum-product partition of n-1 into parts >= 2. Parts 2 and 3
  // are the usual maximizers, and because 4 = 2 * 2, a part 4 ("1110") ties a
  // pair of 2s ("10", "10") when n = 2 mod 3.
  std::vector<std::vector<std::string>> block_multisets;
  switch (n % 3) {
    case 1:
      block_multisets.push_back(std::vector<std::string>((n - 1) / 3, "110"));
      break;
    case 2: {
      std::vector<std::string> with_pair((n - 5) / 3, "110");
      with_pair.push_back("10");
      with_pair.push_back("10");
      std::vector<std::string> with_quad((n - 5) / 3, "110");
      with_quad.push_back("1110");
      block_multisets.push_back(std::move(with_pair));
      block_multisets.push_back(std::move(with_quad));
      break;
    }
    default: {
      std::vector<std::string> blocks((n - 3) / 3, "110");
      blocks.push_back("10");
      block_multisets.push_back(std::move(blocks));
      break;
    }
  }
  std::vector<Label> labels;
  for (auto& blocks : block_multisets) {
    std::sort(blocks.begin(), blocks.end());
    do {
      Label label{0};
      for (const std::string& b : blocks)
        for (char c : b) label.push_back(c - '0');
      labels.push_back(std::move(label));
    } while (std::next_permutation(blocks.begin(), blocks.end()));
  }
  std::sort(labels.begin(), labels.end());
  return {labels, max_product_partition(n - 1)};
}

std::string render_board(const std::vector<std::pair<int, int>>& columns, const History& h) {
  if (columns.size() != h.size()) fail(errc::bad_parameter, "column/history length mismatch");
  size_t width = 1;
  for (const auto& [i, j] : columns)
    width = std::max({width, std::to_string(i).size(), std::to_string(j).size()});

  auto cell = [&](const std::string& text, bool chosen) {
    std::string inner = text;
    while (inner.size() < width) inner = " " + inner;
    return chosen ? "[" + inner + "]" : " " + inner + " ";
  };

  std::string top, mid, bot;
  for (size_t c = 0; c < columns.size(); ++c) {
    top += "|" + cell(std::to_string(columns[c].first), h[c] == Choice::top);
    mid += "|" + cell(std::string(width, ' '), h[c] == Choice::mid);
    bot += "|" + cell(std::to_string(columns[c].second), h[c] == Choice::bottom);
  }
  return top + "|\n" + mid + "|\n" + bot + "|\n";
}

}  // namespace gshi
