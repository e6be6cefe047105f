// Acceptance suite: one line per criterion, exact checks only, nonzero exit
// on any failure. Run through ctest or directly.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "gshi/census.hpp"
#include "gshi/chips.hpp"
#include "gshi/game.hpp"
#include "gshi/regions.hpp"
#include "test_util.hpp"

using namespace gshi;

namespace {

int failures = 0;

#define REQUIRE_EQ(a, b)                                                            \
  do {                                                                              \
    if (!((a) == (b))) throw std::runtime_error("mismatch at line " + std::to_string(__LINE__)); \
  } while (0)

#define REQUIRE_TRUE(a)                                                             \
  do {                                                                              \
    if (!(a)) throw std::runtime_error("condition at line " + std::to_string(__LINE__)); \
  } while (0)

void criterion(int number, const std::string& name, const std::function<void()>& body) {
  try {
    body();
    std::cout << "[PASS] " << number << ". " << name << "\n";
  } catch (const std::exception& e) {
    failures++;
    std::cout << "[FAIL] " << number << ". " << name << "  (" << e.what() << ")\n";
  }
}

long long pow_ll(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

int main() {
  criterion(1, "K3 census: 16 regions, 16 labels, every multiplicity 1", [] {
    MultiplicityReport r = multiplicity_census(complete_graph(3));
    REQUIRE_EQ(r.regions, 16);
    REQUIRE_EQ(r.counts.size(), 16u);
    for (const auto& [label, count] : r.counts) REQUIRE_EQ(count, 1);
  });

  criterion(2, "P3 census: 9 regions, 8 labels, (0,1,0) twice", [] {
    MultiplicityReport r = multiplicity_census(path_graph(3));
    REQUIRE_EQ(r.regions, 9);
    REQUIRE_EQ(r.counts.size(), 8u);
    for (const auto& [label, count] : r.counts) {
      long long expected = label == Label{0, 1, 0} ? 2 : 1;
      REQUIRE_EQ(count, expected);
    }
  });

  criterion(3, "K4 minus {0,1} has 84 regions, minus {0,2} has 85", [] {
    REQUIRE_EQ(enumerate_regions(complete_minus(4, 0, 1)).size(), 84u);
    REQUIRE_EQ(enumerate_regions(complete_minus(4, 0, 2)).size(), 85u);
  });

  criterion(4, "path superstables = det(reduced Laplacian) = F(2n), n = 1..8", [] {
    const long long expected[] = {1, 3, 8, 21, 55, 144, 377, 987};
    for (int n = 1; n <= 8; ++n) {
      Int count = Int(enumerate_superstables(cone(path_graph(n))).size());
      REQUIRE_EQ(count, Int(expected[n - 1]));
      REQUIRE_EQ(det_exact(reduced_laplacian(cone(path_graph(n)))), count);
      REQUIRE_EQ(fibonacci(2 * n), count);
    }
  });

  criterion(5, "cycle n = 3..8: regions, sinks and superstables match the formulas", [] {
    for (int n = 3; n <= 8; ++n) {
      SimpleGraph g = cycle_graph(n);
      REQUIRE_EQ(Int(enumerate_regions(g).size()), Int(pow_ll(3, n) - pow_ll(2, n) - n));
      REQUIRE_EQ(Int(sink_nodes(adjacency_digraph(g)).size()), Int(pow_ll(2, n) - 2));
      REQUIRE_EQ(Int(enumerate_superstables(cone(g)).size()),
                 3 * fibonacci(2 * n) - 2 * fibonacci(2 * n - 2) - 2);
    }
  });

  criterion(6, "every tree with n <= 7: 3^(n-1) regions and 2^(n-1) sinks", [] {
    for (int n = 1; n <= 7; ++n) {
      for (const SimpleGraph& t : all_trees(n)) {
        REQUIRE_EQ(static_cast<long long>(enumerate_regions(t).size()), pow_ll(3, n - 1));
        REQUIRE_EQ(static_cast<long long>(sink_nodes(adjacency_digraph(t)).size()),
                   pow_ll(2, n - 1));
      }
    }
  });

  criterion(7, "path multiplicity theorem over every label, n = 2..8", [] {
    for (int n = 2; n <= 8; ++n)
      for (const auto& [label, count] : multiplicity_census(path_graph(n)).counts)
        REQUIRE_EQ(path_multiplicity(label), count);
  });

  criterion(8, "star multiplicity and distinct-label count, n = 1..6", [] {
    for (int n = 1; n <= 6; ++n) {
      MultiplicityReport r = multiplicity_census(star_graph(n));
      for (const auto& [label, count] : r.counts)
        REQUIRE_EQ(star_multiplicity(n, label), count);
      REQUIRE_EQ(static_cast<long long>(r.counts.size()), star_distinct_label_count(n));
    }
  });

  criterion(9, "cycle legality = feasibility (n <= 8); four-step counts = census (n <= 6)", [] {
    for (int n = 3; n <= 8; ++n) {
      SimpleGraph g = cycle_graph(n);
      History h(n, Choice::top);
      while (true) {
        REQUIRE_EQ(cycle_history_legal(h), is_feasible(g, states_from_cycle_board(h)));
        int k = n - 1;
        while (k >= 0 && h[k] == Choice::bottom) h[k--] = Choice::top;
        if (k < 0) break;
        h[k] = static_cast<Choice>(static_cast<int>(h[k]) + 1);
      }
    }
    for (int n = 3; n <= 6; ++n) {
      SimpleGraph g = cycle_graph(n);
      for (const auto& [label, count] : multiplicity_census(g).counts) {
        auto histories = cycle_enumerate_histories_for_label(label);
        REQUIRE_EQ(static_cast<long long>(histories.size()), count);
        std::set<History> unique(histories.begin(), histories.end());
        REQUIRE_EQ(unique.size(), histories.size());
      }
    }
  });

  criterion(10, "labels with coordinate sum m are unique (families + 50 random graphs)", [] {
    std::vector<SimpleGraph> graphs;
    for (int n = 2; n <= 8; ++n) graphs.push_back(path_graph(n));
    for (int n = 1; n <= 6; ++n) graphs.push_back(star_graph(n));
    for (int n = 3; n <= 7; ++n) graphs.push_back(cycle_graph(n));
    std::mt19937 rng(20250810);
    while (graphs.size() < 19u + 50u) {
      int n = 2 + static_cast<int>(rng() % 5);
      int max_m = std::min(10, n * (n - 1) / 2);
      int m = n - 1 + static_cast<int>(rng() % (max_m - n + 2));
      graphs.push_back(test::random_connected_graph(rng, n, m));
    }
    for (const SimpleGraph& g : graphs)
      for (const auto& [label, count] : multiplicity_census(g).counts)
        if (std::accumulate(label.begin(), label.end(), 0) == g.m()) REQUIRE_EQ(count, 1);
  });

  criterion(11, "pattern machinery: prepattern shape, fixed outcomes, odd-number outcomes", [] {
    History h = parse_history("TMBBMTBMMB");
    auto blocks = prepattern_split(path_graph(11), h);
    std::vector<int> pattern_lengths;
    for (const Prepattern& b : blocks)
      if (b.is_pattern) pattern_lengths.push_back(b.length());
    REQUIRE_EQ(blocks.size(), 6u);
    REQUIRE_EQ(pattern_lengths, (std::vector<int>{1, 4, 2, 1}));
    REQUIRE_EQ(brute_multiplicity(path_graph(11), outcome_of(path_graph(11), h)), 8);

    Label o{1, 0, 1, 0, 1};  // the outcome {0, 2, 4}
    REQUIRE_EQ(brute_multiplicity(path_graph(5), o), 2);
    auto two = enumerate_histories_for_outcome_path(o);
    REQUIRE_EQ(two.size(), 2u);
    REQUIRE_EQ(two[0], parse_history("TMTB"));
    REQUIRE_EQ(two[1], parse_history("TBMB"));

    for (int k = 1; k <= 5; ++k) {
      Label odd(2 * k + 1, 0);
      for (int v = 1; v < 2 * k + 1; v += 2) odd[v] = 1;
      REQUIRE_EQ(brute_multiplicity(path_graph(2 * k + 1), odd), 1LL << k);
    }
  });

  criterion(12, "Dhar superstability = subset parking oracle, all graphs n <= 5", [] {
    for (int n = 1; n <= 5; ++n) {
      for (const SimpleGraph& g : test::all_connected_graphs(n)) {
        ConedGraph cg = cone(g);
        for (const ChipConfig& c : test::stable_box(cg))
          REQUIRE_EQ(is_superstable(cg, c), is_parking_function(cg, c));
      }
    }
  });

  criterion(13, "label (0,1,1,0,2,0): 3 histories and the exact bounding constraints", [] {
    Label p{0, 1, 1, 0, 2, 0};
    auto histories = enumerate_histories_for_outcome_path(p);
    REQUIRE_EQ(histories.size(), 3u);
    std::vector<std::string> rendered;
    for (const ColumnConstraint& c : bounding_constraints_for_label_path(p)) {
      std::string text = constraint_string(c);
      if (!text.empty()) rendered.push_back(text);
    }
    REQUIRE_EQ(rendered, (std::vector<std::string>{"x0 - x1 > 0", "x2 - x3 < 1", "x3 - x4 > 1",
                                                   "x4 - x5 < 0"}));
  });

  criterion(14, "max-multiplicity path labels match the census argmax, n = 4..10", [] {
    for (int n = 4; n <= 10; ++n) {
      auto [labels, mult] = max_multiplicity_labels_path(n);
      MultiplicityReport r = multiplicity_census(path_graph(n));
      long long best = 0;
      for (const auto& [label, count] : r.counts) best = std::max(best, count);
      REQUIRE_EQ(best, mult);
      std::vector<Label> argmax;
      for (const auto& [label, count] : r.counts)
        if (count == best) argmax.push_back(label);
      REQUIRE_EQ(argmax, labels);
    }
  });

  criterion(15, "bucket sizes (1; s_1..s_{n-2}; 2 s_{n-1}) summing to s_n, n = 3..8", [] {
    std::vector<long long> s(9, 0);
    for (int k = 1; k <= 8; ++k)
      s[k] = static_cast<long long>(enumerate_superstables(cone(path_graph(k))).size());
    for (int n = 3; n <= 8; ++n) {
      std::vector<long long> bucket(n, 0);
      for (const ChipConfig& a : enumerate_superstables(cone(path_graph(n))))
        bucket[bucket_index(a)]++;
      REQUIRE_EQ(bucket[0], 1);
      for (int i = 1; i <= n - 2; ++i) REQUIRE_EQ(bucket[i], s[i]);
      REQUIRE_EQ(bucket[n - 1], 2 * s[n - 1]);
      REQUIRE_EQ(std::accumulate(bucket.begin(), bucket.end(), 0LL), s[n]);
    }
  });

  if (failures == 0) {
    std::cout << "all 15 acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria FAILED\n";
  return 1;
}
