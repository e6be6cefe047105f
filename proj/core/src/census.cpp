#include "gshi/census.hpp"

#include <algorithm>

#include "gshi/chips.hpp"
#include "gshi/regions.hpp"

namespace gshi {

Int fibonacci(int k) {
  if (k < 0) fail(errc::bad_parameter, "negative Fibonacci index");
  Int a = 0, b = 1;
  for (int t = 0; t < k; ++t) {
    Int next = a + b;
    a = b;
    b = next;
  }
  return a;
}

bool fibonacci_identity_checks(int limit) {
  if (limit < 6) fail(errc::bad_parameter, "need limit >= 6");
  std::vector<Int> f(limit + 1);
  for (int k = 0; k <= limit; ++k) f[k] = fibonacci(k);

  for (int k = 3; k <= limit; ++k)
    if (f[k] != 2 * f[k - 1] - f[k - 3])
      fail(errc::identity_failure, "F(k) = 2F(k-1) - F(k-3) fails at k=" + std::to_string(k));
  for (int k = 4; k <= limit; ++k)
    if (f[k] != 3 * f[k - 2] - f[k - 4])
      fail(errc::identity_failure, "F(k) = 3F(k-2) - F(k-4) fails at k=" + std::to_string(k));
  for (int t = 3; 2 * t <= limit; ++t) {
    Int sum = 2 * f[2 * t - 2] + 2 * f[2];
    for (int j = 2; j <= t - 2; ++j) sum += f[2 * j];
    if (f[2 * t] != sum)
      fail(errc::identity_failure, "even-index expansion fails at 2t=" + std::to_string(2 * t));
  }
  return true;
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::regions: return "regions";
    case Quantity::sinks: return "sinks";
    case Quantity::superstables: return "superstables";
    case Quantity::distinct_labels: return "distinct_labels";
  }
  return "unknown";
}

namespace {

Int pow_int(Int base, int exp) {
  Int r = 1;
  for (int t = 0; t < exp; ++t) r *= base;
  return r;
}

Int brute_count(const SimpleGraph& g, Quantity q) {
  switch (q) {
    case Quantity::regions: return Int(enumerate_regions(g).size());
    case Quantity::sinks: return Int(sink_nodes(adjacency_digraph(g)).size());
    case Quantity::superstables: return Int(enumerate_superstables(cone(g)).size());
    case Quantity::distinct_labels: return Int(multiplicity_census(g).counts.size());
  }
  return -1;
}

Int superstable_det(const SimpleGraph& g) { return det_exact(reduced_laplacian(cone(g))); }

}  // namespace

std::vector<CountReport> verify_family_counts(const std::string& family, Quantity q, int n_lo,
                                              int n_hi) {
  if (n_lo > n_hi) fail(errc::bad_parameter, "empty range");

  std::vector<CountReport> reports;
  auto emit = [&](int n, int variant, const SimpleGraph& g, Int formula) {
    CountReport r;
    r.family = family;
    r.n = n;
    r.variant = variant;
    r.quantity = q;
    r.formula_value = std::move(formula);
    r.brute_value = brute_count(g, q);
    reports.push_back(std::move(r));
  };

  for (int n = n_lo; n <= n_hi; ++n) {
    if (family == "path") {
      if (n < 1) fail(errc::bad_parameter, "path needs n >= 1");
      SimpleGraph g = path_graph(n);
      switch (q) {
        case Quantity::regions: emit(n, -1, g, pow_int(3, n - 1)); break;
        case Quantity::sinks: emit(n, -1, g, pow_int(2, n - 1)); break;
        case Quantity::superstables: emit(n, -1, g, superstable_det(g)); break;
        case Quantity::distinct_labels: emit(n, -1, g, fibonacci(2 * n)); break;
      }
    } else if (family == "cycle") {
      if (n < 3) fail(errc::bad_parameter, "cycle needs n >= 3");
      SimpleGraph g = cycle_graph(n);
      switch (q) {
        case Quantity::regions: emit(n, -1, g, pow_int(3, n) - pow_int(2, n) - n); break;
        case Quantity::sinks: emit(n, -1, g, pow_int(2, n) - 2); break;
        case Quantity::superstables:
          emit(n, -1, g, 3 * fibonacci(2 * n) - 2 * fibonacci(2 * n - 2) - 2);
          break;
        case Quantity::distinct_labels:
          emit(n, -1, g, 3 * fibonacci(2 * n) - 2 * fibonacci(2 * n - 2) - 2);
          break;
      }
    } else if (family == "star") {
      if (n < 1) fail(errc::bad_parameter, "star needs n >= 1");
      SimpleGraph g = star_graph(n);  // n spokes, n + 1 vertices
      switch (q) {
        case Quantity::regions: emit(n, -1, g, pow_int(3, n)); break;
        case Quantity::sinks: emit(n, -1, g, pow_int(2, n)); break;
        case Quantity::superstables: emit(n, -1, g, superstable_det(g)); break;
        case Quantity::distinct_labels: emit(n, -1, g, Int(n + 2) * pow_int(2, n - 1)); break;
      }
    } else if (family == "complete") {
      if (n < 1) fail(errc::bad_parameter, "complete needs n >= 1");
      SimpleGraph g = complete_graph(n);
      switch (q) {
        case Quantity::regions: emit(n, -1, g, pow_int(n + 1, n - 1)); break;
        case Quantity::sinks: fail(errc::bad_parameter, "no sink formula for complete graphs");
        case Quantity::superstables: emit(n, -1, g, superstable_det(g)); break;
        case Quantity::distinct_labels: emit(n, -1, g, pow_int(n + 1, n - 1)); break;
      }
    } else if (family == "tree") {
      if (n < 1) fail(errc::bad_parameter, "tree needs n >= 1");
      auto reps = all_trees(n);
      for (int t = 0; t < static_cast<int>(reps.size()); ++t) {
        const SimpleGraph& g = reps[t];
        switch (q) {
          case Quantity::regions: emit(n, t, g, pow_int(3, n - 1)); break;
          case Quantity::sinks: emit(n, t, g, pow_int(2, n - 1)); break;
          case Quantity::superstables: emit(n, t, g, superstable_det(g)); break;
          case Quantity::distinct_labels: emit(n, t, g, superstable_det(g)); break;
        }
      }
    } else {
      fail(errc::bad_parameter, "unknown family '" + family + "'");
    }
  }
  return reports;
}

std::vector<CountReport> verify_family_all(const std::string& family, int n_max) {
  std::vector<CountReport> all;
  auto collect = [&](Quantity q, int n_lo) {
    auto rows = verify_family_counts(family, q, n_lo, n_max);
    all.insert(all.end(), rows.begin(), rows.end());
  };
  if (family == "path" || family == "tree" || family == "star") {
    int lo = 1;
    collect(Quantity::regions, lo);
    collect(Quantity::sinks, lo);
    collect(Quantity::superstables, lo);
    collect(Quantity::distinct_labels, lo);
  } else if (family == "cycle") {
    collect(Quantity::regions, 3);
    collect(Quantity::sinks, 3);
    collect(Quantity::superstables, 3);
    collect(Quantity::distinct_labels, 3);
  } else if (family == "complete") {
    collect(Quantity::regions, 1);
    collect(Quantity::superstables, 1);
    collect(Quantity::distinct_labels, 1);
  } else {
    fail(errc::bad_parameter, "unknown family '" + family + "'");
  }
  return all;
}

}  // namespace gshi
