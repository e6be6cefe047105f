#pragma once

#include <string>
#include <vector>

#include "gshi/graph.hpp"

namespace gshi {

/// Fibonacci numbers with F(0) = 0, F(1) = 1. Under this indexing
/// det(reduced_laplacian(cone(path n))) = F(2n), which is the calibration
/// the counting formulas below rely on.
Int fibonacci(int k);

/// Checks, for every index up to `limit`:
///   F(k) = 2 F(k-1) - F(k-3)
///   F(k) = 3 F(k-2) - F(k-4)
///   F(2t) = 2 F(2t-2) + F(2t-4) + ... + F(4) + 2 F(2)
/// Returns true, or throws identity_failure naming the failing index.
bool fibonacci_identity_checks(int limit);

enum class Quantity { regions, sinks, superstables, distinct_labels };

const char* quantity_name(Quantity q);

/// One closed-form count paired with the matching brute-force count.
struct CountReport {
  std::string family;
  int n = 0;
  int variant = -1;  // index among the trees on n vertices, -1 otherwise
  Quantity quantity = Quantity::regions;
  Int formula_value = 0;
  Int brute_value = 0;

  bool pass() const { return formula_value == brute_value; }
};

/// Reports for one family and quantity over n in [n_lo, n_hi]. Families:
/// path, cycle, star, complete, tree (every isomorphism representative).
/// Superstable counts use the reduced-Laplacian determinant as the formula
/// side for every family; the other quantities use the per-family closed
/// forms where one exists and reject the combination otherwise.
std::vector<CountReport> verify_family_counts(const std::string& family, Quantity quantity,
                                              int n_lo, int n_hi);

/// Every supported quantity for the family (used by the verify subcommand).
std::vector<CountReport> verify_family_all(const std::string& family, int n_max);

}  // namespace gshi
