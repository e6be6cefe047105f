#include <doctest.h>

#include "gshi/census.hpp"
#include "gshi/chips.hpp"
#include "gshi/regions.hpp"
#include "test_util.hpp"

using namespace gshi;

namespace {

// The tridiagonal matrices of the determinant lemmas, built programmatically.
IntMatrix tridiag(int d, Int first, Int last) {
  IntMatrix m = IntMatrix::zero(d);
  for (int k = 0; k < d; ++k) {
    m.at(k, k) = 3;
    if (k > 0) m.at(k, k - 1) = -1;
    if (k + 1 < d) m.at(k, k + 1) = -1;
  }
  m.at(0, 0) = first;
  m.at(d - 1, d - 1) = last;
  return m;
}

IntMatrix dangling_path_matrix(int d) { return tridiag(d, 3, 2); }
IntMatrix path_cone_matrix(int d) { return tridiag(d, 2, 2); }

IntMatrix cycle_cone_matrix(int d) {
  IntMatrix m = tridiag(d, 3, 3);
  m.at(0, d - 1) -= 1;
  m.at(d - 1, 0) -= 1;
  return m;
}

}  // namespace

TEST_CASE("fibonacci calibration") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(3) == 2);
  CHECK(fibonacci(4) == 3);
  CHECK(fibonacci(5) == 5);
  CHECK(fibonacci(6) == 8);
  CHECK_THROWS_AS(fibonacci(-1), error);

  // the calibration anchor: fibonacci(2n) counts path-cone superstables
  for (int n = 1; n <= 6; ++n)
    CHECK(fibonacci(2 * n) == Int(enumerate_superstables(cone(path_graph(n))).size()));
}

TEST_CASE("fibonacci identities") {
  CHECK(fibonacci_identity_checks(20));
  CHECK(fibonacci(8) == 2 * fibonacci(6) + fibonacci(4) + 2 * fibonacci(2));  // 21 = 16 + 3 + 2
  CHECK(fibonacci(6) == 3 * fibonacci(4) - fibonacci(2));                     // 8 = 9 - 1
  CHECK_THROWS_AS(fibonacci_identity_checks(4), error);
}

TEST_CASE("lemma matrices") {
  // the tridiagonal templates assume distinct first and last rows (n >= 2);
  // the actual one-vertex path cone has reduced Laplacian [1]
  CHECK(reduced_laplacian(cone(path_graph(1))).a == std::vector<Int>{1});
  for (int n = 2; n <= 10; ++n) {
    CHECK(det_exact(dangling_path_matrix(n)) == fibonacci(2 * n + 1));
    CHECK(det_exact(path_cone_matrix(n)) == fibonacci(2 * n));
    CHECK(path_cone_matrix(n).a == reduced_laplacian(cone(path_graph(n))).a);
  }
  for (int n = 3; n <= 10; ++n) {
    CHECK(det_exact(cycle_cone_matrix(n)) ==
          3 * fibonacci(2 * n) - 2 * fibonacci(2 * n - 2) - 2);
    CHECK(cycle_cone_matrix(n).a == reduced_laplacian(cone(cycle_graph(n))).a);
  }
}

TEST_CASE("verify_family_counts rows all pass") {
  auto expect_pass = [](const std::vector<CountReport>& rows) {
    CHECK(!rows.empty());
    for (const CountReport& r : rows) {
      CAPTURE(r.family);
      CAPTURE(r.n);
      CAPTURE(quantity_name(r.quantity));
      CHECK(r.pass());
    }
  };

  auto path_rows = verify_family_counts("path", Quantity::superstables, 1, 6);
  expect_pass(path_rows);
  std::vector<Int> expected{1, 3, 8, 21, 55, 144};
  for (int k = 0; k < 6; ++k) {
    CHECK(path_rows[k].formula_value == expected[k]);
    CHECK(path_rows[k].brute_value == expected[k]);
  }

  expect_pass(verify_family_counts("cycle", Quantity::regions, 3, 6));
  expect_pass(verify_family_counts("cycle", Quantity::sinks, 3, 6));
  expect_pass(verify_family_counts("complete", Quantity::regions, 2, 4));
  expect_pass(verify_family_counts("star", Quantity::distinct_labels, 1, 5));
  expect_pass(verify_family_counts("tree", Quantity::regions, 1, 6));
  expect_pass(verify_family_counts("tree", Quantity::sinks, 5, 6));

  auto complete_rows = verify_family_counts("complete", Quantity::regions, 2, 4);
  CHECK(complete_rows[0].formula_value == 3);
  CHECK(complete_rows[1].formula_value == 16);
  CHECK(complete_rows[2].formula_value == 125);

  CHECK_THROWS_AS(verify_family_counts("complete", Quantity::sinks, 2, 3), error);
  CHECK_THROWS_AS(verify_family_counts("moebius", Quantity::regions, 2, 3), error);
  CHECK_THROWS_AS(verify_family_counts("cycle", Quantity::regions, 2, 4), error);
}

TEST_CASE("verify_family_all covers each family") {
  CHECK(verify_family_all("path", 4).size() == 16);
  CHECK(verify_family_all("complete", 3).size() == 9);
  for (const CountReport& r : verify_family_all("cycle", 5)) CHECK(r.pass());
}
