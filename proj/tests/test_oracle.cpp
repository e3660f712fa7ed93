#include <doctest.h>

#include "staircase/oracle.hpp"

#include <cstdlib>

using namespace staircase;

namespace {

// Every assignment in [k]^V, checked edge by edge.
long naive_count(Family f, int n, int k) {
  const GraphInstance g = build_graph({f, n});
  const int rows = g.rows();
  const std::size_t v = g.vertices().size();
  std::vector<int> w(v, 1);
  long count = 0;
  for (;;) {
    WordAssignment a{k, Eigen::MatrixXi(rows, n)};
    for (std::size_t i = 0; i < v; ++i) a.values(g.vertices()[i].row - 1, g.vertices()[i].col - 1) = w[i];
    count += staircase_check(g, a);
    std::size_t i = 0;
    while (i < v && w[i] == k) w[i++] = 1;
    if (i == v) return count;
    ++w[i];
  }
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("backtracking agrees with the naive product enumeration") {
  for (Family f : {Family::Path, Family::Cycle, Family::Grid2xN, Family::RT2xN, Family::KG2xN})
    for (int k = 1; k <= 3; ++k)
      for (int n = f == Family::Cycle ? 3 : 1; n <= (is_ladder(f) ? 4 : 6); ++n) {
        CAPTURE(family_name(f));
        CAPTURE(k);
        CAPTURE(n);
        CHECK(enumerate_count({f, n}, k) == naive_count(f, n, k));
      }
}

TEST_CASE("known small values") {
  CHECK(enumerate_count({Family::KG2xN, 1}, 3) == 7);
  CHECK(enumerate_count({Family::KG2xN, 2}, 3) == 31);
  CHECK(enumerate_count({Family::Cycle, 3}, 3) == 15);
  CHECK(enumerate_count({Family::Grid2xN, 5}, 1) == 1);
}

TEST_CASE("refined counts split the total by first column") {
  const RefinedTable t = refined_oracle({Family::KG2xN, 2}, 3);
  CHECK(t.total() == 31);
  CHECK(t.at(2, 1) == 4);
  CHECK(t.at(1, 3) == 0);
  for (Family f : kLadderFamilies)
    for (int n = 1; n <= 4; ++n) CHECK(refined_oracle({f, n}, 3).total() == enumerate_count({f, n}, 3));
  CHECK_THROWS_AS(refined_oracle({Family::Path, 3}, 3), std::invalid_argument);
}

TEST_CASE("the budget stops runaway enumeration") {
  CHECK_THROWS_AS(enumerate_count({Family::Grid2xN, 7}, 3, 1000), OracleOutOfRange);
  CHECK_NOTHROW(enumerate_count({Family::Grid2xN, 3}, 3, 181));
  CHECK_THROWS_AS(enumerate_count({Family::Grid2xN, 3}, 3, 180), OracleOutOfRange);
}

}
