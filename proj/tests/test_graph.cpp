#include <doctest.h>

#include "staircase/graph.hpp"

using namespace staircase;

TEST_SUITE("graph") {

TEST_CASE("edge counts per family") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(build_graph({Family::Path, n}).edges().size() == static_cast<std::size_t>(n - 1));
    CHECK(build_graph({Family::Grid2xN, n}).edges().size() == static_cast<std::size_t>(3 * n - 2));
    CHECK(build_graph({Family::RT2xN, n}).edges().size() == static_cast<std::size_t>(4 * n - 3));
    CHECK(build_graph({Family::KG2xN, n}).edges().size() == static_cast<std::size_t>(5 * n - 4));
    if (n >= 3) CHECK(build_graph({Family::Cycle, n}).edges().size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("the RT diagonal runs from the top of column j to the bottom of column j+1") {
  const GraphInstance g = build_graph({Family::RT2xN, 3});
  CHECK(g.has_edge({1, 1}, {2, 2}));
  CHECK(g.has_edge({2, 2}, {1, 1}));
  CHECK_FALSE(g.has_edge({2, 1}, {1, 2}));
  const GraphInstance kg = build_graph({Family::KG2xN, 3});
  CHECK(kg.has_edge({2, 1}, {1, 2}));
}

TEST_CASE("cycles close up and vertices are indexed column by column") {
  const GraphInstance c = build_graph({Family::Cycle, 5});
  CHECK(c.has_edge({1, 5}, {1, 1}));
  const GraphInstance g = build_graph({Family::Grid2xN, 3});
  CHECK(g.index_of({1, 1}) == 0);
  CHECK(g.index_of({2, 1}) == 1);
  CHECK(g.index_of({1, 2}) == 2);
  CHECK_THROWS(g.index_of({3, 1}));
}

TEST_CASE("family specs reject impossible lengths") {
  CHECK_THROWS_AS(FamilySpec({Family::Grid2xN, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec({Family::Cycle, 2}).validate(), std::invalid_argument);
  CHECK_NOTHROW(FamilySpec({Family::Cycle, 3}).validate());
  CHECK_NOTHROW(FamilySpec({Family::Path, 1}).validate());
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::Path, Family::Cycle, Family::Grid2xN, Family::RT2xN, Family::KG2xN})
    CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("torus").has_value());
  CHECK(family_notation(Family::Grid2xN) == "P_2 x P_n");
}

TEST_CASE("column states are the lexicographic pairs with |t - b| <= 1") {
  const auto s = column_states(3);
  REQUIRE(s.size() == 7);
  const char* expected[] = {"11", "12", "21", "22", "23", "32", "33"};
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(to_string(s[i]) == expected[i]);
  for (int k = 1; k <= 9; ++k) CHECK(column_states(k).size() == static_cast<std::size_t>(3 * k - 2));
}

TEST_CASE("staircase check") {
  const GraphInstance g = build_graph({Family::KG2xN, 2});
  WordAssignment ok{3, Eigen::MatrixXi(2, 2)};
  ok.values << 1, 2, 2, 2;
  CHECK(staircase_check(g, ok));
  CHECK(staircase_check(g, ok.reflected()));
  CHECK(ok.reflected().values(0, 0) == 3);

  WordAssignment diagonal_clash{3, Eigen::MatrixXi(2, 2)};
  diagonal_clash.values << 1, 2, 2, 3;  // (1,1)=1 against (2,2)=3 on a KG diagonal
  CHECK_FALSE(staircase_check(g, diagonal_clash));
  CHECK(staircase_check(build_graph({Family::RT2xN, 2}), WordAssignment{3, (Eigen::MatrixXi(2, 2) << 2, 1, 1, 2).finished()}));
  CHECK_FALSE(staircase_check(build_graph({Family::RT2xN, 2}), WordAssignment{3, (Eigen::MatrixXi(2, 2) << 1, 2, 2, 3).finished()}));

  WordAssignment wrong_shape{3, Eigen::MatrixXi::Ones(1, 2)};
  CHECK_THROWS_AS(staircase_check(g, wrong_shape), std::invalid_argument);
  WordAssignment out_of_range{3, Eigen::MatrixXi::Constant(2, 2, 4)};
  CHECK_THROWS_AS(staircase_check(g, out_of_range), std::invalid_argument);
}

}
