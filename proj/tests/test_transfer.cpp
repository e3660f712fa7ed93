#include <doctest.h>

#include "staircase/linear_algebra.hpp"
#include "staircase/oracle.hpp"
#include "staircase/recurrence.hpp"
#include "staircase/transfer.hpp"

using namespace staircase;

TEST_SUITE("transfer") {

TEST_CASE("grid k = 3 reproduces the printed 7 x 7 matrix") {
  Eigen::MatrixXi printed(7, 7);
  printed << 1, 1, 1, 1, 0, 0, 0,
             1, 1, 1, 1, 1, 0, 0,
             1, 1, 1, 1, 0, 1, 0,
             1, 1, 1, 1, 1, 1, 1,
             0, 1, 0, 1, 1, 1, 1,
             0, 0, 1, 1, 1, 1, 1,
             0, 0, 0, 1, 1, 1, 1;
  const TransferMatrix t = transfer_matrix(Family::Grid2xN, 3);
  CHECK(t.entries == printed);
  Eigen::VectorXi sums(7);
  sums << 4, 5, 5, 7, 5, 5, 4;
  CHECK(t.entries.rowwise().sum() == sums);
}

TEST_CASE("KG k = 3 blocks the (1,2) -> (2,3) transition") {
  const TransferMatrix t = transfer_matrix(Family::KG2xN, 3);
  CHECK(t.entries == t.entries.transpose());
  CHECK(t.entries(1, 4) == 0);  // states 12 and 23
  CHECK(t.entries.sum() == 31);
  CHECK(t.entries.sum() == enumerate_count({Family::KG2xN, 2}, 3));
}

TEST_CASE("shapes and symmetry") {
  for (Family f : kLadderFamilies) {
    CHECK(transfer_matrix(f, 1).entries == Eigen::MatrixXi::Ones(1, 1));
    for (int k = 1; k <= 6; ++k) CHECK(transfer_matrix(f, k).size() == 3 * k - 2);
  }
  CHECK(transfer_matrix(Family::Path, 4).size() == 4);
  for (int k = 2; k <= 6; ++k) {
    CHECK(transfer_matrix(Family::Grid2xN, k).entries == transfer_matrix(Family::Grid2xN, k).entries.transpose());
    CHECK(transfer_matrix(Family::KG2xN, k).entries == transfer_matrix(Family::KG2xN, k).entries.transpose());
  }
  CHECK(transfer_matrix(Family::RT2xN, 3).entries != transfer_matrix(Family::RT2xN, 3).entries.transpose());
  CHECK_THROWS_AS(transfer_matrix(Family::Grid2xN, 0), std::invalid_argument);
}

TEST_CASE("RT matrix is conjugate to its transpose under reflection plus row swap") {
  for (int k = 2; k <= 6; ++k) {
    const TransferMatrix t = transfer_matrix(Family::RT2xN, k);
    auto index = [&](ColumnState s) {
      for (std::size_t i = 0; i < t.states.size(); ++i)
        if (t.states[i] == s) return static_cast<Eigen::Index>(i);
      FAIL("state missing");
      return Eigen::Index(-1);
    };
    for (std::size_t i = 0; i < t.states.size(); ++i)
      for (std::size_t j = 0; j < t.states.size(); ++j) {
        const ColumnState a = t.states[i], b = t.states[j];
        const ColumnState fa{k + 1 - a.bottom, k + 1 - a.top}, fb{k + 1 - b.bottom, k + 1 - b.top};
        CHECK(t.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) == t.entries(index(fb), index(fa)));
      }
  }
}

TEST_CASE("entrywise dominance KG <= RT <= grid") {
  for (int k = 1; k <= 6; ++k) {
    const Eigen::MatrixXi g = transfer_matrix(Family::Grid2xN, k).entries;
    const Eigen::MatrixXi r = transfer_matrix(Family::RT2xN, k).entries;
    const Eigen::MatrixXi q = transfer_matrix(Family::KG2xN, k).entries;
    CHECK((q.array() <= r.array()).all());
    CHECK((r.array() <= g.array()).all());
  }
}

TEST_CASE("k = 3 reference counts and agreement with the oracle") {
  CHECK(transfer_count(Family::KG2xN, 3, 7) == 67489);
  CHECK(transfer_count(Family::RT2xN, 3, 5) == 3809);
  CHECK(transfer_count(Family::Grid2xN, 4, 3) == enumerate_count({Family::Grid2xN, 3}, 4));
  CHECK(transfer_count(Family::Grid2xN, 4, 3) == 302);
  for (Family f : {Family::Path, Family::Cycle, Family::Grid2xN, Family::RT2xN, Family::KG2xN})
    for (int k = 1; k <= 3; ++k)
      for (int n = f == Family::Cycle ? 3 : 1; n <= 5; ++n) CHECK(transfer_count(f, k, n) == enumerate_count({f, n}, k));
  const auto counts = transfer_counts(Family::Grid2xN, 3, 7);
  CHECK(counts.back() == 127913);
  CHECK_THROWS_AS(transfer_count(Family::Grid2xN, 3, 0), std::invalid_argument);
}

TEST_CASE("refined counts") {
  for (Family f : kLadderFamilies)
    for (const auto& [s, c] : transfer_refined(f, 4, 1).entries) CHECK(c == 1);
  CHECK(transfer_refined(Family::KG2xN, 3, 2).at(2, 1) == 4);
  CHECK(transfer_refined(Family::Grid2xN, 3, 6).total() == 24807);
  for (Family f : kLadderFamilies)
    for (int n = 1; n <= 4; ++n) CHECK(transfer_refined(f, 3, n) == refined_oracle({f, n}, 3));
  CHECK_THROWS_AS(transfer_refined(Family::Path, 3, 2), std::invalid_argument);
}

TEST_CASE("generating functions") {
  CHECK(transfer_gf(Family::Grid2xN, 3) == parse_rational_function("x*(7 - x^2)/(1 - 5*x - x^2 + x^3)"));
  CHECK(transfer_gf(Family::RT2xN, 3) == parse_rational_function("x*(x^2 + 5*x + 7)/(1 - 4*x - 4*x^2 - x^3)"));
  for (Family f : {Family::Path, Family::Cycle, Family::Grid2xN, Family::RT2xN, Family::KG2xN})
    CHECK(transfer_gf(f, 1) == parse_rational_function("x/(1 - x)"));
  for (Family f : kLadderFamilies) CHECK(transfer_gf_cofactor(f, 3) == transfer_gf(f, 3));
  CHECK(transfer_gf_cofactor(Family::Path, 4) == transfer_gf(Family::Path, 4));
  CHECK_THROWS_AS(transfer_gf_cofactor(Family::Cycle, 3), std::invalid_argument);
}

TEST_CASE("grid k = 3 cofactor sum and determinant match the printed polynomials") {
  const Matrix<Poly> m = identity_minus_x(transfer_matrix(Family::Grid2xN, 3));
  CHECK(bareiss_determinant(m) == parse_polynomial("x^7 + x^6 - 9*x^5 - 9*x^4 + 15*x^3 + 7*x^2 - 7*x + 1"));
  CHECK(cofactor_sum(m) == parse_polynomial("-x^6 - 2*x^5 + 9*x^4 + 16*x^3 - 15*x^2 - 14*x + 7"));
}

TEST_CASE("series of the generating function reproduce the counts") {
  for (Family f : {Family::Path, Family::Cycle, Family::Grid2xN, Family::RT2xN, Family::KG2xN})
    for (int k = 1; k <= 6; ++k) {
      const PowerSeries s = series_expand(transfer_gf(f, k), 20);
      const auto counts = transfer_counts(f, k, 20);
      CHECK(s[0] == 0);
      for (std::size_t n = 1; n <= 20; ++n) CHECK(s[n] == Rational(counts[n - 1]));
    }
}

TEST_CASE("recurrences recover the denominators") {
  for (Family f : kLadderFamilies)
    for (int k = 1; k <= 4; ++k) {
      const auto counts = transfer_counts(f, k, 40);
      const auto r = minimal_recurrence(counts, 18);
      REQUIRE(r.has_value());
      CHECK(r->denominator() == transfer_gf(f, k).denominator());
    }
}

TEST_CASE("cycle counts") {
  CHECK(cycle_count(3, 3) == 15);
  CHECK(cycle_count(3, 2, true) == 7);
  CHECK(cycle_count(3, 1, true) == 3);
  for (int n = 3; n <= 9; ++n) CHECK(cycle_count(1, n) == 1);
  CHECK_THROWS_AS(cycle_count(3, 2), std::invalid_argument);
  const auto traces = transfer_counts(Family::Cycle, 3, 4);
  CHECK(traces[1] == 7);
  CHECK(traces[2] == 15);
}

TEST_CASE("JSON rendering of a transfer matrix") {
  const nlohmann::json j = to_json(transfer_matrix(Family::KG2xN, 2));
  CHECK(j["family"] == "kg");
  CHECK(j["k"] == 2);
  CHECK(j["states"] == nlohmann::json({"11", "12", "21", "22"}));
  CHECK(j["rows"][0] == nlohmann::json({1, 1, 1, 1}));
  CHECK(to_json(transfer_matrix(Family::Path, 2))["states"] == nlohmann::json({"1", "2"}));
}

}
