#include <doctest.h>

#include "staircase/kernel.hpp"
#include "staircase/theorem_table.hpp"
#include "staircase/theorems.hpp"
#include "staircase/transfer.hpp"

#include <string>

using namespace staircase;

namespace {

BigFloat rel(const BigFloat& a, const BigFloat& b) { return bmp::abs(a - b) / bmp::abs(b); }

BigFloat gf_at(Family f, int k, const BigFloat& x) {
  const RationalFunction g = transfer_gf(f, k);
  return g(x);
}

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("KG k = 3 at x = 0.05 matches the corrected rational form") {
  ScopedPrecision p(60);
  const BigFloat x("0.05");
  const BigFloat expected = x * (7 + 3 * x) / (1 - 4 * x - 3 * x * x);
  const BigFloat got = theorem_eval(Family::KG2xN, 3, x);
  CHECK(rel(got, expected) < BigFloat("1e-25"));
  CHECK(bmp::abs(got - BigFloat("0.451104")) < BigFloat("1e-6"));
}

TEST_CASE("grid k = 3 at x = 0.02 matches the truncated series") {
  ScopedPrecision p(60);
  const BigFloat x("0.02");
  const BigFloat series = series_expand(transfer_gf(Family::Grid2xN, 3), 60).evaluate(x);
  CHECK(rel(theorem_eval(Family::Grid2xN, 3, x), series) < BigFloat("1e-20"));
}

TEST_CASE("corrected closed forms also hold for k = 1 and k = 2") {
  ScopedPrecision p(60);
  CHECK(rel(theorem_eval(Family::KG2xN, 1, BigFloat("0.1")), BigFloat(1) / 9) < BigFloat("1e-40"));
  for (Family f : kLadderFamilies)
    for (int k : {1, 2}) {
      const BigFloat x = BigFloat(1) / 64;
      CHECK(rel(theorem_eval(f, k, x), gf_at(f, k, x)) < BigFloat("1e-40"));
    }
}

TEST_CASE("closed forms agree with the derived generating function for k up to 7") {
  ScopedPrecision p(60);
  for (Family f : kLadderFamilies)
    for (int k = 3; k <= 7; ++k)
      for (const char* xs : {"1/64", "1/100", "1/128"}) {
        const Rational x = parse_rational(xs);
        CAPTURE(family_name(f));
        CAPTURE(k);
        CHECK(rel(theorem_eval(f, k, x), to_float(transfer_gf(f, k)(x))) < BigFloat("1e-40"));
      }
}

TEST_CASE("invariant under t1 <-> t2 and t -> 1/t") {
  ScopedPrecision p(60);
  for (Family f : {Family::Grid2xN, Family::RT2xN})
    for (int k = 3; k <= 5; ++k) {
      const BigFloat x = BigFloat(1) / 64;
      const TheoremRoots r = theorem_roots(f, x);
      const BigFloat a = theorem_eval_at(f, k, x, r);
      CHECK(rel(theorem_eval_at(f, k, x, {r.t2, r.t1}), a) < BigFloat("1e-30"));
      CHECK(rel(theorem_eval_at(f, k, x, {1 / r.t1, r.t2}), a) < BigFloat("1e-30"));
    }
}

TEST_CASE("a vanishing denominator factor is named") {
  ScopedPrecision p(60);
  const BigFloat x = BigFloat(1) / 64;
  CHECK_THROWS_WITH_AS(theorem_eval_at(Family::KG2xN, 3, x, {BigFloat(1), BigFloat(0)}),
                       doctest::Contains("(t1 - 1)"), std::domain_error);
  const TheoremRoots r = theorem_roots(Family::Grid2xN, x);
  CHECK_THROWS_WITH_AS(theorem_eval_at(Family::Grid2xN, 3, x, {r.t1, BigFloat(1)}), doctest::Contains("(t2 - 1)"),
                       std::domain_error);
  CHECK_THROWS_AS(theorem_eval(Family::Path, 3, x), std::invalid_argument);
}

TEST_CASE("printed and corrected transcriptions") {
  ScopedPrecision p(60);
  const BigFloat x = BigFloat(1) / 64;
  CHECK(theorem_eval(Family::Grid2xN, 3, x, Transcription::Printed) == theorem_eval(Family::Grid2xN, 3, x));
  CHECK(rel(theorem_eval(Family::KG2xN, 3, x, Transcription::Printed), theorem_eval(Family::KG2xN, 3, x)) > 1);
  CHECK(rel(theorem_eval(Family::RT2xN, 3, x, Transcription::Printed), theorem_eval(Family::RT2xN, 3, x)) >
        BigFloat("1e-15"));
  for (const auto& piece : theorem_pieces()) {
    CHECK_NOTHROW(piece_polynomial(piece.family, piece.name, false));
    CHECK_NOTHROW(piece_polynomial(piece.family, piece.name, true));
  }
  CHECK_THROWS_AS(theorem_piece(Family::KG2xN, "a1"), std::out_of_range);
}

TEST_CASE("the reviewed transcription is unchanged") {
  CHECK(theorem_table_checksum() == kReviewedTheoremTableChecksum);
}

TEST_CASE("multivariate parsing") {
  const std::string_view names[] = {"x", "y"};
  const MultiPolynomial p = parse_multivariate("(x + y)^2 - x^2 - y^2", names);
  CHECK(p == parse_multivariate("2*x*y", names));
  const BigFloat values[] = {BigFloat(3), BigFloat(5)};
  CHECK(p.evaluate<BigFloat>(values) == 30);
  CHECK_THROWS(parse_multivariate("z", names));
  CHECK(parse_multivariate("x - x", names).is_zero());
}

TEST_CASE("precision doubles once a root power passes 1e20") {
  ScopedPrecision p(60);
  CHECK(theorem_precision(Family::Grid2xN, 5, BigFloat(1) / 128) == 60);
  CHECK(theorem_precision(Family::Grid2xN, 12, BigFloat(1) / 128) == 120);
  CHECK(theorem_precision(Family::KG2xN, 40, BigFloat(1) / 64) == 60);
  CHECK(current_precision() == 60);
  const Rational x(1, 128);
  CHECK(rel(theorem_eval(Family::Grid2xN, 12, x), to_float(transfer_gf(Family::Grid2xN, 12)(x))) < BigFloat("1e-40"));
}

}
