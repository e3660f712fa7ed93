#include <doctest.h>

#include "staircase/kernel.hpp"
#include "staircase/theorems.hpp"
#include "staircase/transfer.hpp"

#include <random>

using namespace staircase;

TEST_SUITE("kernel") {

TEST_CASE("kernels are palindromic with the expected degrees") {
  CHECK(kernel_spec(Family::KG2xN).degree() == 2);
  CHECK(kernel_spec(Family::Grid2xN).degree() == 4);
  CHECK(kernel_spec(Family::RT2xN).degree() == 4);
  for (Family f : kLadderFamilies) CHECK(kernel_spec(f).palindromic());
  CHECK(kernel_spec(Family::RT2xN).coefficients[2] == parse_polynomial("1 - 3*x + x^2 - x^3"));
  CHECK_THROWS_AS(kernel_spec(Family::Path), std::invalid_argument);
}

TEST_CASE("residual at t = 0 is the constant coefficient") {
  ScopedPrecision p(60);
  const BigFloat x("0.1");
  CHECK(bmp::abs(kernel_residual(Family::KG2xN, BigFloat(0), x) - x) < BigFloat("1e-55"));
  CHECK(bmp::abs(kernel_residual(Family::Grid2xN, BigFloat(0), x) - x * x) < BigFloat("1e-55"));
  CHECK(bmp::abs(kernel_residual(Family::RT2xN, BigFloat(0), x) - x * x) < BigFloat("1e-55"));
}

TEST_CASE("printed KG radical at x = 0.1") {
  ScopedPrecision p(60);
  const BigFloat t = (BigFloat("0.68") - bmp::sqrt(BigFloat("0.4224"))) / BigFloat("0.2");
  CHECK(kernel_residual(Family::KG2xN, t, BigFloat("0.1")) < BigFloat("1e-30"));
  const auto roots = kernel_roots(Family::KG2xN, BigFloat("0.1"));
  REQUIRE(roots.size() == 1);
  CHECK(bmp::abs(roots[0] - BigFloat("0.150385")) < BigFloat("1e-6"));
  CHECK(kernel_roots(Family::KG2xN, BigFloat("0.001"))[0] < BigFloat("0.002"));
}

TEST_CASE("grid roots at x = 0.05 come in reciprocal pairs") {
  ScopedPrecision p(60);
  const BigFloat x("0.05");
  const auto roots = kernel_roots(Family::Grid2xN, x);
  REQUIRE(roots.size() == 4);
  CHECK(roots[1] > 1);
  CHECK(roots[2] < 1);
  CHECK(bmp::abs(roots[0] * roots[3] - 1) < BigFloat("1e-40"));
  CHECK(bmp::abs(roots[1] * roots[2] - 1) < BigFloat("1e-40"));
  for (const auto& t : roots) CHECK(kernel_residual(Family::Grid2xN, t, x) < BigFloat("1e-40"));
}

TEST_CASE("RT sign branches yield four distinct roots, two above 1") {
  ScopedPrecision p(60);
  const BigFloat x = BigFloat(1) / 64;
  const auto roots = kernel_roots(Family::RT2xN, x);
  REQUIRE(roots.size() == 4);
  CHECK(roots[1] > 1);
  CHECK(roots[2] < 1);
  CHECK(bmp::abs(roots[1] * roots[2] - 1) < BigFloat("1e-40"));
  const TheoremRoots chosen = theorem_roots(Family::RT2xN, x);
  CHECK(chosen.t1 == roots[0]);
  CHECK(chosen.t2 == roots[1]);
}

TEST_CASE("roots survive the reciprocal map at random rational x") {
  ScopedPrecision p(60);
  std::mt19937 rng(7);
  for (Family f : kLadderFamilies) {
    const double top = x_max(f);
    std::uniform_int_distribution<int> num(1, 999);
    for (int i = 0; i < 20; ++i) {
      const BigFloat x = BigFloat(top) * num(rng) / 1000;
      CHECK(kernel_spec(f).palindromic());
      for (const auto& t : kernel_roots(f, x)) {
        CHECK(kernel_residual(f, t, x) < root_residual_gate());
        CHECK(kernel_residual(f, 1 / t, x) < BigFloat("1e-35"));
      }
    }
  }
}

TEST_CASE("x_max sits at half the first singularity of the k = 3 series") {
  CHECK(x_max(Family::KG2xN) == doctest::Approx(0.1076).epsilon(0.005));
  CHECK(x_max(Family::Grid2xN) == doctest::Approx(0.0970).epsilon(0.005));
  CHECK(x_max(Family::RT2xN) == doctest::Approx(0.1030).epsilon(0.005));
  for (Family f : kLadderFamilies) {
    const Poly d = transfer_gf(f, 3).denominator();
    const double z = 2 * x_max(f);
    CHECK(std::abs(d(Rational(z)).convert_to<double>()) < 1e-9);
    CHECK(d(Rational(z * 0.99)).convert_to<double>() > 0);
  }
}

TEST_CASE("bad inputs") {
  CHECK_THROWS_AS(kernel_roots(Family::KG2xN, BigFloat(0)), std::domain_error);
  CHECK_THROWS_AS(kernel_roots(Family::KG2xN, BigFloat(-1)), std::domain_error);
  CHECK_THROWS_WITH_AS(kernel_roots(Family::KG2xN, BigFloat("0.2")), "root formula failed at this x", std::domain_error);
}

}
