#pragma once

#include "staircase/graph.hpp"
#include "staircase/polynomial.hpp"

#include <vector>

namespace staircase {

/// K(t) = sum_i coefficients[i](x) t^i for one two-row family.
struct KernelSpec {
  Family family;
  std::vector<Poly> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  /// Coefficient list equal to its reverse, so roots pair up as t, 1/t.
  bool palindromic() const;
  template <typename T>
  T operator()(const T& t, const T& x) const {
    T acc(0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + (*it)(x);
    return acc;
  }
};

/// Throws std::invalid_argument for Path and Cycle.
KernelSpec kernel_spec(Family family);

/// |K(t)| at working precision.
BigFloat kernel_residual(Family family, const BigFloat& t, const BigFloat& x);

/// Residual gate and deduplication distance used by kernel_roots, scaled to
/// the working precision: 10^-40 and 10^-30 at 60 digits.
BigFloat root_residual_gate();
BigFloat root_dedup_distance();

/// The printed root radicals evaluated over every sign branch; branches whose
/// kernel residual passes the gate are returned, deduplicated, largest first.
/// KG has a single printed branch t1. Throws std::domain_error
/// ("root formula failed at this x") when nothing passes.
std::vector<BigFloat> kernel_roots(Family family, const BigFloat& x);

/// Half the smallest positive zero of the k = 3 generating-function
/// denominator; the upper end of the x range used for numeric work.
double x_max(Family family);

}  // namespace staircase
