#pragma once

#include "staircase/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace staircase {

/// c_n = a_1 c_{n-1} + ... + a_d c_{n-d}.
struct Recurrence {
  std::vector<Rational> coefficients;  // a_1..a_d, a_d != 0

  std::size_t order() const { return coefficients.size(); }
  /// 1 - a_1 x - ... - a_d x^d, the denominator of the sequence's generating function.
  Poly denominator() const;
  /// x^d - a_1 x^{d-1} - ... - a_d.
  Poly characteristic() const { return denominator().reversed(order() + 1); }
  bool operator==(const Recurrence&) const = default;
};

/// Smallest-order linear recurrence with constant coefficients that holds on
/// every term of `seq`, searching orders 1..max_order; each order is solved
/// exactly on a Hankel window and then checked on all later terms. Throws
/// std::invalid_argument when seq has fewer than 2*max_order + 3 terms.
std::optional<Recurrence> minimal_recurrence(std::span<const BigInt> seq, std::size_t max_order);

}  // namespace staircase
