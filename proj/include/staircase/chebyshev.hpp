#pragma once

#include "staircase/rational_function.hpp"

namespace staircase {

/// Chebyshev polynomial of the second kind U_m evaluated at y, by
/// U_0 = 1, U_1 = 2y, U_{m+1} = 2y U_m - U_{m-1}. T is any commutative ring
/// constructible from int.
template <typename T>
T chebyshev_u(unsigned m, const T& y) {
  T previous(1);
  if (m == 0) return previous;
  const T two_y = T(2) * y;
  T current = two_y;
  for (unsigned i = 1; i < m; ++i) {
    T next = two_y * current - previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

inline RationalFunction cheb_u(unsigned m, const RationalFunction& y) { return chebyshev_u(m, y); }

}  // namespace staircase
