#pragma once

#include "staircase/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace staircase {

namespace detail {

template <typename Scalar>
bool is_zero_entry(const Scalar& s) {
  if constexpr (requires { s.is_zero(); }) return s.is_zero();
  else return s == 0;
}

// Forward Bareiss elimination on `a` (n rows, n + extra columns). Returns the
// sign of the row permutation, or 0 when the leading n x n block is singular.
template <typename Scalar>
int bareiss_eliminate(Matrix<Scalar>& a, Eigen::Index n) {
  int sign = 1;
  Scalar previous(1);
  for (Eigen::Index p = 0; p < n; ++p) {
    Eigen::Index pivot = p;
    while (pivot < n && is_zero_entry(a(pivot, p))) ++pivot;
    if (pivot == n) return 0;
    if (pivot != p) {
      a.row(p).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = p + 1; i < n; ++i) {
      for (Eigen::Index j = p + 1; j < a.cols(); ++j)
        a(i, j) = exact_divide(Scalar(a(p, p) * a(i, j) - a(i, p) * a(p, j)), previous);
      a(i, p) = Scalar(0);
    }
    previous = a(p, p);
  }
  return sign;
}

}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact, so Scalar may be any integral domain with exact_divide (BigInt,
/// Polynomial<Rational>, ...).
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  const int sign = detail::bareiss_eliminate(a, a.rows());
  if (sign == 0) return Scalar(0);
  Scalar d = a(a.rows() - 1, a.cols() - 1);
  return sign > 0 ? d : Scalar(-d);
}

/// Solution of m * v = rhs kept inside the ring: v = adjugate_times_rhs / determinant.
template <typename Scalar>
struct FractionFreeSolution {
  Scalar determinant;
  Vector<Scalar> adjugate_times_rhs;
};

/// Cramer's rule by one Bareiss sweep over [m | rhs] and fraction-free back
/// substitution. Throws std::domain_error when m is singular.
template <typename Derived, typename RhsDerived>
FractionFreeSolution<typename Derived::Scalar> fraction_free_solve(const Eigen::MatrixBase<Derived>& m,
                                                                   const Eigen::MatrixBase<RhsDerived>& rhs) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (m.cols() != n || rhs.rows() != n) throw std::invalid_argument("fraction_free_solve: shape mismatch");
  Matrix<Scalar> a(n, n + 1);
  a.leftCols(n) = m;
  a.col(n) = rhs;
  const int sign = detail::bareiss_eliminate(a, n);
  if (sign == 0) throw std::domain_error("fraction_free_solve: singular matrix");
  const Scalar det = a(n - 1, n - 1);
  Vector<Scalar> y(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Scalar acc = det * a(i, n);
    for (Eigen::Index j = i + 1; j < n; ++j) acc = acc - a(i, j) * y(j);
    y(i) = exact_divide(acc, a(i, i));
  }
  if (sign < 0) return {Scalar(-det), Vector<Scalar>(-y)};
  return {det, y};
}

/// m^e by repeated squaring.
template <typename Derived>
Matrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& m, unsigned long long e) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("power of a non-square matrix");
  Matrix<Scalar> result = Matrix<Scalar>::Identity(m.rows(), m.cols());
  Matrix<Scalar> base = m;
  while (e) {
    if (e & 1ull) result = (result * base).eval();
    e >>= 1ull;
    if (e) base = (base * base).eval();
  }
  return result;
}

}  // namespace staircase
