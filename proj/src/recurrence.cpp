#include "staircase/recurrence.hpp"

#include <stdexcept>
#include <string>

namespace staircase {

namespace {

// Solves the square system in place by Gauss-Jordan over Q; nullopt if singular.
std::optional<std::vector<Rational>> solve(Matrix<Rational> a, Vector<Rational> b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index p = 0; p < n; ++p) {
    Eigen::Index pivot = p;
    while (pivot < n && a(pivot, p) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != p) {
      a.row(p).swap(a.row(pivot));
      std::swap(b(p), b(pivot));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == p || a(i, p) == 0) continue;
      Rational f = a(i, p) / a(p, p);
      for (Eigen::Index j = p; j < n; ++j) a(i, j) -= f * a(p, j);
      b(i) -= f * b(p);
    }
  }
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = b(i) / a(i, i);
  return x;
}

bool holds(std::span<const BigInt> seq, const std::vector<Rational>& a) {
  const std::size_t d = a.size();
  for (std::size_t n = d; n < seq.size(); ++n) {
    Rational v = 0;
    for (std::size_t i = 0; i < d; ++i) v += a[i] * Rational(seq[n - 1 - i]);
    if (v != Rational(seq[n])) return false;
  }
  return true;
}

}  // namespace

Poly Recurrence::denominator() const {
  std::vector<Rational> v{Rational(1)};
  for (const auto& a : coefficients) v.push_back(-a);
  return Poly(std::move(v));
}

std::optional<Recurrence> minimal_recurrence(std::span<const BigInt> seq, std::size_t max_order) {
  if (seq.size() < 2 * max_order + 3)
    throw std::invalid_argument("minimal_recurrence needs at least " + std::to_string(2 * max_order + 3) +
                                " terms, got " + std::to_string(seq.size()));
  for (std::size_t d = 1; d <= max_order; ++d) {
    // c_{d+r} = sum_i a_i c_{d+r-i} for r = 0..d-1
    Matrix<Rational> h(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    Vector<Rational> rhs(static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t i = 0; i < d; ++i)
        h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = Rational(seq[d + r - 1 - i]);
      rhs(static_cast<Eigen::Index>(r)) = Rational(seq[d + r]);
    }
    auto a = solve(h, rhs);
    if (!a || a->back() == 0 || !holds(seq, *a)) continue;
    return Recurrence{std::move(*a)};
  }
  return std::nullopt;
}

}  // namespace staircase
