#pragma once

#include "staircase/numeric.hpp"

#include <algorithm>
#include <concepts>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace staircase {

/// Dense univariate polynomial in x. coefficients()[i] multiplies x^i; the
/// zero polynomial has no coefficients and there is never a trailing zero.
template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  Polynomial(const Scalar& constant) { assign({constant}); }
  template <std::integral I>
  Polynomial(I constant) : Polynomial(Scalar(constant)) {}
  explicit Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { trim(); }

  static Polynomial x() { return monomial(Scalar(1), 1); }
  static Polynomial monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }
  Scalar constant_term() const { return coefficient(0); }

  /// Lowest power of x with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
    return v == coeffs_.size() ? 0 : v;
  }

  /// Horner evaluation at any type that accepts Scalar coefficients.
  template <typename T>
  T operator()(const T& at) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }

  /// x^length * p(1/x), i.e. coefficient list reversed over `length` slots.
  Polynomial reversed(std::size_t length) const {
    if (static_cast<int>(length) <= degree()) throw std::invalid_argument("reversal length below degree");
    std::vector<Scalar> v(length, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[length - 1 - i] = coeffs_[i];
    return Polynomial(std::move(v));
  }

  Polynomial shifted(std::size_t by) const {
    if (is_zero()) return {};
    std::vector<Scalar> v(by, Scalar(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& p) { return Polynomial(s) * p; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend Polynomial pow(Polynomial base, unsigned exponent) {
    Polynomial result(Scalar(1));
    while (exponent) {
      if (exponent & 1u) result *= base;
      exponent >>= 1u;
      if (exponent) base *= base;
    }
    return result;
  }

 private:
  void assign(std::vector<Scalar> v) {
    coeffs_ = std::move(v);
    trim();
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using Poly = Polynomial<Rational>;

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<Scalar>(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
  const Scalar lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Scalar c = rem[static_cast<std::size_t>(i)] / lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// Division that must leave no remainder; throws std::domain_error otherwise.
template <typename Scalar>
Polynomial<Scalar> exact_divide(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

inline BigInt exact_divide(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("division by zero");
  BigInt q, r;
  bmp::divide_qr(a, b, q, r);
  if (r != 0) throw std::domain_error("inexact integer division");
  return q;
}

template <typename Scalar>
Polynomial<Scalar> make_monic(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  Scalar lead = p.leading();
  std::vector<Scalar> v = p.coefficients();
  for (auto& c : v) c /= lead;
  return Polynomial<Scalar>(std::move(v));
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

/// Formal derivative.
template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> v(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) v[i - 1] = p.coefficients()[i] * Scalar(static_cast<long>(i));
  return Polynomial<Scalar>(std::move(v));
}

/// Ascending-degree rendering: "1 - 5*x - x^2 + x^3".
std::string to_string(const Poly& p);

}  // namespace staircase

namespace Eigen {

template <typename Scalar>
struct NumTraits<staircase::Polynomial<Scalar>> : GenericNumTraits<staircase::Polynomial<Scalar>> {
  using Real = staircase::Polynomial<Scalar>;
  using NonInteger = staircase::Polynomial<Scalar>;
  using Nested = staircase::Polynomial<Scalar>;
  using Literal = staircase::Polynomial<Scalar>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128
  };
};

}  // namespace Eigen
