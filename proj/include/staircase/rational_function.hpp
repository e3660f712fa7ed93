#pragma once

#include "staircase/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace staircase {

/// Reduced quotient of polynomials in x over the rationals.
///
/// Canonical form: gcd(num, den) = 1; if den(0) != 0 then den(0) = 1,
/// otherwise den has integer coprime coefficients and a positive leading
/// coefficient. Two rational functions are equal iff their canonical
/// numerators and denominators are equal, so operator== is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Poly numerator, Poly denominator = Poly(1));
  RationalFunction(const Rational& c) : RationalFunction(Poly(c)) {}
  template <std::integral I>
  RationalFunction(I c) : RationalFunction(Poly(Rational(c))) {}

  static RationalFunction x() { return RationalFunction(Poly::x()); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  template <typename T>
  T operator()(const T& at) const {
    return num_(at) / den_(at);
  }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction pow(RationalFunction base, unsigned exponent);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
  friend RationalFunction rf_normalize(const Poly& num, const Poly& den);

 private:
  struct Reduced {};
  RationalFunction(Reduced, Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {}

  Poly num_;
  Poly den_;
};

/// Reduce num/den to canonical form. Throws std::domain_error for den = 0.
RationalFunction rf_normalize(const Poly& num, const Poly& den);

/// Truncated power series c_0 + c_1 x + ... + c_N x^N.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Rational> coefficients);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Throws std::out_of_range beyond the truncation order.
  const Rational& operator[](std::size_t n) const;

  /// Partial sum at x, evaluated in T.
  template <typename T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_value<T>(*it);
    return acc;
  }

 private:
  template <typename T>
  static T to_value(const Rational& q) {
    if constexpr (std::is_same_v<T, Rational>) return q;
    else return T(bmp::numerator(q)) / T(bmp::denominator(q));
  }

  std::vector<Rational> coeffs_;
};

/// Maclaurin coefficients c_0..c_order. Throws std::domain_error when the
/// denominator vanishes at 0.
PowerSeries series_expand(const RationalFunction& rf, std::size_t order);

/// "x*(7 - x^2) / (1 - 5*x - x^2 + x^3)"
std::string to_string(const RationalFunction& rf);
/// Inverse of to_string; accepts any expression in x built from integers,
/// + - * / ^ and parentheses. Throws ParseError on malformed text.
RationalFunction parse_rational_function(std::string_view text);
Poly parse_polynomial(std::string_view text);

/// Coefficient array, lowest degree first. Integers that fit in 64 bits are
/// JSON numbers; anything else is a string ("p/q" or a long integer).
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);
/// {"numerator": [...], "denominator": [...]}
nlohmann::json to_json(const RationalFunction& rf);
RationalFunction rational_function_from_json(const nlohmann::json& j);

}  // namespace staircase
