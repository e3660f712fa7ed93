#include "staircase/rational_function.hpp"

#include "staircase/expression.hpp"

#include <limits>
#include <stdexcept>

namespace staircase {

namespace {

std::string coefficient_text(const Rational& magnitude) {
  return bmp::denominator(magnitude) == 1 ? magnitude.str() : "(" + magnitude.str() + ")";
}

std::string monomial_text(std::size_t degree) {
  return degree == 1 ? "x" : "x^" + std::to_string(degree);
}

std::size_t term_count(const Poly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coefficients()) n += c != 0;
  return n;
}

// Scale a polynomial with rational coefficients to integer coprime ones.
Rational primitive_scale(const Poly& p) {
  BigInt den_lcm = 1;
  for (const auto& c : p.coefficients()) den_lcm = bmp::lcm(den_lcm, BigInt(bmp::denominator(c)));
  BigInt num_gcd = 0;
  for (const auto& c : p.coefficients()) num_gcd = bmp::gcd(num_gcd, BigInt(bmp::numerator(c) * (den_lcm / bmp::denominator(c))));
  return Rational(den_lcm, num_gcd);
}

Poly scaled(const Poly& p, const Rational& s) {
  std::vector<Rational> v = p.coefficients();
  for (auto& c : v) c *= s;
  return Poly(std::move(v));
}

nlohmann::json coefficient_json(const Rational& q) {
  if (bmp::denominator(q) == 1) {
    const BigInt& n = bmp::numerator(q);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(n);
  }
  return q.str();
}

Rational coefficient_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("polynomial coefficient must be an integer or a string, got " + j.dump());
}

}  // namespace

RationalFunction::RationalFunction(Poly numerator, Poly denominator) {
  *this = rf_normalize(numerator, denominator);
}

RationalFunction rf_normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return RationalFunction();
  Poly g = gcd(num, den);
  Poly n = exact_divide(num, g);
  Poly d = exact_divide(den, g);
  Rational s = d.constant_term() != 0 ? Rational(1) / d.constant_term() : primitive_scale(d);
  if (d.constant_term() == 0 && d.leading() * s < 0) s = -s;
  RationalFunction r;
  r.num_ = scaled(n, s);
  r.den_ = scaled(d, s);
  return r;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(Reduced{}, -num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return rf_normalize(a.num_ + b.num_, a.den_);
  return rf_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return rf_normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return rf_normalize(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction pow(RationalFunction base, unsigned exponent) {
  RationalFunction result(1);
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("power series needs at least c_0");
}

const Rational& PowerSeries::operator[](std::size_t n) const {
  if (n >= coeffs_.size())
    throw std::out_of_range("coefficient " + std::to_string(n) + " beyond series order " + std::to_string(order()));
  return coeffs_[n];
}

PowerSeries series_expand(const RationalFunction& rf, std::size_t order) {
  const Poly& num = rf.numerator();
  const Poly& den = rf.denominator();
  if (den.constant_term() == 0) throw std::domain_error("denominator vanishes at x = 0; no power series");
  const Rational d0 = den.constant_term();
  const std::size_t dd = static_cast<std::size_t>(den.degree());
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational v = num.coefficient(n);
    for (std::size_t i = 1; i <= std::min(n, dd); ++i) v -= den.coefficients()[i] * c[n - i];
    c[n] = v / d0;
  }
  return PowerSeries(std::move(c));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (i == 0) out += magnitude.str();
    else if (magnitude == 1) out += monomial_text(i);
    else out += coefficient_text(magnitude) + "*" + monomial_text(i);
  }
  return out;
}

std::string to_string(const RationalFunction& rf) {
  const Poly& num = rf.numerator();
  const Poly& den = rf.denominator();
  std::string top;
  const std::size_t v = num.valuation();
  if (v >= 1 && term_count(num) >= 2) {
    std::vector<Rational> rest(num.coefficients().begin() + static_cast<std::ptrdiff_t>(v), num.coefficients().end());
    top = monomial_text(v) + "*(" + to_string(Poly(std::move(rest))) + ")";
  } else {
    top = to_string(num);
    if (term_count(num) >= 2 && den != Poly(1)) top = "(" + top + ")";
  }
  if (den == Poly(1)) return top;
  return top + " / (" + to_string(den) + ")";
}

RationalFunction parse_rational_function(std::string_view text) {
  ExpressionParser<RationalFunction> parser(
      [](std::string_view name) -> RationalFunction {
        if (name != "x") throw ParseError("unknown variable '" + std::string(name) + "'");
        return RationalFunction::x();
      },
      [](const BigInt& v) { return RationalFunction(Rational(v)); });
  return parser.parse(text);
}

Poly parse_polynomial(std::string_view text) {
  RationalFunction rf = parse_rational_function(text);
  if (rf.denominator().degree() != 0) throw ParseError("not a polynomial: \"" + std::string(text) + "\"");
  return scaled(rf.numerator(), Rational(1) / rf.denominator().constant_term());
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(coefficient_json(c));
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Rational> v;
  for (const auto& c : j) v.push_back(coefficient_from_json(c));
  return Poly(std::move(v));
}

nlohmann::json to_json(const RationalFunction& rf) {
  return {{"numerator", to_json(rf.numerator())}, {"denominator", to_json(rf.denominator())}};
}

RationalFunction rational_function_from_json(const nlohmann::json& j) {
  return rf_normalize(poly_from_json(j.at("numerator")), poly_from_json(j.at("denominator")));
}

}  // namespace staircase
