#pragma once

#include "staircase/numeric.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

/// Sparse polynomial with integer coefficients in a fixed, ordered set of
/// variables. Terms map exponent vectors to nonzero coefficients.
class MultiPolynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MultiPolynomial(std::size_t variables) : variables_(variables) {}

  static MultiPolynomial constant(std::size_t variables, const BigInt& c) {
    MultiPolynomial p(variables);
    if (c != 0) p.terms_[Exponents(variables, 0)] = c;
    return p;
  }
  static MultiPolynomial variable(std::size_t variables, std::size_t index) {
    if (index >= variables) throw std::out_of_range("variable index out of range");
    MultiPolynomial p(variables);
    Exponents e(variables, 0);
    e[index] = 1;
    p.terms_[e] = 1;
    return p;
  }

  std::size_t variables() const { return variables_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Value at the point `values` (one entry per variable).
  template <typename T>
  T evaluate(std::span<const T> values) const {
    if (values.size() != variables_) throw std::invalid_argument("wrong number of variable values");
    T acc(0);
    for (const auto& [exps, coeff] : terms_) {
      T term(coeff);
      for (std::size_t v = 0; v < variables_; ++v)
        if (exps[v]) term *= bmp::pow(values[v], exps[v]);
      acc += term;
    }
    return acc;
  }

  MultiPolynomial operator-() const {
    MultiPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) {
    a.check(b);
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a + (-b); }
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    a.check(b);
    MultiPolynomial r(a.variables_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.variables_);
        for (std::size_t v = 0; v < a.variables_; ++v) e[v] = ea[v] + eb[v];
        r.add(e, ca * cb);
      }
    }
    return r;
  }
  friend MultiPolynomial pow(MultiPolynomial base, unsigned exponent) {
    MultiPolynomial r = constant(base.variables_, 1);
    while (exponent) {
      if (exponent & 1u) r = r * base;
      exponent >>= 1u;
      if (exponent) base = base * base;
    }
    return r;
  }
  friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

 private:
  void check(const MultiPolynomial& o) const {
    if (o.variables_ != variables_) throw std::invalid_argument("variable count mismatch");
  }
  void add(const Exponents& e, const BigInt& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else if (c == 0) {
      terms_.erase(it);
    }
  }

  std::size_t variables_;
  std::map<Exponents, BigInt> terms_;
};

/// Parses an integer polynomial over the named variables, e.g.
/// parse_multivariate("2*k*(t1^2 - 1)*x^3", {"x", "t1", "t2", "k"}).
MultiPolynomial parse_multivariate(std::string_view text, std::span<const std::string_view> names);

}  // namespace staircase
