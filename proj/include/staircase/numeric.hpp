#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace staircase {

namespace bmp = boost::multiprecision;

/// Exact non-negative counts and general integers.
using BigInt = bmp::number<bmp::gmp_int, bmp::et_off>;
/// Exact rationals; coefficients of every polynomial in the library.
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;
/// Arbitrary-precision float. Precision is in decimal digits and follows the
/// thread's current default (see ScopedPrecision).
using BigFloat = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr unsigned kDefaultPrecision = 60;

/// Sets the default BigFloat precision for the lifetime of the object.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits) : previous_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits);
  }
  ~ScopedPrecision() { BigFloat::default_precision(previous_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned previous_;
};

inline unsigned current_precision() { return BigFloat::default_precision(); }

/// Parses "p", "-p", "p/q" or a plain decimal ("0.015625", "1e-3") exactly.
Rational parse_rational(std::string_view text);

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& v);
/// Scientific rendering with `digits` significant digits.
std::string to_string(const BigFloat& v, unsigned digits = 25);

inline BigFloat to_float(const Rational& q) {
  return BigFloat(bmp::numerator(q)) / BigFloat(bmp::denominator(q));
}

}  // namespace staircase
