#include "staircase/numeric.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace staircase {

namespace {

[[maybe_unused]] const bool kPrecisionSet = (BigFloat::default_precision(kDefaultPrecision), true);

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long exponent = 0;
  bool seen_point = false;
  bool any_digit = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    std::string exp_text(s.substr(i + 1));
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    }
    if (used != exp_text.size()) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    exponent += e;
  }
  // BigInt reads a leading 0 as an octal prefix.
  const auto first = digits.find_first_not_of('0');
  BigInt mantissa(first == std::string::npos ? std::string("0") : digits.substr(first));
  BigInt scale = bmp::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  Rational value = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  Rational num = parse_decimal(text.substr(0, slash));
  Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::string to_string(const Rational& v) { return v.str(); }

std::string to_string(const BigFloat& v, unsigned digits) {
  return v.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

}  // namespace staircase
