#include "staircase/theorem_table.hpp"

#include "staircase/expression.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace staircase {

namespace {

// Printed text is kept exactly as published apart from explicit '*' and '^'.
// Each correction repeats the printed text and appends the missing term, so
// the two can be compared by eye.
constexpr TheoremPiece kPieces[] = {
    // KG_{2,n}: S = (num_tk t1^k + num_1) / (den_x (t1 - 1) (den_tk t1^k + den_1))
    {Family::KG2xN, "num_tk", "x*(t1 + 2*x)*(3*k*t1 + 2*t1*x - 3*k - 2*t1 - 2*x - 4)", ""},
    {Family::KG2xN, "num_1", "(2*t1*x + 1)*(3*k*t1 + 2*t1*x - 3*k + 4*t1 - 2*x + 2)",
     "x*(2*t1*x + 1)*(3*k*t1 + 2*t1*x - 3*k + 4*t1 - 2*x + 2)"},
    {Family::KG2xN, "den_tk", "t1 + 2*x", ""},
    {Family::KG2xN, "den_1", "2*t1*x + 1", ""},
    {Family::KG2xN, "den_x", "1 - 5*x - 2*x^2", ""},

    // P_2 x P_n
    {Family::Grid2xN, "a1",
     "t1*t2*(t2-t1)*(2*k*(t2^2-1)*(t1^2-1)*x^3 + (-3*k*t1^2*t2^2 + 3*k*t1^2 - 2*k*t1*t2 + 3*k*t2^2 - 2*t1^2*t2 - "
     "2*t1*t2^2 + 2*k*t1 + 2*k*t2 - 2*t1*t2 - 5*k - 2)*x^2 + (3*k*t1*t2 + 2*t1^2*t2 + 2*t1*t2^2 - 3*k*t1 - 3*k*t2 + "
     "6*t1*t2 + 3*k + 4)*x - 2*t2*t1)",
     ""},
    {Family::Grid2xN, "a2",
     "t1*(1-t1*t2)*(2*k*(t1-1)*(t2+1)*(t2-1)*(t1+1)*x^3 + (-3*k*t1^2*t2^2 - 2*k*t1*t2^2 + 3*k*t1^2 + 2*k*t1*t2 + "
     "5*k*t2^2 + 2*t1^2*t2 - 2*k*t2 + 2*t1*t2 + 2*t2^2 - 3*k + 2*t1)*x^2 + (3*k*t1*t2^2 - 3*k*t1*t2 - 3*k*t2^2 - "
     "2*t1^2*t2 + 3*k*t2 - 6*t1*t2 - 4*t2^2 - 2*t1)*x + 2*t2*t1)",
     ""},
    {Family::Grid2xN, "a3",
     "(t1-t2)*(2*k*(t1^2-1)*(t2^2-1)*x^3 + (-5*k*t1^2*t2^2 + 2*k*t1^2*t2 + 2*k*t1*t2^2 - 2*t1^2*t2^2 + 3*k*t1^2 - "
     "2*k*t1*t2 + 3*k*t2^2 - 2*t1*t2 - 3*k - 2*t1 - 2*t2)*x^2 + (3*k*t1^2*t2^2 - 3*k*t1^2*t2 - 3*k*t1*t2^2 + "
     "4*t1^2*t2^2 + 3*k*t1*t2 + 6*t1*t2 + 2*t1 + 2*t2)*x - 2*t1*t2)",
     ""},
    {Family::Grid2xN, "b1", "t1*t2*(t1-t2)*((t1+1)*(t2+1)*x-1)", ""},
    {Family::Grid2xN, "b2", "t1*(t1*t2-1)*((t1+1)*(t2+1)*x-t2)", ""},
    {Family::Grid2xN, "b3", "(t2-t1)*((t1+1)*(t2+1)*x-t1*t2)", ""},
    {Family::Grid2xN, "den_x", "4*x^2 - 7*x + 1", ""},

    // RT_{2,n}
    {Family::RT2xN, "a1",
     "(t2-t1)*(((t2-1)*(t1-1)*k - 2*t2*t1)*x^5 + ((t1-1)*(1-t2)*(t1^2*t2 + t1*t2^2 + t1^2 + t1*t2 + t2^2 + t1 + t2 + "
     "3)*k + 2*t1^3*t2^2 + 2*t1^2*t2^3 + 2*t2*t1 + 4*t1 + 4*t2)*x^4 + ((t1-1)*(t2-1)*(t1^2*t2^2 + 4*t1^2*t2 + "
     "4*t1*t2^2 + 3*t1^2 + 5*t1*t2 + 3*t2^2 + 4*t1 + 4*t2)*k - 2*t2*t1*(t1^2*t2 + t1*t2^2 + 3*t1*t2 + 1))*x^3 + "
     "((t1-1)*(1-t2)*(3*t1^2*t2^2 + 3*t1^2*t2 + 3*t1*t2^2 + 7*t1*t2 + 3*t1 + 3*t2)*k - 2*t1^3*t2^2 - 2*t1^2*t2^3 + "
     "2*t1^2*t2^2 - 2*t2*t1 - 4*t1 - 4*t2)*x^2 + (3*t2*t1*(t2-1)*(t1-1)*k + 2*t2*t1*(t1^2*t2 + t1*t2^2 + 3*t1*t2 + "
     "2))*x - 2*t1^2*t2^2)",
     ""},
    {Family::RT2xN, "a2",
     "(t1*t2-1)*((-t2^2*(t2-1)*(t1-1)*k - 2*t2^2*t1)*x^5 + ((t1-1)*(t2-1)*(t1^2*t2^2 + t1^2*t2 + t1*t2^2 + t1*t2 + "
     "3*t2^2 + t1 + t2 + 1)*k + 2*t1^3*t2 + 4*t1*t2^3 + 2*t2^2*t1 + 2*t1^2 + 4*t2^2)*x^4 + ((t1-1)*(1-t2)*(3*t1^2*t2^2 "
     "+ 4*t1^2*t2 + 4*t1*t2^2 + t1^2 + 5*t1*t2 + 4*t1 + 4*t2 + 3)*k - 2*t1*(t1^2*t2 + 3*t1*t2 + t2^2 + t1))*x^3 + "
     "((t1-1)*(t2-1)*(3*t1^2*t2 + 3*t1*t2^2 + 3*t1^2 + 7*t1*t2 + 3*t1 + 3*t2)*k - 2*t1^3*t2 - 4*t1*t2^3 + 2*t1^2*t2 - "
     "2*t2^2*t1 - 2*t1^2 - 4*t2^2)*x^2 + (3*t1*t2*(t1-1)*(1-t2)*k + 2*t1*(t1^2*t2 + 3*t1*t2 + 2*t2^2 + t1))*x - "
     "2*t1^2*t2)",
     ""},
    {Family::RT2xN, "a3",
     "(t1-t2)*((t1^2*t2^2*(t1-1)*(t2-1)*k - 2*t1^2*t2^2)*x^5 + ((t1-1)*(1-t2)*(3*t1^2*t2^2 + t1^2*t2 + t1*t2^2 + t1^2 "
     "+ t1*t2 + t2^2 + t1 + t2)*k + 4*t1^3*t2^2 + 4*t1^2*t2^3 + 2*t1^2*t2^2 + 2*t1 + 2*t2)*x^4 + "
     "((t1-1)*(t2-1)*(4*t1^2*t2 + 4*t1*t2^2 + 3*t1^2 + 5*t1*t2 + 3*t2^2 + 4*t1 + 4*t2 + 1)*k - 2*t1^2*t2^2 - 6*t1*t2 - "
     "2*t1 - 2*t2)*x^3 + ((t1-1)*(1-t2)*(3*t1^2*t2 + 3*t1*t2^2 + 7*t1*t2 + 3*t1 + 3*t2 + 3)*k - 4*t1^3*t2^2 - "
     "4*t1^2*t2^3 - 2*t1^2*t2^2 + 2*t1*t2 - 2*t1 - 2*t2)*x^2 + (3*t1*t2*(t1-1)*(t2-1)*k + 4*t1^2*t2^2 + 6*t1*t2 + 2*t1 "
     "+ 2*t2)*x - 2*t1*t2)",
     ""},
    {Family::RT2xN, "b1",
     "(t1-t2)*((-t1^2*t2 - t1*t2^2 - t1^2 - t1*t2 - t2^2 - t1 - t2)*x^2 + (t1^2*t2^2 + t1^2*t2 + t1*t2^2 + 2*t1*t2 + "
     "t1 + t2)*x - t2*t1)",
     "(t1-t2)*((-t1^2*t2 - t1*t2^2 - t1^2 - t1*t2 - t2^2 - t1 - t2)*x^2 + (t1^2*t2^2 + t1^2*t2 + t1*t2^2 + 2*t1*t2 + "
     "t1 + t2)*x - t2*t1) + (t1-t2)*x^3"},
    {Family::RT2xN, "b2",
     "(t1*t2-1)*((t1^2*t2^2 + t1^2*t2 + t1*t2^2 + t1*t2 + t1 + t2 + 1)*x^2 + (-t1^2*t2 - t1*t2^2 - t1^2 - 2*t1*t2 - t1 "
     "- t2)*x + t2*t1)",
     "(t1*t2-1)*((t1^2*t2^2 + t1^2*t2 + t1*t2^2 + t1*t2 + t1 + t2 + 1)*x^2 + (-t1^2*t2 - t1*t2^2 - t1^2 - 2*t1*t2 - t1 "
     "- t2)*x + t2*t1) - (t1*t2-1)*t2^2*x^3"},
    {Family::RT2xN, "b3",
     "(t1-t2)*((-t1^2*t2 - t1*t2^2 - t1^2 - t1*t2 - t2^2 - t1 - t2)*x^2 + (t1^2*t2 + t1*t2^2 + 2*t1*t2 + t1 + t2 + "
     "1)*x - t2*t1)",
     "(t1-t2)*((-t1^2*t2 - t1*t2^2 - t1^2 - t1*t2 - t2^2 - t1 - t2)*x^2 + (t1^2*t2 + t1*t2^2 + 2*t1*t2 + t1 + t2 + "
     "1)*x - t2*t1) + (t1-t2)*t1^2*t2^2*x^3"},
    {Family::RT2xN, "den_x", "x^2 - 6*x + 1", ""},
};

}  // namespace

MultiPolynomial parse_multivariate(std::string_view text, std::span<const std::string_view> names) {
  const std::size_t n = names.size();
  ExpressionParser<MultiPolynomial> parser(
      [&](std::string_view name) {
        for (std::size_t i = 0; i < n; ++i)
          if (names[i] == name) return MultiPolynomial::variable(n, i);
        throw ParseError("unknown variable '" + std::string(name) + "'");
      },
      [&](const BigInt& v) { return MultiPolynomial::constant(n, v); });
  return parser.parse(text);
}

std::span<const TheoremPiece> theorem_pieces() { return kPieces; }

const TheoremPiece& theorem_piece(Family family, std::string_view name) {
  for (const auto& p : kPieces)
    if (p.family == family && p.name == name) return p;
  throw std::out_of_range("no theorem piece '" + std::string(name) + "' for " + std::string(family_name(family)));
}

const MultiPolynomial& piece_polynomial(Family family, std::string_view name, bool corrected_form) {
  static std::mutex lock;
  static std::map<std::tuple<Family, std::string, bool>, MultiPolynomial> cache;
  const TheoremPiece& piece = theorem_piece(family, name);
  const bool use_correction = corrected_form && !piece.corrected.empty();
  std::lock_guard guard(lock);
  auto key = std::make_tuple(family, std::string(name), use_correction);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, parse_multivariate(use_correction ? piece.corrected : piece.printed, kTheoremVariables))
             .first;
  return it->second;
}

std::uint64_t theorem_table_checksum() {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= 1099511628211ull;
  };
  for (const auto& p : kPieces) {
    feed(family_name(p.family));
    feed(p.name);
    feed(p.printed);
    feed(p.corrected);
  }
  return h;
}

}  // namespace staircase
