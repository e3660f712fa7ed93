#include "staircase/theorems.hpp"

#include "staircase/kernel.hpp"
#include "staircase/theorem_table.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace staircase {

namespace {

class PieceEvaluator {
 public:
  PieceEvaluator(Family family, Transcription form, const BigFloat& x, int k)
      : family_(family), corrected_(form == Transcription::Corrected), x_(x), k_(k) {}

  BigFloat operator()(std::string_view name, const BigFloat& t1, const BigFloat& t2) const {
    const std::array<BigFloat, 4> values{x_, t1, t2, BigFloat(k_)};
    return piece_polynomial(family_, name, corrected_).evaluate<BigFloat>(values);
  }

 private:
  Family family_;
  bool corrected_;
  BigFloat x_;
  int k_;
};

void reject_if_vanishing(const BigFloat& value, const BigFloat& scale, const std::string& factor) {
  const BigFloat eps = bmp::pow(BigFloat(10), -static_cast<int>(current_precision() / 2));
  if (bmp::abs(value) <= eps * (scale > 1 ? scale : BigFloat(1)))
    throw std::domain_error("closed form undefined: denominator factor " + factor + " vanishes");
}

BigFloat kg_closed_form(const PieceEvaluator& piece, int k, const BigFloat& t1) {
  const BigFloat zero(0);
  const BigFloat tk = bmp::pow(t1, k);
  const BigFloat num = piece("num_tk", t1, zero) * tk + piece("num_1", t1, zero);
  const BigFloat den_x = piece("den_x", t1, zero);
  const BigFloat high = piece("den_tk", t1, zero) * tk;
  const BigFloat low = piece("den_1", t1, zero);
  reject_if_vanishing(den_x, 1, "(1 - 5*x - 2*x^2)");
  reject_if_vanishing(t1 - 1, 1, "(t1 - 1)");
  reject_if_vanishing(high + low, bmp::abs(high) + bmp::abs(low), "(t1^(k+1) + 2*t1^k*x + 2*t1*x + 1)");
  return num / (den_x * (t1 - 1) * (high + low));
}

// Numerator  a1 T1 T2 + a2(t1,t2) T1 - a2(t2,t1) T2 + a3, T_i = t_i^k.
// Denominator (t1-1)(t2-1) den_x (b1 T1 T2 + s b2(t1,t2) T1 - s b2(t2,t1) T2 + s b3),
// with s = +1 for the grid and -1 for RT.
BigFloat two_root_closed_form(Family family, const PieceEvaluator& piece, int k, const BigFloat& t1,
                              const BigFloat& t2) {
  const BigFloat T1 = bmp::pow(t1, k);
  const BigFloat T2 = bmp::pow(t2, k);
  const BigFloat num =
      piece("a1", t1, t2) * T1 * T2 + piece("a2", t1, t2) * T1 - piece("a2", t2, t1) * T2 + piece("a3", t1, t2);
  const int s = family == Family::Grid2xN ? 1 : -1;
  const std::array<BigFloat, 4> terms{piece("b1", t1, t2) * T1 * T2, s * piece("b2", t1, t2) * T1,
                                      -s * piece("b2", t2, t1) * T2, s * piece("b3", t1, t2)};
  BigFloat bracket(0), scale(0);
  for (const auto& t : terms) {
    bracket += t;
    scale += bmp::abs(t);
  }
  const BigFloat den_x = piece("den_x", t1, t2);
  reject_if_vanishing(t1 - 1, 1, "(t1 - 1)");
  reject_if_vanishing(t2 - 1, 1, "(t2 - 1)");
  reject_if_vanishing(den_x, 1, family == Family::Grid2xN ? "(4*x^2 - 7*x + 1)" : "(x^2 - 6*x + 1)");
  reject_if_vanishing(bracket, scale, "(b1*t1^k*t2^k + ... + b3)");
  return num / ((t1 - 1) * (t2 - 1) * den_x * bracket);
}

void check_arguments(Family family, int k, const BigFloat& x) {
  if (!is_ladder(family)) throw std::invalid_argument("closed forms exist only for the two-row families");
  if (k < 1) throw std::invalid_argument("alphabet size must be positive, got " + std::to_string(k));
  if (x <= 0) throw std::domain_error("closed forms are evaluated for x > 0");
}

bool needs_more_digits(int k, const TheoremRoots& r, Family family) {
  const BigFloat limit(1e20);
  if (bmp::pow(bmp::abs(r.t1), k) > limit) return true;
  return family != Family::KG2xN && bmp::pow(bmp::abs(r.t2), k) > limit;
}

}  // namespace

TheoremRoots theorem_roots(Family family, const BigFloat& x) {
  const std::vector<BigFloat> roots = kernel_roots(family, x);
  if (family == Family::KG2xN) return {roots.front(), BigFloat(0)};
  if (roots.size() < 2) throw std::domain_error("root formula failed at this x: fewer than two distinct roots");
  return {roots[0], roots[1]};
}

BigFloat theorem_eval_at(Family family, int k, const BigFloat& x, const TheoremRoots& roots, Transcription form) {
  check_arguments(family, k, x);
  const PieceEvaluator piece(family, form, x, k);
  if (family == Family::KG2xN) return kg_closed_form(piece, k, roots.t1);
  return two_root_closed_form(family, piece, k, roots.t1, roots.t2);
}

unsigned theorem_precision(Family family, int k, const BigFloat& x) {
  check_arguments(family, k, x);
  return needs_more_digits(k, theorem_roots(family, x), family) ? 2 * current_precision() : current_precision();
}

BigFloat theorem_eval(Family family, int k, const BigFloat& x, Transcription form) {
  const unsigned digits = theorem_precision(family, k, x);
  ScopedPrecision scope(digits);
  const BigFloat xd(x);
  return theorem_eval_at(family, k, xd, theorem_roots(family, xd), form);
}

BigFloat theorem_eval(Family family, int k, const Rational& x, Transcription form) {
  const unsigned digits = theorem_precision(family, k, to_float(x));
  ScopedPrecision scope(digits);
  const BigFloat xd = to_float(x);
  return theorem_eval_at(family, k, xd, theorem_roots(family, xd), form);
}

}  // namespace staircase
