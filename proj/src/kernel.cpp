#include "staircase/kernel.hpp"

#include "staircase/rational_function.hpp"
#include "staircase/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace staircase {

namespace {

void require_ladder(Family family) {
  if (!is_ladder(family)) throw std::invalid_argument("kernel equations exist only for the two-row families");
}

BigFloat ten_to_minus(unsigned digits) { return bmp::pow(BigFloat(10), -static_cast<int>(digits)); }

// Both square roots below may be applied to slightly negative values near
// the ends of the x range; such branches are discarded, not clamped.
bool real_sqrt(const BigFloat& v, BigFloat& out) {
  if (v < 0) return false;
  out = bmp::sqrt(v);
  return true;
}

std::vector<BigFloat> kg_branches(const BigFloat& x) {
  const BigFloat p = 1 - 3 * x - 2 * x * x;
  BigFloat r;
  if (!real_sqrt(p * p - 4 * x * x, r)) return {};
  return {(p - r) / (2 * x)};
}

std::vector<BigFloat> grid_branches(const BigFloat& x) {
  std::vector<BigFloat> out;
  BigFloat inner;
  if (!real_sqrt(x * (9 * x + 8), inner)) return out;
  for (int s1 : {1, -1}) {
    const BigFloat u = 2 - x + s1 * inner;
    BigFloat outer;
    if (!real_sqrt(u * u - 16 * x * x, outer)) continue;
    for (int s2 : {1, -1}) out.push_back((u + s2 * outer) / (4 * x));
  }
  return out;
}

// The printed RT radical uses sqrt(x) twice; its sign is taken as a third
// branch choice, applied consistently to both occurrences.
std::vector<BigFloat> rt_branches(const BigFloat& x) {
  std::vector<BigFloat> out;
  const BigFloat root_x = bmp::sqrt(x);
  for (int s3 : {1, -1}) {
    const BigFloat sx = s3 * root_x;
    const BigFloat first = (x * (1 - x) - x * (1 + x) * sx) / (2 * x * x);
    for (int s1 : {1, -1}) {
      BigFloat r;
      if (!real_sqrt(x * (1 + x) * (1 - x) * (1 - x) + s1 * 2 * x * (x * x - 1) * sx, r)) continue;
      for (int s2 : {1, -1}) out.push_back(first + s2 * r / (2 * x * sx));
    }
  }
  return out;
}

double smallest_positive_zero(const Poly& p) {
  auto f = [&](double v) {
    double acc = 0;
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) acc = acc * v + it->convert_to<double>();
    return acc;
  };
  const double step = 1e-4;
  double lo = step;
  while (lo < 2.0 && (f(lo) > 0) == (f(lo + step) > 0)) lo += step;
  if (lo >= 2.0) throw std::runtime_error("no positive zero of the denominator below 2");
  double hi = lo + step;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    if ((f(mid) > 0) == (f(lo) > 0)) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

bool KernelSpec::palindromic() const {
  return std::equal(coefficients.begin(), coefficients.end(), coefficients.rbegin());
}

KernelSpec kernel_spec(Family family) {
  require_ladder(family);
  auto polys = [&](std::initializer_list<const char*> texts) {
    std::vector<Poly> v;
    for (const char* t : texts) v.push_back(parse_polynomial(t));
    return KernelSpec{family, std::move(v)};
  };
  switch (family) {
    case Family::KG2xN:
      return polys({"x", "2*x^2 + 3*x - 1", "x"});
    case Family::Grid2xN:
      return polys({"x^2", "x*(x - 2)", "1 - 3*x", "x*(x - 2)", "x^2"});
    default:
      return polys({"x^2", "2*x*(x - 1)", "1 - 3*x + x^2 - x^3", "2*x*(x - 1)", "x^2"});
  }
}

BigFloat kernel_residual(Family family, const BigFloat& t, const BigFloat& x) {
  return bmp::abs(kernel_spec(family)(t, x));
}

BigFloat root_residual_gate() { return ten_to_minus(current_precision() * 2 / 3); }
BigFloat root_dedup_distance() { return ten_to_minus(current_precision() / 2); }

std::vector<BigFloat> kernel_roots(Family family, const BigFloat& x) {
  require_ladder(family);
  if (x <= 0) throw std::domain_error("root formulas need x > 0");
  std::vector<BigFloat> candidates = family == Family::KG2xN     ? kg_branches(x)
                                     : family == Family::Grid2xN ? grid_branches(x)
                                                                 : rt_branches(x);
  const KernelSpec kernel = kernel_spec(family);
  const BigFloat gate = root_residual_gate();
  const BigFloat dedup = root_dedup_distance();
  std::vector<BigFloat> roots;
  for (const auto& t : candidates) {
    if (bmp::abs(kernel(t, x)) >= gate) continue;
    bool seen = false;
    for (const auto& r : roots) seen = seen || bmp::abs(r - t) < dedup;
    if (!seen) roots.push_back(t);
  }
  if (roots.empty()) throw std::domain_error("root formula failed at this x");
  std::sort(roots.begin(), roots.end(), [](const BigFloat& a, const BigFloat& b) { return a > b; });
  return roots;
}

double x_max(Family family) {
  require_ladder(family);
  static std::mutex lock;
  static std::map<Family, double> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(family);
  if (it == cache.end()) it = cache.emplace(family, smallest_positive_zero(transfer_gf(family, 3).denominator()) / 2).first;
  return it->second;
}

}  // namespace staircase
