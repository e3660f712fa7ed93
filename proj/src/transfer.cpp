#include "staircase/transfer.hpp"

#include "staircase/linear_algebra.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace staircase {

namespace {

bool near(int a, int b) { return std::abs(a - b) <= 1; }

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("alphabet size must be positive, got " + std::to_string(k));
}

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("word length must be positive, got " + std::to_string(n));
}

Vector<BigInt> ones(Eigen::Index n) { return Vector<BigInt>::Constant(n, BigInt(1)); }

BigInt total(const Matrix<BigInt>& m) {
  BigInt s = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += m(i, j);
  return s;
}

BigInt trace(const Matrix<BigInt>& m) {
  BigInt s = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

Matrix<Poly> drop_row_col(const Matrix<Poly>& m, Eigen::Index row, Eigen::Index col) {
  const Eigen::Index n = m.rows();
  Matrix<Poly> r(n - 1, n - 1);
  for (Eigen::Index i = 0, ri = 0; i < n; ++i) {
    if (i == row) continue;
    for (Eigen::Index j = 0, rj = 0; j < n; ++j) {
      if (j == col) continue;
      r(ri, rj++) = m(i, j);
    }
    ++ri;
  }
  return r;
}

}  // namespace

bool compatible_columns(Family family, ColumnState prev, ColumnState next) {
  if (!near(prev.top, next.top) || !near(prev.bottom, next.bottom)) return false;
  // RT diagonal joins (1, j) to (2, j + 1): top of the earlier column, bottom of the later one.
  if ((family == Family::RT2xN || family == Family::KG2xN) && !near(prev.top, next.bottom)) return false;
  if (family == Family::KG2xN && !near(prev.bottom, next.top)) return false;
  return true;
}

TransferMatrix transfer_matrix(Family family, int k) {
  check_k(k);
  TransferMatrix t{k, family, {}, {}};
  if (is_ladder(family)) {
    t.states = column_states(k);
  } else {
    for (int v = 1; v <= k; ++v) t.states.push_back({v, v});
  }
  const auto n = static_cast<Eigen::Index>(t.states.size());
  t.entries = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const ColumnState a = t.states[static_cast<std::size_t>(i)];
      const ColumnState b = t.states[static_cast<std::size_t>(j)];
      t.entries(i, j) = is_ladder(family) ? compatible_columns(family, a, b) : near(a.top, b.top);
    }
  }
  return t;
}

nlohmann::json to_json(const TransferMatrix& t) {
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : t.states) states.push_back(is_ladder(t.family) ? to_string(s) : std::to_string(s.top));
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < t.size(); ++j) row.push_back(t.entries(i, j));
    rows.push_back(std::move(row));
  }
  return {{"family", std::string(family_name(t.family))}, {"k", t.k}, {"states", states}, {"rows", rows}};
}

BigInt transfer_count(Family family, int k, int n) {
  check_n(n);
  if (family == Family::Cycle) return cycle_count(k, n);
  const Matrix<BigInt> a = transfer_matrix(family, k).as<BigInt>();
  return total(matrix_power(a, static_cast<unsigned long long>(n - 1)));
}

std::vector<BigInt> transfer_counts(Family family, int k, int n_max) {
  check_n(n_max);
  const Matrix<BigInt> a = transfer_matrix(family, k).as<BigInt>();
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max));
  if (family == Family::Cycle) {
    Matrix<BigInt> p = a;
    for (int n = 1; n <= n_max; ++n) {
      out.push_back(trace(p));
      p = (p * a).eval();
    }
    return out;
  }
  Vector<BigInt> v = ones(a.rows());
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(v.sum());
    if (n < n_max) v = (a * v).eval();
  }
  return out;
}

RefinedTable transfer_refined(Family family, int k, int n) {
  check_n(n);
  if (!is_ladder(family)) throw std::invalid_argument("refined counts need a two-row family");
  const TransferMatrix t = transfer_matrix(family, k);
  const Matrix<BigInt> a = t.as<BigInt>();
  const Vector<BigInt> v = matrix_power(a, static_cast<unsigned long long>(n - 1)) * ones(a.rows());
  RefinedTable table{k, {}};
  for (std::size_t i = 0; i < t.states.size(); ++i) table.entries[t.states[i]] = v(static_cast<Eigen::Index>(i));
  return table;
}

Matrix<Poly> identity_minus_x(const TransferMatrix& t) {
  const Eigen::Index n = t.size();
  Matrix<Poly> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = Poly{Rational(i == j ? 1 : 0), Rational(-t.entries(i, j))};
  return m;
}

RationalFunction transfer_gf(Family family, int k) {
  const TransferMatrix t = transfer_matrix(family, k);
  const Matrix<Poly> m = identity_minus_x(t);
  if (family == Family::Cycle) {
    // sum_n trace(A^n) x^n = -x D'(x) / D(x), D = det(I - xA)
    const Poly d = bareiss_determinant(m);
    return rf_normalize(-(Poly::x() * derivative(d)), d);
  }
  const Vector<Poly> rhs = Vector<Poly>::Constant(t.size(), Poly(1));
  const auto sol = fraction_free_solve(m, rhs);
  Poly sum;
  for (Eigen::Index i = 0; i < sol.adjugate_times_rhs.size(); ++i) sum += sol.adjugate_times_rhs(i);
  return rf_normalize(Poly::x() * sum, sol.determinant);
}

Poly cofactor_sum(const Matrix<Poly>& m) {
  Poly sum;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Poly minor = bareiss_determinant(drop_row_col(m, i, j));
      if ((i + j) % 2) sum -= minor;
      else sum += minor;
    }
  }
  return sum;
}

RationalFunction transfer_gf_cofactor(Family family, int k) {
  if (family == Family::Cycle) throw std::invalid_argument("cofactor form applies to open families only");
  const Matrix<Poly> m = identity_minus_x(transfer_matrix(family, k));
  return rf_normalize(Poly::x() * cofactor_sum(m), bareiss_determinant(m));
}

BigInt cycle_count(int k, int n, bool allow_short) {
  check_k(k);
  if (n < (allow_short ? 1 : 3))
    throw std::invalid_argument("cycle length must be at least " + std::string(allow_short ? "1" : "3") + ", got " +
                                std::to_string(n));
  const Matrix<BigInt> a = transfer_matrix(Family::Path, k).as<BigInt>();
  return trace(matrix_power(a, static_cast<unsigned long long>(n)));
}

}  // namespace staircase
