#pragma once

#include "staircase/graph.hpp"
#include "staircase/rational_function.hpp"
#include "staircase/refined_table.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace staircase {

/// 0/1 matrix over column states: entries(s, s') = 1 iff column s' may
/// directly follow column s. For Path and Cycle the states are the single
/// letters 1..k, stored as ColumnState{v, v}.
struct TransferMatrix {
  int k;
  Family family;
  std::vector<ColumnState> states;
  Eigen::MatrixXi entries;

  Eigen::Index size() const { return entries.rows(); }
  template <typename Scalar>
  Matrix<Scalar> as() const {
    return entries.cast<Scalar>();
  }
};

/// Whether column `next` may follow column `prev` in the given two-row family.
bool compatible_columns(Family family, ColumnState prev, ColumnState next);

TransferMatrix transfer_matrix(Family family, int k);

/// {"family": ..., "k": ..., "states": ["11", "12", ...], "rows": [[1,1,...], ...]}
nlohmann::json to_json(const TransferMatrix& t);

/// s_k(G_n) = 1^T A^{n-1} 1 by binary powering. Cycle delegates to cycle_count.
BigInt transfer_count(Family family, int k, int n);

/// Counts for n = 1..n_max in one pass of vector propagation. For Cycle the
/// entries for n = 1, 2 follow the trace(A^n) convention.
std::vector<BigInt> transfer_counts(Family family, int k, int n_max);

/// e_s^T A^{n-1} 1 for every state s. Two-row families only.
RefinedTable transfer_refined(Family family, int k, int n);

/// x * 1^T (I - xA)^{-1} 1 in canonical form, from one fraction-free solve over Z[x].
/// For Cycle this is sum_{n>=1} trace(A^n) x^n (the n >= 1 trace convention).
RationalFunction transfer_gf(Family family, int k);

/// The same generating function assembled from cofactors,
/// x * sum_{i,j} (-1)^{i+j} det(I - xA : j, i) / det(I - xA).
RationalFunction transfer_gf_cofactor(Family family, int k);

/// Sum over i, j of (-1)^{i+j} det(I - xA with row i and column j removed).
Poly cofactor_sum(const Matrix<Poly>& m);

/// I - xA as a polynomial matrix.
Matrix<Poly> identity_minus_x(const TransferMatrix& t);

/// trace(A^n) for the k x k path matrix: the number of (C_n, k) staircase words.
/// n >= 3 unless allow_short is set, in which case n >= 1 follows the same trace convention.
BigInt cycle_count(int k, int n, bool allow_short = false);

}  // namespace staircase
