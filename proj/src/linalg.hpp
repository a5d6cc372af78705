#pragma once

#include <cstddef>
#include <vector>

namespace lebmesh {

/// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  double* row(std::size_t i) { return a.data() + i * cols; }
  const double* row(std::size_t i) const { return a.data() + i * cols; }
};

Matrix transpose(const Matrix& m);
double max_abs(const Matrix& m);
/// Infinity norm: maximum over rows of the sum of absolute entries.
double max_abs_row_sum(const Matrix& m);

/// Thin Householder factorization diag-free form: A(:,perm) = Q R with Q
/// (rows x k) of orthonormal columns and R (k x cols) upper triangular,
/// k = min(rows, cols). `rank` counts leading diagonal entries of R above
/// 1e-13 of the largest; `rank_deficient` flags rank < cols. The pivoted
/// variant selects columns greedily by largest remaining norm (ties broken
/// by lowest index) and records the order in `perm`.
struct QRFactorization {
  Matrix Q;               // rows x k, orthonormal columns (empty when not requested)
  Matrix R;               // k x cols, upper triangular / trapezoidal
  std::vector<int> perm;  // column permutation, identity when unpivoted
  std::size_t rank = 0;
  bool rank_deficient = false;
};

QRFactorization qr(const Matrix& A, bool pivot, bool want_q = true);

/// First k column indices chosen by greedy column-pivoted elimination on a
/// copy of A (any shape). Fails with rank_deficient if fewer than k
/// numerically independent columns exist.
std::vector<int> greedy_column_order(const Matrix& A, std::size_t k);

/// Row-pivoted LU of a tall matrix: P A = L U with unit lower trapezoidal L
/// (|entries| <= 1) and square upper triangular U. `row_order` holds the full
/// row permutation as original indices; its first cols entries are the pivot
/// rows in selection order.
struct LUFactorization {
  Matrix L;  // rows x cols, unit diagonal
  Matrix U;  // cols x cols
  std::vector<int> row_order;
  std::size_t rank = 0;
  bool rank_deficient = false;
};

LUFactorization lu_row_pivot(const Matrix& A);

/// Solve T X = B with T triangular (upper or lower). Fails with a
/// singular-system error naming the offending index when a diagonal entry
/// falls below 1e-14 of the largest diagonal entry.
Matrix solve_triangular(const Matrix& T, const Matrix& B, bool upper);
std::vector<double> solve_triangular(const Matrix& T, const std::vector<double>& b, bool upper);

/// Nonnegative least squares min ||A w - b|| s.t. w >= 0 by the
/// Lawson-Hanson active-set iteration. `tol` is the absolute threshold on the
/// dual (gradient) entries used for termination; ties in the gradient
/// selection are broken by lowest index. Inner least-squares problems are
/// solved by a fresh QR on the passive columns each round.
struct NNLSResult {
  std::vector<double> w;        // >= 0 exactly
  double residual_norm = 0.0;   // ||b - A w||_2
  std::vector<int> support;     // indices of strictly positive entries, ascending
  int iterations = 0;           // least-squares solves performed
};

/// Thrown when the Lawson-Hanson iteration cap (10 * cols) is exceeded;
/// carries the best iterate found so far.
struct nnls_nonconvergence;

NNLSResult nnls(const Matrix& A, const std::vector<double>& b, double tol);

}  // namespace lebmesh
