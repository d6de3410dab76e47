#pragma once

#include <vector>

namespace zernike {

/// Dense row-major matrix, sized once at construction.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0.0) {}

  double& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  double at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

  static DenseMatrix identity(int n);
};

/// Min-matrix M with entries M_ij = b_min(i,j), prefixed by the bidiagonal
/// difference matrix L (unit diagonal, -1 subdiagonal), which makes L M
/// upper triangular with constant rows b_i - b_{i-1}.  b must be strictly
/// increasing with b_0 != 0; the singular first row/column of the m = 0
/// case is the caller's to delete beforehand.
struct MinMatrixSpec {
  std::vector<double> b;
};

/// (L M)^{-1} in closed form: upper bidiagonal with
///   diag_j  = a_j   = 1 / (b_j - b_{j-1})   (b_{-1} = 0),
///   super_j = -a_{j+1}.
struct UpperBidiagonal {
  std::vector<double> diag;
  std::vector<double> super;  // one shorter than diag

  std::vector<double> apply(const std::vector<double>& x) const;
  DenseMatrix to_dense() const;
};

UpperBidiagonal invert_LM(const MinMatrixSpec& spec);

/// Laplacian coupling matrix for azimuthal order |m| and K + 1 degrees:
///   C_uk = 4 (|m| + 2u + 1)(|m| + k + u + 2)(k + 1 - u),  k >= u.
struct LaplacianMatrixSpec {
  int m = 0;
  int K = 0;
};

/// C^{-1} in closed form: upper tridiagonal with
///   diag_k   =  1 / (4 (|m| + 2k + 2)(|m| + 2k + 1)),
///   super1_k = -1 / (2 (|m| + 2k + 2)(|m| + 2k + 4)),
///   super2_k =  1 / (4 (|m| + 2k + 4)(|m| + 2k + 5)).
struct UpperTridiagonal {
  std::vector<double> diag;
  std::vector<double> super1;
  std::vector<double> super2;

  std::vector<double> apply(const std::vector<double>& x) const;
  DenseMatrix to_dense() const;
};

UpperTridiagonal invert_C(const LaplacianMatrixSpec& spec);

/// Inverse by Gauss-Jordan elimination with partial pivoting; the reference
/// route the closed forms are validated against.  Throws std::domain_error
/// when a pivot falls below 1e-14 in magnitude.
DenseMatrix dense_inverse(const DenseMatrix& matrix);

}  // namespace zernike
