#include "zernike/matrix_kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace zernike {

namespace {
constexpr double kPivotFloor = 1e-14;
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

std::vector<double> UpperBidiagonal::apply(const std::vector<double>& x) const {
  if (x.size() != diag.size()) {
    throw std::invalid_argument("UpperBidiagonal::apply: size mismatch");
  }
  std::vector<double> y(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    y[j] = diag[j] * x[j];
    if (j < super.size()) y[j] += super[j] * x[j + 1];
  }
  return y;
}

DenseMatrix UpperBidiagonal::to_dense() const {
  const int n = int(diag.size());
  DenseMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    m.at(j, j) = diag[j];
    if (j + 1 < n) m.at(j, j + 1) = super[j];
  }
  return m;
}

UpperBidiagonal invert_LM(const MinMatrixSpec& spec) {
  const std::vector<double>& b = spec.b;
  if (b.empty()) throw std::invalid_argument("invert_LM: empty b");
  if (b[0] == 0.0) {
    throw std::invalid_argument(
        "invert_LM: b_0 = 0 is singular; delete the first row/column first");
  }
  for (std::size_t j = 1; j < b.size(); ++j) {
    if (!(b[j] > b[j - 1])) {
      throw std::invalid_argument("invert_LM: b must be strictly increasing");
    }
  }
  UpperBidiagonal inv;
  inv.diag.resize(b.size());
  inv.super.resize(b.size() - 1);
  double prev = 0.0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    inv.diag[j] = 1.0 / (b[j] - prev);
    prev = b[j];
    if (j >= 1) inv.super[j - 1] = -inv.diag[j];
  }
  return inv;
}

std::vector<double> UpperTridiagonal::apply(const std::vector<double>& x) const {
  if (x.size() != diag.size()) {
    throw std::invalid_argument("UpperTridiagonal::apply: size mismatch");
  }
  std::vector<double> y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    y[k] = diag[k] * x[k];
    if (k < super1.size()) y[k] += super1[k] * x[k + 1];
    if (k < super2.size()) y[k] += super2[k] * x[k + 2];
  }
  return y;
}

DenseMatrix UpperTridiagonal::to_dense() const {
  const int n = int(diag.size());
  DenseMatrix m(n, n);
  for (int k = 0; k < n; ++k) {
    m.at(k, k) = diag[k];
    if (k + 1 < n) m.at(k, k + 1) = super1[k];
    if (k + 2 < n) m.at(k, k + 2) = super2[k];
  }
  return m;
}

UpperTridiagonal invert_C(const LaplacianMatrixSpec& spec) {
  if (spec.K < 0) throw std::invalid_argument("invert_C: negative K");
  const int am = std::abs(spec.m);
  const int n = spec.K + 1;
  UpperTridiagonal inv;
  inv.diag.resize(n);
  inv.super1.resize(n > 1 ? n - 1 : 0);
  inv.super2.resize(n > 2 ? n - 2 : 0);
  for (int k = 0; k < n; ++k) {
    inv.diag[k] = 1.0 / (4.0 * (am + 2 * k + 2) * (am + 2 * k + 1));
    if (k + 1 < n) inv.super1[k] = -1.0 / (2.0 * (am + 2 * k + 2) * (am + 2 * k + 4));
    if (k + 2 < n) inv.super2[k] = 1.0 / (4.0 * (am + 2 * k + 4) * (am + 2 * k + 5));
  }
  return inv;
}

DenseMatrix dense_inverse(const DenseMatrix& matrix) {
  if (matrix.rows != matrix.cols) {
    throw std::invalid_argument("dense_inverse: matrix is not square");
  }
  const int n = matrix.rows;
  DenseMatrix a = matrix;
  DenseMatrix inv = DenseMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int r = k + 1; r < n; ++r) {
      if (std::abs(a.at(r, k)) > std::abs(a.at(pivot, k))) pivot = r;
    }
    if (std::abs(a.at(pivot, k)) <= kPivotFloor) {
      throw std::domain_error("dense_inverse: singular matrix");
    }
    if (pivot != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(pivot, j));
        std::swap(inv.at(k, j), inv.at(pivot, j));
      }
    }
    const double scale = 1.0 / a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) *= scale;
      inv.at(k, j) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == k) continue;
      const double f = a.at(r, k);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(k, j);
        inv.at(r, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

}  // namespace zernike
