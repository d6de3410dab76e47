#include "zernike/derivative.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace zernike {

namespace {

// Entries of one azimuthal order, (degree, value) ascending in degree.
using Column = std::vector<std::pair<int, Complex>>;

std::map<int, Column> columns_of(const CoefficientAggregate& a) {
  std::map<int, Column> cols;
  for (const auto& [idx, v] : a.entries()) cols[idx.m].emplace_back(idx.n, v);
  return cols;
}

}  // namespace

std::vector<IntegerTerm> d_combined_terms(const ZernikeIndex& index,
                                          DerivativeSign sign) {
  if (!index.valid()) {
    throw std::invalid_argument("d_combined_terms: invalid index");
  }
  const int dm = sign == DerivativeSign::Plus ? 1 : -1;
  std::vector<IntegerTerm> terms;
  const int half = (index.n - std::abs(index.m)) / 2;
  terms.reserve(half + 1);
  for (int l = 0; l <= half; ++l) {
    const ZernikeIndex t{index.n - 1 - 2 * l, index.m + dm};
    const std::int64_t c = 2LL * (index.n - 2 * l);
    if (c != 0 && t.valid()) terms.push_back({t, c});
  }
  return terms;
}

CoefficientAggregate d_combined_single(const ZernikeIndex& index,
                                       DerivativeSign sign) {
  CoefficientAggregate out(std::max(index.n - 1, 0));
  for (const IntegerTerm& t : d_combined_terms(index, sign)) {
    out.set(t.index, Complex(double(t.coeff), 0.0));
  }
  return out;
}

CoefficientAggregate d_combined(DerivativeSign sign,
                                const CoefficientAggregate& alpha) {
  CoefficientAggregate out(std::max(alpha.max_degree() - 1, 0));
  for (const auto& [idx, v] : alpha.entries()) {
    for (const IntegerTerm& t : d_combined_terms(idx, sign)) {
      out.add(t.index, double(t.coeff) * v);
    }
  }
  return out;
}

CoefficientAggregate d_nu(const CoefficientAggregate& alpha) {
  return Complex{0.5, 0.0} * (d_combined(DerivativeSign::Plus, alpha) +
                              d_combined(DerivativeSign::Minus, alpha));
}

CoefficientAggregate d_mu(const CoefficientAggregate& alpha) {
  // (plus - minus) / (2i) = -0.5i (plus - minus)
  return Complex{0.0, -0.5} * (d_combined(DerivativeSign::Plus, alpha) -
                               d_combined(DerivativeSign::Minus, alpha));
}

CoefficientAggregate apply_A(DerivativeSign sign,
                             const CoefficientAggregate& alpha) {
  const int N = alpha.max_degree();
  CoefficientAggregate out(std::max(N - 1, 0));
  const int dm = sign == DerivativeSign::Plus ? 1 : -1;
  for (const auto& [ms, col] : columns_of(alpha)) {
    const int mt = ms + dm;  // Plus pulls from order m - 1, so pushes to m + 1
    const int amt = std::abs(mt);
    int hi = N - 1;
    if (hi < amt) continue;
    hi -= (hi - amt) % 2;
    // Source degrees sit one above the target parity, so walking targets
    // downward accumulates plain suffix sums of the column.
    Complex suffix{0.0, 0.0};
    int ci = int(col.size()) - 1;
    for (int n = hi; n >= amt; n -= 2) {
      while (ci >= 0 && col[ci].first >= n + 1) {
        suffix += col[ci].second;
        --ci;
      }
      const Complex v = 2.0 * (n + 1) * suffix;
      if (v != Complex{0.0, 0.0}) out.add({n, mt}, v);
    }
  }
  return out;
}

CoefficientAggregate apply_A_adjoint(DerivativeSign sign,
                                     const CoefficientAggregate& gamma) {
  const int n_out = gamma.max_degree() + 1;
  CoefficientAggregate out(n_out);
  const int dm = sign == DerivativeSign::Plus ? 1 : -1;
  for (const auto& [ms, col] : columns_of(gamma)) {
    const int mt = ms - dm;  // adjoint pushes back to the source order
    const int amt = std::abs(mt);
    Complex prefix{0.0, 0.0};
    std::size_t ci = 0;
    for (int n = amt; n <= n_out; n += 2) {
      while (ci < col.size() && col[ci].first <= n - 1) {
        prefix += col[ci].second;
        ++ci;
      }
      const Complex v = 2.0 * (n + 1) * prefix;
      if (v != Complex{0.0, 0.0}) out.add({n, mt}, v);
    }
  }
  return out;
}

std::int64_t normal_kernel(int m, int k) {
  const std::int64_t am = std::abs(m);
  return am + (std::int64_t(k - am) * (k + am + 2)) / 2;
}

CoefficientAggregate apply_normal_operator(const CoefficientAggregate& gamma) {
  const int N = gamma.max_degree();
  CoefficientAggregate out(N);
  for (const auto& [m, col] : columns_of(gamma)) {
    const int am = std::abs(m);
    for (int n = am; n <= N; n += 2) {
      Complex acc{0.0, 0.0};
      for (const auto& [d, v] : col) {
        acc += double(normal_kernel(m, std::min(n, d))) * v;
      }
      acc *= 4.0 * (n + 1);
      if (acc != Complex{0.0, 0.0}) out.add({n, m}, acc);
    }
  }
  return out;
}

}  // namespace zernike
