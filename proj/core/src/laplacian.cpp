#include "zernike/laplacian.hpp"

#include <cmath>
#include <set>
#include <string>

namespace zernike {

std::vector<IntegerTerm> laplacian_terms(const ZernikeIndex& index) {
  if (!index.valid()) {
    throw std::invalid_argument("laplacian_terms: invalid index");
  }
  std::vector<IntegerTerm> terms;
  for (int s = std::abs(index.m); s <= index.n - 2; s += 2) {
    terms.push_back({{s, index.m},
                     std::int64_t(s + 1) * (index.n + s + 2) * (index.n - s)});
  }
  return terms;
}

CoefficientAggregate laplacian_single(const ZernikeIndex& index) {
  CoefficientAggregate out(std::max(index.n - 2, 0));
  for (const IntegerTerm& t : laplacian_terms(index)) {
    out.set(t.index, Complex(double(t.coeff), 0.0));
  }
  return out;
}

CoefficientAggregate laplacian(const CoefficientAggregate& alpha) {
  CoefficientAggregate out(std::max(alpha.max_degree() - 2, 0));
  for (const auto& [idx, v] : alpha.entries()) {
    for (const IntegerTerm& t : laplacian_terms(idx)) {
      out.add(t.index, double(t.coeff) * v);
    }
  }
  return out;
}

std::vector<RationalTerm> inverse_laplacian_terms(const ZernikeIndex& index) {
  if (!index.valid()) {
    throw std::invalid_argument("inverse_laplacian_terms: invalid index");
  }
  const std::int64_t n = index.n;
  const int am = std::abs(index.m);
  std::vector<RationalTerm> terms;
  // Candidate terms of degree n - 2 and n are dropped when they land on or
  // below the harmonic degree |m|: those candidates either do not exist or
  // lie in the Laplacian kernel, and dropping them is what makes the
  // pre-image canonical (no Z_{|m|}^m component).
  if (index.n - 2 > am) {
    terms.push_back({{index.n - 2, index.m}, make_rational(1, 4 * n * (n + 1))});
  }
  if (index.n > am) {
    terms.push_back({{index.n, index.m}, make_rational(-1, 2 * n * (n + 2))});
  }
  terms.push_back(
      {{index.n + 2, index.m}, make_rational(1, 4 * (n + 2) * (n + 1))});
  return terms;
}

CoefficientAggregate inverse_laplacian_single(const ZernikeIndex& index) {
  CoefficientAggregate out(index.n + 2);
  for (const RationalTerm& t : inverse_laplacian_terms(index)) {
    out.set(t.index, Complex(to_double(t.coeff), 0.0));
  }
  return out;
}

CoefficientAggregate inverse_laplacian(const CoefficientAggregate& f) {
  CoefficientAggregate out(f.max_degree() + 2);
  for (const auto& [idx, v] : f.entries()) {
    for (const RationalTerm& t : inverse_laplacian_terms(idx)) {
      out.add(t.index, to_double(t.coeff) * v);
    }
  }
  return out;
}

FourierBoundary boundary_normal_derivative(const CoefficientAggregate& alpha) {
  FourierBoundary psi;
  for (const auto& [idx, v] : alpha.entries()) {
    const double w = 0.5 * (double(idx.n) * (idx.n + 2) - double(idx.m) * idx.m);
    if (w == 0.0) continue;
    auto [it, inserted] = psi.coeffs.try_emplace(idx.m, w * v);
    if (!inserted) it->second += w * v;
  }
  std::erase_if(psi.coeffs,
                [](const auto& kv) { return kv.second == Complex{0.0, 0.0}; });
  return psi;
}

neumann_compatibility_error::neumann_compatibility_error(double defect)
    : std::domain_error("solve_neumann: incompatible data, |m = 0 boundary "
                        "mismatch| = " +
                        std::to_string(defect)),
      defect_(defect) {}

NeumannSolution solve_neumann(const CoefficientAggregate& f,
                              const FourierBoundary& psi, int N, double tol) {
  if (N < 0) throw std::invalid_argument("solve_neumann: negative degree");
  for (const auto& [idx, v] : f.entries()) {
    if (idx.n > N) {
      throw std::invalid_argument("solve_neumann: f has degrees above N");
    }
  }
  for (const auto& [m, v] : psi.coeffs) {
    if (std::abs(m) > N + 2) {
      throw std::invalid_argument("solve_neumann: psi order exceeds N + 2");
    }
  }

  // Particular part: -Delta phi = f term by term.  The canonical pre-images
  // carry no Z_{|m|}^m components, leaving the harmonic column free for the
  // boundary data.
  CoefficientAggregate phi(N + 2);
  for (const auto& [idx, v] : f.entries()) {
    for (const RationalTerm& t : inverse_laplacian_terms(idx)) {
      phi.add(t.index, -to_double(t.coeff) * v);
    }
  }

  const FourierBoundary psi0 = boundary_normal_derivative(phi);
  const double defect = std::abs(psi.at(0) - psi0.at(0));
  if (!(defect <= tol)) throw neumann_compatibility_error(defect);

  std::set<int> orders;
  for (const auto& [m, v] : psi.coeffs) orders.insert(m);
  for (const auto& [m, v] : psi0.coeffs) orders.insert(m);
  for (int m : orders) {
    if (m == 0) continue;  // the m = 0 mismatch is the compatibility defect
    const Complex c = (psi.at(m) - psi0.at(m)) / double(std::abs(m));
    if (c != Complex{0.0, 0.0}) phi.add({std::abs(m), m}, c);
  }
  return {std::move(phi), defect, true};
}

}  // namespace zernike
