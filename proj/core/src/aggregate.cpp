#include "zernike/aggregate.hpp"

#include <stdexcept>

#include "zernike/radial.hpp"

namespace zernike {

CoefficientAggregate::CoefficientAggregate(int max_degree)
    : max_degree_(max_degree) {
  if (max_degree < 0) {
    throw std::invalid_argument("CoefficientAggregate: negative degree cap");
  }
}

Complex CoefficientAggregate::at(const ZernikeIndex& index) const noexcept {
  auto it = entries_.find(index);
  return it == entries_.end() ? Complex{0.0, 0.0} : it->second;
}

void CoefficientAggregate::set(const ZernikeIndex& index, Complex value) {
  if (!index.valid() || index.n > max_degree_) {
    throw std::invalid_argument("CoefficientAggregate: invalid or out-of-range index");
  }
  if (value == Complex{0.0, 0.0}) {
    entries_.erase(index);
  } else {
    entries_[index] = value;
  }
}

void CoefficientAggregate::add(const ZernikeIndex& index, Complex value) {
  if (!index.valid() || index.n > max_degree_) {
    throw std::invalid_argument("CoefficientAggregate: invalid or out-of-range index");
  }
  auto [it, inserted] = entries_.try_emplace(index, value);
  if (!inserted) it->second += value;
  if (it->second == Complex{0.0, 0.0}) entries_.erase(it);
}

std::vector<Complex> CoefficientAggregate::dense_column(int m) const {
  const int am = std::abs(m);
  std::vector<Complex> col;
  if (am > max_degree_) return col;
  col.resize((max_degree_ - am) / 2 + 1, Complex{0.0, 0.0});
  for (auto it = entries_.lower_bound({am, m});
       it != entries_.end() && it->first.m == m; ++it) {
    col[(it->first.n - am) / 2] = it->second;
  }
  return col;
}

CoefficientAggregate operator+(const CoefficientAggregate& a,
                               const CoefficientAggregate& b) {
  CoefficientAggregate out(std::max(a.max_degree_, b.max_degree_));
  out.entries_ = a.entries_;
  for (const auto& [idx, v] : b.entries_) {
    auto [it, inserted] = out.entries_.try_emplace(idx, v);
    if (!inserted) it->second += v;
    if (it->second == Complex{0.0, 0.0}) out.entries_.erase(it);
  }
  return out;
}

CoefficientAggregate operator-(const CoefficientAggregate& a,
                               const CoefficientAggregate& b) {
  return a + (Complex{-1.0, 0.0} * b);
}

CoefficientAggregate operator*(Complex scale, const CoefficientAggregate& a) {
  CoefficientAggregate out(a.max_degree_);
  if (scale == Complex{0.0, 0.0}) return out;
  for (const auto& [idx, v] : a.entries_) {
    const Complex s = scale * v;
    if (s != Complex{0.0, 0.0}) out.entries_.emplace(idx, s);
  }
  return out;
}

GradientCoefficientPair::GradientCoefficientPair(CoefficientAggregate plus_in,
                                                 CoefficientAggregate minus_in)
    : plus(std::move(plus_in)), minus(std::move(minus_in)) {
  if (plus.max_degree() != minus.max_degree()) {
    throw std::domain_error(
        "GradientCoefficientPair: halves disagree on the degree cap");
  }
}

Complex inner_product(const CoefficientAggregate& a,
                      const CoefficientAggregate& b) {
  Complex acc{0.0, 0.0};
  for (const auto& [idx, av] : a.entries()) {
    const Complex bv = b.at(idx);
    if (bv != Complex{0.0, 0.0}) {
      acc += av * std::conj(bv) / (2.0 * (idx.n + 1));
    }
  }
  return acc;
}

double norm_sq(const CoefficientAggregate& a) {
  double acc = 0.0;
  for (const auto& [idx, av] : a.entries()) {
    acc += std::norm(av) / (2.0 * (idx.n + 1));
  }
  return acc;
}

Complex wavefront_eval_at(const CoefficientAggregate& alpha,
                          const EvalPoint& point) {
  const RadialTable table(alpha.max_degree(), point.rho());
  Complex acc{0.0, 0.0};
  for (const auto& [idx, v] : alpha.entries()) {
    const double r = table.at(idx.n, std::abs(idx.m));
    if (r != 0.0) acc += v * std::polar(r, idx.m * point.theta());
  }
  return acc;
}

std::vector<Complex> wavefront_eval(const CoefficientAggregate& alpha,
                                    std::span<const EvalPoint> points) {
  std::vector<Complex> out;
  out.reserve(points.size());
  for (const EvalPoint& p : points) out.push_back(wavefront_eval_at(alpha, p));
  return out;
}

double realness_defect(const CoefficientAggregate& alpha) {
  double worst = 0.0;
  for (const auto& [idx, v] : alpha.entries()) {
    const Complex mirror = alpha.at({idx.n, -idx.m});
    worst = std::max(worst, std::abs(mirror - std::conj(v)));
  }
  return worst;
}

}  // namespace zernike
