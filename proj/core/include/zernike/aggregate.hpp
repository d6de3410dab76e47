#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "zernike/indexing.hpp"

namespace zernike {

/// Sparse complex coefficient aggregate over valid (m, n) pairs with a
/// finite degree cap.  Absent keys read as zero; exact zeros are never
/// stored.  Value semantics throughout: operations take aggregates by
/// const reference and return new ones, so shared instances are safe to
/// read concurrently.
class CoefficientAggregate {
 public:
  using EntryMap = std::map<ZernikeIndex, Complex, MNOrder>;

  explicit CoefficientAggregate(int max_degree = 0);

  int max_degree() const noexcept { return max_degree_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const EntryMap& entries() const noexcept { return entries_; }

  /// Coefficient at an index; 0 for absent or invalid keys.
  Complex at(const ZernikeIndex& index) const noexcept;

  /// Throws std::invalid_argument for an invalid index or n > max_degree.
  void set(const ZernikeIndex& index, Complex value);
  void add(const ZernikeIndex& index, Complex value);

  /// Dense coefficient column of azimuthal order m: slot k holds the
  /// coefficient of degree |m| + 2k, k = 0 .. floor((max_degree - |m|) / 2).
  std::vector<Complex> dense_column(int m) const;

  friend CoefficientAggregate operator+(const CoefficientAggregate& a,
                                        const CoefficientAggregate& b);
  friend CoefficientAggregate operator-(const CoefficientAggregate& a,
                                        const CoefficientAggregate& b);
  friend CoefficientAggregate operator*(Complex scale,
                                        const CoefficientAggregate& a);

 private:
  int max_degree_;
  EntryMap entries_;
};

/// Coefficient aggregates of the two combined first-derivative fields,
///   plus:  dW/dnu + i dW/dmu,   minus:  dW/dnu - i dW/dmu.
/// Both halves must share one degree cap (throws std::domain_error).
struct GradientCoefficientPair {
  CoefficientAggregate plus;
  CoefficientAggregate minus;

  GradientCoefficientPair(CoefficientAggregate plus_in,
                          CoefficientAggregate minus_in);
  int max_degree() const noexcept { return plus.max_degree(); }
};

/// <a, b> = sum a_n^m conj(b_n^m) / (2(n + 1)), the disk L2 pairing of the
/// attached wavefronts under the area-normalized measure.
Complex inner_product(const CoefficientAggregate& a,
                      const CoefficientAggregate& b);
double norm_sq(const CoefficientAggregate& a);

/// Wavefront values sum_{n,m} alpha_n^m Z_n^m(point).
std::vector<Complex> wavefront_eval(const CoefficientAggregate& alpha,
                                    std::span<const EvalPoint> points);
Complex wavefront_eval_at(const CoefficientAggregate& alpha,
                          const EvalPoint& point);

/// max |alpha_n^{-m} - conj(alpha_n^m)| over the stored support; 0 exactly
/// when the attached wavefront is real-valued.
double realness_defect(const CoefficientAggregate& alpha);

}  // namespace zernike
