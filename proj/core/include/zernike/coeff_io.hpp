#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zernike/aggregate.hpp"
#include "zernike/laplacian.hpp"

namespace zernike {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest lossless decimal text for a double (17 significant digits,
/// trailing zeros trimmed, decimal marker guaranteed): 2 -> "2.0".
std::string format_double(double v);

/// Coefficient file, tab separated:
///   # zernike-coeffs v1 N=<max_degree>
///   m<TAB>n<TAB>re<TAB>im
/// Later '#' lines and blank lines are ignored.  Every (m, n) must be
/// valid, unique, and have n <= N; violations throw parse_error.
/// Serialization emits entries sorted by (m, n) ascending.
std::string serialize_coefficients(const CoefficientAggregate& alpha);
CoefficientAggregate parse_coefficients(std::string_view text);

/// Boundary file, tab separated:
///   # fourier-boundary v1
///   m<TAB>re<TAB>im
std::string serialize_boundary(const FourierBoundary& psi);
FourierBoundary parse_boundary(std::string_view text);

CoefficientAggregate load_coefficients(const std::filesystem::path& path);
void save_coefficients(const std::filesystem::path& path,
                       const CoefficientAggregate& alpha);
FourierBoundary load_boundary(const std::filesystem::path& path);
void save_boundary(const std::filesystem::path& path,
                   const FourierBoundary& psi);

}  // namespace zernike
