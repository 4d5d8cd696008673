#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace quantum3 {

/// Elements of the ground field, modeled as double-precision complex numbers.
using Scalar = std::complex<double>;

/// Simple-object label. Index 0 is always the unit object.
using Label = int;

inline constexpr double kDefaultTolerance = 1e-9;

/// Relative comparison: |a-b| <= eps * max(1, |a|, |b|).
inline bool approx_equal(Scalar a, Scalar b, double eps = kDefaultTolerance) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= eps * scale;
}

inline bool approx_zero(Scalar a, double eps = kDefaultTolerance) {
  return std::abs(a) <= eps;
}

/// Raised when category, triangulation, or diagram data is structurally
/// unusable (missing entries, malformed input). Identity violations are
/// reported as residuals instead.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a configured resource cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quantum3
