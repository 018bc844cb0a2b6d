#pragma once

#include <functional>
#include <stdexcept>

namespace evenzeta {

using Integrand = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// Raised when adaptive subdivision cannot reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxQuadDepth = 30;
inline constexpr double kDefaultQuadTol = 1e-10;

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// The interval with the largest |K15 - G7| is bisected until the summed
/// estimate is at most `tol` (absolute). Throws QuadratureError when an
/// interval would need more than kMaxQuadDepth bisections, and
/// std::invalid_argument for a > b, non-positive tol, or non-finite values.
QuadratureResult adaptive_quad(const Integrand& f, double a, double b, double tol = kDefaultQuadTol);

/// As adaptive_quad, but accepts b < a (returning the negated integral).
QuadratureResult integrate_signed(const Integrand& f, double a, double b, double tol = kDefaultQuadTol);

}  // namespace evenzeta
