#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evenzeta/quadrature.hpp"
#include "evenzeta/report.hpp"

namespace evenzeta {

using Scalar = std::complex<double>;
using PairEvaluator = std::function<Scalar(double x, int k)>;

enum class ScalarField { Real, Complex };

/// A continuous-discrete WZ pair (F, G) satisfying
///   dF/dx (x, k) = G(x, k+1) - G(x, k),   G(x, 1) = 0.
/// Real pairs return values with zero imaginary part.
struct WZPairSpec {
  std::string id;
  ScalarField field = ScalarField::Real;
  PairEvaluator F;
  PairEvaluator G;
  std::optional<PairEvaluator> dF_dx;
  std::string description;
};

/// All registered pairs, in a fixed order:
/// f1g1, f2g2, f1g1_w4, f2g2_w3, f3g3_w2, f4g4, complex1, complex2.
const std::vector<WZPairSpec>& catalog();

/// Throws std::out_of_range for an unknown id.
const WZPairSpec& find_pair(std::string_view id);

enum class DerivativeMode { Analytic, FiniteDifference };

inline constexpr double kDefaultFiniteDifferenceStep = 1e-5;

/// |D - (G(x,k+1) - G(x,k))| where D is the closed-form dF/dx (Analytic) or
/// the central difference (F(x+h,k) - F(x-h,k)) / (2h).
/// Throws std::invalid_argument for k < 1, h outside (0, 1e-3] in
/// finite-difference mode, or Analytic mode on a pair without dF_dx.
double wz_residual(const WZPairSpec& pair, double x, int k, DerivativeMode mode,
                   double h = kDefaultFiniteDifferenceStep);

/// `points` equally spaced values covering [0, pi], endpoints included.
std::vector<double> unit_grid(int points);

/// Sweeps wz_residual over x in unit_grid(grid_points) and k in 1..k_max.
/// In Analytic mode each residual is divided by (1 + |G(x,k+1)|) before it is
/// compared with `tolerance`; in FiniteDifference mode it is used as is.
VerificationReport wz_grid_check(const WZPairSpec& pair, DerivativeMode mode, double tolerance,
                                 int k_max = 12, int grid_points = 32,
                                 double h = kDefaultFiniteDifferenceStep);

/// Telescoping identity for a WZ pair:
///   sum_{k=m}^{n} F(x,k) - sum_{k=m}^{n} F(h0,k)
///       = int_{h0}^{x} G(t,n+1) dt - int_{h0}^{x} G(t,m) dt
/// with both integrals by adaptive quadrature at `quad_tol`. Passes when the
/// residual is at most 10 * quad_tol * (1 + |left side|). Quadrature failure
/// is reported as a failing case with a diagnostic.
VerificationReport lemma1_check(const WZPairSpec& pair, double x, double h0, int m, int n,
                                double quad_tol = kDefaultQuadTol);

}  // namespace evenzeta
