#pragma once

#include "evenzeta/quadrature.hpp"
#include "evenzeta/rational.hpp"
#include "evenzeta/report.hpp"
#include "evenzeta/zeta.hpp"

namespace evenzeta {

/// sin((2n+1)x/2) / sin(x/2), with the limit 2n+1 at multiples of 2*pi.
double dirichlet_kernel(int n, double x);

/// x^s * sin((2n+1)x/2) / sin(x/2) on [0, pi].
///
/// At x = 0 the integrand takes its continuous value: 2n+1 for s = 0 and
/// 0 for s > 0. The positive factor x^s / sin(x/2) is exposed separately as
/// envelope(); its value at 0 is 2 for s = 1 and 0 for s > 1.
struct KernelIntegrand {
  int n = 0;
  double s = 0.0;

  double operator()(double x) const;
  double envelope(double x) const;
};

/// |sum_{k=1}^n cos(kx) - (-1/2 + D_n(x)/2)|.
double lemma3_check(int n, double x);

/// Integral of the Dirichlet kernel over [0, pi]; equals pi for every n.
QuadratureResult lemma4_integral(int n, double tol = kDefaultQuadTol);

struct Lemma5Result {
  double value = 0.0;  ///< integral of x^s D_n(x) over [0, pi]
  double bound = 0.0;  ///< 2^(s+2) (pi/2)^s / (2n+1)
};

/// Throws std::invalid_argument for s < 1.
Lemma5Result lemma5_integral(double s, int n, double tol = kDefaultQuadTol);

/// Cauchy's repeated-integration formula for f(t) = t^m on [0, x]:
/// |x^(m+k) m!/(m+k)!  -  (1/Gamma(k)) int_0^x (x-t)^(k-1) t^m dt|.
double cauchy_repeated_check(int m, int k, double x, double tol = kDefaultQuadTol);

struct PartialSum {
  int n = 0;
  int l = 0;
  double x = 0.0;
  double value = 0.0;
};

/// H_n^(l)(x) = sum_{k=1}^n cos(kx)/k^l, summed in increasing k.
PartialSum partial_sum_H(int n, int l, double x);

/// I_j(f)(x) = 1/Gamma(j) int_0^x (x-t)^(j-1) f(t) dt, and I_0(f)(x) = f(x).
double repeated_integral_op(const Integrand& f, int j, double x, double tol = kDefaultQuadTol);

/// Additivity and homogeneity (c = 3) of I_j on t^2, cos t and the constant 3.
/// Cases pass within 10 * quad_tol.
VerificationReport linearity_check(int j, double x, double quad_tol = kDefaultQuadTol);

/// The two telescoped identities behind zeta(2):
///   sum cos(kx)/k^2 - sum 1/k^2 = int_0^x G_1(t, n+1) dt
///   sum -sin(kx)/k             = int_0^x (1/2 - D_n(t)/2) dt
/// Right-hand sides by quadrature at tol/10; cases pass within tol.
VerificationReport eq2_eq3_check(int n, double x, double tol = 1e-8);

/// Residual of
///   H_n^(2l)(x) = (-1)^l I_2l(f)(x) + sum_{j=1}^{l} (-1)^(l-j) I_2(l-j)(H_n^(2j))(x)
/// with f(t) = -1/2 + D_n(t)/2 and H_n^(2j) the constant sum_k 1/k^(2j).
/// Every I operator with positive order is a single quadrature.
double decomposition_check(int l, int n, double x, double tol = 1e-7);

/// (-2 + 2^(1-2l)) * q_l, i.e. the limit of sum (-1)^k/k^(2l) - sum 1/k^(2l)
/// as a multiple of pi^(2l).
Rational alternating_limit(const ZetaCoefficient& zeta);

/// |sum_{k<=N} (-1)^k/k^(2l) - sum_{k<=N} 1/k^(2l) - (-2 + 2^(1-2l)) q_l pi^(2l)|
/// in doubles, with pi parsed from pi_digits(pi_prec).
double alternating_relation_check(int l, int N, const ZetaCoefficient& zeta, int pi_prec = 30);

}  // namespace evenzeta
