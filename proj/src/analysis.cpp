#include "evenzeta/analysis.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "evenzeta/pi_digits.hpp"
#include "evenzeta/wz_pairs.hpp"

namespace evenzeta {
namespace {

constexpr double kPi = std::numbers::pi;

// Below this distance from a multiple of 2*pi the kernel's relative deviation
// from 2n+1 is O(n^2 * 1e-18), far under double precision.
constexpr double kKernelLimitBand = 1e-9;

double factorial_d(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) {
    r *= i;
  }
  return r;
}

double ipow(double base, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) {
    r *= base;
  }
  return r;
}

void require(bool ok, const char* message) {
  if (!ok) {
    throw std::invalid_argument(message);
  }
}

}  // namespace

double dirichlet_kernel(int n, double x) {
  if (std::fabs(std::remainder(x, 2.0 * kPi)) < kKernelLimitBand) {
    return 2.0 * n + 1.0;
  }
  return std::sin((2.0 * n + 1.0) * x / 2.0) / std::sin(x / 2.0);
}

double KernelIntegrand::operator()(double x) const {
  if (x == 0.0) {
    return s == 0.0 ? 2.0 * n + 1.0 : 0.0;
  }
  const double weight = s == 0.0 ? 1.0 : std::pow(x, s);
  return weight * dirichlet_kernel(n, x);
}

double KernelIntegrand::envelope(double x) const {
  if (x == 0.0) {
    if (s < 1.0) {
      return std::numeric_limits<double>::infinity();
    }
    return s == 1.0 ? 2.0 : 0.0;
  }
  return std::pow(x, s) / std::sin(x / 2.0);
}

double lemma3_check(int n, double x) {
  require(n >= 1, "lemma3_check: n must be >= 1");
  double lhs = 0.0;
  for (int k = 1; k <= n; ++k) {
    lhs += std::cos(k * x);
  }
  const double rhs = -0.5 + 0.5 * dirichlet_kernel(n, x);
  return std::fabs(lhs - rhs);
}

QuadratureResult lemma4_integral(int n, double tol) {
  require(n >= 0, "lemma4_integral: n must be >= 0");
  return adaptive_quad(KernelIntegrand{n, 0.0}, 0.0, kPi, tol);
}

Lemma5Result lemma5_integral(double s, int n, double tol) {
  require(s >= 1.0, "lemma5_integral: s must be >= 1");
  require(n >= 0, "lemma5_integral: n must be >= 0");
  Lemma5Result r;
  r.value = adaptive_quad(KernelIntegrand{n, s}, 0.0, kPi, tol).value;
  r.bound = std::pow(2.0, s + 2.0) * std::pow(kPi / 2.0, s) / (2.0 * n + 1.0);
  return r;
}

double cauchy_repeated_check(int m, int k, double x, double tol) {
  require(m >= 0, "cauchy_repeated_check: m must be >= 0");
  require(k >= 1, "cauchy_repeated_check: k must be >= 1");
  require(x > 0.0, "cauchy_repeated_check: x must be positive");
  const double iterated = ipow(x, m + k) * factorial_d(m) / factorial_d(m + k);
  const double single = repeated_integral_op([m](double t) { return ipow(t, m); }, k, x, tol);
  return std::fabs(iterated - single);
}

PartialSum partial_sum_H(int n, int l, double x) {
  require(n >= 1 && l >= 1, "partial_sum_H: require n >= 1 and l >= 1");
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    sum += std::cos(k * x) / ipow(k, l);
  }
  return {n, l, x, sum};
}

double repeated_integral_op(const Integrand& f, int j, double x, double tol) {
  require(j >= 0, "repeated_integral_op: j must be >= 0");
  if (j == 0) {
    return f(x);
  }
  const double scale = 1.0 / factorial_d(j - 1);
  return integrate_signed([&](double t) { return ipow(x - t, j - 1) * f(t); }, 0.0, x, tol).value *
         scale;
}

VerificationReport linearity_check(int j, double x, double quad_tol) {
  require(j >= 1, "linearity_check: j must be >= 1");
  struct Named {
    const char* name;
    Integrand f;
  };
  const Named fs[] = {
      {"t^2", [](double t) { return t * t; }},
      {"cos", [](double t) { return std::cos(t); }},
      {"3", [](double) { return 3.0; }},
  };
  constexpr double c = 3.0;
  const std::string at = ",j=" + std::to_string(j) + ",x=" + std::to_string(x);

  VerificationReport report("linearity", 10.0 * quad_tol);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      const Integrand& f = fs[a].f;
      const Integrand& g = fs[b].f;
      const double joint = repeated_integral_op([&](double t) { return f(t) + g(t); }, j, x, quad_tol);
      const double split = repeated_integral_op(f, j, x, quad_tol) + repeated_integral_op(g, j, x, quad_tol);
      report.add(std::string("add:") + fs[a].name + "+" + fs[b].name + at, joint - split);
    }
  }
  for (const Named& nf : fs) {
    const Integrand& f = nf.f;
    const double scaled = repeated_integral_op([&](double t) { return c * f(t); }, j, x, quad_tol);
    report.add(std::string("scale:3*") + nf.name + at, scaled - c * repeated_integral_op(f, j, x, quad_tol));
  }
  return report;
}

VerificationReport eq2_eq3_check(int n, double x, double tol) {
  require(n >= 1, "eq2_eq3_check: n must be >= 1");
  require(tol > 0.0, "eq2_eq3_check: tol must be positive");
  const double quad_tol = tol / 10.0;
  const std::string at = "n=" + std::to_string(n) + ",x=" + std::to_string(x);
  VerificationReport report("eq2_eq3", tol);

  const WZPairSpec& first = find_pair("f1g1");
  double eq2_left = partial_sum_H(n, 2, x).value - partial_sum_H(n, 2, 0.0).value;
  double eq3_left = 0.0;
  for (int k = 1; k <= n; ++k) {
    eq3_left += -std::sin(k * x) / k;
  }
  try {
    const double eq2_right =
        integrate_signed([&](double t) { return first.G(t, n + 1).real(); }, 0.0, x, quad_tol).value;
    report.add("eq2:" + at, eq2_left - eq2_right);
  } catch (const QuadratureError& e) {
    report.add_failure("eq2:" + at, e.what());
  }
  try {
    const double eq3_right =
        integrate_signed([&](double t) { return 0.5 - 0.5 * dirichlet_kernel(n, t); }, 0.0, x, quad_tol).value;
    report.add("eq3:" + at, eq3_left - eq3_right);
  } catch (const QuadratureError& e) {
    report.add_failure("eq3:" + at, e.what());
  }
  return report;
}

double decomposition_check(int l, int n, double x, double tol) {
  require(l >= 1 && n >= 1, "decomposition_check: require l >= 1 and n >= 1");
  require(tol > 0.0, "decomposition_check: tol must be positive");
  const double quad_tol = tol / (10.0 * (l + 1));
  const double sign_l = (l % 2 == 0) ? 1.0 : -1.0;

  const double lhs = partial_sum_H(n, 2 * l, x).value;

  const Integrand f = [n](double t) { return -0.5 + 0.5 * dirichlet_kernel(n, t); };
  double rhs = sign_l * repeated_integral_op(f, 2 * l, x, quad_tol);
  for (int j = 1; j <= l; ++j) {
    const double harmonic = partial_sum_H(n, 2 * j, 0.0).value;
    const double sign = ((l - j) % 2 == 0) ? 1.0 : -1.0;
    rhs += sign * repeated_integral_op([harmonic](double) { return harmonic; }, 2 * (l - j), x, quad_tol);
  }
  return std::fabs(lhs - rhs);
}

Rational alternating_limit(const ZetaCoefficient& zeta) {
  require(zeta.l >= 1, "alternating_limit: l must be >= 1");
  return (Rational(-2) + pow2(1 - 2 * zeta.l)) * zeta.q;
}

double alternating_relation_check(int l, int N, const ZetaCoefficient& zeta, int pi_prec) {
  require(l >= 1, "alternating_relation_check: l must be >= 1");
  require(zeta.l == l, "alternating_relation_check: coefficient is for a different l");
  require(N >= 2, "alternating_relation_check: N must be >= 2");
  const double pi = std::strtod(pi_digits(pi_prec).str().c_str(), nullptr);

  // Smallest terms first.
  double alternating = 0.0;
  double plain = 0.0;
  for (int k = N; k >= 1; --k) {
    const double term = 1.0 / ipow(k, 2 * l);
    plain += term;
    alternating += (k % 2 == 0) ? term : -term;
  }
  const double limit = alternating_limit(zeta).to_double() * ipow(pi, 2 * l);
  return std::fabs(alternating - plain - limit);
}

}  // namespace evenzeta
