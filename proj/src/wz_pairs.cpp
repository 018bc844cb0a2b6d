#include "evenzeta/wz_pairs.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace evenzeta {
namespace {

using std::cos;
using std::sin;

double ipow(int k, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) {
    r *= k;
  }
  return r;
}

// sum_{j=1}^{k-1} term(x, j); zero for k == 1.
template <class Term>
Scalar partial_sum(double x, int k, Term term) {
  Scalar sum = 0.0;
  for (int j = 1; j < k; ++j) {
    sum += term(x, j);
  }
  return sum;
}

Scalar e_ikx(double x, int k) { return {cos(k * x), sin(k * x)}; }

constexpr Scalar kI{0.0, 1.0};

std::vector<WZPairSpec> build_catalog() {
  std::vector<WZPairSpec> pairs;

  pairs.push_back({"f1g1", ScalarField::Real,
                   [](double x, int k) { return Scalar(cos(k * x) / ipow(k, 2)); },
                   [](double x, int k) {
                     return partial_sum(x, k, [](double t, int j) { return Scalar(-sin(j * t) / j); });
                   },
                   [](double x, int k) { return Scalar(-sin(k * x) / k); },
                   "F = cos(kx)/k^2, G = sum -sin(jx)/j (zeta(2) chain, first pair)"});

  // Printed as sum -cos(kx); the summand must be -cos(jx) for dF/dx to telescope.
  pairs.push_back({"f2g2", ScalarField::Real,
                   [](double x, int k) { return Scalar(-sin(k * x) / k); },
                   [](double x, int k) {
                     return partial_sum(x, k, [](double t, int j) { return Scalar(-cos(j * t)); });
                   },
                   [](double x, int k) { return Scalar(-cos(k * x)); },
                   "F = -sin(kx)/k, G = sum -cos(jx) (zeta(2) chain, second pair)"});

  pairs.push_back({"f1g1_w4", ScalarField::Real,
                   [](double x, int k) { return Scalar(cos(k * x) / ipow(k, 4)); },
                   [](double x, int k) {
                     return partial_sum(x, k,
                                        [](double t, int j) { return Scalar(-sin(j * t) / ipow(j, 3)); });
                   },
                   [](double x, int k) { return Scalar(-sin(k * x) / ipow(k, 3)); },
                   "F = cos(kx)/k^4, G = sum -sin(jx)/j^3 (zeta(4) chain, weight 4)"});

  pairs.push_back({"f2g2_w3", ScalarField::Real,
                   [](double x, int k) { return Scalar(-sin(k * x) / ipow(k, 3)); },
                   [](double x, int k) {
                     return partial_sum(x, k,
                                        [](double t, int j) { return Scalar(-cos(j * t) / ipow(j, 2)); });
                   },
                   [](double x, int k) { return Scalar(-cos(k * x) / ipow(k, 2)); },
                   "F = -sin(kx)/k^3, G = sum -cos(jx)/j^2 (zeta(4) chain, weight 3)"});

  pairs.push_back({"f3g3_w2", ScalarField::Real,
                   [](double x, int k) { return Scalar(-cos(k * x) / ipow(k, 2)); },
                   [](double x, int k) {
                     return partial_sum(x, k, [](double t, int j) { return Scalar(sin(j * t) / j); });
                   },
                   [](double x, int k) { return Scalar(sin(k * x) / k); },
                   "F = -cos(kx)/k^2, G = sum sin(jx)/j (zeta(4) chain, weight 2)"});

  pairs.push_back({"f4g4", ScalarField::Real,
                   [](double x, int k) { return Scalar(sin(k * x) / k); },
                   [](double x, int k) {
                     return partial_sum(x, k, [](double t, int j) { return Scalar(cos(j * t)); });
                   },
                   [](double x, int k) { return Scalar(cos(k * x)); },
                   "F = sin(kx)/k, G = sum cos(jx) (zeta(4) chain, weight 1)"});

  pairs.push_back({"complex1", ScalarField::Complex,
                   [](double x, int k) { return e_ikx(x, k) / ipow(k, 2); },
                   [](double x, int k) {
                     return partial_sum(x, k, [](double t, int j) { return kI * e_ikx(t, j) / double(j); });
                   },
                   [](double x, int k) { return kI * e_ikx(x, k) / double(k); },
                   "F = e^(ikx)/k^2, G = sum i e^(ijx)/j"});

  pairs.push_back({"complex2", ScalarField::Complex,
                   [](double x, int k) { return kI * e_ikx(x, k) / double(k); },
                   [](double x, int k) {
                     return partial_sum(x, k, [](double t, int j) { return -e_ikx(t, j); });
                   },
                   [](double x, int k) { return -e_ikx(x, k); },
                   "F = i e^(ikx)/k, G = sum -e^(ijx)"});

  return pairs;
}

std::string format_inputs(std::initializer_list<std::pair<const char*, double>> fields) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [key, value] : fields) {
    os << (first ? "" : ",") << key << "=" << value;
    first = false;
  }
  return os.str();
}

}  // namespace

const std::vector<WZPairSpec>& catalog() {
  static const std::vector<WZPairSpec> pairs = build_catalog();
  return pairs;
}

const WZPairSpec& find_pair(std::string_view id) {
  for (const auto& pair : catalog()) {
    if (pair.id == id) {
      return pair;
    }
  }
  throw std::out_of_range("unknown WZ pair '" + std::string(id) + "'");
}

double wz_residual(const WZPairSpec& pair, double x, int k, DerivativeMode mode, double h) {
  if (k < 1) {
    throw std::invalid_argument("wz_residual: k must be >= 1");
  }
  Scalar derivative;
  if (mode == DerivativeMode::Analytic) {
    if (!pair.dF_dx) {
      throw std::invalid_argument("wz_residual: pair '" + pair.id + "' has no closed-form dF/dx");
    }
    derivative = (*pair.dF_dx)(x, k);
  } else {
    if (!(h > 0.0 && h <= 1e-3)) {
      throw std::invalid_argument("wz_residual: step h must be in (0, 1e-3]");
    }
    derivative = (pair.F(x + h, k) - pair.F(x - h, k)) / (2.0 * h);
  }
  return std::abs(derivative - (pair.G(x, k + 1) - pair.G(x, k)));
}

std::vector<double> unit_grid(int points) {
  if (points < 2) {
    throw std::invalid_argument("unit_grid: need at least two points");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[i] = std::numbers::pi * i / (points - 1);
  }
  return grid;
}

VerificationReport wz_grid_check(const WZPairSpec& pair, DerivativeMode mode, double tolerance,
                                 int k_max, int grid_points, double h) {
  const char* suffix = mode == DerivativeMode::Analytic ? "analytic" : "finite_difference";
  VerificationReport report("wz_equation." + pair.id + "." + suffix, tolerance);
  for (double x : unit_grid(grid_points)) {
    for (int k = 1; k <= k_max; ++k) {
      double residual = wz_residual(pair, x, k, mode, h);
      if (mode == DerivativeMode::Analytic) {
        residual /= 1.0 + std::abs(pair.G(x, k + 1));
      }
      report.add(format_inputs({{"x", x}, {"k", k}}), residual);
    }
  }
  return report;
}

VerificationReport lemma1_check(const WZPairSpec& pair, double x, double h0, int m, int n,
                                double quad_tol) {
  if (m < 1 || m > n) {
    throw std::invalid_argument("lemma1_check: require 1 <= m <= n");
  }
  if (!(quad_tol > 0.0)) {
    throw std::invalid_argument("lemma1_check: quad_tol must be positive");
  }
  const std::string input = format_inputs({{"x", x}, {"h", h0}, {"m", m}, {"n", n}});

  Scalar left = 0.0;
  for (int k = m; k <= n; ++k) {
    left += pair.F(x, k) - pair.F(h0, k);
  }
  VerificationReport report("lemma1." + pair.id, 10.0 * quad_tol * (1.0 + std::abs(left)));

  auto integral = [&](int k) -> Scalar {
    const double re = integrate_signed([&](double t) { return pair.G(t, k).real(); }, h0, x, quad_tol).value;
    double im = 0.0;
    if (pair.field == ScalarField::Complex) {
      im = integrate_signed([&](double t) { return pair.G(t, k).imag(); }, h0, x, quad_tol).value;
    }
    return {re, im};
  };

  try {
    const Scalar right = integral(n + 1) - integral(m);
    report.add(input, std::abs(left - right));
  } catch (const QuadratureError& e) {
    report.add_failure(input, e.what());
  }
  return report;
}

}  // namespace evenzeta
