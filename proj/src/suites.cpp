#include "evenzeta/suites.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "evenzeta/analysis.hpp"
#include "evenzeta/wz_pairs.hpp"
#include "evenzeta/zeta.hpp"

namespace evenzeta {
namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Exact differences that are nonzero must never round to a passing 0.0.
double exact_residual(const Rational& diff) {
  double r = diff.abs().to_double();
  if (!diff.is_zero() && r == 0.0) {
    r = std::numeric_limits<double>::denorm_min();
  }
  return r;
}

}  // namespace

std::vector<double> sample_angles(std::uint64_t seed, int count) {
  std::mt19937_64 engine(seed);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    if (u == 0.0) {
      continue;
    }
    out.push_back(2.0 * std::numbers::pi * u);
  }
  return out;
}

VerificationReport crosscheck_report(int max_l) {
  const auto theorem = zeta_table(max_l, ZetaRoute::Theorem);
  const auto euler = zeta_table(max_l, ZetaRoute::Euler);
  const auto sriv_a = zeta_table(max_l, ZetaRoute::SrivastavaA);
  const auto sriv_b = zeta_table(max_l, ZetaRoute::SrivastavaB);
  VerificationReport report("four_route_agreement", 0.0);
  for (int i = 0; i < max_l; ++i) {
    const Rational& q = theorem[i].q;
    double residual = exact_residual(euler[i].q - q);
    residual = std::max(residual, exact_residual(sriv_a[i].q - q));
    residual = std::max(residual, exact_residual(sriv_b[i].q - q));
    report.add("l=" + std::to_string(i + 1), residual);
  }
  return report;
}

std::vector<VerificationReport> wz_suite(const WZSuiteOptions& options) {
  std::vector<const WZPairSpec*> selected;
  if (options.pair == "all") {
    for (const auto& p : catalog()) {
      selected.push_back(&p);
    }
  } else {
    selected.push_back(&find_pair(options.pair));
  }

  std::vector<VerificationReport> reports;
  for (const WZPairSpec* pair : selected) {
    reports.push_back(wz_grid_check(*pair, DerivativeMode::Analytic, options.tol_analytic,
                                    options.k_max, options.grid_points, options.h));
    reports.push_back(wz_grid_check(*pair, DerivativeMode::FiniteDifference, options.tol_fd,
                                    options.k_max, options.grid_points, options.h));
    for (double x : {1.0, std::numbers::pi}) {
      reports.push_back(lemma1_check(*pair, x, 0.0, 1, options.k_max, options.quad_tol));
    }
  }
  return reports;
}

VerificationReport lemma2_report(double tol, double quad_tol) {
  VerificationReport report("lemma2_cauchy", tol);
  for (double x : {0.5, 1.0, 2.0}) {
    for (int m = 0; m <= 4; ++m) {
      for (int k = 1; k <= 5; ++k) {
        const std::string input =
            "m=" + std::to_string(m) + ",k=" + std::to_string(k) + ",x=" + num(x);
        try {
          report.add(input, cauchy_repeated_check(m, k, x, quad_tol));
        } catch (const QuadratureError& e) {
          report.add_failure(input, e.what());
        }
      }
    }
  }
  return report;
}

VerificationReport lemma3_report(int n_max, std::uint64_t seed, double tol) {
  VerificationReport report("lemma3_cosine_sum", tol);
  const auto angles = sample_angles(seed, 64);
  for (int n = 1; n <= n_max; ++n) {
    for (double x : angles) {
      report.add("n=" + std::to_string(n) + ",x=" + num(x), lemma3_check(n, x) / n);
    }
  }
  return report;
}

VerificationReport lemma4_report(int n_max, double tol, double quad_tol) {
  VerificationReport report("lemma4_kernel_integral", tol);
  for (int n = 0; n <= n_max; ++n) {
    const std::string input = "n=" + std::to_string(n);
    try {
      report.add(input, lemma4_integral(n, quad_tol).value - std::numbers::pi);
    } catch (const QuadratureError& e) {
      report.add_failure(input, e.what());
    }
  }
  return report;
}

std::vector<VerificationReport> lemma5_reports(double tol, double quad_tol) {
  VerificationReport bound("lemma5_bound", tol);
  VerificationReport decay("lemma5_decay", 0.0);
  for (double s : {1.0, 1.5, 2.0, 3.0}) {
    double at10 = 0.0;
    double at200 = 0.0;
    bool ok = true;
    for (int n : {0, 1, 5, 10, 50, 200}) {
      const std::string input = "s=" + num(s) + ",n=" + std::to_string(n);
      try {
        const Lemma5Result r = lemma5_integral(s, n, quad_tol);
        bound.add(input, std::max(0.0, std::fabs(r.value) - r.bound));
        if (n == 10) at10 = std::fabs(r.value);
        if (n == 200) at200 = std::fabs(r.value);
      } catch (const QuadratureError& e) {
        bound.add_failure(input, e.what());
        ok = false;
      }
    }
    const std::string input = "s=" + num(s) + ",n=10->200";
    if (!ok) {
      decay.add_failure(input, "integral unavailable");
    } else {
      decay.add(input, at200 < at10 ? 0.0 : at200 - at10 + std::numeric_limits<double>::denorm_min());
    }
  }
  return {bound, decay};
}

std::vector<VerificationReport> decomposition_suite(const DecompositionOptions& options) {
  const double xs[] = {1.0, 2.0, std::numbers::pi};
  const int ns[] = {5, 10, 20};

  VerificationReport eq23("eq2_eq3", options.tol);
  for (int n : ns) {
    for (double x : xs) {
      // Quadrature accuracy follows quad_tol; options.tol is only the pass threshold.
      const VerificationReport r = eq2_eq3_check(n, x, 10.0 * options.quad_tol);
      for (const CheckCase& c : r.cases()) {
        if (std::isfinite(c.residual)) {
          eq23.add(c.input, c.residual);
        } else {
          eq23.add_failure(c.input, r.diagnostic());
        }
      }
    }
  }

  VerificationReport decomposition("decomposition", options.tol);
  for (int l = 1; l <= options.l_max; ++l) {
    for (int n : ns) {
      for (double x : xs) {
        const std::string input = "l=" + std::to_string(l) + ",n=" + std::to_string(n) + ",x=" + num(x);
        try {
          decomposition.add(input, decomposition_check(l, n, x, 10.0 * (l + 1) * options.quad_tol));
        } catch (const QuadratureError& e) {
          decomposition.add_failure(input, e.what());
        }
      }
    }
  }

  VerificationReport linearity("linearity", 10.0 * options.quad_tol);
  for (int j = 1; j <= 3; ++j) {
    for (double x : {0.0, 1.0, std::numbers::pi}) {
      const VerificationReport r = linearity_check(j, x, options.quad_tol);
      for (const CheckCase& c : r.cases()) {
        linearity.add(c.input, c.residual);
      }
    }
  }

  const auto zetas = zeta_table(2, ZetaRoute::Theorem);
  VerificationReport alt1("alternating_relation.l=1", options.alt_tol_l1);
  alt1.add("l=1,N=10000", alternating_relation_check(1, 10000, zetas[0]));
  VerificationReport alt2("alternating_relation.l=2", options.alt_tol_l2);
  alt2.add("l=2,N=1000", alternating_relation_check(2, 1000, zetas[1]));

  return {eq23, decomposition, linearity, alt1, alt2};
}

}  // namespace evenzeta
