#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evenzeta/quadrature.hpp"
#include "evenzeta/report.hpp"

namespace evenzeta {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Deterministic angles uniform in (0, 2*pi), from mt19937_64 bits only so the
/// sequence is identical on every standard library.
std::vector<double> sample_angles(std::uint64_t seed, int count);

/// Exact equality of the four zeta(2l) routes for l = 1..max_l.
VerificationReport crosscheck_report(int max_l);

struct WZSuiteOptions {
  std::string pair = "all";
  int k_max = 12;
  int grid_points = 32;
  double h = 1e-5;
  double tol_analytic = 1e-12;
  double tol_fd = 1e-7;
  double quad_tol = kDefaultQuadTol;
};

/// Grid sweeps in both derivative modes plus telescoping checks for every
/// selected pair. Throws std::out_of_range for an unknown pair id.
std::vector<VerificationReport> wz_suite(const WZSuiteOptions& options);

VerificationReport lemma2_report(double tol = 1e-9, double quad_tol = kDefaultQuadTol);
/// Residuals are divided by n so one tolerance covers every n.
VerificationReport lemma3_report(int n_max, std::uint64_t seed, double tol = 1e-11);
VerificationReport lemma4_report(int n_max, double tol = 1e-8, double quad_tol = kDefaultQuadTol);
/// Bound check (residual = excess of |integral| over the bound) and a decay
/// check (|integral| at n=200 strictly below n=10) for each s.
std::vector<VerificationReport> lemma5_reports(double tol = 1e-8, double quad_tol = kDefaultQuadTol);

struct DecompositionOptions {
  int l_max = 3;
  double tol = 1e-6;
  double quad_tol = kDefaultQuadTol;
  double alt_tol_l1 = 2e-4;
  double alt_tol_l2 = 1e-8;
};

/// Identities (2)/(3), the H_n^(2l) decomposition, I_j linearity and the
/// alternating-series relation.
std::vector<VerificationReport> decomposition_suite(const DecompositionOptions& options);

}  // namespace evenzeta
