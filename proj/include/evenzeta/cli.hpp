#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "evenzeta/emit.hpp"
#include "evenzeta/suites.hpp"

namespace evenzeta::cli {

enum class Subcommand { Compute, Crosscheck, VerifyWz, VerifyLemmas, VerifyDecomposition, VerifyIdentity };

struct RunConfig {
  Subcommand subcommand = Subcommand::Compute;
  int max_l = 20;
  int precision = 30;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = kDefaultSeed;

  std::optional<double> tol;
  std::optional<double> tol_analytic;
  std::optional<double> tol_fd;
  double quad_tol = kDefaultQuadTol;

  std::string which = "all";
  int n_max = 30;
  int k_max = 12;
  double h = 1e-5;
  std::string pair = "all";
  int l_max = 3;
  std::optional<std::string> out_path;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Writes `reports` and maps them to an exit code; an empty list is a usage
/// error ("no checks requested" on `err`).
int emit_and_status(const std::vector<VerificationReport>& reports, OutputFormat format, std::ostream& out,
                    std::ostream& err);

/// Parses `args` (without the program name), runs the requested checks and
/// writes the report to `out`. Returns 0 when everything passes, 1 when any
/// check fails and 2 on usage errors (diagnostics go to `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evenzeta::cli
