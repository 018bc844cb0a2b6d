#include "evenzeta/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "evenzeta/bernoulli.hpp"
#include "evenzeta/zeta.hpp"

namespace evenzeta::cli {
namespace {

const std::map<std::string, OutputFormat> kFormats = {
    {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("text");
  sub->add_option("--out", cfg.out_path, "Also write the report to this file");
  sub->add_option("--seed", cfg.seed, "Seed for sampled inputs")->default_str("0x5EED");
}

CLI::Option* add_max_l(CLI::App* sub, RunConfig& cfg, const std::string& help) {
  return sub->add_option("--max-l", cfg.max_l, help)->check(CLI::Range(1, 500))->capture_default_str();
}

CLI::Option* add_quad_tol(CLI::App* sub, RunConfig& cfg) {
  return sub->add_option("--quad-tol", cfg.quad_tol, "Absolute quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

CLI::Option* add_tol(CLI::App* sub, std::optional<double>& target, const std::string& name,
                     const std::string& help) {
  return sub->add_option(name, target, help)->check(CLI::NonNegativeNumber);
}

std::vector<VerificationReport> lemma_reports(const RunConfig& cfg) {
  const bool all = cfg.which == "all";
  std::vector<VerificationReport> reports;
  if (all || cfg.which == "2") {
    reports.push_back(lemma2_report(cfg.tol.value_or(1e-9), cfg.quad_tol));
  }
  if (all || cfg.which == "3") {
    reports.push_back(lemma3_report(cfg.n_max, cfg.seed, cfg.tol.value_or(1e-11)));
  }
  if (all || cfg.which == "4") {
    reports.push_back(lemma4_report(cfg.n_max, cfg.tol.value_or(1e-8), cfg.quad_tol));
  }
  if (all || cfg.which == "5") {
    for (auto& r : lemma5_reports(cfg.tol.value_or(1e-8), cfg.quad_tol)) {
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  std::string summary;

  switch (cfg.subcommand) {
    case Subcommand::Compute:
      emit_coefficients(zeta_table(cfg.max_l, ZetaRoute::Theorem), cfg.precision, cfg.format, out);
      return kExitPass;
    case Subcommand::Crosscheck:
      reports.push_back(crosscheck_report(cfg.max_l));
      summary = reports.back().pass() ? "4 routes agree for l=1.." + std::to_string(cfg.max_l)
                                      : "routes disagree within l=1.." + std::to_string(cfg.max_l);
      break;
    case Subcommand::VerifyIdentity: {
      VerificationReport r = verify_half_identity(cfg.max_l);
      if (cfg.tol) {
        VerificationReport relaxed(r.name(), *cfg.tol);
        for (const auto& c : r.cases()) relaxed.add(c.input, c.residual);
        r = relaxed;
      }
      reports.push_back(std::move(r));
      break;
    }
    case Subcommand::VerifyWz: {
      WZSuiteOptions options;
      options.pair = cfg.pair;
      options.k_max = cfg.k_max;
      options.h = cfg.h;
      options.tol_analytic = cfg.tol_analytic.value_or(cfg.tol.value_or(options.tol_analytic));
      options.tol_fd = cfg.tol_fd.value_or(cfg.tol.value_or(options.tol_fd));
      options.quad_tol = cfg.quad_tol;
      reports = wz_suite(options);
      break;
    }
    case Subcommand::VerifyLemmas:
      reports = lemma_reports(cfg);
      break;
    case Subcommand::VerifyDecomposition: {
      DecompositionOptions options;
      options.l_max = cfg.l_max;
      options.quad_tol = cfg.quad_tol;
      if (cfg.tol) {
        options.tol = options.alt_tol_l1 = options.alt_tol_l2 = *cfg.tol;
      }
      reports = decomposition_suite(options);
      break;
    }
  }

  const int code = emit_and_status(reports, cfg.format, out, err);
  if (code != kExitUsage && !summary.empty() && cfg.format == OutputFormat::Text) {
    out << summary << "\n";
  }
  return code;
}

}  // namespace

int emit_and_status(const std::vector<VerificationReport>& reports, OutputFormat format, std::ostream& out,
                    std::ostream& err) {
  if (reports.empty()) {
    err << "no checks requested\n";
    return kExitUsage;
  }
  emit_reports(reports, format, out);
  return all_pass(reports) ? kExitPass : kExitFail;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact even zeta values and numerical verification of the WZ-pair lemmas", "evenzeta"};
  app.require_subcommand(1, 1);

  auto* compute = app.add_subcommand("compute", "Print q_l with zeta(2l) = q_l pi^(2l)");
  add_max_l(compute, cfg, "Largest l");
  compute->add_option("--precision", cfg.precision, "Fractional digits of the decimal column")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();

  auto* crosscheck = app.add_subcommand("crosscheck", "Exact agreement of the four zeta(2l) routes");
  add_max_l(crosscheck, cfg, "Largest l");

  auto* identity = app.add_subcommand("verify-identity", "B_2k(1/2) = (2^(1-2k) - 1) B_2k exactly");
  add_max_l(identity, cfg, "Largest k");
  add_tol(identity, cfg.tol, "--tol", "Pass tolerance (default 0, exact)");

  auto* wz = app.add_subcommand("verify-wz", "WZ equation and telescoping checks for the pair catalog");
  wz->add_option("--pair", cfg.pair, "Pair id or 'all'")->capture_default_str();
  wz->add_option("--k-max", cfg.k_max, "Largest k on the grid")->check(CLI::Range(1, 200))->capture_default_str();
  wz->add_option("--step", cfg.h, "Central-difference step")->check(CLI::Range(1e-12, 1e-3))->capture_default_str();
  add_tol(wz, cfg.tol, "--tol", "Override both grid tolerances");
  add_tol(wz, cfg.tol_analytic, "--tol-analytic", "Analytic-mode tolerance, relative to 1+|G| (default 1e-12)");
  add_tol(wz, cfg.tol_fd, "--tol-fd", "Finite-difference tolerance (default 1e-7)");
  add_quad_tol(wz, cfg);

  auto* lemmas = app.add_subcommand("verify-lemmas", "Cauchy formula, cosine sum, kernel integral, decay bound");
  lemmas->add_option("--which", cfg.which, "Lemma to check: 2, 3, 4, 5 or all")
      ->check(CLI::IsMember({"2", "3", "4", "5", "all"}))
      ->capture_default_str();
  lemmas->add_option("--n-max", cfg.n_max, "Largest kernel index for lemmas 3 and 4")
      ->check(CLI::Range(1, 200))
      ->capture_default_str();
  add_tol(lemmas, cfg.tol, "--tol",
          "Pass tolerance (defaults: lemma 2 1e-9, lemma 3 1e-11 per unit n, lemmas 4/5 1e-8)");
  add_quad_tol(lemmas, cfg);

  auto* decomposition =
      app.add_subcommand("verify-decomposition", "Telescoped identities, I_j decomposition and linearity");
  decomposition->add_option("--l-max", cfg.l_max, "Largest l in the decomposition")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  add_tol(decomposition, cfg.tol, "--tol",
          "Pass tolerance (defaults: identities 1e-6, alternating relation 2e-4 at l=1 and 1e-8 at l=2)");
  add_quad_tol(decomposition, cfg);

  const std::pair<CLI::App*, Subcommand> subs[] = {
      {compute, Subcommand::Compute},         {crosscheck, Subcommand::Crosscheck},
      {identity, Subcommand::VerifyIdentity}, {wz, Subcommand::VerifyWz},
      {lemmas, Subcommand::VerifyLemmas},     {decomposition, Subcommand::VerifyDecomposition}};
  for (const auto& [sub, _] : subs) {
    add_common(sub, cfg);
  }

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("evenzeta");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitPass;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  for (const auto& [sub, kind] : subs) {
    if (sub->parsed()) {
      cfg.subcommand = kind;
    }
  }

  std::ostringstream buffer;
  int code = kExitUsage;
  try {
    code = execute(cfg, buffer, err);
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string text = buffer.str();
  out << text;
  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *cfg.out_path << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace evenzeta::cli
