#pragma once

#include <string>
#include <vector>

namespace evenzeta {

struct CheckCase {
  std::string input;
  double residual = 0.0;
};

/// Outcome of one named check: per-case residuals against a single
/// tolerance. pass() holds exactly when max_residual() <= tolerance().
/// Non-finite residuals are stored as +infinity so they always fail.
class VerificationReport {
 public:
  VerificationReport(std::string name, double tolerance);

  void add(std::string input, double residual);

  /// Records a case that could not be evaluated (e.g. quadrature did not
  /// converge). The case gets an infinite residual.
  void add_failure(std::string input, std::string diagnostic);

  const std::string& name() const { return name_; }
  const std::vector<CheckCase>& cases() const { return cases_; }
  double max_residual() const { return max_residual_; }
  double tolerance() const { return tolerance_; }
  bool pass() const { return max_residual_ <= tolerance_; }
  const std::string& diagnostic() const { return diagnostic_; }

 private:
  std::string name_;
  std::vector<CheckCase> cases_;
  double max_residual_ = 0.0;
  double tolerance_;
  std::string diagnostic_;
};

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace evenzeta
