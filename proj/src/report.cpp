#include "evenzeta/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace evenzeta {

VerificationReport::VerificationReport(std::string name, double tolerance)
    : name_(std::move(name)), tolerance_(tolerance) {}

void VerificationReport::add(std::string input, double residual) {
  if (!std::isfinite(residual)) {
    residual = std::numeric_limits<double>::infinity();
  }
  residual = std::fabs(residual);
  max_residual_ = std::max(max_residual_, residual);
  cases_.push_back({std::move(input), residual});
}

void VerificationReport::add_failure(std::string input, std::string diagnostic) {
  if (!diagnostic_.empty()) {
    diagnostic_ += "; ";
  }
  diagnostic_ += input + ": " + diagnostic;
  add(std::move(input), std::numeric_limits<double>::infinity());
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.pass(); });
}

}  // namespace evenzeta
