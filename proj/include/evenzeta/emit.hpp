#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "evenzeta/report.hpp"
#include "evenzeta/zeta.hpp"

namespace evenzeta {

enum class OutputFormat { Text, Json, Csv };

/// %.17g; non-finite values as "inf" / "nan".
std::string format_double(double v);

// JSON: an array of {name, cases: [{input, residual}], max_residual, tolerance,
// pass[, diagnostic]}; non-finite numbers become null.
// CSV: header "name,input,residual,tolerance,pass" then one row per case.
// Text: one aligned block per report.
void emit_reports(const std::vector<VerificationReport>& reports, OutputFormat format, std::ostream& out);

/// Columns l, q ("num/den"), decimal (q * pi^(2l) truncated to `precision`).
void emit_coefficients(const std::vector<ZetaCoefficient>& table, int precision, OutputFormat format,
                       std::ostream& out);

}  // namespace evenzeta
