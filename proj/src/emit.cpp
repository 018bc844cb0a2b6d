#include "evenzeta/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace evenzeta {
namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (const char ch : s) {
    out += ch;
    if (ch == '"') out += '"';
  }
  return out + "\"";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void emit_text(const VerificationReport& r, std::ostream& out) {
  out << "== " << r.name() << " ==\n";
  std::size_t width = 5;
  for (const auto& c : r.cases()) {
    width = std::max(width, c.input.size());
  }
  out << pad("input", width) << "  residual\n";
  for (const auto& c : r.cases()) {
    out << pad(c.input, width) << "  " << format_double(c.residual) << "\n";
  }
  out << "max_residual " << format_double(r.max_residual()) << "  tolerance "
      << format_double(r.tolerance()) << "  " << (r.pass() ? "PASS" : "FAIL") << "\n";
  if (!r.diagnostic().empty()) {
    out << "diagnostic: " << r.diagnostic() << "\n";
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_reports(const std::vector<VerificationReport>& reports, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Text:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i > 0) out << "\n";
        emit_text(reports[i], out);
      }
      break;
    case OutputFormat::Csv:
      out << "name,input,residual,tolerance,pass\n";
      for (const auto& r : reports) {
        for (const auto& c : r.cases()) {
          out << csv_field(r.name()) << "," << csv_field(c.input) << "," << format_double(c.residual) << ","
              << format_double(r.tolerance()) << "," << (r.pass() ? "true" : "false") << "\n";
        }
      }
      break;
    case OutputFormat::Json:
      out << "[";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        out << (i ? ",\n " : "\n ") << "{\"name\": " << json_string(r.name()) << ", \"cases\": [";
        for (std::size_t j = 0; j < r.cases().size(); ++j) {
          const auto& c = r.cases()[j];
          out << (j ? ", " : "") << "{\"input\": " << json_string(c.input)
              << ", \"residual\": " << json_number(c.residual) << "}";
        }
        out << "], \"max_residual\": " << json_number(r.max_residual())
            << ", \"tolerance\": " << json_number(r.tolerance()) << ", \"pass\": " << (r.pass() ? "true" : "false");
        if (!r.diagnostic().empty()) {
          out << ", \"diagnostic\": " << json_string(r.diagnostic());
        }
        out << "}";
      }
      out << "\n]\n";
      break;
  }
}

void emit_coefficients(const std::vector<ZetaCoefficient>& table, int precision, OutputFormat format,
                       std::ostream& out) {
  std::vector<std::string> decimals;
  decimals.reserve(table.size());
  for (const auto& z : table) {
    decimals.push_back(render_zeta(z, precision).str());
  }
  switch (format) {
    case OutputFormat::Text: {
      std::size_t lw = 1;
      std::size_t qw = 1;
      for (const auto& z : table) {
        lw = std::max(lw, std::to_string(z.l).size());
        qw = std::max(qw, z.q.str().size());
      }
      out << pad("l", lw) << "  " << pad("q", qw) << "  decimal\n";
      for (std::size_t i = 0; i < table.size(); ++i) {
        out << pad(std::to_string(table[i].l), lw) << "  " << pad(table[i].q.str(), qw) << "  " << decimals[i]
            << "\n";
      }
      break;
    }
    case OutputFormat::Csv:
      out << "l,q,decimal\n";
      for (std::size_t i = 0; i < table.size(); ++i) {
        out << table[i].l << "," << table[i].q.str() << "," << decimals[i] << "\n";
      }
      break;
    case OutputFormat::Json:
      out << "[";
      for (std::size_t i = 0; i < table.size(); ++i) {
        out << (i ? ",\n " : "\n ") << "{\"l\": " << table[i].l << ", \"q\": " << json_string(table[i].q.str())
            << ", \"decimal\": " << json_string(decimals[i]) << "}";
      }
      out << "\n]\n";
      break;
  }
}

}  // namespace evenzeta
