#include "randic/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace randic {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_number(double x) { return std::isfinite(x) ? format_number(x) : "null"; }

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

namespace {

std::string optional_json(const std::optional<double>& x) { return x ? json_number(*x) : "null"; }
std::string optional_text(const std::optional<double>& x) { return x ? format_number(*x) : "-"; }

}  // namespace

std::string spectrum_text(const Spectrum& s) {
  std::ostringstream out;
  out << "λ:";
  for (double x : s.eigenvalues()) out << ' ' << format_number(x);
  out << "\nε: " << format_number(s.energy()) << "\nρ: " << format_number(s.spectral_radius())
      << "\nσ: " << format_number(s.min_modulus()) << "\nk: " << s.negative_count() << '\n';
  return out.str();
}

std::string spectrum_json(const Spectrum& s) {
  std::ostringstream out;
  out << "{\"eigenvalues\": [";
  for (int i = 0; i < s.size(); ++i) out << (i ? ", " : "") << json_number(s[i]);
  out << "], \"energy\": " << json_number(s.energy())
      << ", \"rho\": " << json_number(s.spectral_radius())
      << ", \"sigma\": " << json_number(s.min_modulus()) << ", \"negatives\": " << s.negative_count()
      << "}\n";
  return out.str();
}

std::string bounds_text(const BoundsReport& r) {
  std::ostringstream out;
  out << "n: " << r.n << "\nedges: " << r.edges << "\nR^(-1): " << format_number(r.randic_index)
      << "\ndet: " << format_number(r.determinant) << "\nρ: " << format_number(r.rho)
      << "\nσ: " << format_number(r.sigma) << "\nk: " << r.negatives
      << "\nε: " << format_number(r.energy) << '\n';
  for (const BoundRecord& b : r.bounds) {
    out << b.name << ": ";
    if (b.skipped) {
      out << "skip (" << b.reason << ")\n";
      continue;
    }
    out << format_number(b.lhs) << " <= " << format_number(b.rhs) << "  slack "
        << format_number(b.slack) << (b.satisfied ? "  ok" : "  VIOLATED");
    if (!b.reason.empty()) out << "  (" << b.reason << ')';
    out << '\n';
  }
  return out.str();
}

std::string bounds_json(const BoundsReport& r) {
  std::ostringstream out;
  out << "{\"n\": " << r.n << ", \"edges\": " << r.edges
      << ", \"randic_index\": " << json_number(r.randic_index)
      << ", \"determinant\": " << json_number(r.determinant) << ", \"rho\": " << json_number(r.rho)
      << ", \"sigma\": " << json_number(r.sigma) << ", \"negatives\": " << r.negatives
      << ", \"energy\": " << json_number(r.energy) << ", \"bounds\": {";
  for (std::size_t i = 0; i < r.bounds.size(); ++i) {
    const BoundRecord& b = r.bounds[i];
    out << (i ? ", " : "") << json_string(b.name) << ": {";
    if (b.skipped) {
      out << "\"lhs\": null, \"rhs\": null, \"slack\": null";
    } else {
      out << "\"lhs\": " << json_number(b.lhs) << ", \"rhs\": " << json_number(b.rhs)
          << ", \"slack\": " << json_number(b.slack);
    }
    out << ", \"satisfied\": " << (!b.skipped && b.satisfied ? "true" : "false")
        << ", \"skipped\": " << (b.skipped ? "true" : "false")
        << ", \"reason\": " << json_string(b.reason) << '}';
  }
  out << "}}\n";
  return out.str();
}

std::string suite_text(const TheoremSuite& suite) {
  std::size_t width = 2;
  for (const auto& r : suite.records) width = std::max(width, r.id.size());
  std::ostringstream out;
  auto pad = [&](const std::string& s) { return s + std::string(width + 2 - s.size(), ' '); };
  out << pad("id") << "status  lhs  rhs  slack  reason\n";
  for (const auto& r : suite.records) {
    std::string status(to_string(r.status));
    if (!r.asserted) status += "*";
    status.resize(std::max<std::size_t>(status.size(), 6), ' ');
    out << pad(r.id) << status << "  " << optional_text(r.lhs) << "  " << optional_text(r.rhs)
        << "  " << optional_text(r.slack) << "  " << r.reason << '\n';
  }
  for (const auto& r : suite.records) {
    if (!r.asserted && r.status == CheckStatus::Fail) {
      out << "divergence: " << r.id << " (" << r.reason << ")\n";
    }
  }
  out << "failures: " << suite.failures() << "  divergences: " << suite.divergences()
      << "  skips: " << suite.skips() << '\n';
  return out.str();
}

std::string suite_json(const TheoremSuite& suite) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < suite.records.size(); ++i) {
    const auto& r = suite.records[i];
    out << (i ? ",\n " : "\n ") << json_string(r.id) << ": {\"lhs\": " << optional_json(r.lhs)
        << ", \"rhs\": " << optional_json(r.rhs) << ", \"slack\": " << optional_json(r.slack)
        << ", \"satisfied\": " << (r.status == CheckStatus::Pass ? "true" : "false")
        << ", \"skipped\": " << (r.status == CheckStatus::Skip ? "true" : "false")
        << ", \"asserted\": " << (r.asserted ? "true" : "false")
        << ", \"reason\": " << json_string(r.reason) << '}';
  }
  out << "\n}\n";
  return out.str();
}

}  // namespace randic
