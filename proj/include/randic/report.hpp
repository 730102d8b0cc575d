#ifndef RANDIC_REPORT_HPP
#define RANDIC_REPORT_HPP

#include <string>
#include <string_view>

#include "randic/bounds.hpp"
#include "randic/spectral.hpp"

namespace randic {

/// 17 significant digits, the format of every number the tools emit.
std::string format_number(double x);
/// Like format_number, but non-finite values become null.
std::string json_number(double x);
std::string json_string(std::string_view s);

/// Eigenvalues, energy, rho, sigma and the negative count.
std::string spectrum_text(const Spectrum& s);
std::string spectrum_json(const Spectrum& s);

std::string bounds_text(const BoundsReport& r);
std::string bounds_json(const BoundsReport& r);

/// Table of id, status, lhs, rhs, slack and reason, followed by one
/// "divergence:" line per failing observation.
std::string suite_text(const TheoremSuite& suite);
/// Object keyed by record id with {lhs, rhs, slack, satisfied, skipped, asserted, reason}.
std::string suite_json(const TheoremSuite& suite);

}  // namespace randic

#endif  // RANDIC_REPORT_HPP
