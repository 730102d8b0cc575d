#ifndef RANDIC_RATIONAL_HPP
#define RANDIC_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace randic {

// Arbitrary-precision rational used by every exact computation.
using Rational = boost::multiprecision::cpp_rational;

// Formats as "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace randic

#endif  // RANDIC_RATIONAL_HPP
