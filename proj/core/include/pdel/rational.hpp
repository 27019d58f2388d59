#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace pdel {

/// Exact arbitrary-precision rational. All probabilities, measure values and
/// linear-system coefficients in this library are of this type; nothing is
/// ever computed in floating point.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p", or a decimal literal like "0.39" (read exactly, so
/// "0.39" becomes 39/100). Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form, or just "p" for integers.
std::string rational_string(const Rational& q);

/// Decimal rendering with `digits` places, rounding half away from zero.
/// Used only for display; internal values are never rounded.
std::string round_decimal(const Rational& q, int digits = 3);

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace pdel
