#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qtorder {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long long num, long long den = 1);
/// Parses "p", "p/q" or "-p/q". Throws Error(ParseError).
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
/// Fractional part in [0, 1).
Rational frac(const Rational& q);
/// Narrowing with an OverflowGuard error instead of silent truncation.
long long to_int64(const Integer& z);

/// Closed rational interval [lo, hi] certifying the location of a limit.
struct RationalEnclosure {
  Rational lo;
  Rational hi;

  static RationalEnclosure exact(const Rational& v) { return {v, v}; }
  static RationalEnclosure around(const Rational& center, const Rational& radius);

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool intersects(const RationalEnclosure& other) const {
    return lo <= other.hi && other.lo <= hi;
  }
  bool is_exact() const { return lo == hi; }
};

/// Floating-point value with an absolute error bound; used only where exact
/// arithmetic is impossible (Möbius lifts).
struct FloatEnclosure {
  double value = 0.0;
  double abs_err = 0.0;

  double lo() const { return value - abs_err; }
  double hi() const { return value + abs_err; }
  bool contains(double v) const { return lo() <= v && v <= hi(); }
};

}  // namespace qtorder
