#pragma once

#include <string>

#include "dillab/rational.hpp"

namespace dillab {

/// Closed interval [lo, hi] with exact rational endpoints. All operations are
/// exact, so "outward rounding" only happens where a caller explicitly snaps
/// endpoints to a coarser grid (see widen_to_grid).
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational lo_, Rational hi_);
  static Interval point(const Rational& q) { return Interval(q, q); }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  /// Distance between the two sets; zero when they overlap.
  Rational gap(const Interval& o) const;

  /// Every point of *this is < every point of o.
  bool certainly_less(const Interval& o) const { return hi < o.lo; }
  bool certainly_leq(const Interval& o) const { return hi <= o.lo; }

  bool operator==(const Interval&) const = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Rational& s);
Interval operator*(const Rational& s, const Interval& a);
/// Throws InvalidArgument when b contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Rational& s);
Interval operator-(const Interval& a);

Interval pow(const Interval& a, unsigned long exponent);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);

/// Snaps lo down and hi up onto the grid 2^-bits.
Interval widen_to_grid(const Interval& a, unsigned long bits);

/// [a, b] with a^n <= q <= b^n, a, b on the grid 2^-bits (q >= 0).
Interval nth_root_enclosure(const Rational& q, unsigned long n, unsigned long bits);

/// Square root enclosure on the grid 2^-bits.
Interval sqrt_enclosure(const Rational& q, unsigned long bits);

std::string to_string(const Interval& a, unsigned significant = 15);

}  // namespace dillab
