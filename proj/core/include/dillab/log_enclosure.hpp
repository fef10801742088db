#pragma once

#include "dillab/interval.hpp"
#include "dillab/rational.hpp"

namespace dillab {

/// Certified enclosure of the natural logarithm of a positive rational.
///
/// The argument is reduced to r = q / 2^k with r in (2/3, 4/3], and
/// log r = 2 atanh((r-1)/(r+1)) is summed until the geometric tail bound
/// drops below 2^-50. log 2 itself comes from the same series at y = 1/3.
/// Endpoints are finally snapped outward to the grid 2^-64, so the width is
/// at most ~1e-15 for arguments of moderate size (always <= 1e-12).
struct LogEnclosure {
  Rational argument;
  Rational lo;
  Rational hi;

  Interval interval() const { return {lo, hi}; }
  Rational width() const { return hi - lo; }
};

/// Throws DomainError for q <= 0.
LogEnclosure log_enclosure(const Rational& q);

/// [lo(log x.lo), hi(log x.hi)] for 0 < x.lo.
Interval log_interval(const Interval& x);

/// Cached enclosure of log 2 (width < 1e-30 before snapping).
const Interval& log2_interval();

}  // namespace dillab
