#pragma once

#include <cstddef>
#include <vector>

#include "dillab/interval.hpp"
#include "dillab/intmatrix.hpp"
#include "dillab/rational.hpp"

namespace dillab {

/// Dense univariate polynomial over Q, coefficient i multiplies x^i.
/// Used as an exact route to spectral radii that is independent of the
/// Collatz-Wielandt machinery in intmatrix.
using DensePoly = std::vector<Rational>;

/// det(xI - M) via Faddeev-LeVerrier; monic of degree dim(M).
DensePoly charpoly(const IntMatrix& m);

Rational evaluate(const DensePoly& p, const Rational& x);

/// Number of distinct real roots strictly greater than x (Sturm sequence;
/// x may itself be a root).
std::size_t count_roots_above(const DensePoly& p, const Rational& x);

/// Whether the largest real root of p lies in [iv.lo, iv.hi].
bool largest_root_in(const DensePoly& p, const Interval& iv);

/// Sign of (largest real root of q) - (largest real root of p), decided
/// exactly. Both polynomials must have a real root.
int compare_largest_roots(const DensePoly& q, const DensePoly& p);

/// Exact rational bisection of the largest real root down to width <= tol.
Interval isolate_largest_root(const DensePoly& p, const Rational& tol);

}  // namespace dillab
