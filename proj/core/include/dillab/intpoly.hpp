#pragma once

#include <map>
#include <string>

#include "dillab/interval.hpp"
#include "dillab/rational.hpp"

namespace dillab {

/// Sparse univariate polynomial with integer coefficients. Zero coefficients
/// are never stored, so the zero polynomial has no terms and degree 0.
class IntPoly {
 public:
  IntPoly() = default;

  /// Adds c x^e to the polynomial.
  IntPoly& add_term(unsigned long e, const Integer& c);

  unsigned long degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  Integer coefficient(unsigned long e) const;
  Integer leading_coefficient() const;
  const std::map<unsigned long, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational evaluate(const Rational& x) const;
  /// Exact sign of p(x) without forming the rational value.
  int sign_at(const Rational& x) const;

  IntPoly derivative() const;
  /// Sign changes in the coefficient sequence (Descartes).
  unsigned sign_changes() const;

  std::string to_string() const;

  bool operator==(const IntPoly&) const = default;

 private:
  std::map<unsigned long, Integer> terms_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

/// (x - 1) x^(s+t+1) - 2 (x^(s+1) + x^(t+1)) - (x - 1); s, t >= 1.
IntPoly build_T(unsigned long s, unsigned long t);

/// build_T(floor(m/2), ceil(m/2)); m >= 2.
IntPoly build_Tm(unsigned long m);

struct RootEnclosure {
  Rational lo;
  Rational hi;
  int sign_lo = 0;
  int sign_hi = 0;
  /// p' > 0 on [lo, inf), established by a chain of derivatives ending in one
  /// with at most one coefficient sign change. Proves the enclosed root is
  /// the largest real root.
  bool tail_certified = false;
  /// p > 0 at every mesh point between hi and search_hi; only evaluated when
  /// RootOptions::tail_mesh is set.
  bool mesh_positive = false;

  Interval interval() const { return {lo, hi}; }
  bool certified_largest() const { return tail_certified; }
};

struct RootOptions {
  Rational rel_width{1, 10000000000};
  unsigned mesh_points = 64;
  bool tail_mesh = true;
};

/// Bisects [1, search_hi] for the rightmost sign change on a mesh and then
/// down to hi - lo <= rel_width * lo. A floating-point Newton estimate is tried
/// first; its bracket is kept only if the exact signs and the monotone tail
/// certificate confirm it. Requires p(1) < 0 and a positive leading
/// coefficient; throws NoSignChange when p(search_hi) <= 0.
RootEnclosure largest_root(const IntPoly& p, const Rational& search_hi, const RootOptions& options = {});

struct LrootReport {
  unsigned long m = 0;
  RootEnclosure root;
  Interval m_root;  // encloses m^(3/m)
  bool value_at_one = false;  // T_m(1) == -4
  bool bound_holds = false;
  bool ineq1 = false;
  bool ineq2 = false;
  bool ineq3 = false;
  bool chain = false;

  bool all() const { return value_at_one && bound_holds && ineq1 && ineq2 && ineq3 && chain; }
};

/// Certifies that the largest root of T_m is below m^(3/m) together with the
/// three auxiliary inequalities used to prove it. m >= 5, else DomainError.
///
/// Inequality (1) is checked with interval arithmetic at lo(m^(3/m)). (2) and
/// (3) are exponent comparisons: at x = m^(3/m) one has x^m = m^3 exactly, so
/// x^(e - m) <= 1/m iff 3 (m - e) >= m and x^(-m) <= 1/(25m) iff m^2 >= 25;
/// the left sides decrease in x, which extends both to all x >= m^(3/m).
LrootReport verify_lroot(unsigned long m);

}  // namespace dillab
