#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dillab/families.hpp"
#include "dillab/interval.hpp"
#include "dillab/rational.hpp"

namespace dillab {

/// |Sp(2g, Z/3)| = 3^(g^2) prod_{i=1..g} (3^(2i) - 1); the index of the level-3
/// congruence subgroup of the mapping class group. g >= 1.
Integer theta(unsigned long g);

/// Brute-force count of 2x2 matrices over Z/3 with determinant 1.
unsigned long count_sl2_z3();

struct LowerBound {
  Interval twist_branch;   // log 2 / (alpha (12g - 12))
  Interval growth_branch;  // log x / (2 alpha x), x = 18g + 6n - 18
  Interval min;
  Rational value() const { return min.lo; }
};

/// Lower bound on l_{g,n} for a map with a fixed point of index one after
/// alpha iterations. g >= 2 (DomainError), 1 <= alpha <= theta(g)
/// (AlphaOutOfRange).
LowerBound index_lower_bound(unsigned long g, unsigned long n, const Integer& alpha);

struct OmegaConstants {
  Interval omega_prime;  // alpha (12g - 12) / log 2 * log 3 / 3
  Interval linear;       // 48 alpha
  Interval log_term;     // 48 alpha (g - 1) log 3 / (3 log(24(g - 1)))
  Interval omega;        // max of the three
};

OmegaConstants omega_constants(unsigned long g, const Integer& alpha);

struct KappaReport {
  unsigned long g = 0;
  unsigned long n_lo = 0;
  unsigned long n_hi = 0;
  /// max over n of hi(log root of T_m) * n / lo(log n), rounded up to 2^-32.
  Rational kappa;
  unsigned long argmax_n = 0;
  /// Same maximum for the weaker closed forms 3 log m / m and 3 log X / X.
  Rational kappa_closed_m;
  Rational kappa_closed_x;
  /// The small-n patch needs true minimal dilatations and is not computed.
  bool small_n_patch_symbolic = true;
};

/// Needs g >= 2 and cover_threshold(g) <= n_lo <= n_hi, else RangeError.
/// `jobs` worker threads evaluate distinct m in parallel; the result does not
/// depend on it.
KappaReport kappa_upper_constant(unsigned long g, unsigned long n_lo, unsigned long n_hi, unsigned jobs = 1);

struct BoundRow {
  unsigned long g = 0;
  unsigned long n = 0;
  Interval lower;
  std::optional<Interval> upper;
  std::string lower_source;
  std::string upper_source;
  bool lower_positive = false;
  bool lower_below_upper = false;     // hi(lower) < lo(upper)
  bool lower_sandwich = false;        // lower >= lo(log n) / (hi(omega) n)
  bool upper_sandwich = false;        // upper <= kappa hi(log n) / n
  bool ok() const { return lower_positive && (!upper || (lower_below_upper && upper_sandwich)) && lower_sandwich; }
};

struct SandwichTable {
  unsigned long g = 0;
  Interval omega;
  std::optional<KappaReport> kappa;
  std::vector<BoundRow> rows;
  bool ok() const;
};

/// One row per n in `ns` (ascending, each >= 3). lower uses alpha = theta(g);
/// upper comes from the cover family where it applies. kappa is computed over
/// [max(min ns, threshold), max ns]. DomainError for g < 2.
SandwichTable sandwich_table(unsigned long g, const std::vector<unsigned long>& ns, unsigned jobs = 1);

/// About `count` integers log-uniformly spaced in [lo, hi], both ends included.
std::vector<unsigned long> log_uniform_range(unsigned long lo, unsigned long hi, unsigned count);

}  // namespace dillab
