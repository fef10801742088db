#pragma once

#include <string>
#include <vector>

#include "dillab/interval.hpp"
#include "dillab/intmatrix.hpp"
#include "dillab/intpoly.hpp"

namespace dillab {

// ---------------------------------------------------------------------------
// Genus-g branched-cover family: n = (2g+1)(m+1) + 1 + c, 0 <= c <= 2g.
// Its dilatation equals the largest root of T_m, and the c extra marked
// points do not increase it.

struct CoverFamilySpec {
  unsigned long g = 0;
  unsigned long n = 0;
  unsigned long m = 0;
  unsigned long c = 0;

  /// Throws DomainError unless g >= 2 and n >= cover_threshold(g).
  static CoverFamilySpec make(unsigned long g, unsigned long n);
};

/// Smallest n covered by the construction: 6(2g+1) + 1.
unsigned long cover_threshold(unsigned long g);

/// Certified log of the largest root of T_m plus the closed form 3 log m / m.
struct LogRootBound {
  unsigned long m = 0;
  RootEnclosure root;
  Interval log_root;     // contains log(largest root of T_m)
  Interval closed_form;  // contains 3 log m / m
};

/// m >= 5, else DomainError.
LogRootBound log_root_bound(unsigned long m);

struct CoverBound {
  CoverFamilySpec spec;
  LogRootBound bound;
  Interval closed_form_n;  // contains 3 log X / X, X = (n - 4g - 3) / (2g + 1)
  /// root certified largest and hi(log root) <= lo(3 log m/m),
  /// hi(3 log m/m) <= lo(3 log X/X).
  bool consistent = false;

  const Rational& certified_hi() const { return bound.log_root.hi; }
};

CoverBound cover_upper_bound(unsigned long g, unsigned long n);
/// Same, reusing a precomputed bound for spec.m (sweeps share m across n).
CoverBound cover_upper_bound(const CoverFamilySpec& spec, const LogRootBound& bound);

// ---------------------------------------------------------------------------
// Torus family: transition matrix of the 2n x 2n train track map of f^n.

struct TorusMatrixSpec {
  unsigned long n = 0;
  IntMatrix matrix{1};
};

/// Builds the 2n x 2n matrix for n >= 5 (DomainError below).
///
/// Rows are assembled from a band that shifts two columns per row pair:
///   odd row 2j-1 (j = 1..n-1):  1 at columns 2j-1, 2j, 2j+2
///   even row 2j  (j = 2..n-1):  1 1 1 3 at columns 2j-3..2j, 1 at 2j+2
/// plus three wrap-around rows (1-based columns):
///   row 2:    1 2 . 1 at columns 1..4, 1 at column 2n-1
///   row 2n-1: 1 2 . 1 at columns 1..4, 2 1 at columns 2n-1, 2n
///   row 2n:   1 2 . 1 at columns 1..4, 1 1 2 3 at columns 2n-3..2n
TorusMatrixSpec torus_matrix(unsigned long n);

struct TorusReport {
  Integer max_col_sum;
  Integer max_row_sum;
  std::size_t max_col_index = 0;  // zero-based, lowest index on ties
  std::size_t max_row_index = 0;
  bool irreducible = false;
  Interval log_dil_bound;      // contains log(11) / n
  Interval log_dil_col_bound;  // contains log(9) / n
};

/// Requires max column sum 9, max row sum 11 and irreducibility; throws
/// ValidationFailed naming every failed claim.
TorusReport verify_torus_bounds(const TorusMatrixSpec& spec);

// ---------------------------------------------------------------------------
// Previously known bounds on l_{g,n} quoted for comparison.

struct CitedBound {
  std::string name;
  bool upper = false;
  Interval value;
};

struct OmittedBound {
  std::string name;
  std::string reason;
};

struct ReferenceBounds {
  long g = 0;
  long n = 0;
  std::vector<CitedBound> bounds;
  std::vector<OmittedBound> omitted;
};

ReferenceBounds penner_hk_reference_bounds(long g, long n);

}  // namespace dillab
