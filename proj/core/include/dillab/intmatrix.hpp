#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dillab/interval.hpp"
#include "dillab/rational.hpp"

namespace dillab {

/// Dense square matrix of arbitrary-precision nonnegative integers.
///
/// Indices are zero-based. The dimension is at least 1 and every entry is
/// >= 0; both are enforced on construction and on set().
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t k);

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix identity(std::size_t k);

  std::size_t dim() const noexcept { return k_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * k_ + j]; }
  void set(std::size_t i, std::size_t j, Integer value);

  std::vector<std::vector<Integer>> rows() const;
  Integer row_sum(std::size_t i) const;
  Integer col_sum(std::size_t j) const;

  /// M v
  std::vector<Integer> apply(std::span<const Integer> v) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t k_;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact M^r by repeated squaring; r >= 1.
IntMatrix mat_power(const IntMatrix& m, unsigned long r);

/// Strong connectivity of the digraph i -> j iff m(i,j) > 0, by a forward and
/// a reverse search from vertex 0. The 1x1 zero matrix is reducible.
bool is_irreducible(const IntMatrix& m);

bool is_positive(const IntMatrix& m);

/// Simultaneous row/column permutation: result(p[i], p[j]) = m(i, j).
IntMatrix permuted(const IntMatrix& m, std::span<const std::size_t> p);

/// Collatz-Wielandt enclosure of the Perron-Frobenius eigenvalue.
struct PFEnclosure {
  Rational lo;
  Rational hi;
  std::size_t iterations = 0;

  Interval interval() const { return {lo, hi}; }
  /// (hi - lo) / lo; zero for a point enclosure.
  Rational relative_width() const;
};

struct PFOptions {
  Rational rel_width{1, 1000000000};
  std::size_t max_iters = 1000000;
};

/// Certified [lo, hi] containing mu(M) for irreducible M. Throws NotIrreducible.
///
/// lo and hi are min_i and max_i of (Mv)_i / v_i for a positive integer vector
/// v; every vector visited contributes a valid enclosure and the returned one
/// is their intersection. The iterate starts at the all-ones vector, is
/// improved by a floating-point shifted inverse iteration, and then by exact
/// power iteration on M + I with max-entry normalization until
/// relative_width() <= rel_width or max_iters is reached.
PFEnclosure pf_enclosure(const IntMatrix& m, const PFOptions& options = {});

/// Collatz-Wielandt quotient bounds of a positive vector (exact).
Interval collatz_wielandt(const IntMatrix& m, std::span<const Integer> v);

struct DiagonalBoundReport {
  bool positive_power = false;
  bool mu_bound_holds = false;
};

/// For irreducible M of dimension k with a nonzero diagonal entry: whether
/// M^(2k) is positive and whether lo(mu(M))^(2k) >= k exactly.
/// Throws NotIrreducible or NoDiagonalEntry.
DiagonalBoundReport verify_diagonal_bound(const IntMatrix& m);

}  // namespace dillab
