#include <cmath>
#include <random>

#include "doctest.h"
#include "dillab/error.hpp"
#include "dillab/intmatrix.hpp"

using namespace dillab;

namespace {

IntMatrix m2(long a, long b, long c, long d) {
  return IntMatrix::from_rows({{Integer(a), Integer(b)}, {Integer(c), Integer(d)}});
}

// Largest eigenvalue of a nonnegative 2x2 matrix in closed form.
double mu2(double a, double b, double c, double d) {
  const double tr = a + d;
  const double det = a * d - b * c;
  return tr / 2 + std::sqrt(tr * tr / 4 - det);
}

}  // namespace

TEST_CASE("mat_power matches hand multiplication") {
  CHECK(mat_power(m2(1, 1, 1, 0), 4) == m2(5, 3, 3, 2));
  CHECK(mat_power(m2(0, 1, 1, 0), 2) == IntMatrix::identity(2));
  const IntMatrix m = m2(2, 3, 0, 1);
  CHECK(mat_power(m, 1) == m);
  CHECK_THROWS_AS(mat_power(m, 0), Error);
  // F(101) needs more than 64 bits.
  CHECK(mat_power(m2(1, 1, 1, 0), 100)(0, 0) == Integer("573147844013817084101"));
}

TEST_CASE("construction validates shape and sign") {
  CHECK_THROWS_AS(IntMatrix(0), Error);
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), Error);
  IntMatrix m(2);
  CHECK_THROWS_AS(m.set(0, 0, -1), Error);
  CHECK_THROWS_AS(m.set(2, 0, 1), Error);
}

TEST_CASE("irreducibility and positivity") {
  CHECK(is_irreducible(m2(1, 1, 1, 0)));
  CHECK_FALSE(is_irreducible(m2(1, 1, 0, 1)));
  CHECK(is_irreducible(m2(0, 1, 1, 0)));
  CHECK(is_irreducible(IntMatrix::from_rows({{3}})));
  CHECK_FALSE(is_irreducible(IntMatrix::from_rows({{0}})));
  CHECK_FALSE(is_positive(m2(1, 1, 1, 0)));
  CHECK(is_positive(mat_power(m2(1, 1, 1, 0), 2)));
}

TEST_CASE("PF enclosure of the golden matrix") {
  const PFEnclosure e = pf_enclosure(m2(1, 1, 1, 0));
  // phi is the positive root of x^2 - x - 1, which is increasing for x > 1/2.
  CHECK(e.lo * e.lo - e.lo - 1 <= 0);
  CHECK(e.hi * e.hi - e.hi - 1 >= 0);
  CHECK(e.relative_width() <= Rational(1, 1000000000));
}

TEST_CASE("PF enclosure handles periodic and diagonal matrices") {
  const PFEnclosure swap = pf_enclosure(m2(0, 1, 1, 0));
  CHECK(swap.interval().contains(1));
  const PFEnclosure d = pf_enclosure(IntMatrix::from_rows({{7}}));
  CHECK(d.lo == 7);
  CHECK(d.hi == 7);
  // 3-cycle with one doubled edge: mu^3 = 2.
  const IntMatrix c3 = IntMatrix::from_rows({{0, 2, 0}, {0, 0, 1}, {1, 0, 0}});
  const PFEnclosure e = pf_enclosure(c3);
  CHECK(pow(e.lo, 3UL) <= 2);
  CHECK(pow(e.hi, 3UL) >= 2);
  CHECK_THROWS_AS(pf_enclosure(m2(1, 1, 0, 1)), Error);
}

TEST_CASE("PF enclosures agree with closed forms on random 2x2 matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(0, 9);
  for (int t = 0; t < 100; ++t) {
    const int a = entry(rng), b = entry(rng) + 1, c = entry(rng) + 1, d = entry(rng);
    const PFEnclosure e = pf_enclosure(m2(a, b, c, d));
    const double ref = mu2(a, b, c, d);
    CHECK(e.lo.get_d() <= ref * (1 + 1e-12));
    CHECK(e.hi.get_d() >= ref * (1 - 1e-12));
  }
}

TEST_CASE("PF enclosure is invariant under simultaneous permutation") {
  const IntMatrix m = IntMatrix::from_rows({{0, 2, 1, 0}, {1, 0, 0, 3}, {0, 1, 1, 0}, {2, 0, 0, 0}});
  const std::size_t p[] = {2, 0, 3, 1};
  const PFEnclosure a = pf_enclosure(m);
  const PFEnclosure b = pf_enclosure(permuted(m, p));
  CHECK(a.interval().overlaps(b.interval()));
}

TEST_CASE("Collatz-Wielandt bounds from a given vector") {
  const IntMatrix m = m2(2, 1, 1, 1);
  const Integer v[] = {1, 1};
  const Interval cw = collatz_wielandt(m, v);
  CHECK(cw.lo == 2);
  CHECK(cw.hi == 3);
  const Integer zero[] = {1, 0};
  CHECK_THROWS_AS(collatz_wielandt(m, zero), Error);
}

TEST_CASE("diagonal bound: positive power and mu^(2k) >= k") {
  const DiagonalBoundReport r = verify_diagonal_bound(m2(1, 1, 1, 0));
  CHECK(r.positive_power);
  CHECK(r.mu_bound_holds);
  CHECK_THROWS_AS(verify_diagonal_bound(m2(0, 1, 1, 0)), Error);
  CHECK_THROWS_AS(verify_diagonal_bound(m2(1, 1, 0, 1)), Error);
  // A k-cycle with one loop: mu > 1 and still mu^(2k) >= k.
  IntMatrix c(6);
  for (std::size_t i = 0; i < 6; ++i) c.set(i, (i + 1) % 6, 1);
  c.set(0, 0, 1);
  const DiagonalBoundReport rc = verify_diagonal_bound(c);
  CHECK(rc.positive_power);
  CHECK(rc.mu_bound_holds);
}
