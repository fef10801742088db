#include "doctest.h"
#include "dillab/charpoly.hpp"
#include "dillab/error.hpp"

using namespace dillab;

TEST_CASE("characteristic polynomial coefficients") {
  // det(xI - M) for the golden matrix is x^2 - x - 1.
  const DensePoly p = charpoly(IntMatrix::from_rows({{1, 1}, {1, 0}}));
  REQUIRE(p.size() == 3);
  CHECK(p[0] == -1);
  CHECK(p[1] == -1);
  CHECK(p[2] == 1);
  // Subdivided graph from [[0,1],[1,1]]: x^3 - x^2 - 1.
  const DensePoly q = charpoly(IntMatrix::from_rows({{0, 0, 1}, {1, 1, 0}, {0, 1, 0}}));
  CHECK(q == DensePoly{-1, 0, -1, 1});
}

TEST_CASE("Sturm counting and largest-root comparison") {
  const DensePoly golden{-1, -1, 1};
  CHECK(count_roots_above(golden, 0) == 1);
  CHECK(count_roots_above(golden, -1) == 2);
  CHECK(largest_root_in(golden, Interval(Rational(8, 5), Rational(13, 8))));
  CHECK_FALSE(largest_root_in(golden, Interval(Rational(1), Rational(3, 2))));
  const DensePoly cubic{-1, 0, -1, 1};
  CHECK(compare_largest_roots(cubic, golden) == -1);
  CHECK(compare_largest_roots(golden, cubic) == 1);
  CHECK(compare_largest_roots(golden, golden) == 0);
  // Same largest root, different polynomials: (x^2 - x - 1)(x + 3).
  const DensePoly times{-3, -4, 2, 1};
  CHECK(compare_largest_roots(times, golden) == 0);
  const Interval iv = isolate_largest_root(cubic, Rational(1, 1000000));
  CHECK(iv.lo > Rational(14655, 10000));
  CHECK(iv.hi < Rational(14657, 10000));
}
