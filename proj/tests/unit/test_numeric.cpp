#include <cmath>

#include "doctest.h"
#include "dillab/error.hpp"
#include "dillab/interval.hpp"
#include "dillab/log_enclosure.hpp"
#include "dillab/rational.hpp"

using namespace dillab;

TEST_CASE("ratio canonicalizes and rejects zero denominators") {
  CHECK(ratio(6, 4) == Rational(3, 2));
  CHECK(ratio(6, 4).get_den() == 2);
  CHECK(ratio(-2, -4) == Rational(1, 2));
  CHECK_THROWS_AS(ratio(1, 0), Error);
}

TEST_CASE("rational powers and rounding") {
  CHECK(pow(Rational(2, 3), 3UL) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2L) == Rational(9, 4));
  CHECK_THROWS_AS(pow(Rational(0), -1L), Error);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(round_dyadic(Rational(1, 3), 4, Rounding::Down) == Rational(5, 16));
  CHECK(round_dyadic(Rational(1, 3), 4, Rounding::Up) == ratio(6, 16));
}

TEST_CASE("decimal rendering rounds outward on request") {
  CHECK(to_decimal(Rational(1, 3), 3, Rounding::Down) == "0.333");
  CHECK(to_decimal(Rational(1, 3), 3, Rounding::Up) == "0.334");
  CHECK(to_decimal(Rational(-1, 3), 3, Rounding::Down) == "-0.334");
  CHECK(to_decimal(Rational(5), 0) == "5");
  CHECK(to_decimal_sig(Rational(1, 700), 3, Rounding::Up) == "0.00143");
  CHECK(to_decimal_sig(Rational(12345), 2, Rounding::Down) == "12345");
}

TEST_CASE("parse_rational reads fractions, decimals and exponents exactly") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("1e-9") == Rational(1, 1000000000));
  CHECK(parse_rational("-0.05") == Rational(-1, 20));
  CHECK(parse_rational(" 2.5E1 ") == 25);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(parse_integer("-42") == -42);
  CHECK_THROWS_AS(parse_integer("4x"), Error);
}

TEST_CASE("int64 conversion guards the range") {
  CHECK(fits_int64(Integer("9223372036854775807")));
  CHECK_FALSE(fits_int64(Integer("9223372036854775808")));
  CHECK(to_int64(Integer(-5)) == -5);
  CHECK_THROWS_AS(to_int64(Integer("99999999999999999999")), Error);
}

TEST_CASE("interval arithmetic encloses pointwise results") {
  const Interval a(Rational(1), Rational(2));
  const Interval b(Rational(-3), Rational(1, 2));
  CHECK((a + b) == Interval(Rational(-2), Rational(5, 2)));
  CHECK((a * b) == Interval(Rational(-6), Rational(1)));
  CHECK((a - a) == Interval(Rational(-1), Rational(1)));
  CHECK_THROWS_AS(a / b, Error);
  CHECK((a / a) == Interval(Rational(1, 2), Rational(2)));
  CHECK(pow(b, 2UL) == Interval(Rational(0), Rational(9)));
  CHECK(a.gap(Interval(Rational(3), Rational(4))) == 1);
  CHECK(a.certainly_less(Interval(Rational(5, 2), Rational(3))));
  CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), Error);
  CHECK_THROWS_AS(intersect(a, Interval(Rational(3), Rational(4))), Error);
}

TEST_CASE("nth roots bracket exactly") {
  const Interval r = nth_root_enclosure(Rational(2), 2, 40);
  CHECK(r.lo * r.lo <= 2);
  CHECK(r.hi * r.hi >= 2);
  CHECK(r.width() <= Rational(1, 1 << 30));
  CHECK(nth_root_enclosure(Rational(1024), 10, 20) == Interval::point(Rational(2)));
  const Interval s = nth_root_enclosure(Rational(125), 3, 30);
  CHECK(s.contains(5));
}

TEST_CASE("log enclosures contain libm values and are narrow") {
  for (const Rational q : {Rational(2), Rational(3), Rational(11), Rational(1, 7), Rational(1000003, 1000)}) {
    const LogEnclosure e = log_enclosure(q);
    const double ref = std::log(q.get_d());
    CHECK(e.lo.get_d() <= ref + 1e-15);
    CHECK(e.hi.get_d() >= ref - 1e-15);
    CHECK(e.width() <= ratio(1, Integer("1000000000000")));
  }
  CHECK(log_enclosure(1).interval().contains(0));
  CHECK_THROWS_AS(log_enclosure(0), Error);
  CHECK_THROWS_AS(log_enclosure(-1), Error);
}

TEST_CASE("log enclosure respects exact identities") {
  // log 8 = 3 log 2 and log 6 = log 2 + log 3 as interval facts.
  const Interval l2 = log_enclosure(2).interval();
  const Interval l3 = log_enclosure(3).interval();
  CHECK(log_enclosure(8).interval().overlaps(l2 * Rational(3)));
  CHECK(log_enclosure(6).interval().overlaps(l2 + l3));
  // e^lo < 2 < e^hi via the alternating exp series bound at the endpoints.
  const auto exp_bounds = [](const Rational& x) {
    Rational term = 1;
    Rational sum = 1;
    for (int k = 1; k <= 40; ++k) {
      term = term * x / k;
      sum += term;
    }
    return sum;  // lower bound of e^x for x > 0, error < x^41/41!
  };
  CHECK(exp_bounds(l2.hi) >= 2);
  CHECK(exp_bounds(l2.lo) < 2);
}
