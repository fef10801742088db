#include "dillab/interval.hpp"

#include <algorithm>
#include <array>

#include "dillab/error.hpp"

namespace dillab {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw Error(Errc::InvalidArgument, "interval with lo > hi");
}

Rational Interval::gap(const Interval& o) const {
  if (overlaps(o)) return 0;
  return hi < o.lo ? Rational(o.lo - hi) : Rational(lo - o.hi);
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const std::array<Rational, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return {*mn, *mx};
}

Interval operator*(const Interval& a, const Rational& s) {
  return s >= 0 ? Interval(a.lo * s, a.hi * s) : Interval(a.hi * s, a.lo * s);
}

Interval operator*(const Rational& s, const Interval& a) { return a * s; }

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains(0)) throw Error(Errc::InvalidArgument, "interval division by an interval containing 0");
  return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval operator/(const Interval& a, const Rational& s) {
  if (s == 0) throw Error(Errc::InvalidArgument, "interval division by zero");
  return a * Rational(1 / s);
}

Interval pow(const Interval& a, unsigned long exponent) {
  if (exponent == 0) return Interval::point(1);
  if (a.lo >= 0) return {pow(a.lo, exponent), pow(a.hi, exponent)};
  if (a.hi <= 0) {
    Interval m = pow(-a, exponent);
    return exponent % 2 == 0 ? m : -m;
  }
  // straddles zero
  const Rational l = pow(a.lo, exponent);
  const Rational h = pow(a.hi, exponent);
  if (exponent % 2 == 1) return {l, h};
  return {Rational(0), std::max(l, h)};
}

Interval min(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.overlaps(b)) throw Error(Errc::InvalidArgument, "intersection of disjoint intervals");
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Interval widen_to_grid(const Interval& a, unsigned long bits) {
  return {round_dyadic(a.lo, bits, Rounding::Down), round_dyadic(a.hi, bits, Rounding::Up)};
}

Interval nth_root_enclosure(const Rational& q, unsigned long n, unsigned long bits) {
  if (q < 0) throw Error(Errc::InvalidArgument, "root of a negative number");
  if (n == 0) throw Error(Errc::InvalidArgument, "zeroth root");
  // floor(q * 2^(bits*n)) = N, A = floor(N^(1/n)): A^n <= q 2^(bits n) < (A+1)^n.
  Rational scaled = q;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), bits * n);
  const Integer big = floor(scaled);
  Integer a;
  const int exact = mpz_root(a.get_mpz_t(), big.get_mpz_t(), n);
  const Rational lo = dyadic(a, bits);
  if (exact != 0 && Rational(big) == scaled) return Interval::point(lo);
  return {lo, dyadic(a + 1, bits)};
}

Interval sqrt_enclosure(const Rational& q, unsigned long bits) { return nth_root_enclosure(q, 2, bits); }

std::string to_string(const Interval& a, unsigned significant) {
  return "[" + to_decimal_sig(a.lo, significant, Rounding::Down) + ", " +
         to_decimal_sig(a.hi, significant, Rounding::Up) + "]";
}

}  // namespace dillab
