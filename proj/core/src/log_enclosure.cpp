#include "dillab/log_enclosure.hpp"

#include "dillab/error.hpp"

namespace dillab {
namespace {

constexpr unsigned long kGridBits = 64;

// 2 * sum_{j>=0} y^(2j+1)/(2j+1) with |y| < 1, summed until the tail bound
// 2|y|^(2N+1) / ((2N+1)(1-y^2)) is below 2^-tail_bits. Every term has the
// sign of y, so the enclosure is one-sided around the partial sum.
Interval atanh_series(const Rational& y, unsigned long tail_bits) {
  if (y == 0) return Interval::point(0);
  const Rational y2 = y * y;
  const Rational one_minus = 1 - y2;
  Rational threshold(1);
  mpq_div_2exp(threshold.get_mpq_t(), threshold.get_mpq_t(), tail_bits);

  Rational sum = 0;
  Rational power = y;  // y^(2j+1)
  unsigned long j = 0;
  for (;;) {
    sum += power / (2 * j + 1);
    power *= y2;
    ++j;
    Rational tail = 2 * abs(power) / (Rational(2 * j + 1) * one_minus);
    if (tail < threshold) {
      const Rational s = 2 * sum;
      return y > 0 ? Interval(s, s + tail) : Interval(s - tail, s);
    }
  }
}

}  // namespace

const Interval& log2_interval() {
  static const Interval value = atanh_series(Rational(1, 3), 110);
  return value;
}

LogEnclosure log_enclosure(const Rational& q) {
  if (q <= 0) throw Error(Errc::DomainError, "log of a non-positive number");
  if (q == 1) return {q, 0, 0};

  long k = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  Rational r = q;
  if (k >= 0) {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(k));
  } else {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-k));
  }
  // r in (1/2, 2) now; move it into (2/3, 4/3].
  while (r > Rational(4, 3)) {
    r /= 2;
    ++k;
  }
  while (r <= Rational(2, 3)) {
    r *= 2;
    --k;
  }

  const Interval log_r = atanh_series((r - 1) / (r + 1), 50);
  const Interval total = log_r + log2_interval() * Rational(k);
  const Interval snapped = widen_to_grid(total, kGridBits);
  return {q, snapped.lo, snapped.hi};
}

Interval log_interval(const Interval& x) {
  if (x.lo <= 0) throw Error(Errc::DomainError, "log of an interval reaching non-positive values");
  const LogEnclosure a = log_enclosure(x.lo);
  if (x.lo == x.hi) return a.interval();
  const LogEnclosure b = log_enclosure(x.hi);
  return {a.lo, b.hi};
}

}  // namespace dillab
