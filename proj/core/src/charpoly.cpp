#include "dillab/charpoly.hpp"

#include <algorithm>

#include "dillab/error.hpp"

namespace dillab {
namespace {

void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

DensePoly derivative(const DensePoly& p) {
  DensePoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// Remainder of a / b (b nonzero).
DensePoly remainder(DensePoly a, const DensePoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

DensePoly gcd(DensePoly a, DensePoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    DensePoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// p / (x - r) for a root r, by synthetic division.
DensePoly deflate(const DensePoly& p, const Rational& r) {
  const std::size_t n = p.size() - 1;
  DensePoly q(n);
  Rational carry = 0;
  for (std::size_t i = n; i >= 1; --i) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::vector<DensePoly> sturm_chain(const DensePoly& p) {
  std::vector<DensePoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    DensePoly r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

Rational cauchy_bound(const DensePoly& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i] / p.back())));
  return m + 1;
}

}  // namespace

DensePoly charpoly(const IntMatrix& m) {
  const std::size_t k = m.dim();
  // Faddeev-LeVerrier over Z: N_0 = I, c_{k-j} = -tr(M N_{j-1}) / j,
  // N_j = M N_{j-1} + c_{k-j} I. All divisions are exact.
  std::vector<Integer> c(k + 1);
  c[k] = 1;
  std::vector<Integer> n(k * k);
  for (std::size_t i = 0; i < k; ++i) n[i * k + i] = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<Integer> mn(k * k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t l = 0; l < k; ++l) {
        if (sgn(m(r, l)) == 0) continue;
        for (std::size_t s = 0; s < k; ++s) mn[r * k + s] += m(r, l) * n[l * k + s];
      }
    }
    Integer trace = 0;
    for (std::size_t r = 0; r < k; ++r) trace += mn[r * k + r];
    Integer coeff = -trace;
    if (!mpz_divisible_ui_p(coeff.get_mpz_t(), j)) {
      throw Error(Errc::InvalidArgument, "Faddeev-LeVerrier produced a non-integral coefficient");
    }
    mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), j);
    c[k - j] = coeff;
    for (std::size_t r = 0; r < k; ++r) mn[r * k + r] += coeff;
    n = std::move(mn);
  }
  DensePoly out(k + 1);
  for (std::size_t i = 0; i <= k; ++i) out[i] = c[i];
  return out;
}

Rational evaluate(const DensePoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::size_t count_roots_above(const DensePoly& p_in, const Rational& x) {
  DensePoly p = p_in;
  trim(p);
  if (p.size() <= 1) return 0;
  while (p.size() > 1 && evaluate(p, x) == 0) p = deflate(p, x);
  if (p.size() <= 1) return 0;
  const auto chain = sturm_chain(p);
  std::vector<int> at_x;
  std::vector<int> at_inf;
  for (const auto& s : chain) {
    at_x.push_back(sgn(evaluate(s, x)));
    at_inf.push_back(sgn(s.back()));
  }
  return static_cast<std::size_t>(sign_variations(at_x) - sign_variations(at_inf));
}

bool largest_root_in(const DensePoly& p, const Interval& iv) {
  if (count_roots_above(p, iv.hi) != 0) return false;
  return evaluate(p, iv.lo) == 0 || count_roots_above(p, iv.lo) >= 1;
}

int compare_largest_roots(const DensePoly& q_in, const DensePoly& p_in) {
  DensePoly p = p_in;
  DensePoly q = q_in;
  trim(p);
  trim(q);
  if (p.size() <= 1 || q.size() <= 1) throw Error(Errc::InvalidArgument, "constant polynomial has no roots");
  const Rational bound = std::max(cauchy_bound(p), cauchy_bound(q));
  Rational a = -bound - 1;
  Rational b = bound;
  if (count_roots_above(p, a) == 0 || count_roots_above(q, a) == 0) {
    throw Error(Errc::InvalidArgument, "polynomial without real roots");
  }
  // (a, b] holds exactly one root of p: its largest.
  while (count_roots_above(p, a) > 1) {
    const Rational mid = (a + b) / 2;
    if (count_roots_above(p, mid) >= 1) a = mid; else b = mid;
  }
  const DensePoly g = gcd(p, q);
  const bool shared = g.size() > 1 && count_roots_above(g, a) > count_roots_above(g, b);
  const auto q_inside = [&] { return count_roots_above(q, a) - count_roots_above(q, b); };
  for (int guard = 0; q_inside() != (shared ? 1u : 0u); ++guard) {
    if (guard > 4096) throw Error(Errc::InvalidArgument, "root comparison did not separate");
    const Rational mid = (a + b) / 2;
    if (count_roots_above(p, mid) == 1) a = mid; else b = mid;
  }
  if (count_roots_above(q, b) > 0) return 1;
  return shared ? 0 : -1;
}

Interval isolate_largest_root(const DensePoly& p_in, const Rational& tol) {
  DensePoly p = p_in;
  trim(p);
  if (p.size() <= 1) throw Error(Errc::InvalidArgument, "constant polynomial has no roots");
  Rational b = cauchy_bound(p);
  Rational a = -b - 1;
  if (count_roots_above(p, a) == 0) throw Error(Errc::InvalidArgument, "polynomial without real roots");
  while (b - a > tol) {
    const Rational mid = (a + b) / 2;
    if (count_roots_above(p, mid) >= 1) a = mid; else b = mid;
  }
  return {a, b};
}

}  // namespace dillab
