#include "dillab/intpoly.hpp"

#include <cmath>
#include <vector>

#include "dillab/error.hpp"
#include "dillab/log_enclosure.hpp"

namespace dillab {

IntPoly& IntPoly::add_term(unsigned long e, const Integer& c) {
  if (c == 0) return *this;
  Integer& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
  return *this;
}

Integer IntPoly::coefficient(unsigned long e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer IntPoly::leading_coefficient() const { return terms_.empty() ? Integer(0) : terms_.rbegin()->second; }

int IntPoly::sign_at(const Rational& x) const {
  if (terms_.empty()) return 0;
  // x = a / b with b > 0: sign p(x) = sign sum c_e a^e b^(d - e).
  const unsigned long d = degree();
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = 0;
  Integer pa;
  Integer pb;
  for (const auto& [e, c] : terms_) {
    mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), e);
    mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), d - e);
    pa *= pb;
    mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(), pa.get_mpz_t());
  }
  return sgn(acc);
}

Rational IntPoly::evaluate(const Rational& x) const {
  if (terms_.empty()) return 0;
  const unsigned long d = degree();
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = 0;
  for (const auto& [e, c] : terms_) acc += c * pow(a, e) * pow(b, d - e);
  Rational out(acc, pow(b, d));
  out.canonicalize();
  return out;
}

IntPoly IntPoly::derivative() const {
  IntPoly d;
  for (const auto& [e, c] : terms_) {
    if (e > 0) d.add_term(e - 1, c * e);
  }
  return d;
}

unsigned IntPoly::sign_changes() const {
  unsigned changes = 0;
  int last = 0;
  for (const auto& [e, c] : terms_) {
    const int s = sgn(c);
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_coeff = mag != 1 || e == 0;
    if (show_coeff) out += mag.get_str();
    if (e > 0) {
      if (show_coeff) out += "*";
      out += "x";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
  return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

IntPoly build_T(unsigned long s, unsigned long t) {
  if (s < 1 || t < 1) throw Error(Errc::InvalidArgument, "build_T needs s, t >= 1");
  IntPoly x_minus_1;
  x_minus_1.add_term(1, 1).add_term(0, -1);
  IntPoly lead;
  lead.add_term(s + t + 1, 1);
  IntPoly middle;
  middle.add_term(s + 1, 2).add_term(t + 1, 2);
  return x_minus_1 * lead - middle - x_minus_1;
}

IntPoly build_Tm(unsigned long m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "build_Tm needs m >= 2");
  return build_T(m / 2, (m + 1) / 2);
}

namespace {

bool monotone_tail(const IntPoly& p, const Rational& from) {
  if (from <= 0) return false;
  IntPoly q = p.derivative();
  while (!q.is_zero()) {
    if (q.sign_at(from) <= 0) return false;
    if (q.sign_changes() <= 1) return true;
    q = q.derivative();
  }
  return false;
}

// Newton from the right in long double; 0 signals failure.
long double float_root_estimate(const IntPoly& p, long double start) {
  long double x = start;
  for (int it = 0; it < 100000; ++it) {
    long double v = 0;
    long double dv = 0;
    for (const auto& [e, c] : p.terms()) {
      const long double ce = c.get_d();
      v += ce * std::pow(x, static_cast<long double>(e));
      if (e > 0) dv += ce * static_cast<long double>(e) * std::pow(x, static_cast<long double>(e - 1));
    }
    if (!std::isfinite(v) || !std::isfinite(dv) || dv <= 0) return 0;
    const long double next = x - v / dv;
    if (std::abs(next - x) <= 1e-18L * x) return next;
    x = next;
  }
  return 0;
}

}  // namespace

RootEnclosure largest_root(const IntPoly& p, const Rational& search_hi, const RootOptions& options) {
  if (p.leading_coefficient() <= 0) throw Error(Errc::InvalidArgument, "largest_root needs a positive leading coefficient");
  if (options.mesh_points == 0) throw Error(Errc::InvalidArgument, "mesh needs at least one interval");
  if (search_hi <= 1) throw Error(Errc::InvalidArgument, "search_hi must exceed 1");
  if (p.sign_at(1) >= 0) throw Error(Errc::InvalidArgument, "largest_root needs p(1) < 0");
  if (p.sign_at(search_hi) <= 0) {
    throw Error(Errc::NoSignChange, "p(search_hi) <= 0; enlarge search_hi");
  }

  RootEnclosure out;
  const auto finish = [&](const Rational& lo, const Rational& hi) {
    out.lo = lo;
    out.hi = hi;
    out.sign_lo = p.sign_at(lo);
    out.sign_hi = p.sign_at(hi);
    out.tail_certified = out.sign_lo < 0 && out.sign_hi > 0 && monotone_tail(p, lo);
    if (options.tail_mesh) {
      out.mesh_positive = true;
      const Rational tail_step = (search_hi - hi) / options.mesh_points;
      for (unsigned j = 0; j <= options.mesh_points && out.mesh_positive; ++j) {
        out.mesh_positive = p.sign_at(hi + tail_step * j) > 0;
      }
    }
    return out;
  };

  if (const long double x = float_root_estimate(p, to_double(search_hi)); x > 1) {
    const Rational xq(static_cast<double>(x));
    const Rational delta = options.rel_width / 4;
    const Rational lo = round_dyadic(xq * (1 - delta), 60, Rounding::Down);
    const Rational hi = round_dyadic(xq * (1 + delta), 60, Rounding::Up);
    if (lo > 1 && hi < search_hi && hi - lo <= options.rel_width * lo && p.sign_at(lo) < 0 && p.sign_at(hi) > 0 &&
        monotone_tail(p, lo)) {
      return finish(lo, hi);
    }
  }

  // Rightmost mesh cell carrying a sign change.
  const Rational step = (search_hi - 1) / options.mesh_points;
  Rational lo = 1;
  Rational hi = search_hi;
  for (unsigned j = options.mesh_points; j-- > 1;) {
    const Rational x = 1 + step * j;
    if (p.sign_at(x) <= 0) {
      lo = x;
      hi = x + step;
      break;
    }
    hi = x;
  }

  while (hi - lo > options.rel_width * lo) {
    const Rational mid = (lo + hi) / 2;
    const int s = p.sign_at(mid);
    if (s > 0) {
      hi = mid;
    } else if (s < 0) {
      lo = mid;
    } else {
      // Exact rational root: shrink a symmetric bracket until it straddles.
      Rational w = (hi - lo) / 4;
      for (int guard = 0;; ++guard) {
        if (guard > 256) throw Error(Errc::InvalidArgument, "root of even multiplicity");
        if (p.sign_at(mid - w) < 0 && p.sign_at(mid + w) > 0) break;
        w /= 2;
      }
      lo = mid - w;
      hi = mid + w;
    }
  }
  if (p.sign_at(lo) == 0) {
    throw Error(Errc::InvalidArgument, "bracket endpoint is a root");
  }

  return finish(lo, hi);
}

LrootReport verify_lroot(unsigned long m) {
  if (m < 5) throw Error(Errc::DomainError, "the m^(3/m) bound is only claimed for m >= 5");
  LrootReport r;
  r.m = m;
  const IntPoly p = build_Tm(m);
  r.value_at_one = p.evaluate(1) == -4;

  const Integer m3 = pow(Integer(static_cast<unsigned long>(m)), 3UL);
  r.m_root = nth_root_enclosure(Rational(m3), m, 64);
  r.root = largest_root(p, r.m_root.hi + 1);
  r.bound_holds = r.root.certified_largest() && r.root.hi < r.m_root.lo;

  const Rational mq(static_cast<unsigned long>(m));
  const Interval three_log_over_m = log_enclosure(mq).interval() * Rational(3) / mq;
  r.ineq1 = (r.m_root.lo - 1 > three_log_over_m.hi) && (three_log_over_m.lo >= Rational(9) / (2 * mq));
  r.ineq2 = r.m_root.lo >= 1 && 3 * (m / 2) >= m;
  r.ineq3 = 25 * m <= m * m * m;
  r.chain = Rational(9) / (2 * mq) > Rational(101) / (25 * mq);
  return r;
}

}  // namespace dillab
