#include "dillab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "dillab/error.hpp"
#include "dillab/log_enclosure.hpp"
#include "dillab/parallel.hpp"

namespace dillab {

Integer theta(unsigned long g) {
  if (g < 1) throw Error(Errc::DomainError, "theta needs g >= 1");
  Integer out = pow(Integer(3), g * g);
  for (unsigned long i = 1; i <= g; ++i) out *= pow(Integer(3), 2 * i) - 1;
  return out;
}

unsigned long count_sl2_z3() {
  unsigned long count = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          if (((a * d - b * c) % 3 + 3) % 3 == 1) ++count;
        }
  return count;
}

LowerBound index_lower_bound(unsigned long g, unsigned long n, const Integer& alpha) {
  if (g < 2) throw Error(Errc::DomainError, "lower bound formula needs g >= 2");
  if (alpha < 1 || alpha > theta(g)) {
    throw Error(Errc::AlphaOutOfRange, "alpha must lie in [1, theta(g)], got " + alpha.get_str());
  }
  LowerBound b;
  const Rational a(alpha);
  b.twist_branch = log2_interval() / (a * Rational(Integer(12 * g - 12)));
  const Rational x{Integer(18 * g + 6 * n - 18)};
  b.growth_branch = log_enclosure(x).interval() / (2 * a * x);
  b.min = min(b.twist_branch, b.growth_branch);
  return b;
}

OmegaConstants omega_constants(unsigned long g, const Integer& alpha) {
  if (g < 2) throw Error(Errc::DomainError, "omega constants need g >= 2");
  if (alpha < 1) throw Error(Errc::AlphaOutOfRange, "alpha must be >= 1");
  OmegaConstants o;
  const Rational a(alpha);
  const Interval log3 = log_enclosure(3).interval();
  const Rational g1{Integer(g - 1)};
  o.omega_prime = (a * 12 * g1) * log3 / (log2_interval() * Rational(3));
  o.linear = Interval::point(48 * a);
  o.log_term = (48 * a * g1) * log3 / (Rational(3) * log_enclosure(24 * g1).interval());
  o.omega = max(max(o.omega_prime, o.linear), o.log_term);
  return o;
}

namespace {

std::map<unsigned long, LogRootBound> root_bounds(const std::vector<unsigned long>& ms, unsigned jobs) {
  std::vector<LogRootBound> out(ms.size());
  parallel_for(ms.size(), jobs, [&](std::size_t i) { out[i] = log_root_bound(ms[i]); });
  std::map<unsigned long, LogRootBound> by_m;
  for (std::size_t i = 0; i < ms.size(); ++i) by_m.emplace(ms[i], std::move(out[i]));
  return by_m;
}

std::vector<unsigned long> distinct_m(unsigned long g, const std::vector<unsigned long>& ns) {
  std::vector<unsigned long> ms;
  for (unsigned long n : ns) {
    if (n >= cover_threshold(g)) ms.push_back(CoverFamilySpec::make(g, n).m);
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return ms;
}

}  // namespace

KappaReport kappa_upper_constant(unsigned long g, unsigned long n_lo, unsigned long n_hi, unsigned jobs) {
  if (g < 2) throw Error(Errc::RangeError, "kappa needs g >= 2");
  if (n_lo < cover_threshold(g) || n_hi < n_lo) {
    throw Error(Errc::RangeError, "n range [" + std::to_string(n_lo) + ", " + std::to_string(n_hi) +
                                      "] is outside the cover construction (n >= " +
                                      std::to_string(cover_threshold(g)) + ")");
  }
  std::vector<unsigned long> ns;
  for (unsigned long n = n_lo; n <= n_hi; ++n) ns.push_back(n);
  const auto bounds = root_bounds(distinct_m(g, ns), jobs);

  struct Ratios {
    Rational certified, closed_m, closed_x;
  };
  std::vector<Ratios> ratios(ns.size());
  parallel_for(ns.size(), jobs, [&](std::size_t i) {
    const unsigned long n = ns[i];
    const CoverFamilySpec spec = CoverFamilySpec::make(g, n);
    const CoverBound cb = cover_upper_bound(spec, bounds.at(spec.m));
    const Rational nq{Integer(n)};
    const Rational log_n_lo = log_enclosure(nq).lo;
    ratios[i] = {cb.certified_hi() * nq / log_n_lo, cb.bound.closed_form.hi * nq / log_n_lo,
                 cb.closed_form_n.hi * nq / log_n_lo};
  });

  KappaReport r;
  r.g = g;
  r.n_lo = n_lo;
  r.n_hi = n_hi;
  r.argmax_n = ns.front();
  Rational best = ratios.front().certified;
  Rational best_m = ratios.front().closed_m;
  Rational best_x = ratios.front().closed_x;
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (ratios[i].certified > best) {
      best = ratios[i].certified;
      r.argmax_n = ns[i];
    }
    best_m = std::max(best_m, ratios[i].closed_m);
    best_x = std::max(best_x, ratios[i].closed_x);
  }
  r.kappa = round_dyadic(best, 32, Rounding::Up);
  r.kappa_closed_m = round_dyadic(best_m, 32, Rounding::Up);
  r.kappa_closed_x = round_dyadic(best_x, 32, Rounding::Up);
  return r;
}

bool SandwichTable::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.ok(); });
}

SandwichTable sandwich_table(unsigned long g, const std::vector<unsigned long>& ns, unsigned jobs) {
  if (g < 2) throw Error(Errc::DomainError, "sandwich table needs g >= 2");
  if (ns.empty()) throw Error(Errc::InvalidArgument, "sandwich table needs at least one n");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 3) throw Error(Errc::DomainError, "n = " + std::to_string(ns[i]) + " is below 3");
    if (i > 0 && ns[i] <= ns[i - 1]) throw Error(Errc::InvalidArgument, "n values must be strictly increasing");
  }

  SandwichTable t;
  t.g = g;
  const Integer alpha = theta(g);
  t.omega = omega_constants(g, alpha).omega;
  const unsigned long threshold = cover_threshold(g);
  if (ns.back() >= threshold) t.kappa = kappa_upper_constant(g, std::max(ns.front(), threshold), ns.back(), jobs);
  const auto bounds = root_bounds(distinct_m(g, ns), jobs);

  t.rows.resize(ns.size());
  parallel_for(ns.size(), jobs, [&](std::size_t i) {
    const unsigned long n = ns[i];
    try {
      BoundRow row;
      row.g = g;
      row.n = n;
      row.lower = index_lower_bound(g, n, alpha).min;
      row.lower_source = "index-one-fixed-point(alpha=theta)";
      row.lower_positive = row.lower.lo > 0;
      const Rational nq{Integer(n)};
      const Interval log_n = log_enclosure(nq).interval();
      row.lower_sandwich = row.lower.lo >= log_n.lo / (t.omega.hi * nq);
      if (n >= threshold) {
        const CoverFamilySpec spec = CoverFamilySpec::make(g, n);
        const CoverBound cb = cover_upper_bound(spec, bounds.at(spec.m));
        row.upper = cb.bound.log_root;
        row.upper_source = "cover-family-T_m(m=" + std::to_string(spec.m) + ",c=" + std::to_string(spec.c) + ")";
        row.lower_below_upper = row.lower.certainly_less(*row.upper);
        row.upper_sandwich = cb.bound.root.certified_largest() && row.upper->hi <= t.kappa->kappa * log_n.hi / nq;
      } else {
        row.upper_source = "none(below-construction-threshold)";
      }
      t.rows[i] = std::move(row);
    } catch (const Error& e) {
      throw Error(e.code(), "n = " + std::to_string(n) + ": " + e.what());
    }
  });
  return t;
}

std::vector<unsigned long> log_uniform_range(unsigned long lo, unsigned long hi, unsigned count) {
  if (lo == 0 || hi < lo) throw Error(Errc::InvalidArgument, "log-uniform range needs 0 < lo <= hi");
  std::vector<unsigned long> out;
  if (count < 2 || lo == hi) {
    out.push_back(lo);
    if (hi != lo) out.push_back(hi);
    return out;
  }
  const double a = std::log(static_cast<double>(lo));
  const double b = std::log(static_cast<double>(hi));
  for (unsigned i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    auto v = static_cast<unsigned long>(std::llround(std::exp(a + t * (b - a))));
    v = std::clamp(v, lo, hi);
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  if (out.back() != hi) out.push_back(hi);
  return out;
}

}  // namespace dillab
