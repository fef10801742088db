#include "dillab/families.hpp"

#include "dillab/error.hpp"
#include "dillab/log_enclosure.hpp"

namespace dillab {

unsigned long cover_threshold(unsigned long g) { return 6 * (2 * g + 1) + 1; }

CoverFamilySpec CoverFamilySpec::make(unsigned long g, unsigned long n) {
  if (g < 2) throw Error(Errc::DomainError, "cover family needs genus >= 2");
  if (n < cover_threshold(g)) {
    throw Error(Errc::DomainError, "cover family needs n >= " + std::to_string(cover_threshold(g)) + " for genus " +
                                       std::to_string(g));
  }
  CoverFamilySpec s;
  s.g = g;
  s.n = n;
  s.m = (n - 1) / (2 * g + 1) - 1;
  s.c = n - (2 * g + 1) * (s.m + 1) - 1;
  return s;
}

LogRootBound log_root_bound(unsigned long m) {
  if (m < 5) throw Error(Errc::DomainError, "log_root_bound needs m >= 5");
  LogRootBound b;
  b.m = m;
  const Interval m_root = nth_root_enclosure(Rational(pow(Integer(static_cast<unsigned long>(m)), 3UL)), m, 64);
  RootOptions opts;
  opts.tail_mesh = false;  // the monotone tail already certifies maximality
  b.root = largest_root(build_Tm(m), m_root.hi + 1, opts);
  b.log_root = log_interval(b.root.interval());
  const Rational mq(static_cast<unsigned long>(m));
  b.closed_form = log_enclosure(mq).interval() * Rational(3) / mq;
  return b;
}

CoverBound cover_upper_bound(const CoverFamilySpec& spec, const LogRootBound& bound) {
  if (bound.m != spec.m) throw Error(Errc::InvalidArgument, "root bound computed for a different m");
  CoverBound out;
  out.spec = spec;
  out.bound = bound;
  const Rational x = ratio(Integer(spec.n) - Integer(4 * spec.g + 3), Integer(2 * spec.g + 1));
  out.closed_form_n = log_enclosure(x).interval() * Rational(3) / x;
  out.consistent = bound.root.certified_largest() && bound.log_root.certainly_leq(bound.closed_form) &&
                   bound.closed_form.certainly_leq(out.closed_form_n);
  return out;
}

CoverBound cover_upper_bound(unsigned long g, unsigned long n) {
  const CoverFamilySpec spec = CoverFamilySpec::make(g, n);
  return cover_upper_bound(spec, log_root_bound(spec.m));
}

TorusMatrixSpec torus_matrix(unsigned long n) {
  if (n < 5) throw Error(Errc::DomainError, "torus matrix template needs n >= 5");
  const std::size_t size = 2 * n;
  IntMatrix m(size);
  // One-based coordinates keep the band formulas readable.
  const auto put = [&](std::size_t row, std::size_t col, unsigned long v) { m.set(row - 1, col - 1, v); };

  for (std::size_t j = 1; j <= n - 1; ++j) {
    put(2 * j - 1, 2 * j - 1, 1);
    put(2 * j - 1, 2 * j, 1);
    put(2 * j - 1, 2 * j + 2, 1);
  }
  for (std::size_t j = 2; j <= n - 1; ++j) {
    put(2 * j, 2 * j - 3, 1);
    put(2 * j, 2 * j - 2, 1);
    put(2 * j, 2 * j - 1, 1);
    put(2 * j, 2 * j, 3);
    put(2 * j, 2 * j + 2, 1);
  }
  for (std::size_t row : {std::size_t{2}, size - 1, size}) {
    put(row, 1, 1);
    put(row, 2, 2);
    put(row, 4, 1);
  }
  put(2, size - 1, 1);
  put(size - 1, size - 1, 2);
  put(size - 1, size, 1);
  put(size, size - 3, 1);
  put(size, size - 2, 1);
  put(size, size - 1, 2);
  put(size, size, 3);
  return {n, std::move(m)};
}

TorusReport verify_torus_bounds(const TorusMatrixSpec& spec) {
  const IntMatrix& m = spec.matrix;
  std::vector<std::string> failures;
  if (m.dim() != 2 * spec.n) failures.push_back("dimension is not 2n");

  TorusReport r;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const Integer rs = m.row_sum(i);
    const Integer cs = m.col_sum(i);
    if (i == 0 || rs > r.max_row_sum) {
      r.max_row_sum = rs;
      r.max_row_index = i;
    }
    if (i == 0 || cs > r.max_col_sum) {
      r.max_col_sum = cs;
      r.max_col_index = i;
    }
  }
  r.irreducible = is_irreducible(m);
  if (r.max_col_sum != 9) failures.push_back("max column sum is " + r.max_col_sum.get_str() + ", expected 9");
  if (r.max_row_sum != 11) failures.push_back("max row sum is " + r.max_row_sum.get_str() + ", expected 11");
  if (!r.irreducible) failures.push_back("matrix is reducible");
  if (!failures.empty()) {
    std::string what = "torus matrix n=" + std::to_string(spec.n) + ":";
    for (const auto& f : failures) what += " " + f + ";";
    throw Error(Errc::ValidationFailed, what);
  }
  const Rational nq(static_cast<unsigned long>(spec.n));
  r.log_dil_bound = log_enclosure(11).interval() / nq;
  r.log_dil_col_bound = log_enclosure(9).interval() / nq;
  return r;
}

ReferenceBounds penner_hk_reference_bounds(long g, long n) {
  ReferenceBounds out;
  out.g = g;
  out.n = n;
  if (g < 0 || n < 0) {
    out.omitted.push_back({"all", "genus and marked points must be nonnegative"});
    return out;
  }
  const Interval log2 = log_enclosure(2).interval();

  const long penner_den = 12 * g - 12 + 4 * n;
  if (2 * g - 2 + n > 0 && penner_den > 0) {
    out.bounds.push_back({"penner-lower", false, log2 / Rational(penner_den)});
  } else {
    out.omitted.push_back({"penner-lower", "needs 2g-2+n > 0 and 12g-12+4n > 0"});
  }

  if (n == 0 && g >= 2) {
    out.bounds.push_back({"penner-closed-lower", false, log2 / Rational(12 * g - 12)});
    out.bounds.push_back({"penner-closed-upper", true, log_enclosure(11).interval() / Rational(g)});
  } else {
    out.omitted.push_back({"penner-closed", "closed-surface band needs n = 0 and g >= 2"});
  }

  if (g == 0 && n >= 4) {
    // log(2 + sqrt 3) from a 2^-80 enclosure of sqrt 3.
    const Interval s3 = sqrt_enclosure(3, 80);
    const Interval log_hk = log_interval(Interval(2 + s3.lo, 2 + s3.hi));
    out.bounds.push_back({"hk-genus0-upper", true, log_hk / Rational((n - 2) / 2)});
    out.bounds.push_back({"hk-genus0-upper-simplified", true, log_hk * Rational(2) / Rational(n - 3)});
  } else {
    out.omitted.push_back({"hk-genus0-upper", "needs g = 0 and n >= 4"});
  }

  if (g == 1 && n >= 2 && n % 2 == 0) {
    out.bounds.push_back({"torus-upper", true, log_enclosure(11).interval() / Rational(n / 2)});
  } else {
    out.omitted.push_back({"torus-upper", "needs g = 1 and an even number n >= 2 of marked points"});
  }
  return out;
}

}  // namespace dillab
