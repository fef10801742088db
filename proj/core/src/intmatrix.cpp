#include "dillab/intmatrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>

#include "dillab/error.hpp"

namespace dillab {

IntMatrix::IntMatrix(std::size_t k) : k_(k), entries_(k * k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "matrix dimension must be at least 1");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(Errc::InvalidArgument, "matrix is not square (row " + std::to_string(i) + ")");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t k) {
  IntMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) m.entries_[i * k + i] = 1;
  return m;
}

void IntMatrix::set(std::size_t i, std::size_t j, Integer value) {
  if (i >= k_ || j >= k_) throw Error(Errc::InvalidArgument, "matrix index out of range");
  if (value < 0) throw Error(Errc::InvalidArgument, "matrix entries must be nonnegative");
  entries_[i * k_ + j] = std::move(value);
}

std::vector<std::vector<Integer>> IntMatrix::rows() const {
  std::vector<std::vector<Integer>> out(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * k_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * k_));
  }
  return out;
}

Integer IntMatrix::row_sum(std::size_t i) const {
  Integer s = 0;
  for (std::size_t j = 0; j < k_; ++j) s += (*this)(i, j);
  return s;
}

Integer IntMatrix::col_sum(std::size_t j) const {
  Integer s = 0;
  for (std::size_t i = 0; i < k_; ++i) s += (*this)(i, j);
  return s;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != k_) throw Error(Errc::InvalidArgument, "vector length does not match matrix");
  std::vector<Integer> out(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    Integer& acc = out[i];
    for (std::size_t j = 0; j < k_; ++j) {
      const Integer& a = (*this)(i, j);
      if (sgn(a) != 0) mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), v[j].get_mpz_t());
    }
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t k = a.dim();
  if (b.dim() != k) throw Error(Errc::InvalidArgument, "matrix dimensions differ");
  std::vector<std::vector<Integer>> out(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const Integer& x = a(i, l);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        const Integer& y = b(l, j);
        if (sgn(y) != 0) mpz_addmul(out[i][j].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      }
    }
  }
  return IntMatrix::from_rows(out);
}

IntMatrix mat_power(const IntMatrix& m, unsigned long r) {
  if (r == 0) throw Error(Errc::InvalidArgument, "mat_power needs r >= 1");
  std::optional<IntMatrix> result;
  IntMatrix base = m;
  for (;;) {
    if (r & 1UL) result = result ? *result * base : base;
    r >>= 1;
    if (r == 0) break;
    base = base * base;
  }
  return *result;
}

namespace {

std::vector<bool> reach(const IntMatrix& m, bool reverse) {
  const std::size_t k = m.dim();
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < k; ++w) {
      const Integer& e = reverse ? m(w, u) : m(u, w);
      if (sgn(e) > 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_irreducible(const IntMatrix& m) {
  if (m.dim() == 1) return sgn(m(0, 0)) > 0;
  const auto fwd = reach(m, false);
  const auto bwd = reach(m, true);
  return std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

bool is_positive(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (sgn(m(i, j)) <= 0) return false;
    }
  }
  return true;
}

IntMatrix permuted(const IntMatrix& m, std::span<const std::size_t> p) {
  const std::size_t k = m.dim();
  if (p.size() != k) throw Error(Errc::InvalidArgument, "permutation length does not match matrix");
  std::vector<bool> hit(k, false);
  for (std::size_t x : p) {
    if (x >= k || hit[x]) throw Error(Errc::InvalidArgument, "not a permutation");
    hit[x] = true;
  }
  IntMatrix out(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out.set(p[i], p[j], m(i, j));
  }
  return out;
}

Rational PFEnclosure::relative_width() const {
  if (hi == lo) return 0;
  return (hi - lo) / lo;
}

Interval collatz_wielandt(const IntMatrix& m, std::span<const Integer> v) {
  const std::vector<Integer> w = m.apply(v);
  std::size_t imin = 0;
  std::size_t imax = 0;
  // Ties keep the lowest index; a/b < c/d <=> a d < c b for positive b, d.
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) <= 0) throw Error(Errc::InvalidArgument, "Collatz-Wielandt vector must be positive");
    if (i == 0) continue;
    if (w[i] * v[imin] < w[imin] * v[i]) imin = i;
    if (w[i] * v[imax] > w[imax] * v[i]) imax = i;
  }
  Rational lo(w[imin], v[imin]);
  Rational hi(w[imax], v[imax]);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

namespace {

constexpr unsigned long kIterateBits = 128;
constexpr unsigned long kWarmStartBits = 60;

// Shifted inverse iteration (sigma kept above the current Collatz-Wielandt
// upper bound so (sigma I - M)^-1 stays entrywise positive). Floating point
// only supplies a candidate vector; nothing here is trusted for the bound.
std::optional<std::vector<Integer>> warm_start(const IntMatrix& m, std::size_t budget, std::size_t& used) {
  const auto k = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXd a(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
    }
  }
  Eigen::VectorXd x = Eigen::VectorXd::Ones(k);
  bool moved = false;
  for (std::size_t it = 0; it < 100 && used < budget; ++it) {
    const Eigen::VectorXd y = a * x;
    const Eigen::VectorXd ratio = y.cwiseQuotient(x);
    const double hi = ratio.maxCoeff();
    const double lo = ratio.minCoeff();
    if (!(hi > 0) || hi - lo <= 1e-14 * hi) break;
    const double sigma = hi + (hi - lo);
    const Eigen::MatrixXd shifted = sigma * Eigen::MatrixXd::Identity(k, k) - a;
    const Eigen::VectorXd z = shifted.partialPivLu().solve(x);
    if (!z.allFinite() || z.minCoeff() <= 0) break;
    x = z / z.maxCoeff();
    moved = true;
    ++used;
  }
  if (!moved) return std::nullopt;
  std::vector<Integer> v(m.dim());
  const double scale = std::ldexp(1.0, static_cast<int>(kWarmStartBits));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Integer z(std::floor(x(static_cast<Eigen::Index>(i)) * scale));
    v[i] = z > 0 ? z : Integer(1);
  }
  return v;
}

}  // namespace

PFEnclosure pf_enclosure(const IntMatrix& m, const PFOptions& options) {
  if (!is_irreducible(m)) throw Error(Errc::NotIrreducible, "pf_enclosure requires an irreducible matrix");
  if (options.rel_width < 0) throw Error(Errc::InvalidArgument, "rel_width must be nonnegative");

  std::vector<Integer> v(m.dim(), Integer(1));
  Interval best = collatz_wielandt(m, v);
  std::size_t iterations = 0;
  const auto done = [&] { return best.hi - best.lo <= options.rel_width * best.lo; };

  if (!done() && m.dim() > 1) {
    if (auto warm = warm_start(m, options.max_iters, iterations)) {
      v = std::move(*warm);
      best = intersect(best, collatz_wielandt(m, v));
    }
  }

  while (!done() && iterations < options.max_iters) {
    std::vector<Integer> w = m.apply(v);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
    const Integer top = *std::max_element(w.begin(), w.end());
    for (std::size_t i = 0; i < w.size(); ++i) {
      Integer scaled;
      mpz_mul_2exp(scaled.get_mpz_t(), w[i].get_mpz_t(), kIterateBits);
      mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), top.get_mpz_t());
      v[i] = scaled > 0 ? scaled : Integer(1);
    }
    best = intersect(best, collatz_wielandt(m, v));
    ++iterations;
  }
  return {best.lo, best.hi, iterations};
}

DiagonalBoundReport verify_diagonal_bound(const IntMatrix& m) {
  if (!is_irreducible(m)) throw Error(Errc::NotIrreducible, "verify_diagonal_bound requires an irreducible matrix");
  bool has_diagonal = false;
  for (std::size_t i = 0; i < m.dim(); ++i) has_diagonal = has_diagonal || sgn(m(i, i)) > 0;
  if (!has_diagonal) throw Error(Errc::NoDiagonalEntry, "all diagonal entries are zero");

  const unsigned long k = m.dim();
  DiagonalBoundReport report;
  report.positive_power = is_positive(mat_power(m, 2 * k));
  const PFEnclosure mu = pf_enclosure(m);
  report.mu_bound_holds = pow(mu.lo, 2 * k) >= Rational(static_cast<long>(k));
  return report;
}

}  // namespace dillab
