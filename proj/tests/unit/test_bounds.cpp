#include <array>
#include <cmath>

#include "doctest.h"
#include "dillab/bounds.hpp"
#include "dillab/error.hpp"
#include "dillab/log_enclosure.hpp"

using namespace dillab;

namespace {

// |Sp(4, Z/3)| by backtracking over the columns a1, b1, a2, b2 of A with the
// pairing constraints <A e_i, A e_j> = J_ij checked as soon as both exist.
unsigned long count_sp4_z3() {
  using Vec = std::array<int, 4>;
  std::vector<Vec> all;
  for (int x = 0; x < 81; ++x) all.push_back({x % 3, x / 3 % 3, x / 9 % 3, x / 27});
  // Coordinates (a1, a2, b1, b2); <u, v> = sum u_ai v_bi - u_bi v_ai.
  const auto form = [](const Vec& u, const Vec& v) {
    return (((u[0] * v[2] - u[2] * v[0] + u[1] * v[3] - u[3] * v[1]) % 3) + 3) % 3;
  };
  // Column order a1, b1, a2, b2 and the required pairings with earlier ones.
  const int need[4][4] = {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}};
  std::array<Vec, 4> cols{};
  unsigned long count = 0;
  const auto rec = [&](auto&& self, int c) -> void {
    if (c == 4) {
      ++count;
      return;
    }
    for (const Vec& v : all) {
      bool ok = true;
      for (int p = 0; p < c && ok; ++p) ok = form(cols[p], v) == need[c][p];
      if (!ok) continue;
      cols[c] = v;
      self(self, c + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_CASE("theta by formula and by enumeration") {
  CHECK(theta(1) == 24);
  CHECK(count_sl2_z3() == 24);
  CHECK(theta(2) == 51840);
  CHECK(count_sp4_z3() == 51840);
  CHECK(theta(3) == Integer("9170703360"));
  CHECK_THROWS_AS(theta(0), Error);
}

TEST_CASE("lower bound formula examples") {
  const LowerBound a = index_lower_bound(2, 3, 1);
  CHECK(a.value().get_d() == doctest::Approx(std::log(36.0) / 72).epsilon(1e-12));
  CHECK(a.twist_branch.lo.get_d() == doctest::Approx(std::log(2.0) / 12).epsilon(1e-12));
  const LowerBound b = index_lower_bound(2, 0, 1);
  CHECK(b.value().get_d() == doctest::Approx(std::log(2.0) / 12).epsilon(1e-12));
  CHECK(b.growth_branch.lo.get_d() == doctest::Approx(std::log(18.0) / 36).epsilon(1e-12));
}

TEST_CASE("alpha enters as a global reciprocal factor") {
  for (unsigned long n : {0UL, 3UL, 50UL, 1000UL}) {
    const LowerBound one = index_lower_bound(2, n, 1);
    const LowerBound worst = index_lower_bound(2, n, theta(2));
    CHECK(worst.min.lo * 51840 <= one.min.lo);
    CHECK(worst.min.hi * 51840 >= one.min.lo);
  }
  try {
    index_lower_bound(2, 3, theta(2) + 1);
    FAIL("expected AlphaOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AlphaOutOfRange);
  }
  CHECK_THROWS_AS(index_lower_bound(2, 3, 0), Error);
  CHECK_THROWS_AS(index_lower_bound(1, 3, 1), Error);
}

TEST_CASE("lower bound is nonincreasing in n") {
  Rational prev = index_lower_bound(3, 0, 7).min.hi;
  for (unsigned long n = 1; n < 300; ++n) {
    const LowerBound b = index_lower_bound(3, n, 7);
    CHECK(b.min.lo <= prev);
    prev = b.min.hi;
  }
}

TEST_CASE("omega constants") {
  const OmegaConstants o = omega_constants(2, 1);
  CHECK(o.omega_prime.lo.get_d() == doctest::Approx(12 / std::log(2.0) * std::log(3.0) / 3).epsilon(1e-12));
  CHECK(o.omega == Interval::point(48));
  CHECK(o.log_term.hi < 48);
  const OmegaConstants d = omega_constants(2, 2);
  CHECK(d.omega_prime.lo == 2 * o.omega_prime.lo);
  CHECK(d.omega.lo == 2 * o.omega.lo);
  CHECK(d.log_term.hi == 2 * o.log_term.hi);
  // Large genus: the first term wins.
  const OmegaConstants big = omega_constants(10, 1);
  CHECK(big.omega == big.omega_prime);
}

TEST_CASE("kappa over a single n matches the hand ratios") {
  const KappaReport k = kappa_upper_constant(2, 31, 31);
  // (3 log 5 / 5) * 31 / log 31 and (3 log 4 / 4) * 31 / log 31
  CHECK(k.kappa_closed_m.get_d() == doctest::Approx(8.7173).epsilon(1e-4));
  CHECK(k.kappa_closed_x.get_d() == doctest::Approx(9.3858).epsilon(1e-4));
  CHECK(k.kappa < k.kappa_closed_m);
  CHECK(k.small_n_patch_symbolic);
  try {
    kappa_upper_constant(2, 30, 40);
    FAIL("expected RangeError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RangeError);
  }
}

TEST_CASE("closed-form kappa ratio grows toward 15 instead of decreasing") {
  const KappaReport a = kappa_upper_constant(2, 1000, 1000);
  const KappaReport b = kappa_upper_constant(2, 10000, 10000);
  CHECK(a.kappa_closed_x < b.kappa_closed_x);
  CHECK(b.kappa_closed_x < 15);
  CHECK(b.kappa_closed_x > 12);  // about 12.39
}

TEST_CASE("kappa bounds every ratio in its range and is attained") {
  const KappaReport k = kappa_upper_constant(2, 31, 200);
  for (unsigned long n = 31; n <= 200; n += 13) {
    const CoverBound c = cover_upper_bound(2, n);
    CHECK(c.certified_hi() * n / log_enclosure(n).lo <= k.kappa);
  }
  const CoverBound at = cover_upper_bound(2, k.argmax_n);
  CHECK(k.kappa - at.certified_hi() * k.argmax_n / log_enclosure(k.argmax_n).lo < Rational(1, 1000000));
}

TEST_CASE("sandwich table rows") {
  std::vector<unsigned long> ns;
  for (unsigned long n = 31; n <= 40; ++n) ns.push_back(n);
  const SandwichTable t = sandwich_table(2, ns);
  CHECK(t.rows.size() == 10);
  CHECK(t.ok());
  for (const auto& r : t.rows) {
    CHECK(r.lower.lo > 0);
    REQUIRE(r.upper.has_value());
    CHECK(r.lower.hi < r.upper->lo);
    CHECK(r.upper_source.find("cover-family") == 0);
  }
}

TEST_CASE("sandwich table below the construction threshold has no upper bound") {
  const SandwichTable t = sandwich_table(2, {3, 10, 30});
  CHECK(t.ok());
  CHECK_FALSE(t.kappa.has_value());
  for (const auto& r : t.rows) CHECK_FALSE(r.upper.has_value());
  CHECK_THROWS_AS(sandwich_table(2, {2}), Error);
  CHECK_THROWS_AS(sandwich_table(2, {40, 35}), Error);
}

TEST_CASE("asymptotic shape at n = 10^4") {
  const SandwichTable t = sandwich_table(2, {10000});
  const BoundRow& r = t.rows.front();
  const double scale = std::log(10000.0) / 10000.0;
  CHECK(r.upper->hi.get_d() / scale < 20);
  CHECK(r.lower.lo.get_d() / scale > 1e-6);
}

TEST_CASE("sandwich holds for genus 3 and 4") {
  for (unsigned long g : {3UL, 4UL}) {
    const auto ns = log_uniform_range(3, 3000, 25);
    const SandwichTable t = sandwich_table(g, ns);
    CAPTURE(g);
    CHECK(t.ok());
  }
}

TEST_CASE("log-uniform sampling") {
  const auto ns = log_uniform_range(31, 10000, 60);
  CHECK(ns.front() == 31);
  CHECK(ns.back() == 10000);
  CHECK(ns.size() >= 50);
  for (std::size_t i = 1; i < ns.size(); ++i) CHECK(ns[i] > ns[i - 1]);
}
