#include <random>

#include "doctest.h"
#include "dillab/error.hpp"
#include "dillab/lefschetz.hpp"

using namespace dillab;

TEST_CASE("symplectic form on basis classes") {
  const auto a1 = HomologyClass::alpha(1, 0);
  const auto b1 = HomologyClass::beta(1, 0);
  CHECK(symp_form(a1, b1) == 1);
  CHECK(symp_form(b1, a1) == -1);
  CHECK(symp_form(a1, a1) == 0);
  CHECK_THROWS_AS(symp_form(a1, HomologyClass::alpha(2, 0)), Error);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int t = 0; t < 50; ++t) {
    HomologyClass u = HomologyClass::zero(3), v = HomologyClass::zero(3);
    for (int i = 0; i < 6; ++i) {
      u.coords[i] = c(rng);
      v.coords[i] = c(rng);
    }
    CHECK(symp_form(u, v) == -symp_form(v, u));
  }
}

TEST_CASE("transvection along a1 with power 5") {
  const SympAction t = transvection(HomologyClass::alpha(1, 0), 5);
  CHECK(t.apply(HomologyClass::alpha(1, 0)) == HomologyClass::alpha(1, 0));
  CHECK(t.apply(HomologyClass::beta(1, 0)) == HomologyClass({Integer(-5), Integer(1)}));
  CHECK(t.trace() == 2);
  CHECK(t.is_symplectic());
  CHECK(transvection(HomologyClass::zero(2), 4) == SympAction::identity(2));
  CHECK(transvection(HomologyClass::alpha(2, 1), 0) == SympAction::identity(2));
}

TEST_CASE("transvections are symplectic for arbitrary classes") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int t = 0; t < 40; ++t) {
    HomologyClass g = HomologyClass::zero(3);
    for (auto& x : g.coords) x = c(rng);
    CHECK(transvection(g, c(rng)).is_symplectic());
  }
  SympAction bad = SympAction::identity(1);
  bad(0, 0) = 2;
  CHECK_FALSE(bad.is_symplectic());
}

TEST_CASE("multitwist Lefschetz numbers") {
  const std::vector<Twist> tw = {{HomologyClass::alpha(2, 0), 3}, {HomologyClass::alpha(2, 1), -1}};
  CHECK(multitwist_lefschetz(tw, 2) == -2);
  CHECK(multitwist_lefschetz({}, 3) == -4);
  CHECK(multitwist_lefschetz({{HomologyClass::alpha(1, 0), 7}}, 1) == 0);
  // Separating curves have zero class and act trivially.
  CHECK(multitwist_lefschetz({{HomologyClass::zero(2), 2}}, 2) == -2);
}

TEST_CASE("multitwist rejects intersecting classes and bad input") {
  const std::vector<Twist> crossing = {{HomologyClass::alpha(1, 0), 1}, {HomologyClass::beta(1, 0), 1}};
  try {
    multitwist_lefschetz(crossing, 1);
    FAIL("expected NotPairwiseOrthogonal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPairwiseOrthogonal);
  }
  CHECK_THROWS_AS(multitwist_lefschetz({{HomologyClass::alpha(1, 0), 0}}, 1), Error);
  CHECK_THROWS_AS(multitwist_lefschetz({{HomologyClass::alpha(2, 0), 1}}, 1), Error);
  CHECK_THROWS_AS(multitwist_lefschetz({}, 0), Error);
}

TEST_CASE("orthogonal twists commute") {
  const HomologyClass g1({Integer(2), Integer(1), Integer(0), Integer(0)});
  const HomologyClass g2({Integer(1), Integer(-3), Integer(0), Integer(0)});
  const SympAction a = transvection(g1, 2) * transvection(g2, -5);
  const SympAction b = transvection(g2, -5) * transvection(g1, 2);
  CHECK(a == b);
  CHECK(a.trace() == 4);
}

TEST_CASE("twist string parsing") {
  const auto tw = parse_twists("a1:3,b2:-1,a1+2b2:5", 2);
  REQUIRE(tw.size() == 3);
  CHECK(tw[0].gamma == HomologyClass::alpha(2, 0));
  CHECK(tw[0].power == 3);
  CHECK(tw[1].gamma == HomologyClass::beta(2, 1));
  CHECK(tw[1].power == -1);
  CHECK(tw[2].gamma == HomologyClass({Integer(1), Integer(0), Integer(0), Integer(2)}));
  CHECK(parse_twists("", 2).empty());
  CHECK_THROWS_AS(parse_twists("a3:1", 2), Error);
  CHECK_THROWS_AS(parse_twists("a1", 2), Error);
  CHECK_THROWS_AS(parse_twists("c1:2", 2), Error);
  CHECK_THROWS_AS(parse_twists("a1:x", 2), Error);
}

TEST_CASE("local index of the model maps") {
  for (double r : {0.5, 1.0, 2.0}) {
    IndexOptions o;
    o.radius = r;
    CHECK(local_index(LinearModel{-2, 0, 0, -0.5}, o) == 1);
    CHECK(local_index(RotationModel{1, 3}, o) == 1);
    CHECK(local_index(LinearModel{2, 0, 0, 0.5}, o) == -1);
  }
  CHECK(local_index(RotationModel{-2, 7}) == 1);
}

TEST_CASE("local index agrees with sign det(A - I)") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> e(-3, 3);
  int checked = 0;
  while (checked < 100) {
    const LinearModel m{e(rng), e(rng), e(rng), e(rng)};
    const int oracle = linear_index_oracle(m);
    if (std::abs((m.a - 1) * (m.d - 1) - m.b * m.c) <= 1e-3) continue;
    CHECK(local_index(m) == oracle);
    ++checked;
  }
}

TEST_CASE("local index needs denser sampling for elongated maps") {
  // Nearly degenerate displacement: the default 64 samples are refined.
  const LinearModel m{1.01, 5, 0, 0.5};
  CHECK(local_index(m) == linear_index_oracle(m));
}

TEST_CASE("local index errors") {
  try {
    local_index(LinearModel{1, 0, 0, 1});
    FAIL("expected FixedPointOnCircle");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FixedPointOnCircle);
  }
  CHECK_THROWS_AS(local_index(RotationModel{1, 0}), Error);
  IndexOptions tight;
  tight.samples = 4;
  tight.max_samples = 4;
  try {
    local_index(LinearModel{1.001, 50, 0, 0.5}, tight);
    FAIL("expected IncrementTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IncrementTooLarge);
  }
}
