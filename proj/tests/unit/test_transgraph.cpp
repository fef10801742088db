#include "doctest.h"
#include "dillab/charpoly.hpp"
#include "dillab/error.hpp"
#include "dillab/intmatrix.hpp"
#include "dillab/transgraph.hpp"

using namespace dillab;

namespace {

TransGraph cycle(std::size_t k) {
  TransGraph g(k);
  for (std::size_t i = 0; i < k; ++i) g.set_multiplicity(i, (i + 1) % k, 1);
  return g;
}

// Counts paths by explicit enumeration, independent of matrix powers.
Integer enumerate_paths(const TransGraph& g, std::size_t v, unsigned d) {
  if (d == 0) return 1;
  Integer total = 0;
  for (const auto& [ij, c] : g.edges()) {
    if (ij.first == v) total += c * enumerate_paths(g, ij.second, d - 1);
  }
  return total;
}

}  // namespace

TEST_CASE("matrix round trip") {
  const IntMatrix m = IntMatrix::from_rows({{1, 1}, {1, 0}});
  const TransGraph g = TransGraph::from_matrix(m);
  CHECK(g.to_matrix() == m);
  CHECK(g.multiplicity(0, 0) == 1);
  CHECK(g.multiplicity(1, 1) == 0);
  CHECK(g.edges().size() == 3);
  CHECK(TransGraph::from_matrix(IntMatrix(3)).edges().empty());
  CHECK_THROWS_AS(g.multiplicity(2, 0), Error);
}

TEST_CASE("path counts") {
  const TransGraph fib = TransGraph::from_matrix(IntMatrix::from_rows({{1, 1}, {1, 0}}));
  CHECK(path_count(fib, 0, 1) == 2);
  CHECK(path_count(fib, 0, 2) == 3);
  CHECK(path_count(fib, 0, 3) == 5);
  CHECK(path_count(fib, 1, 0) == 1);
  const TransGraph c = cycle(5);
  for (unsigned d = 0; d < 12; ++d) CHECK(path_count(c, 3, d) == 1);
  CHECK_THROWS_AS(path_count(fib, 2, 1), Error);
}

TEST_CASE("path counts agree with matrix powers and enumeration") {
  const IntMatrix m = IntMatrix::from_rows({{0, 2, 1}, {1, 0, 1}, {1, 1, 0}});
  const TransGraph g = TransGraph::from_matrix(m);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto counts = path_counts(g, i, 20);
    for (unsigned long d = 1; d <= 20; ++d) {
      const IntMatrix p = mat_power(m, d);
      Integer row = 0;
      for (std::size_t j = 0; j < 3; ++j) row += p(i, j);
      CHECK(counts[d] == row);
    }
    for (unsigned d = 0; d <= 8; ++d) CHECK(counts[d] == enumerate_paths(g, i, d));
  }
}

TEST_CASE("limit check converges") {
  const TransGraph fib = TransGraph::from_matrix(IntMatrix::from_rows({{1, 1}, {1, 0}}));
  const LimitCheckReport r = dilatation_limit_check(fib, 0, 60, Rational(1, 50));
  CHECK(r.converged);
  CHECK(r.last_gap < Rational(1, 50));
  const LimitCheckReport c = dilatation_limit_check(cycle(4), 2, 17, Rational(0));
  CHECK(c.converged);
  CHECK(c.root == Interval::point(1));
  const TransGraph loop2 = TransGraph::from_matrix(IntMatrix::from_rows({{2}}));
  const LimitCheckReport l = dilatation_limit_check(loop2, 0, 10, Rational(0));
  CHECK(l.paths == 1024);
  CHECK(l.root == Interval::point(2));
  CHECK(l.last_gap == 0);
  const TransGraph red = TransGraph::from_matrix(IntMatrix::from_rows({{1, 1}, {0, 1}}));
  CHECK_THROWS_AS(dilatation_limit_check(red, 0, 10, Rational(1, 10)), Error);
}

TEST_CASE("subdivision of a cycle is a longer cycle") {
  const TransGraph g1 = subdivide_out_edge(cycle(3), 1);
  CHECK(g1.vertex_count() == 4);
  CHECK(g1.multiplicity(1, 3) == 1);
  CHECK(g1.multiplicity(3, 2) == 1);
  CHECK(g1.multiplicity(1, 2) == 0);
  CHECK(is_irreducible(g1.to_matrix()));
  for (std::size_t v = 0; v < 4; ++v) CHECK(g1.out_multiplicity(v) == 1);
}

TEST_CASE("subdivision lowers mu from phi to the root of x^3 - x^2 - 1") {
  const TransGraph g = TransGraph::from_matrix(IntMatrix::from_rows({{0, 1}, {1, 1}}));
  CHECK(subdividable_vertices(g) == std::vector<std::size_t>{0});
  const TransGraph g1 = subdivide_out_edge(g, 0);
  const PFEnclosure mu1 = pf_enclosure(g1.to_matrix());
  const auto cubic = [](const Rational& x) -> Rational { return x * x * x - x * x - 1; };
  CHECK(cubic(mu1.lo) <= 0);
  CHECK(cubic(mu1.hi) >= 0);
  CHECK(mu1.hi < Rational(14656, 10000));
  CHECK(mu1.lo > Rational(14655, 10000));
  CHECK(compare_largest_roots(charpoly(g1.to_matrix()), charpoly(g.to_matrix())) == -1);
}

TEST_CASE("subdivided path counts are bounded by the shifted originals, not equal to them") {
  // Every later return to the subdivided vertex costs one extra step, so the
  // shifted counts only dominate. The first gap appears at d = 4: 4 vs 5.
  const TransGraph g = TransGraph::from_matrix(IntMatrix::from_rows({{0, 1}, {1, 1}}));
  const TransGraph g1 = subdivide_out_edge(g, 0);
  const auto p = path_counts(g, 0, 20);
  const auto p1 = path_counts(g1, 0, 21);
  for (unsigned long d = 0; d <= 3; ++d) CHECK(p1[d + 1] == p[d]);
  CHECK(p1[5] == 4);
  CHECK(p[4] == 5);
  for (unsigned long d = 0; d <= 20; ++d) CHECK(p1[d + 1] <= p[d]);
}

TEST_CASE("subdivision precondition") {
  const TransGraph fib = TransGraph::from_matrix(IntMatrix::from_rows({{1, 1}, {1, 0}}));
  CHECK(subdividable_vertices(fib) == std::vector<std::size_t>{1});
  try {
    subdivide_out_edge(fib, 0);
    FAIL("expected DegreePreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreePreconditionViolated);
  }
  const TransGraph doubled = TransGraph::from_matrix(IntMatrix::from_rows({{0, 2}, {1, 0}}));
  CHECK_THROWS_AS(subdivide_out_edge(doubled, 0), Error);
}
