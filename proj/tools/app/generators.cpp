#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace dillab::app {

std::mt19937_64 case_rng(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                   static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  for (char c : tag) words.push_back(static_cast<unsigned char>(c));
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

IntMatrix random_irreducible(std::mt19937_64& rng, std::size_t k, unsigned max_entry, double density) {
  IntMatrix m(k);
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (coin(rng)) m.set(i, j, static_cast<unsigned long>(pick(rng, 1, max_entry)));
    }
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t t = 0; t < k && k > 1; ++t) {
    const std::size_t i = order[t];
    const std::size_t j = order[(t + 1) % k];
    if (m(i, j) == 0) m.set(i, j, static_cast<unsigned long>(pick(rng, 1, max_entry)));
  }
  if (k == 1 && m(0, 0) == 0) m.set(0, 0, static_cast<unsigned long>(pick(rng, 1, max_entry)));
  return m;
}

IntMatrix random_irreducible_with_diagonal(std::mt19937_64& rng, std::size_t k, unsigned max_entry) {
  IntMatrix m = random_irreducible(rng, k, max_entry);
  const std::size_t d = pick(rng, 0, k - 1);
  if (m(d, d) == 0) m.set(d, d, static_cast<unsigned long>(pick(rng, 1, max_entry)));
  return m;
}

SubdivisionInstance random_subdivision_instance(std::mt19937_64& rng, std::size_t k, unsigned max_entry) {
  // Base graph on k - 1 vertices, then vertex v = k - 1 replaces one edge a -> b
  // by a -> v -> b (one parallel copy if the multiplicity exceeds one).
  const IntMatrix base = random_irreducible(rng, k - 1, max_entry);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < base.dim(); ++i) {
    for (std::size_t j = 0; j < base.dim(); ++j) {
      if (base(i, j) > 0) edges.emplace_back(i, j);
    }
  }
  const auto [a, b] = edges[pick(rng, 0, edges.size() - 1)];
  TransGraph g(k);
  for (std::size_t i = 0; i < base.dim(); ++i) {
    for (std::size_t j = 0; j < base.dim(); ++j) g.set_multiplicity(i, j, base(i, j));
  }
  g.set_multiplicity(a, b, g.multiplicity(a, b) - 1);
  g.set_multiplicity(a, k - 1, 1);
  g.set_multiplicity(k - 1, b, 1);
  // Shuffle labels so the eligible vertex is not always last.
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  TransGraph shuffled(k);
  for (const auto& [ij, c] : g.edges()) shuffled.set_multiplicity(perm[ij.first], perm[ij.second], c);
  return {std::move(shuffled), perm[k - 1]};
}

SympAction random_symplectic(std::mt19937_64& rng, unsigned long g, unsigned steps) {
  SympAction s(g);
  for (unsigned t = 0; t < steps; ++t) {
    HomologyClass v = HomologyClass::zero(g);
    for (auto& c : v.coords) c = static_cast<long>(pick(rng, 0, 2)) - 1;
    const Integer power = pick(rng, 0, 1) ? 1 : -1;
    s = transvection(v, power) * s;
  }
  return s;
}

TwistSystem random_twist_system(std::mt19937_64& rng, unsigned long max_genus) {
  TwistSystem sys;
  sys.g = pick(rng, 1, max_genus);
  const SympAction basis_change = random_symplectic(rng, sys.g, static_cast<unsigned>(2 * sys.g));
  const std::size_t count = pick(rng, 0, 2 * sys.g);
  for (std::size_t t = 0; t < count; ++t) {
    HomologyClass gamma = HomologyClass::zero(sys.g);
    if (pick(rng, 0, 9) != 0) {
      for (unsigned long i = 0; i < sys.g; ++i) gamma.coords[i] = static_cast<long>(pick(rng, 0, 6)) - 3;
    }
    long power = static_cast<long>(pick(rng, 1, 6));
    if (pick(rng, 0, 1)) power = -power;
    sys.twists.push_back({basis_change.apply(gamma), power});
  }
  return sys;
}

}  // namespace dillab::app
