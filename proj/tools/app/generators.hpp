#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "dillab/intmatrix.hpp"
#include "dillab/lefschetz.hpp"
#include "dillab/transgraph.hpp"

namespace dillab::app {

/// Independent stream for case `index` of suite `tag` under the run seed.
std::mt19937_64 case_rng(std::uint64_t seed, std::string_view tag, std::uint64_t index);

/// Irreducible k x k matrix with entries in [0, max_entry]: a random cyclic
/// permutation guarantees strong connectivity, the rest is sparse noise.
IntMatrix random_irreducible(std::mt19937_64& rng, std::size_t k, unsigned max_entry, double density = 0.3);

/// Same, plus at least one positive diagonal entry.
IntMatrix random_irreducible_with_diagonal(std::mt19937_64& rng, std::size_t k, unsigned max_entry);

struct SubdivisionInstance {
  TransGraph graph{1};
  std::size_t vertex = 0;  // in- and out-multiplicity exactly one
};

/// Irreducible graph on k >= 3 vertices with an eligible vertex. Built by
/// threading a fresh vertex into one edge of a random irreducible graph.
SubdivisionInstance random_subdivision_instance(std::mt19937_64& rng, std::size_t k, unsigned max_entry);

struct TwistSystem {
  unsigned long g = 1;
  std::vector<Twist> twists;
};

/// Integer combinations of the a_i (plus occasional zero classes) moved by a
/// random symplectic change of basis; powers are nonzero in [-6, 6].
TwistSystem random_twist_system(std::mt19937_64& rng, unsigned long max_genus);

/// Random symplectic integer matrix as a product of transvections.
SympAction random_symplectic(std::mt19937_64& rng, unsigned long g, unsigned steps);

}  // namespace dillab::app
