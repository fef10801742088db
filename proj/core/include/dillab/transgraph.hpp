#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dillab/interval.hpp"
#include "dillab/intmatrix.hpp"

namespace dillab {

/// Directed multigraph induced by a transition matrix: m(i, j) parallel
/// edges from i to j. Stored as a multiplicity map (zero multiplicities are
/// never stored). Vertices are zero-based.
class TransGraph {
 public:
  explicit TransGraph(std::size_t vertex_count);

  static TransGraph from_matrix(const IntMatrix& m);
  IntMatrix to_matrix() const;

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  Integer multiplicity(std::size_t i, std::size_t j) const;
  void set_multiplicity(std::size_t i, std::size_t j, const Integer& count);

  Integer in_multiplicity(std::size_t v) const;
  Integer out_multiplicity(std::size_t v) const;
  const std::map<std::pair<std::size_t, std::size_t>, Integer>& edges() const noexcept { return edges_; }

  bool operator==(const TransGraph&) const = default;

 private:
  void check_vertex(std::size_t v) const;

  std::size_t vertex_count_;
  std::map<std::pair<std::size_t, std::size_t>, Integer> edges_;
};

/// Number of length-d paths starting at vertex i (row sum of M^d); 1 for d = 0.
Integer path_count(const TransGraph& g, std::size_t i, unsigned long d);

/// path_count(g, i, d) for d = 0..d_max.
std::vector<Integer> path_counts(const TransGraph& g, std::size_t i, unsigned long d_max);

struct LimitCheckReport {
  bool converged = false;
  /// Distance between the certified d-th root interval and [lo, hi] of mu.
  Rational last_gap;
  Interval root;  // encloses P(i, d_max)^(1/d_max)
  Interval mu;
  Integer paths;  // P(i, d_max)
};

/// Compares P(i, d)^(1/d) at d = d_max with the certified enclosure of mu.
/// converged iff the root interval overlaps [lo - tol, hi + tol].
/// Throws NotIrreducible, VertexOutOfRange.
LimitCheckReport dilatation_limit_check(const TransGraph& g, std::size_t i, unsigned long d_max,
                                        const Rational& tol);

/// Replaces the unique out-edge i -> j of a vertex with in- and
/// out-multiplicity 1 by i -> w -> j, where w = vertex_count() is new.
/// Throws DegreePreconditionViolated otherwise.
TransGraph subdivide_out_edge(const TransGraph& g, std::size_t i);

/// Vertices eligible for subdivide_out_edge.
std::vector<std::size_t> subdividable_vertices(const TransGraph& g);

}  // namespace dillab
