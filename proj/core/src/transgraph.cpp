#include "dillab/transgraph.hpp"

#include "dillab/error.hpp"

namespace dillab {

namespace {
constexpr unsigned long kRootBits = 48;
}

TransGraph::TransGraph(std::size_t vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count == 0) throw Error(Errc::InvalidArgument, "graph needs at least one vertex");
}

void TransGraph::check_vertex(std::size_t v) const {
  if (v >= vertex_count_) {
    throw Error(Errc::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not in [0, " + std::to_string(vertex_count_) + ")");
  }
}

TransGraph TransGraph::from_matrix(const IntMatrix& m) {
  TransGraph g(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (sgn(m(i, j)) > 0) g.edges_.emplace(std::make_pair(i, j), m(i, j));
    }
  }
  return g;
}

IntMatrix TransGraph::to_matrix() const {
  IntMatrix m(vertex_count_);
  for (const auto& [ij, count] : edges_) m.set(ij.first, ij.second, count);
  return m;
}

Integer TransGraph::multiplicity(std::size_t i, std::size_t j) const {
  check_vertex(i);
  check_vertex(j);
  const auto it = edges_.find({i, j});
  return it == edges_.end() ? Integer(0) : it->second;
}

void TransGraph::set_multiplicity(std::size_t i, std::size_t j, const Integer& count) {
  check_vertex(i);
  check_vertex(j);
  if (count < 0) throw Error(Errc::InvalidArgument, "negative edge multiplicity");
  if (count == 0) {
    edges_.erase({i, j});
  } else {
    edges_[{i, j}] = count;
  }
}

Integer TransGraph::in_multiplicity(std::size_t v) const {
  check_vertex(v);
  Integer s = 0;
  for (const auto& [ij, count] : edges_) {
    if (ij.second == v) s += count;
  }
  return s;
}

Integer TransGraph::out_multiplicity(std::size_t v) const {
  check_vertex(v);
  Integer s = 0;
  for (auto it = edges_.lower_bound({v, 0}); it != edges_.end() && it->first.first == v; ++it) s += it->second;
  return s;
}

std::vector<Integer> path_counts(const TransGraph& g, std::size_t i, unsigned long d_max) {
  if (i >= g.vertex_count()) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(i) + " out of range");
  }
  // u_d = M^d 1, so P(i, d) = (u_d)_i.
  const std::size_t k = g.vertex_count();
  std::vector<Integer> u(k, Integer(1));
  std::vector<Integer> out{u[i]};
  for (unsigned long d = 1; d <= d_max; ++d) {
    std::vector<Integer> next(k);
    for (const auto& [ij, count] : g.edges()) next[ij.first] += count * u[ij.second];
    u = std::move(next);
    out.push_back(u[i]);
  }
  return out;
}

Integer path_count(const TransGraph& g, std::size_t i, unsigned long d) { return path_counts(g, i, d).back(); }

LimitCheckReport dilatation_limit_check(const TransGraph& g, std::size_t i, unsigned long d_max,
                                        const Rational& tol) {
  if (d_max == 0) throw Error(Errc::InvalidArgument, "d_max must be at least 1");
  if (i >= g.vertex_count()) throw Error(Errc::VertexOutOfRange, "vertex out of range");
  const IntMatrix m = g.to_matrix();
  if (!is_irreducible(m)) throw Error(Errc::NotIrreducible, "dilatation_limit_check requires an irreducible graph");

  LimitCheckReport report;
  report.mu = pf_enclosure(m).interval();
  report.paths = path_count(g, i, d_max);
  report.root = nth_root_enclosure(Rational(report.paths), d_max, kRootBits);
  report.last_gap = report.root.gap(report.mu);
  report.converged = report.root.overlaps(Interval(report.mu.lo - tol, report.mu.hi + tol));
  return report;
}

std::vector<std::size_t> subdividable_vertices(const TransGraph& g) {
  std::vector<Integer> in(g.vertex_count());
  std::vector<Integer> out(g.vertex_count());
  for (const auto& [ij, count] : g.edges()) {
    out[ij.first] += count;
    in[ij.second] += count;
  }
  std::vector<std::size_t> result;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in[v] == 1 && out[v] == 1) result.push_back(v);
  }
  return result;
}

TransGraph subdivide_out_edge(const TransGraph& g, std::size_t i) {
  const Integer in = g.in_multiplicity(i);
  const Integer out = g.out_multiplicity(i);
  if (in != 1 || out != 1) {
    throw Error(Errc::DegreePreconditionViolated, "vertex " + std::to_string(i) + " has in-multiplicity " +
                                                      in.get_str() + " and out-multiplicity " + out.get_str());
  }
  const std::size_t w = g.vertex_count();
  TransGraph g1(w + 1);
  std::size_t target = 0;
  for (const auto& [ij, count] : g.edges()) {
    if (ij.first == i) {
      target = ij.second;
      continue;
    }
    g1.set_multiplicity(ij.first, ij.second, count);
  }
  g1.set_multiplicity(i, w, 1);
  g1.set_multiplicity(w, target, 1);
  return g1;
}

}  // namespace dillab
