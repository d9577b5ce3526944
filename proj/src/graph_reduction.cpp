#include "rankvc/graph_reduction.hpp"

#include "rankvc/errors.hpp"

namespace rankvc {

ScalarVector sym_square(const ScalarVector& u, const ScalarVector& v, const ScalarDomain& domain) {
  if (u.size() != v.size()) throw InputError("sym_square: vectors of different length");
  const std::size_t r = u.size();
  ScalarVector out;
  out.reserve(r * (r + 1) / 2);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) out.push_back(domain.reduce(u[i] * v[j] + u[j] * v[i]));
  }
  return out;
}

EdgeMatroid build_edge_matroid(const GraphMatroidPair& p) {
  const LinearMatroid& x = p.matroid();
  auto edges = p.graph().edges();
  std::vector<std::pair<std::size_t, std::size_t>> cols;
  cols.reserve(edges.size());
  for (const auto& [u, v] : edges) cols.emplace_back(x.column_of(u), x.column_of(v));
  return EdgeMatroid{std::move(edges), x.representation().symmetric_square(cols)};
}

GraphMatroidPair reduce_edges(const GraphMatroidPair& p) {
  const EdgeMatroid em = build_edge_matroid(p);
  const auto basis = em.vectors.column_basis();
  std::vector<char> keep(em.edges.size(), 0);
  for (std::size_t c : basis) keep[c] = 1;
  Graph g = p.graph();
  for (std::size_t i = 0; i < em.edges.size(); ++i) {
    if (!keep[i]) g = g.delete_edge(em.edges[i]);
  }
  return GraphMatroidPair(std::move(g), p.matroid());
}

IsolatedRemoval remove_isolated(const GraphMatroidPair& p, std::uint64_t budget) {
  GraphMatroidPair out = p;
  std::size_t removed = 0;
  for (Vertex v : p.graph().vertices()) {
    if (p.graph().degree(v) == 0) {
      out = out.delete_vertex(v);
      ++removed;
    }
  }
  return IsolatedRemoval{std::move(out), budget, removed};
}

}  // namespace rankvc
