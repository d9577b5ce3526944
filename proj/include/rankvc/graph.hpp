#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace rankvc {

using Vertex = std::uint32_t;
/// Unordered pair stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

Edge make_edge(Vertex u, Vertex v);

/// Simple undirected graph over arbitrary vertex identifiers. add_* build a
/// graph in place; the delete_* operations return new graphs.
class Graph {
 public:
  Graph() = default;
  /// Vertices 1..n, no edges.
  static Graph with_vertices(std::size_t n);

  void add_vertex(Vertex v);
  /// Throws InputError on self-loops, duplicates and unknown endpoints.
  void add_edge(Vertex u, Vertex v);

  bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  /// Ascending.
  std::vector<Vertex> vertices() const;
  /// Lexicographic by (smaller endpoint, larger endpoint).
  std::vector<Edge> edges() const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  const std::set<Vertex>& neighbors(Vertex v) const;

  Graph delete_vertex(Vertex v) const;
  Graph delete_edge(Edge e) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::map<Vertex, std::set<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// algorithm, O(V^3)). Deterministic for a given graph.
std::vector<Edge> maximum_matching(const Graph& g);

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

/// Minimum vertex cover by branch and bound, giving up once the optimum is
/// known to exceed `bound`.
struct ExactCover {
  std::size_t bound;
};
/// Both endpoints of a greedy maximal matching taken in edge order.
struct MatchingApproxCover {};
/// A caller-supplied cover, checked before use.
struct ProvidedCover {
  std::vector<Vertex> cover;
};
using CoverStrategy = std::variant<ExactCover, MatchingApproxCover, ProvidedCover>;

/// Ascending vertex list, or nullopt when ExactCover's bound is exceeded.
/// Throws InputError when a provided set misses an edge.
std::optional<std::vector<Vertex>> vertex_cover(const Graph& g, const CoverStrategy& strategy);

}  // namespace rankvc
