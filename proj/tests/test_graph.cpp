#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rankvc/dimacs.hpp"
#include "rankvc/errors.hpp"
#include "rankvc/graph.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace rankvc;

namespace {

Graph cycle(std::size_t n) {
  Graph g = Graph::with_vertices(n);
  for (Vertex v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
  return g;
}

Graph complete(std::size_t n) {
  Graph g = Graph::with_vertices(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

bool is_matching(const Graph& g, const std::vector<Edge>& m) {
  std::set<Vertex> used;
  for (const auto& [u, v] : m) {
    if (!g.has_edge(u, v)) return false;
    if (!used.insert(u).second || !used.insert(v).second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("graph construction errors") {
  Graph g = Graph::with_vertices(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(g.add_edge(1, 4), InputError);
  g.add_edge(1, 2);
  CHECK_THROWS_AS(g.add_edge(2, 1), InputError);
  CHECK_THROWS_AS(g.neighbors(9), InputError);
  CHECK_THROWS_AS(g.delete_vertex(9), InputError);
  CHECK_THROWS_AS(g.delete_edge({2, 3}), InputError);
}

TEST_CASE("maximum matching") {
  CHECK(maximum_matching(cycle(5)).size() == 2);
  CHECK(maximum_matching(complete(4)).size() == 2);
  CHECK(maximum_matching(Graph::with_vertices(4)).empty());
  CHECK(maximum_matching(Graph()).empty());

  Rng rng = derive_stream(31, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = gen::graph(rng, gen::between(rng, 0, 10), static_cast<unsigned>(gen::between(rng, 10, 80)));
    const auto m = maximum_matching(g);
    REQUIRE(is_matching(g, m));
    REQUIRE(m.size() == oracle::matching_number(g));
  }
}

TEST_CASE("vertex cover strategies") {
  const auto k3 = vertex_cover(complete(3), ExactCover{100});
  REQUIRE(k3);
  CHECK(k3->size() == 2);

  Graph p3 = Graph::with_vertices(3);
  p3.add_edge(1, 2);
  p3.add_edge(2, 3);
  const auto approx = vertex_cover(p3, MatchingApproxCover{});
  REQUIRE(approx);
  CHECK((*approx == std::vector<Vertex>{1, 2} || *approx == std::vector<Vertex>{2, 3}));

  CHECK_FALSE(vertex_cover(complete(4), ExactCover{2}).has_value());
  CHECK(vertex_cover(complete(4), ExactCover{3}).has_value());

  CHECK_THROWS_AS(vertex_cover(p3, ProvidedCover{{1}}), InputError);
  CHECK_THROWS_AS(vertex_cover(p3, ProvidedCover{{2, 9}}), InputError);
  CHECK(*vertex_cover(p3, ProvidedCover{{2}}) == std::vector<Vertex>{2});
}

TEST_CASE("exact cover is minimum; matching bounds hold") {
  Rng rng = derive_stream(31, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::between(rng, 0, 12);
    const Graph g = gen::graph(rng, n, static_cast<unsigned>(gen::between(rng, 10, 90)));
    const auto exact = vertex_cover(g, ExactCover{n});
    REQUIRE(exact);
    CHECK(is_vertex_cover(g, *exact));
    const std::size_t beta = oracle::cover_number(g);
    CHECK(exact->size() == beta);
    const std::size_t mu = maximum_matching(g).size();
    CHECK(mu <= beta);
    CHECK(beta <= 2 * mu);
    CHECK(2 * mu <= n);
    const auto approx = vertex_cover(g, MatchingApproxCover{});
    CHECK(is_vertex_cover(g, *approx));
    CHECK(approx->size() <= 2 * mu);
  }
}

TEST_CASE("mutation and neighbourhoods") {
  Graph star = Graph::with_vertices(4);
  for (Vertex v = 2; v <= 4; ++v) star.add_edge(1, v);
  const Graph leaves = star.delete_vertex(1);
  CHECK(leaves.vertex_count() == 3);
  CHECK(leaves.edge_count() == 0);

  const Graph c4 = cycle(4);
  for (Vertex v : c4.vertices()) CHECK(c4.degree(v) == 2);

  Rng rng = derive_stream(31, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = gen::graph(rng, 9, 40);
    std::size_t degree_sum = 0;
    for (Vertex v : g.vertices()) {
      degree_sum += g.degree(v);
      for (Vertex u : g.neighbors(v)) CHECK(g.has_edge(u, v));
    }
    CHECK(degree_sum == 2 * g.edge_count());
    for (const auto& [u, v] : g.edges()) {
      CHECK(u < v);
      CHECK(g.neighbors(u).count(v) == 1);
    }
  }
}

TEST_CASE("DIMACS parse and emit") {
  const Graph k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(k3 == complete(3));

  const std::string messy = "c hello\n\np  edge 4 2\r\ne 4 1\nc mid\ne 2 3";
  const std::string canonical = emit_dimacs(parse_dimacs(messy));
  CHECK(canonical == "p edge 4 2\ne 1 4\ne 2 3\n");
  CHECK(emit_dimacs(parse_dimacs(canonical)) == canonical);

  // Renaming to 1..n is the only change.
  Graph sparse;
  for (Vertex v : {3u, 10u, 42u}) sparse.add_vertex(v);
  sparse.add_edge(10, 42);
  CHECK(emit_dimacs(sparse) == "p edge 3 1\ne 2 3\n");
}

TEST_CASE("DIMACS errors carry line numbers") {
  const auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_dimacs(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  CHECK(line_of("p edge 2 1\ne 1 1\n") == 2);
  CHECK(line_of("p edge 2 1\ne 1 3\n") == 2);
  CHECK(line_of("p edge 3 2\ne 1 2\ne 2 1\n") == 3);
  CHECK(line_of("e 1 2\np edge 2 1\n") == 1);
  CHECK(line_of("p edge 2 1\np edge 2 1\n") == 2);
  CHECK(line_of("p edge x 1\n") == 1);
  CHECK(line_of("p edge 3 1\nx 1 2\n") == 2);
  CHECK(line_of("p edge 3 1\ne 1\n") == 2);
  CHECK(line_of("p edge 3 2\ne 1 2\n") == 0);
  CHECK(line_of("") == 0);
  CHECK(line_of("p edge 99999999999 0\n") == 1);
}

TEST_CASE("DIMACS fuzz: malformed input never escapes as anything but ParseError") {
  Rng rng = derive_stream(31, 4);
  const std::string alphabet = "pce 0123456789\n-x\t";
  std::size_t parsed = 0, rejected = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    std::string text = emit_dimacs(gen::graph(rng, gen::between(rng, 0, 6), 50));
    const std::size_t edits = gen::between(rng, 0, 4);
    for (std::size_t i = 0; i < edits && !text.empty(); ++i) {
      const std::size_t pos = uniform_below(rng, text.size());
      switch (uniform_below(rng, 3)) {
        case 0: text[pos] = alphabet[uniform_below(rng, alphabet.size())]; break;
        case 1: text.erase(pos, 1); break;
        default: text.insert(pos, 1, alphabet[uniform_below(rng, alphabet.size())]); break;
      }
    }
    try {
      const Graph g = parse_dimacs(text);
      for (const auto& [u, v] : g.edges()) REQUIRE(u != v);
      ++parsed;
    } catch (const ParseError&) {
      ++rejected;
    }
  }
  CHECK(parsed > 0);
  CHECK(rejected > 0);
}
