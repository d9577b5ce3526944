#include "rankvc/instance.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <vector>

#include "rankvc/errors.hpp"

namespace rankvc {

GraphMatroidPair::GraphMatroidPair(Graph graph, LinearMatroid matroid)
    : graph_(std::move(graph)), matroid_(std::move(matroid)) {
  if (graph_.vertex_count() != matroid_.size()) {
    throw InputError("graph has " + std::to_string(graph_.vertex_count()) + " vertices but matroid has " +
                     std::to_string(matroid_.size()) + " elements");
  }
  for (Element e : matroid_.labels()) {
    if (!graph_.has_vertex(e)) throw InputError("matroid element " + std::to_string(e) + " is not a vertex");
  }
}

GraphMatroidPair GraphMatroidPair::delete_vertex(Vertex v) const {
  return GraphMatroidPair(graph_.delete_vertex(v), matroid_.delete_element(v));
}

GraphMatroidPair GraphMatroidPair::delete_edge(Edge e) const {
  return GraphMatroidPair(graph_.delete_edge(e), matroid_);
}

RvcInstance lift_from_vc_above_mm(const Graph& g, std::uint64_t k, const ScalarDomain& domain) {
  const auto mu = maximum_matching(g).size();
  auto matroid = LinearMatroid::identity(domain, g.vertices());
  return RvcInstance{GraphMatroidPair(g, std::move(matroid)), mu + k};
}

namespace {

using Mask = std::uint64_t;

void check_limit(std::size_t n, std::size_t limit, const char* who) {
  if (n > limit || n > 63) {
    throw OracleLimitError(std::string(who) + ": " + std::to_string(n) + " elements exceeds oracle limit " +
                           std::to_string(std::min<std::size_t>(limit, 63)));
  }
}

// Bron-Kerbosch with pivoting on the complement graph: reports every
// maximal independent set of the original graph.
template <class Report>
void maximal_independent_sets(const std::vector<Mask>& non_adj, Mask r, Mask p, Mask x, Report& report) {
  if (p == 0 && x == 0) {
    report(r);
    return;
  }
  const Mask px = p | x;
  std::size_t pivot = static_cast<std::size_t>(std::countr_zero(px));
  int best = -1;
  for (Mask scan = px; scan; scan &= scan - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(scan));
    const int count = std::popcount(p & non_adj[u]);
    if (count > best) {
      best = count;
      pivot = u;
    }
  }
  for (Mask cand = p & ~non_adj[pivot]; cand; cand &= cand - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(cand));
    const Mask bit = Mask{1} << v;
    maximal_independent_sets(non_adj, r | bit, p & non_adj[v], x & non_adj[v], report);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::size_t tau_bruteforce(const GraphMatroidPair& p, std::size_t limit) {
  const auto verts = p.graph().vertices();
  const std::size_t n = verts.size();
  check_limit(n, limit, "tau_bruteforce");
  if (p.graph().edge_count() == 0) return 0;

  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> non_adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Mask adj = 0;
    for (Vertex u : p.graph().neighbors(verts[i])) {
      adj |= Mask{1} << static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), u) - verts.begin());
    }
    non_adj[i] = all & ~adj & ~(Mask{1} << i);
  }

  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<Element> cover;
  auto report = [&](Mask independent) {
    cover.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(independent >> i & 1)) cover.push_back(verts[i]);
    }
    best = std::min(best, p.matroid().rank_of(cover));
  };
  maximal_independent_sets(non_adj, 0, all, 0, report);
  return best;
}

bool decide_bruteforce(const RvcInstance& inst, std::size_t limit) {
  return tau_bruteforce(inst.pair, limit) <= inst.budget;
}

bool verify_general_position(const LinearMatroid& x, Element e, std::span<const Element> flat_generators,
                             std::size_t limit) {
  check_limit(x.size(), limit, "verify_general_position");
  if (!x.contains(e)) throw InputError("unknown matroid element " + std::to_string(e));
  std::vector<Element> others;
  for (Element l : x.labels()) {
    if (l != e) others.push_back(l);
  }
  const std::vector<Element> gens(flat_generators.begin(), flat_generators.end());

  // Depth-first over independent subsets of `others`, in index order.
  std::vector<Element> current;
  bool ok = true;
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (!ok) return;
    std::vector<Element> with_gens = current;
    with_gens.insert(with_gens.end(), gens.begin(), gens.end());
    const bool spans_flat = x.rank_of(with_gens) == current.size();
    if (!spans_flat) {
      current.push_back(e);
      const bool independent = x.rank_of(current) == current.size();
      current.pop_back();
      if (!independent) {
        ok = false;
        return;
      }
    }
    for (std::size_t i = start; i < others.size(); ++i) {
      current.push_back(others[i]);
      if (x.rank_of(current) == current.size()) self(self, i + 1);
      current.pop_back();
      if (!ok) return;
    }
  };
  visit(visit, 0);
  return ok;
}

}  // namespace rankvc
