#include "rankvc/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "rankvc/errors.hpp"

namespace rankvc {

Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Graph Graph::with_vertices(std::size_t n) {
  Graph g;
  for (std::size_t v = 1; v <= n; ++v) g.add_vertex(static_cast<Vertex>(v));
  return g;
}

void Graph::add_vertex(Vertex v) { adj_.try_emplace(v); }

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end()) {
    throw InputError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                     "} has an unknown endpoint");
  }
  if (!iu->second.insert(v).second) {
    throw InputError("duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
  }
  iv->second.insert(u);
  ++edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [u, nbrs] : adj_) {
    for (Vertex v : nbrs) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

const std::set<Vertex>& Graph::neighbors(Vertex v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw InputError("unknown vertex " + std::to_string(v));
  return it->second;
}

Graph Graph::delete_vertex(Vertex v) const {
  const auto& nbrs = neighbors(v);
  Graph out = *this;
  for (Vertex u : nbrs) out.adj_[u].erase(v);
  out.edge_count_ -= nbrs.size();
  out.adj_.erase(v);
  return out;
}

Graph Graph::delete_edge(Edge e) const {
  if (!has_edge(e.first, e.second)) {
    throw InputError("unknown edge {" + std::to_string(e.first) + ", " + std::to_string(e.second) + "}");
  }
  Graph out = *this;
  out.adj_[e.first].erase(e.second);
  out.adj_[e.second].erase(e.first);
  --out.edge_count_;
  return out;
}

namespace {

// Dense re-indexing shared by the matching and cover routines.
struct DenseGraph {
  std::vector<Vertex> ids;
  std::vector<std::vector<std::size_t>> adj;

  explicit DenseGraph(const Graph& g) : ids(g.vertices()), adj(ids.size()) {
    for (const auto& [u, v] : g.edges()) {
      const auto a = index(u), b = index(v);
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::size_t index(Vertex v) const {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  }
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

class Blossom {
 public:
  explicit Blossom(const DenseGraph& g)
      : g_(g), n_(g.ids.size()), match_(n_, kNone), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  std::vector<std::size_t> run() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      const std::size_t end = find_path(v);
      std::size_t w = end;
      while (w != kNone) {
        const std::size_t pw = parent_[w];
        const std::size_t ppw = match_[pw];
        match_[w] = pw;
        match_[pw] = w;
        w = ppw;
      }
    }
    return match_;
  }

 private:
  std::size_t lca(std::size_t a, std::size_t b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  std::size_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t to : g_.adj[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const std::size_t cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return kNone;
  }

  const DenseGraph& g_;
  std::size_t n_;
  std::vector<std::size_t> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

class CoverSearch {
 public:
  CoverSearch(const DenseGraph& g, std::size_t bound) : g_(g), best_size_(bound + 1) {}

  std::optional<std::vector<std::size_t>> run() {
    std::vector<char> alive(g_.ids.size(), 1);
    std::vector<std::size_t> chosen;
    search(alive, chosen);
    if (!found_) return std::nullopt;
    return best_;
  }

 private:
  std::size_t live_degree(const std::vector<char>& alive, std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u : g_.adj[v]) d += alive[u];
    return d;
  }

  // Greedy maximal matching size: a lower bound on the residual cover.
  std::size_t matching_bound(const std::vector<char>& alive) const {
    std::vector<char> used(alive.size(), 0);
    std::size_t size = 0;
    for (std::size_t v = 0; v < alive.size(); ++v) {
      if (!alive[v] || used[v]) continue;
      for (std::size_t u : g_.adj[v]) {
        if (alive[u] && !used[u]) {
          used[u] = used[v] = 1;
          ++size;
          break;
        }
      }
    }
    return size;
  }

  void search(std::vector<char> alive, std::vector<std::size_t> chosen) {
    // Degree-one rule: taking the neighbour of a pendant vertex is safe.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = 0; v < alive.size(); ++v) {
        if (!alive[v]) continue;
        const std::size_t d = live_degree(alive, v);
        if (d == 0) {
          alive[v] = 0;
        } else if (d == 1) {
          for (std::size_t u : g_.adj[v]) {
            if (alive[u]) {
              chosen.push_back(u);
              alive[u] = 0;
              break;
            }
          }
          alive[v] = 0;
          changed = true;
        }
      }
    }
    if (chosen.size() >= best_size_) return;

    std::size_t pick = kNone, pick_degree = 0;
    for (std::size_t v = 0; v < alive.size(); ++v) {
      if (!alive[v]) continue;
      const std::size_t d = live_degree(alive, v);
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    if (pick == kNone) {
      best_ = chosen;
      best_size_ = chosen.size();
      found_ = true;
      return;
    }
    if (chosen.size() + matching_bound(alive) >= best_size_) return;

    {
      auto a = alive;
      auto c = chosen;
      a[pick] = 0;
      c.push_back(pick);
      search(std::move(a), std::move(c));
    }
    {
      auto a = alive;
      auto c = chosen;
      for (std::size_t u : g_.adj[pick]) {
        if (a[u]) {
          a[u] = 0;
          c.push_back(u);
        }
      }
      a[pick] = 0;
      search(std::move(a), std::move(c));
    }
  }

  const DenseGraph& g_;
  std::size_t best_size_;
  bool found_ = false;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<Edge> maximum_matching(const Graph& g) {
  const DenseGraph dense(g);
  const auto match = Blossom(dense).run();
  std::vector<Edge> out;
  for (std::size_t v = 0; v < match.size(); ++v) {
    if (match[v] != kNone && v < match[v]) out.push_back(make_edge(dense.ids[v], dense.ids[match[v]]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  const std::set<Vertex> in(cover.begin(), cover.end());
  for (const auto& [u, v] : g.edges()) {
    if (!in.count(u) && !in.count(v)) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> vertex_cover(const Graph& g, const CoverStrategy& strategy) {
  if (const auto* exact = std::get_if<ExactCover>(&strategy)) {
    const DenseGraph dense(g);
    auto found = CoverSearch(dense, exact->bound).run();
    if (!found) return std::nullopt;
    std::vector<Vertex> out;
    for (std::size_t i : *found) out.push_back(dense.ids[i]);
    std::sort(out.begin(), out.end());
    return out;
  }
  if (std::holds_alternative<MatchingApproxCover>(strategy)) {
    std::set<Vertex> used;
    for (const auto& [u, v] : g.edges()) {
      if (!used.count(u) && !used.count(v)) {
        used.insert(u);
        used.insert(v);
      }
    }
    return std::vector<Vertex>(used.begin(), used.end());
  }
  const auto& provided = std::get<ProvidedCover>(strategy).cover;
  for (Vertex v : provided) {
    if (!g.has_vertex(v)) throw InputError("provided cover names unknown vertex " + std::to_string(v));
  }
  if (!is_vertex_cover(g, provided)) throw InputError("provided set is not a vertex cover");
  std::set<Vertex> sorted(provided.begin(), provided.end());
  return std::vector<Vertex>(sorted.begin(), sorted.end());
}

}  // namespace rankvc
