#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "rankvc/graph.hpp"
#include "rankvc/matroid.hpp"

namespace rankvc {

/// A graph together with a linear matroid on its vertex set. The binding
/// vertex <-> element is the identity on identifiers: the matroid labels are
/// exactly the graph's vertices.
class GraphMatroidPair {
 public:
  /// Throws InputError unless labels and vertices coincide as sets.
  GraphMatroidPair(Graph graph, LinearMatroid matroid);

  const Graph& graph() const { return graph_; }
  const LinearMatroid& matroid() const { return matroid_; }

  /// Deletes v from both graph and matroid.
  GraphMatroidPair delete_vertex(Vertex v) const;
  GraphMatroidPair delete_edge(Edge e) const;

 private:
  Graph graph_;
  LinearMatroid matroid_;
};

/// Rank Vertex Cover: YES iff some vertex cover has matroid rank <= budget.
struct RvcInstance {
  GraphMatroidPair pair;
  std::uint64_t budget;
};

/// (G, I_n, mu(G) + k) with columns in ascending vertex order.
RvcInstance lift_from_vc_above_mm(const Graph& g, std::uint64_t k,
                                  const ScalarDomain& domain = ScalarDomain::rational());

inline constexpr std::size_t kDefaultOracleLimit = 16;

/// Minimum matroid rank over vertex covers, by enumerating the minimal
/// covers (complements of maximal independent sets). Throws
/// OracleLimitError above `limit` vertices.
std::size_t tau_bruteforce(const GraphMatroidPair& p, std::size_t limit = kDefaultOracleLimit);

bool decide_bruteforce(const RvcInstance& inst, std::size_t limit = kDefaultOracleLimit);

/// True iff for every independent set I with e not in I that does not span
/// the flat of `flat_generators`, I + e is independent. Exhaustive.
bool verify_general_position(const LinearMatroid& x, Element e,
                             std::span<const Element> flat_generators,
                             std::size_t limit = kDefaultOracleLimit);

/// RVC1 text form:
///   RVC1
///   domain rational | domain gfp <q>
///   n <vertices> m <edges> r <rows> l <budget>
///   v <vertex ids, ascending>
///   e <u> <v>                       (one per edge, lexicographic)
///   <label> <entry_1> ... <entry_r> (one per matroid column, column order)
/// Entries are lowest-terms "p/q" or integers; residues in [0, q) for gfp.
std::string serialize(const RvcInstance& inst);
/// Throws ParseError on a bad header, count or bijection mismatch, or an
/// entry outside the declared domain.
RvcInstance deserialize(std::string_view text);

}  // namespace rankvc
