#pragma once

#include <cstdint>
#include <vector>

#include "rankvc/instance.hpp"

namespace rankvc {

/// Upper triangle of u v^T + v u^T, row by row: slot (i,i) holds 2 u_i v_i
/// and slot (i,j), i < j, holds u_i v_j + u_j v_i. Entries are reduced into
/// `domain`. Throws InputError on a length mismatch.
ScalarVector sym_square(const ScalarVector& u, const ScalarVector& v, const ScalarDomain& domain);

/// The symmetric-square vectors of a pair's edges, one column per edge in
/// lexicographic edge order.
struct EdgeMatroid {
  std::vector<Edge> edges;
  ExactMatrix vectors;
};

EdgeMatroid build_edge_matroid(const GraphMatroidPair& p);

/// Keeps a greedy column basis of the edge matroid (in edge order) and
/// deletes every other edge. The matroid is untouched.
GraphMatroidPair reduce_edges(const GraphMatroidPair& p);

struct IsolatedRemoval {
  GraphMatroidPair pair;
  std::uint64_t budget;
  std::size_t removed;
};

/// Deletes every degree-0 vertex from graph and matroid.
IsolatedRemoval remove_isolated(const GraphMatroidPair& p, std::uint64_t budget);

}  // namespace rankvc
