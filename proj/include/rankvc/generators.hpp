#pragma once

#include <cstddef>
#include <string_view>

#include <gmpxx.h>

#include "rankvc/graph.hpp"
#include "rankvc/random.hpp"

namespace rankvc {

/// G(n, p) on vertices 1..n: each pair {i, j}, i < j in lexicographic order,
/// is an edge with probability p.
Graph random_gnp(std::size_t n, const mpq_class& p, Rng& rng);

/// Accepts "a", "a/b" and decimal "a.b" forms, optionally signed. Throws
/// InputError on anything else or a zero denominator.
mpq_class parse_rational(std::string_view text);

}  // namespace rankvc
