#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rankvc/instance.hpp"
#include "rankvc/rank_reduction.hpp"

namespace rankvc {

enum class CoverChoice { Exact, MatchingApprox, Provided };

struct PipelineConfig {
  mpq_class epsilon{1, 20};
  ArithmeticMode mode = ArithmeticMode::Fast;
  CoverChoice vc = CoverChoice::Exact;
  std::vector<Vertex> provided_cover;  // used with CoverChoice::Provided
  std::uint64_t seed = 0;
  bool oracle_verify = false;
  // Decide directly when k <= log2 n. Turning it off forces the full
  // compression on small parameters.
  bool shortcut = true;
  std::size_t oracle_limit = kDefaultOracleLimit;
};

enum class Fallback { None, YesConstant, NoConstant };

struct CompressionReport {
  // input
  std::size_t n = 0, m = 0, mu = 0;
  std::uint64_t k = 0, budget = 0;
  std::string mode;
  std::string strategy;
  mpq_class epsilon;
  std::uint64_t seed = 0;
  mpz_class field_prime = 0;  // Fast mode working field

  bool shortcut = false;
  std::optional<bool> shortcut_answer;

  std::size_t cover_size = 0;
  BatchReport batch;

  std::size_t edges_removed = 0;
  std::size_t isolated_removed = 0;

  // output
  std::size_t n_out = 0, m_out = 0, r_out = 0, rows_out = 0;
  std::uint64_t budget_out = 0;
  std::size_t max_entry_bits = 0;

  Fallback fallback = Fallback::None;
  bool failed = false;
  std::string failure;

  std::optional<bool> verified;

  /// key=value lines, one per field, steps as step.<i>.<field>.
  std::string to_text() const;
};

struct CompressionResult {
  RvcInstance instance;
  CompressionReport report;
};

/// YES constant: the empty instance. NO constant: a single edge over two
/// independent elements with budget 0.
RvcInstance yes_constant();
RvcInstance no_constant();

/// lift -> shortcut -> cover -> batch_reduce -> reduce_edges ->
/// remove_isolated. Failures produce the YES constant with `failed` set.
/// Throws InputError for epsilon outside (0, 1) or a bad provided cover.
CompressionResult compress(const Graph& g, std::uint64_t k, const PipelineConfig& cfg);

/// [beta(g) <= mu(g) + k] == decide_bruteforce(out). Throws
/// OracleLimitError when either side is above `limit`.
bool verify_equivalence(const Graph& g, std::uint64_t k, const RvcInstance& out,
                        std::size_t limit = kDefaultOracleLimit);

}  // namespace rankvc
