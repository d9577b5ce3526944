#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "rankvc/dimacs.hpp"
#include "rankvc/errors.hpp"
#include "rankvc/pipeline.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace rankvc;

namespace {

Graph complete(std::size_t n) {
  Graph g = Graph::with_vertices(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(RANKVC_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

PipelineConfig full(std::uint64_t seed, ArithmeticMode mode = ArithmeticMode::Fast) {
  PipelineConfig cfg;
  cfg.seed = seed;
  cfg.mode = mode;
  cfg.shortcut = false;
  return cfg;
}

}  // namespace

TEST_CASE("K3 with k = 1") {
  const auto r = compress(complete(3), 1, full(5));
  CHECK_FALSE(r.report.failed);
  CHECK_FALSE(r.report.shortcut);
  CHECK(r.report.r_out <= 2);
  CHECK(decide_bruteforce(r.instance));
  CHECK(verify_equivalence(complete(3), 1, r.instance));

  const auto s = compress(complete(3), 1, PipelineConfig{});
  CHECK(s.report.shortcut);
  CHECK(s.report.shortcut_answer == true);
}

TEST_CASE("shortcut and constants") {
  const auto k4 = compress(complete(4), 0, PipelineConfig{});
  CHECK(k4.report.shortcut);
  CHECK(k4.report.shortcut_answer == false);
  CHECK(serialize(k4.instance) == serialize(no_constant()));
  CHECK_FALSE(decide_bruteforce(no_constant()));
  CHECK(decide_bruteforce(yes_constant()));

  for (std::uint64_t k : {0, 1, 7}) {
    const auto e = compress(Graph::with_vertices(5), k, PipelineConfig{});
    CHECK(serialize(e.instance) == serialize(yes_constant()));
    CHECK_FALSE(e.report.failed);
    // Without the shortcut the batch empties the instance just the same.
    const auto f = compress(Graph::with_vertices(5), k, full(1));
    CHECK(decide_bruteforce(f.instance));
    CHECK(f.report.n_out == 0);
  }
}

TEST_CASE("configuration errors") {
  PipelineConfig cfg;
  cfg.epsilon = 0;
  CHECK_THROWS_AS(compress(complete(3), 1, cfg), InputError);
  cfg.epsilon = 1;
  CHECK_THROWS_AS(compress(complete(3), 1, cfg), InputError);
  cfg = PipelineConfig{};
  cfg.vc = CoverChoice::Provided;
  cfg.provided_cover = {1};
  CHECK_THROWS_AS(compress(complete(3), 1, cfg), InputError);
  cfg.provided_cover = {1, 2};
  CHECK_NOTHROW(compress(complete(3), 1, cfg));
}

TEST_CASE("verify_equivalence detects a corrupted budget") {
  // K3 with k = 0 is a NO instance: beta = 2 > mu = 1.
  auto r = compress(complete(3), 0, full(9));
  REQUIRE(verify_equivalence(complete(3), 0, r.instance));
  CHECK_FALSE(decide_bruteforce(r.instance));
  r.instance.budget = r.instance.pair.matroid().rank();
  CHECK_FALSE(verify_equivalence(complete(3), 0, r.instance));

  const auto big = Graph::with_vertices(20);
  CHECK_THROWS_AS(verify_equivalence(big, 0, yes_constant()), OracleLimitError);
}

TEST_CASE("determinism") {
  Rng rng = derive_stream(71, 1);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = gen::graph(rng, gen::between(rng, 4, 9), 50);
    const auto mode = trial % 2 ? ArithmeticMode::Faithful : ArithmeticMode::Fast;
    const auto a = compress(g, 2, full(100 + trial, mode));
    const auto b = compress(g, 2, full(100 + trial, mode));
    CHECK(serialize(a.instance) == serialize(b.instance));
    CHECK(a.report.to_text() == b.report.to_text());
  }
  const auto a = compress(complete(5), 3, full(1));
  const auto b = compress(complete(5), 3, full(2));
  CHECK(a.report.field_prime != b.report.field_prime);
}

TEST_CASE("budget and size accounting") {
  Rng rng = derive_stream(71, 2);
  int completed = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = gen::between(rng, 2, 10);
    const Graph g = gen::graph(rng, n, static_cast<unsigned>(gen::between(rng, 20, 70)));
    const std::uint64_t k = uniform_below(rng, 4);
    PipelineConfig cfg = full(trial, trial % 5 == 0 ? ArithmeticMode::Faithful : ArithmeticMode::Fast);
    cfg.vc = trial % 3 == 0 ? CoverChoice::MatchingApprox : CoverChoice::Exact;
    const auto r = compress(g, k, cfg);
    const auto& rep = r.report;
    REQUIRE_FALSE(rep.failed);
    CHECK(rep.mu == oracle::matching_number(g));
    if (rep.batch.budget_exhausted) {
      CHECK(serialize(r.instance) == serialize(no_constant()));
      continue;
    }
    const auto& b = rep.batch;
    CHECK(b.rank_after + b.n_batch == 2 * rep.cover_size + b.degenerate);
    CHECK(rep.budget_out + b.s_size == rep.mu + k + b.degenerate);
    if (b.completed) {
      ++completed;
      CHECK(b.rank_after + b.n_batch == 2 * rep.cover_size);
      CHECK(rep.budget_out + b.s_size == rep.mu + k);
    }
    const std::size_t r_batch = b.rank_after;
    CHECK(rep.r_out <= r_batch);
    CHECK(rep.rows_out == rep.r_out);
    CHECK(rep.m_out <= r_batch * (r_batch + 1) / 2);
    CHECK(rep.n_out <= r_batch * (r_batch + 1));
    CHECK(verify_equivalence(g, k, r.instance));
  }
  CHECK(completed > 60);
}

TEST_CASE("golden runs") {
  const Graph g = parse_dimacs(slurp("g7.dimacs"));
  PipelineConfig cfg;
  cfg.seed = 11;
  const auto fast = compress(g, 3, cfg);
  CHECK(serialize(fast.instance) == slurp("g7_k3_fast.rvc1"));
  CHECK(fast.report.to_text() == slurp("g7_k3_fast.report"));

  cfg.mode = ArithmeticMode::Faithful;
  const auto faithful = compress(g, 3, cfg);
  CHECK(serialize(faithful.instance) == slurp("g7_k3_faithful.rvc1"));
  CHECK(faithful.report.to_text() == slurp("g7_k3_faithful.report"));

  CHECK(verify_equivalence(g, 3, fast.instance));
  CHECK(verify_equivalence(g, 3, faithful.instance));
}

TEST_CASE("oracle verification in the report") {
  PipelineConfig cfg = full(3);
  cfg.oracle_verify = true;
  const auto r = compress(complete(5), 2, cfg);
  REQUIRE(r.report.verified.has_value());
  CHECK(*r.report.verified);
  CHECK(r.report.to_text().find("verified=1\n") != std::string::npos);

  cfg.oracle_limit = 4;
  CHECK_FALSE(compress(complete(5), 2, cfg).report.verified.has_value());
}
