#include "rankvc/pipeline.hpp"

#include <sstream>

#include "rankvc/errors.hpp"
#include "rankvc/graph_reduction.hpp"
#include "rankvc/primes.hpp"

namespace rankvc {

RvcInstance yes_constant() {
  return RvcInstance{GraphMatroidPair(Graph(), LinearMatroid::identity(ScalarDomain::rational(), {})), 0};
}

RvcInstance no_constant() {
  Graph g = Graph::with_vertices(2);
  g.add_edge(1, 2);
  return RvcInstance{GraphMatroidPair(std::move(g), LinearMatroid::identity(ScalarDomain::rational(), {1, 2})), 0};
}

namespace {

bool k_at_most_log2(std::uint64_t k, std::size_t n) {
  if (n == 0) return false;
  if (k >= 63) return false;
  return (std::uint64_t{1} << k) <= n;
}

const char* mode_name(ArithmeticMode m) { return m == ArithmeticMode::Fast ? "fast" : "faithful"; }

const char* strategy_name(CoverChoice c) {
  switch (c) {
    case CoverChoice::Exact: return "exact";
    case CoverChoice::MatchingApprox: return "matching";
    case CoverChoice::Provided: return "provided";
  }
  return "?";
}

void fill_output(CompressionReport& rep, const RvcInstance& out) {
  rep.n_out = out.pair.graph().vertex_count();
  rep.m_out = out.pair.graph().edge_count();
  rep.r_out = out.pair.matroid().rank();
  rep.rows_out = out.pair.matroid().representation().rows();
  rep.budget_out = out.budget;
  rep.max_entry_bits = out.pair.matroid().representation().max_entry_bits();
}

}  // namespace

CompressionResult compress(const Graph& g, std::uint64_t k, const PipelineConfig& cfg) {
  if (cfg.epsilon <= 0 || cfg.epsilon >= 1) throw InputError("epsilon must lie strictly between 0 and 1");

  CompressionReport rep;
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.mu = maximum_matching(g).size();
  rep.k = k;
  rep.budget = rep.mu + k;
  rep.mode = mode_name(cfg.mode);
  rep.strategy = strategy_name(cfg.vc);
  rep.epsilon = cfg.epsilon;
  rep.seed = cfg.seed;

  auto finish = [&](RvcInstance out) {
    fill_output(rep, out);
    if (cfg.oracle_verify && rep.n <= cfg.oracle_limit && rep.n_out <= cfg.oracle_limit) {
      rep.verified = verify_equivalence(g, k, out, cfg.oracle_limit);
    }
    return CompressionResult{std::move(out), std::move(rep)};
  };

  if (cfg.vc == CoverChoice::Provided) {
    // Reject a bad cover up front, shortcut or not.
    vertex_cover(g, ProvidedCover{cfg.provided_cover});
  }

  if (cfg.shortcut && (g.edge_count() == 0 || k_at_most_log2(k, rep.n))) {
    rep.shortcut = true;
    const bool yes = vertex_cover(g, ExactCover{rep.budget}).has_value();
    rep.shortcut_answer = yes;
    return finish(yes ? yes_constant() : no_constant());
  }

  ScalarDomain domain = ScalarDomain::rational();
  if (cfg.mode == ArithmeticMode::Fast) {
    Rng rng = derive_stream(cfg.seed, stage::kFieldPrime);
    const mpz_class lo = mpz_class(1) << 61;
    const mpz_class hi = (mpz_class(1) << 62) - 1;
    rep.field_prime = random_prime(lo, hi, rng);
    domain = ScalarDomain::prime_field(rep.field_prime);
  }
  const RvcInstance lifted = lift_from_vc_above_mm(g, k, domain);

  std::optional<std::vector<Vertex>> cover;
  switch (cfg.vc) {
    case CoverChoice::Exact: cover = vertex_cover(g, ExactCover{rep.n}); break;
    case CoverChoice::MatchingApprox: cover = vertex_cover(g, MatchingApproxCover{}); break;
    case CoverChoice::Provided: cover = vertex_cover(g, ProvidedCover{cfg.provided_cover}); break;
  }
  if (!cover) {
    rep.failed = true;
    rep.failure = "vertex cover strategy gave no cover";
    rep.fallback = Fallback::YesConstant;
    return finish(yes_constant());
  }
  rep.cover_size = cover->size();

  // None of the strategies above is randomized, so the rule steps get all of
  // epsilon.
  RandomnessBudget rb = RandomnessBudget::split(cfg.epsilon, rep.n, false, cfg.mode);
  BatchResult batch = batch_reduce(lifted, *cover, rb, cfg.seed);
  rep.batch = std::move(batch.report);
  if (rep.batch.failed) {
    rep.failed = true;
    rep.failure = rep.batch.failure;
    rep.fallback = Fallback::YesConstant;
    return finish(yes_constant());
  }
  if (rep.batch.budget_exhausted) {
    rep.fallback = Fallback::NoConstant;
    return finish(no_constant());
  }

  const GraphMatroidPair edges_reduced = reduce_edges(batch.instance.pair);
  rep.edges_removed = batch.instance.pair.graph().edge_count() - edges_reduced.graph().edge_count();
  auto isolated = remove_isolated(edges_reduced, batch.instance.budget);
  rep.isolated_removed = isolated.removed;
  GraphMatroidPair final_pair(isolated.pair.graph(), isolated.pair.matroid().compacted());
  return finish(RvcInstance{std::move(final_pair), isolated.budget});
}

bool verify_equivalence(const Graph& g, std::uint64_t k, const RvcInstance& out, std::size_t limit) {
  const RvcInstance lifted = lift_from_vc_above_mm(g, k);
  const bool input_yes = tau_bruteforce(lifted.pair, limit) <= lifted.budget;
  return input_yes == decide_bruteforce(out, limit);
}

std::string CompressionReport::to_text() const {
  std::ostringstream o;
  auto flag = [](bool b) { return b ? "1" : "0"; };
  o << "n=" << n << '\n'
    << "m=" << m << '\n'
    << "mu=" << mu << '\n'
    << "k=" << k << '\n'
    << "budget=" << budget << '\n'
    << "mode=" << mode << '\n'
    << "strategy=" << strategy << '\n'
    << "epsilon=" << epsilon.get_str() << '\n'
    << "seed=" << seed << '\n'
    << "field_prime=" << field_prime.get_str() << '\n'
    << "shortcut=" << flag(shortcut) << '\n';
  if (shortcut_answer) o << "shortcut_answer=" << (*shortcut_answer ? "YES" : "NO") << '\n';
  o << "cover_size=" << cover_size << '\n'
    << "n_batch=" << batch.n_batch << '\n'
    << "s_size=" << batch.s_size << '\n'
    << "applied=" << batch.applied << '\n'
    << "degenerate=" << batch.degenerate << '\n'
    << "loops_removed=" << batch.loops_removed << '\n'
    << "batch_completed=" << flag(batch.completed) << '\n'
    << "budget_exhausted=" << flag(batch.budget_exhausted) << '\n'
    << "rank_after_batch=" << batch.rank_after << '\n';
  for (std::size_t i = 0; i < batch.steps.size(); ++i) {
    const StepTrace& s = batch.steps[i];
    const std::string p = "step." + std::to_string(i) + ".";
    o << p << "vertex=" << s.vertex << '\n';
    o << p << "coefficients=";
    for (std::size_t j = 0; j < s.coefficients.size(); ++j) o << (j ? "," : "") << s.coefficients[j].get_str();
    o << '\n'
      << p << "redraws=" << s.redraws << '\n'
      << p << "rank_before=" << s.rank_before << '\n'
      << p << "rank_after=" << s.rank_after << '\n'
      << p << "budget_before=" << s.budget_before << '\n'
      << p << "budget_after=" << s.budget_after << '\n'
      << p << "epsilon=" << s.epsilon_charged.get_str() << '\n'
      << p << "prime=" << s.prime.get_str() << '\n'
      << p << "prime_bound=" << s.prime_bound.get_str() << '\n'
      << p << "max_entry=" << s.max_entry.get_str() << '\n'
      << p << "prime_retries=" << s.bit_control_retries << '\n';
  }
  o << "edges_removed=" << edges_removed << '\n'
    << "isolated_removed=" << isolated_removed << '\n'
    << "n_out=" << n_out << '\n'
    << "m_out=" << m_out << '\n'
    << "r_out=" << r_out << '\n'
    << "rows_out=" << rows_out << '\n'
    << "budget_out=" << budget_out << '\n'
    << "max_entry_bits=" << max_entry_bits << '\n'
    << "fallback="
    << (fallback == Fallback::None ? "none" : fallback == Fallback::YesConstant ? "yes_constant" : "no_constant")
    << '\n'
    << "failed=" << flag(failed) << '\n';
  if (failed) o << "failure=" << failure << '\n';
  if (verified) o << "verified=" << flag(*verified) << '\n';
  return o.str();
}

}  // namespace rankvc
