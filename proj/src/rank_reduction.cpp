#include "rankvc/rank_reduction.hpp"

#include <algorithm>
#include <set>

#include "rankvc/errors.hpp"
#include "rankvc/primes.hpp"

namespace rankvc {

namespace {

constexpr std::size_t kMaxZeroRedraws = 64;
constexpr std::size_t kMaxPrimeCollisions = 32;

// Smallest t with 2^t >= x, for x > 0.
std::size_t ceil_log2(const mpq_class& x) {
  std::size_t t = 0;
  mpz_class power = 1;
  while (mpq_class(power) < x) {
    power <<= 1;
    ++t;
  }
  return t;
}

}  // namespace

RandomnessBudget RandomnessBudget::split(const mpq_class& epsilon, std::size_t n, bool randomized_cover,
                                         ArithmeticMode mode) {
  if (epsilon <= 0 || epsilon >= 1) throw InputError("epsilon must lie strictly between 0 and 1");
  RandomnessBudget rb;
  rb.epsilon = epsilon;
  rb.cover_share = randomized_cover ? mpq_class(epsilon / 2) : mpq_class(0);
  rb.step_total = epsilon - rb.cover_share;
  rb.per_step = rb.step_total / mpq_class(std::max<std::size_t>(n, 1));
  rb.mode = mode;
  return rb;
}

void RandomnessBudget::charge_step() {
  if (spent + per_step > step_total) throw PreconditionError("randomness budget overdrawn");
  spent += per_step;
}

CoefficientDomain CoefficientDomain::whole_field(const mpz_class& q) { return CoefficientDomain(true, q); }

CoefficientDomain CoefficientDomain::integers_up_to(const mpz_class& p) {
  if (p < 1) throw InputError("coefficient bound must be positive");
  return CoefficientDomain(false, p);
}

CoefficientDomain CoefficientDomain::for_matroid(const LinearMatroid& x, const mpq_class& eps) {
  if (x.domain().is_rational()) return integers_up_to(coefficient_bound(x.size(), eps));
  return whole_field(x.domain().modulus());
}

mpq_class CoefficientDomain::draw(Rng& rng) const {
  if (field_) return mpq_class(uniform_below(rng, bound_));
  return mpq_class(uniform_between(rng, mpz_class(1), bound_));
}

mpz_class coefficient_bound(std::size_t n, const mpq_class& eps) {
  if (eps <= 0) throw InputError("epsilon must be positive");
  mpz_class top = mpz_class(1) << n;
  top *= 2 * n;
  top *= eps.get_den();
  mpz_class p;
  mpz_fdiv_q(p.get_mpz_t(), top.get_mpz_t(), eps.get_num().get_mpz_t());
  return p + 1;
}

mpz_class prime_bound(std::size_t n, std::size_t r, const mpq_class& eps) {
  if (eps <= 0) throw InputError("epsilon must be positive");
  const std::size_t nn = std::max<std::size_t>(n, 2);
  const std::size_t log_inv_eps = ceil_log2(mpq_class(1) / eps);
  const std::size_t c = std::max<std::size_t>(2, log_inv_eps);
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), nn, 2 * r + 3);
  const mpz_class inner = mpz_class(nn) * ceil_log2(mpq_class(nn)) + log_inv_eps;
  mpz_class top = mpz_class(c) * power * inner * inner * eps.get_den();
  mpz_class bound;
  mpz_cdiv_q(bound.get_mpz_t(), top.get_mpz_t(), eps.get_num().get_mpz_t());
  return bound;
}

ScalarVector combine_columns(const LinearMatroid& x, std::span<const Element> generators,
                             const ScalarVector& coeffs) {
  if (generators.size() != coeffs.size()) throw InputError("one coefficient per generator required");
  std::vector<std::size_t> cols;
  for (Element e : generators) cols.push_back(x.column_of(e));
  return x.representation().linear_combination(cols, coeffs);
}

GeneralPositionDraw general_position_vector(const LinearMatroid& x, std::span<const Element> flat_generators,
                                            const CoefficientDomain& coeffs, Rng& rng) {
  bool any_nonloop = false;
  for (Element e : flat_generators) any_nonloop = any_nonloop || !x.is_loop(e);
  if (!any_nonloop) throw DegenerateFlatError("flat generators are empty or all loops");

  GeneralPositionDraw out;
  for (std::size_t attempt = 0; attempt < kMaxZeroRedraws; ++attempt) {
    out.coefficients.clear();
    for (std::size_t i = 0; i < flat_generators.size(); ++i) out.coefficients.push_back(coeffs.draw(rng));
    out.vector = combine_columns(x, flat_generators, out.coefficients);
    if (std::any_of(out.vector.begin(), out.vector.end(), [](const mpq_class& a) { return a != 0; })) {
      return out;
    }
    ++out.redraws;
  }
  throw RetryableError("every general-position draw was the zero vector");
}

VertexRuleResult apply_vertex_rule(const GraphMatroidPair& p, Vertex v, std::uint64_t budget, Rng& rng,
                                   const CoefficientDomain& coeffs) {
  const Graph& g = p.graph();
  const LinearMatroid& x = p.matroid();
  if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (!x.is_coloop(v)) throw PreconditionError("vertex " + std::to_string(v) + " is not a co-loop");
  const std::vector<Element> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
  if (std::all_of(nbrs.begin(), nbrs.end(), [&](Element u) { return x.is_loop(u); })) {
    throw DegenerateFlatError("neighbourhood of vertex " + std::to_string(v) + " spans no non-loop");
  }
  if (budget == 0) throw PreconditionError("budget already 0");

  StepTrace trace;
  trace.vertex = v;
  trace.rank_before = x.rank();
  trace.budget_before = budget;

  auto draw = general_position_vector(x, nbrs, coeffs, rng);
  trace.coefficients = std::move(draw.coefficients);
  trace.redraws = draw.redraws;

  LinearMatroid contracted = x.move_column(v, draw.vector).contract(v);
  trace.rank_after = contracted.rank();
  if (trace.rank_after + 2 != trace.rank_before) {
    throw Error("rank did not drop by two at vertex " + std::to_string(v));
  }
  trace.budget_after = budget - 1;
  return VertexRuleResult{GraphMatroidPair(g.delete_vertex(v), std::move(contracted)), budget - 1,
                          std::move(trace)};
}

VertexRuleResult apply_vertex_rule(const GraphMatroidPair& p, Vertex v, std::uint64_t budget, Rng& rng,
                                   RandomnessBudget& rb) {
  const auto coeffs = CoefficientDomain::for_matroid(p.matroid(), rb.step_total);
  auto result = apply_vertex_rule(p, v, budget, rng, coeffs);
  rb.charge_step();
  result.trace.epsilon_charged = rb.per_step;
  return result;
}

BitControlResult bit_control(const ExactMatrix& m, const mpq_class& eps, Rng& rng) {
  if (!m.domain().is_rational()) throw InputError("bit control needs a rational matrix");
  BitControlResult out{m, 0, prime_bound(m.cols(), m.rank(), eps), 0};
  for (std::size_t attempt = 0; attempt < kMaxPrimeCollisions; ++attempt) {
    out.prime = random_prime(3, out.bound, rng);
    try {
      out.image = m.mod_reduce(out.prime);
      return out;
    } catch (const RetryableError&) {
      ++out.retries;
    }
  }
  throw Error("bit control: " + std::to_string(kMaxPrimeCollisions) + " primes in a row divided a denominator");
}

LoopElimResult loop_vertex_elim(const GraphMatroidPair& p, std::uint64_t budget, std::span<const Vertex> loops) {
  std::vector<Vertex> targets(loops.begin(), loops.end());
  if (targets.empty()) {
    for (Element e : p.matroid().labels()) {
      if (p.matroid().is_loop(e)) targets.push_back(e);
    }
  }
  GraphMatroidPair out = p;
  for (Vertex v : targets) {
    if (!out.matroid().is_loop(v)) throw PreconditionError("vertex " + std::to_string(v) + " is not a loop");
    out = out.delete_vertex(v);
  }
  return LoopElimResult{std::move(out), budget, targets.size()};
}

BatchResult batch_reduce(const RvcInstance& inst, std::span<const Vertex> cover, RandomnessBudget& rb,
                         std::uint64_t seed) {
  const Graph& g0 = inst.pair.graph();
  for (Vertex v : cover) {
    if (!g0.has_vertex(v)) throw InputError("cover names unknown vertex " + std::to_string(v));
  }
  if (!is_vertex_cover(g0, cover)) throw InputError("batch_reduce: not a vertex cover");
  const bool faithful = rb.mode == ArithmeticMode::Faithful;
  if (faithful && !inst.pair.matroid().domain().is_rational()) {
    throw InputError("faithful mode needs a rational matroid");
  }

  BatchReport rep;
  GraphMatroidPair pair = inst.pair;
  std::uint64_t budget = inst.budget;
  try {
    for (Vertex v : g0.vertices()) {
      if (g0.degree(v) == 0) {
        pair = pair.delete_vertex(v);
        ++rep.isolated_removed;
      }
    }
    rep.n_batch = pair.graph().vertex_count();
    const std::set<Vertex> in_cover(cover.begin(), cover.end());
    std::vector<Vertex> s;
    for (Vertex v : pair.graph().vertices()) {
      if (!in_cover.count(v)) s.push_back(v);
    }
    rep.s_size = s.size();

    mpz_class last_prime = 0;
    std::uint64_t step = 0;
    for (Vertex v : s) {
      const auto& nbrs = pair.graph().neighbors(v);
      const std::vector<Vertex> nv(nbrs.begin(), nbrs.end());
      if (!nv.empty() && std::all_of(nv.begin(), nv.end(), [&](Vertex u) { return pair.matroid().is_loop(u); })) {
        auto elim = loop_vertex_elim(pair, budget, nv);
        pair = std::move(elim.pair);
        rep.loops_removed += elim.removed;
      }
      if (pair.graph().degree(v) == 0) {
        pair = pair.delete_vertex(v);
        ++rep.degenerate;
        continue;
      }
      if (budget == 0) {
        rep.budget_exhausted = true;
        break;
      }
      Rng rng = derive_stream(seed, stage::kRuleCoefficients, step);
      auto res = apply_vertex_rule(pair, v, budget, rng, rb);
      pair = std::move(res.pair);
      budget = res.budget;
      if (faithful) {
        Rng prime_rng = derive_stream(seed, stage::kBitControl, step);
        auto bc = bit_control(pair.matroid().representation(), rb.step_total, prime_rng);
        res.trace.prime = bc.prime;
        res.trace.prime_bound = bc.bound;
        res.trace.bit_control_retries = bc.retries;
        res.trace.max_entry = bc.image.max_entry_magnitude();
        last_prime = bc.prime;
      }
      rep.steps.push_back(std::move(res.trace));
      ++rep.applied;
      ++step;
    }

    // The rational working matrix only ever leaves the run through its last
    // modular image; columns deleted since then do not change the prime.
    if (faithful && last_prime != 0) {
      const auto& m = pair.matroid();
      pair = GraphMatroidPair(pair.graph(), m.with_representation(m.representation().mod_reduce(last_prime)).compacted());
    }
    rep.completed = !rep.budget_exhausted && rep.degenerate == 0;
    rep.rank_after = pair.matroid().rank();
    return BatchResult{RvcInstance{std::move(pair), budget}, std::move(rep)};
  } catch (const Error& e) {
    rep.failed = true;
    rep.failure = e.what();
    return BatchResult{inst, std::move(rep)};
  }
}

}  // namespace rankvc
