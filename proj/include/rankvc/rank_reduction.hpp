#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rankvc/instance.hpp"
#include "rankvc/random.hpp"

namespace rankvc {

enum class ArithmeticMode { Fast, Faithful };

// Substream tags for derive_stream. The index argument is the step number
// where one exists.
namespace stage {
inline constexpr std::uint64_t kFieldPrime = 1;
inline constexpr std::uint64_t kRuleCoefficients = 2;
inline constexpr std::uint64_t kBitControl = 3;
}  // namespace stage

/// Failure-probability bookkeeping for one compression run.
struct RandomnessBudget {
  mpq_class epsilon;      // overall failure budget
  mpq_class cover_share;  // held back for a randomized cover strategy
  mpq_class step_total;   // everything the rule applications may use
  mpq_class per_step;     // step_total / n
  mpq_class spent = 0;
  ArithmeticMode mode = ArithmeticMode::Fast;

  /// Half of epsilon goes to the cover strategy and half to the rule steps.
  /// A deterministic strategy returns its half to the steps.
  static RandomnessBudget split(const mpq_class& epsilon, std::size_t n, bool randomized_cover,
                                ArithmeticMode mode);
  /// Records one rule application. Throws PreconditionError if this would
  /// overdraw the step allowance.
  void charge_step();
};

/// Where general-position coefficients come from: all of GF(q), or the
/// integers 1..p.
class CoefficientDomain {
 public:
  static CoefficientDomain whole_field(const mpz_class& q);
  static CoefficientDomain integers_up_to(const mpz_class& p);
  /// Whole field for a prime-field matroid; 1..coefficient_bound(n, eps)
  /// for a rational one, n being the number of matroid elements.
  static CoefficientDomain for_matroid(const LinearMatroid& x, const mpq_class& eps);

  bool is_field() const { return field_; }
  const mpz_class& bound() const { return bound_; }
  mpq_class draw(Rng& rng) const;

 private:
  CoefficientDomain(bool field, mpz_class bound) : field_(field), bound_(std::move(bound)) {}
  bool field_;
  mpz_class bound_;
};

/// floor(2^n * 2n / eps) + 1: with coefficients from 1..p, one rule
/// application fails with probability at most eps / (2n).
mpz_class coefficient_bound(std::size_t n, const mpq_class& eps);

/// C * n^(2r+3) * (n*ceil(log2 n) + ceil(log2(1/eps)))^2 / eps rounded up,
/// with C = max(2, ceil(log2(1/eps))).
mpz_class prime_bound(std::size_t n, std::size_t r, const mpq_class& eps);

/// sum coeffs[i] * column(generators[i]).
ScalarVector combine_columns(const LinearMatroid& x, std::span<const Element> generators,
                             const ScalarVector& coeffs);

struct GeneralPositionDraw {
  ScalarVector vector;
  ScalarVector coefficients;
  std::size_t redraws = 0;  // all-zero combinations thrown away
};

/// Random point of the flat spanned by `flat_generators`. Throws
/// DegenerateFlatError if the generators are empty or all loops, and
/// RetryableError if every one of a bounded number of draws is zero.
GeneralPositionDraw general_position_vector(const LinearMatroid& x, std::span<const Element> flat_generators,
                                            const CoefficientDomain& coeffs, Rng& rng);

struct StepTrace {
  Vertex vertex = 0;
  ScalarVector coefficients;
  std::size_t redraws = 0;
  mpz_class prime = 0;        // bit-control prime, 0 when none was drawn
  mpz_class prime_bound = 0;  // the bound that prime was drawn below
  mpz_class max_entry = 0;    // largest entry magnitude after bit control
  std::size_t bit_control_retries = 0;
  std::size_t rank_before = 0;
  std::size_t rank_after = 0;
  std::uint64_t budget_before = 0;
  std::uint64_t budget_after = 0;
  mpq_class epsilon_charged = 0;
};

struct VertexRuleResult {
  GraphMatroidPair pair;
  std::uint64_t budget;
  StepTrace trace;
};

/// Moves the column of v to a random point on the flat of its neighbours,
/// contracts it, and deletes v from the graph. The budget drops by one and
/// the rank by two. Throws PreconditionError if v is not a co-loop or the
/// budget is already 0, DegenerateFlatError if v has no neighbour that is a
/// non-loop.
VertexRuleResult apply_vertex_rule(const GraphMatroidPair& p, Vertex v, std::uint64_t budget, Rng& rng,
                                   RandomnessBudget& rb);
/// Same, with the coefficient source given explicitly.
VertexRuleResult apply_vertex_rule(const GraphMatroidPair& p, Vertex v, std::uint64_t budget, Rng& rng,
                                   const CoefficientDomain& coeffs);

struct BitControlResult {
  ExactMatrix image;
  mpz_class prime;
  mpz_class bound;
  std::size_t retries = 0;
};

/// Reduces a rational matrix modulo a fresh random prime q <= prime_bound(
/// cols, rank, eps). Redraws q when it divides a denominator; gives up
/// with Error after a fixed number of collisions.
BitControlResult bit_control(const ExactMatrix& m, const mpq_class& eps, Rng& rng);

/// Deletes the given loop vertices (all loops when `loops` is empty) with
/// their edges. The budget is unchanged.
struct LoopElimResult {
  GraphMatroidPair pair;
  std::uint64_t budget;
  std::size_t removed;
};
LoopElimResult loop_vertex_elim(const GraphMatroidPair& p, std::uint64_t budget,
                                std::span<const Vertex> loops = {});

struct BatchReport {
  std::size_t n_batch = 0;         // vertices left after dropping isolated ones
  std::size_t isolated_removed = 0;
  std::size_t s_size = 0;          // |S| over the n_batch vertices
  std::size_t applied = 0;         // successful rule applications
  std::size_t degenerate = 0;      // S vertices removed without the rule
  std::size_t loops_removed = 0;
  std::size_t rank_after = 0;
  std::vector<StepTrace> steps;
  bool completed = false;          // every S vertex went through the rule
  bool budget_exhausted = false;   // budget hit 0 with work left: a NO instance
  bool failed = false;
  std::string failure;
};

struct BatchResult {
  RvcInstance instance;
  BatchReport report;
};

/// Applies the vertex rule to every vertex outside the cover, in ascending
/// order. All randomness comes from derive_stream(seed, ...) substreams, one
/// per step. Errors are caught and reported in `failed`.
BatchResult batch_reduce(const RvcInstance& inst, std::span<const Vertex> cover, RandomnessBudget& rb,
                         std::uint64_t seed);

}  // namespace rankvc
