#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace rankvc {

/// All randomness is drawn from this engine. Its output sequence is fixed by
/// the standard, and every distribution below is implemented here rather
/// than through <random> distributions, so results are reproducible across
/// standard libraries.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Independent substream for (seed, stage, index). Stages are small integer
/// tags chosen by the caller; see rank_reduction.hpp for the ones the pipeline uses.
Rng derive_stream(std::uint64_t seed, std::uint64_t stage, std::uint64_t index = 0);

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
mpz_class uniform_below(Rng& rng, const mpz_class& bound);

/// Uniform integer in [lo, hi]. Requires lo <= hi.
mpz_class uniform_between(Rng& rng, const mpz_class& lo, const mpz_class& hi);

/// True with probability num/den, 0 <= num <= den, den > 0.
bool bernoulli(Rng& rng, const mpq_class& probability);

}  // namespace rankvc
