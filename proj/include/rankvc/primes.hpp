#pragma once

#include <cstddef>
#include <cstdint>

#include <gmpxx.h>

#include "rankvc/random.hpp"

namespace rankvc {

/// Miller-Rabin. Deterministic for n < 2^64 (first twelve prime bases);
/// above that, the twelve fixed bases plus `rounds` further bases derived
/// from n itself, so the answer does not depend on any external RNG.
bool is_probable_prime(const mpz_class& n, int rounds = 40);

/// Draws uniform integers from [lower, upper] and returns the first odd
/// prime found. Throws RetryableError after `max_draws` misses; the default
/// scales with the bit length of `upper`.
mpz_class random_prime(const mpz_class& lower, const mpz_class& upper, Rng& rng,
                       std::size_t max_draws = 0);

}  // namespace rankvc
