#include "rankvc/primes.hpp"

#include <algorithm>
#include <array>

#include "rankvc/errors.hpp"

namespace rankvc {

namespace {

constexpr std::array<unsigned, 12> kSmallPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// One Miller-Rabin round: true if `base` does not witness compositeness.
bool passes_round(const mpz_class& n, const mpz_class& d, std::size_t s, const mpz_class& base) {
  const mpz_class n_minus_1 = n - 1;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (std::size_t i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_probable_prime(const mpz_class& n, int rounds) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  mpz_class d = n - 1;
  std::size_t s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned p : kSmallPrimes) {
    if (!passes_round(n, d, s, mpz_class(p))) return false;
  }
  // The twelve bases above are a deterministic witness set below 3.3e24.
  static const mpz_class kDeterministicLimit("318665857834031151167461");
  if (n < kDeterministicLimit) return true;

  const std::uint64_t salt = mpz_get_ui(n.get_mpz_t());
  Rng rng(splitmix64(salt ^ mpz_sizeinbase(n.get_mpz_t(), 2)));
  const mpz_class span = n - 3;
  for (int r = 0; r < rounds; ++r) {
    mpz_class base = 2 + uniform_below(rng, span);
    if (!passes_round(n, d, s, base)) return false;
  }
  return true;
}

mpz_class random_prime(const mpz_class& lower, const mpz_class& upper, Rng& rng,
                       std::size_t max_draws) {
  const mpz_class lo = std::max(lower, mpz_class(3));
  if (lo > upper) throw InputError("random_prime: interval contains no odd prime");
  if (max_draws == 0) {
    max_draws = std::max<std::size_t>(2000, 200 * mpz_sizeinbase(upper.get_mpz_t(), 2));
  }
  for (std::size_t draw = 0; draw < max_draws; ++draw) {
    mpz_class candidate = uniform_between(rng, lo, upper);
    if (mpz_even_p(candidate.get_mpz_t())) continue;
    if (is_probable_prime(candidate)) return candidate;
  }
  throw RetryableError("random_prime: no prime found in [" + lo.get_str() + ", " +
                       upper.get_str() + "] after " + std::to_string(max_draws) + " draws");
}

}  // namespace rankvc
