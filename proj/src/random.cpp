#include "rankvc/random.hpp"

#include <limits>
#include <stdexcept>

namespace rankvc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng derive_stream(std::uint64_t seed, std::uint64_t stage, std::uint64_t index) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ (stage * 0xd1b54a32d192ed03ULL));
  s = splitmix64(s ^ (index * 0x8cb92ba72f3d8dd7ULL));
  return Rng(s);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  // Rejection on the largest multiple of bound that fits in 64 bits.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

mpz_class uniform_below(Rng& rng, const mpz_class& bound) {
  if (sgn(bound) <= 0) throw std::invalid_argument("uniform_below: empty range");
  if (bound.fits_ulong_p()) return mpz_class(uniform_below(rng, bound.get_ui()));
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t spare = words * 64 - bits;
  for (;;) {
    mpz_class x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng();
      if (w == 0 && spare > 0) word >>= spare;
      x <<= 64;
      mpz_class piece;
      mpz_import(piece.get_mpz_t(), 1, 1, sizeof word, 0, 0, &word);
      x += piece;
    }
    if (x < bound) return x;
  }
}

mpz_class uniform_between(Rng& rng, const mpz_class& lo, const mpz_class& hi) {
  if (lo > hi) throw std::invalid_argument("uniform_between: lo > hi");
  mpz_class width = hi - lo + 1;
  return lo + uniform_below(rng, width);
}

bool bernoulli(Rng& rng, const mpq_class& probability) {
  if (sgn(probability) <= 0) return false;
  if (probability >= 1) return true;
  return uniform_below(rng, probability.get_den()) < probability.get_num();
}

}  // namespace rankvc
