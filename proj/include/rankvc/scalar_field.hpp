#pragma once

// Field types backing DenseMatrix. Each exposes the same small interface:
//   value_type, zero(), one(), add, sub, mul, neg, inv, is_zero,
//   from_rational (may throw RetryableError), to_rational.
// to_rational returns the canonical representative: a lowest-terms rational,
// or the residue in [0, q) for prime fields.

#include <cstdint>

#include <gmpxx.h>

#include "rankvc/errors.hpp"

namespace rankvc {

struct RationalField {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type from_rational(const mpq_class& x) const { return x; }
  mpq_class to_rational(const value_type& a) const { return a; }
  bool operator==(const RationalField&) const = default;
};

/// GF(q) for odd primes q < 2^63; products go through 128-bit integers.
struct PrimeField64 {
  using value_type = std::uint64_t;
  std::uint64_t q;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= q ? s - q : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (q - b); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % q);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : q - a; }
  value_type inv(value_type a) const {
    // Extended Euclid on signed 128-bit values.
    __int128 t = 0, new_t = 1, r = q, new_r = a;
    while (new_r != 0) {
      __int128 quotient = r / new_r;
      __int128 tmp = t - quotient * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - quotient * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += q;
    return static_cast<value_type>(t);
  }
  bool is_zero(value_type a) const { return a == 0; }
  value_type from_rational(const mpq_class& x) const {
    const mpz_class modulus(static_cast<unsigned long>(q));
    mpz_class num = x.get_num() % modulus;
    if (num < 0) num += modulus;
    mpz_class den = x.get_den() % modulus;
    if (den == 0) throw RetryableError("denominator divisible by field modulus " + modulus.get_str());
    return mul(num.get_ui(), inv(den.get_ui()));
  }
  mpq_class to_rational(value_type a) const { return mpq_class(static_cast<unsigned long>(a)); }
  bool operator==(const PrimeField64&) const = default;
};

/// GF(q) for arbitrary-size odd primes.
struct PrimeFieldBig {
  using value_type = mpz_class;
  mpz_class q;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const {
    value_type s = a + b;
    if (s >= q) s -= q;
    return s;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    value_type s = a - b;
    if (sgn(s) < 0) s += q;
    return s;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    value_type p = a * b;
    mpz_mod(p.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return p;
  }
  value_type neg(const value_type& a) const { return sgn(a) == 0 ? a : value_type(q - a); }
  value_type inv(const value_type& a) const {
    value_type r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
    return r;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type from_rational(const mpq_class& x) const {
    value_type num;
    mpz_mod(num.get_mpz_t(), x.get_num_mpz_t(), q.get_mpz_t());
    value_type den;
    mpz_mod(den.get_mpz_t(), x.get_den_mpz_t(), q.get_mpz_t());
    if (sgn(den) == 0) throw RetryableError("denominator divisible by field modulus " + q.get_str());
    return mul(num, inv(den));
  }
  mpq_class to_rational(const value_type& a) const { return mpq_class(a); }
  bool operator==(const PrimeFieldBig& other) const { return q == other.q; }
};

}  // namespace rankvc
