#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qabe {

using Integer = mpz_class;
using Rational = mpq_class;

// Least nonnegative residue of a modulo m (m > 0).
inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const Integer& v);

inline Integer make_integer(std::int64_t v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

bool is_prime(std::int64_t n);

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

// Inverse of a modulo m; throws PreconditionError if gcd(a, m) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

std::int64_t euler_phi(std::int64_t n);

// Distinct prime divisors of n > 0, increasing.
std::vector<std::int64_t> prime_factors(std::int64_t n);

// Exponent of the prime p in n != 0.
int valuation(std::int64_t n, std::int64_t p);

// Residues 1 <= t < n prime to n, increasing (just {0} for n = 1).
std::vector<std::int64_t> units_mod(std::int64_t n);

// x = a1 mod m1, x = a2 mod m2 for coprime m1, m2; result in [0, m1 m2).
std::int64_t crt(std::int64_t a1, std::int64_t m1, std::int64_t a2, std::int64_t m2);

// Primes p with lo <= p <= hi.
std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi);

}  // namespace qabe
