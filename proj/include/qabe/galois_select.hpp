#pragma once

// Finite-level realizations of the inertia generators sigma_r for
// r in S = {-1} u {primes}, the quadratic characters e_p, primitive roots
// and the Legendre symbol.

#include <cstdint>

#include "qabe/integer.hpp"

namespace qabe {

// Euler's criterion; p an odd prime.
int legendre(const Integer& a, std::int64_t p);
inline int legendre(std::int64_t a, std::int64_t p) { return legendre(make_integer(a), p); }

// Which generator to pick when several are allowed.
enum class RootPolicy {
  smallest,  // smallest primitive root mod r^k; 5 mod 2^k
  largest,   // largest primitive root below r^k; -3 mod 2^k
};

// Primitive root modulo an odd prime power m = p^k.
std::int64_t primitive_root(std::int64_t m, RootPolicy policy = RootPolicy::smallest);

// sigma_t acting on Q(zeta_level).
struct GaloisElement {
  std::int64_t level = 1;
  std::int64_t rep = 0;
};

// sigma_r at level n (4 | n): complex conjugation for r = -1; for a prime
// r with r^k || n, a generator of (Z/r^k)^x (r odd) or of the part of
// (Z/2^k)^x fixing zeta_4 (r = 2), and 1 modulo n / r^k; 1 if r does not
// divide n.
GaloisElement sigma_generator(std::int64_t r, std::int64_t n, RootPolicy policy = RootPolicy::smallest);

// 0 if sigma_t fixes sqrt(p) and 1 if it negates it; p in S, with
// 4|p| dividing the level.
int e_cocycle(std::int64_t p, const GaloisElement& g);

// -1 or a prime.
bool in_S(std::int64_t r);

}  // namespace qabe
