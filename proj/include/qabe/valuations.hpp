#pragma once

// Valuations above a prime r of sine and xi monomials, normalized by
// v_r(1 - e(1/r)) = 1, read off the symbol denominators.

#include <cstdint>

#include "qabe/distribution.hpp"

namespace qabe {

// sum m_a w_r(a), with w_r(a) = 1 / r^(k-1) when the order of a is r^k
// (k >= 1) and 0 otherwise.
Rational v_at(std::int64_t r, const FormalSum& s);

struct SeoResult {
  Rational v_p;  // v_p(sin a_pq)
  Rational v_q;
  int legendre_q_p = 0;  // (q/p)
  int legendre_p_q = 0;  // (p/q)
  bool holds = false;
};

// (-1)^v_q(sin a_pq) = (p/q) and (-1)^v_p(sin a_pq) = (q/p) for odd
// primes p < q.
SeoResult seo(std::int64_t p, std::int64_t q);
inline bool seo_check(std::int64_t p, std::int64_t q) { return seo(p, q).holds; }

}  // namespace qabe
