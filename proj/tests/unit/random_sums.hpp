#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qabe/distribution.hpp"

namespace qabe::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234abcdULL);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

// Up to max_terms terms with denominators drawn from dens and coefficients
// in [-3, 3].  Points in (1/2)Z are skipped unless allow_zero_point is set.
inline FormalSum random_sum(const std::vector<std::int64_t>& dens, int max_terms, bool allow_zero_point = false) {
  FormalSum s;
  const int n = static_cast<int>(uniform(1, max_terms));
  for (int i = 0; i < n; ++i) {
    const std::int64_t d = dens[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(dens.size()) - 1))];
    const TorusPoint a = TorusPoint::make(uniform(allow_zero_point ? 0 : 1, d - 1), d);
    if (!allow_zero_point && a.is_half_integer()) continue;
    s.add_term(a, uniform(-3, 3));
  }
  return s;
}

// Denominators > 2, so the sum lies in A'.
inline FormalSum random_a_prime(int max_terms = 6) {
  static const std::vector<std::int64_t> dens{3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 21, 35};
  return random_sum(dens, max_terms);
}

// Odd denominators, nonzero points: A''.
inline FormalSum random_a_doubleprime(int max_terms = 6) {
  static const std::vector<std::int64_t> dens{3, 5, 7, 9, 15, 21, 35, 45};
  return random_sum(dens, max_terms);
}

}  // namespace qabe::testing
