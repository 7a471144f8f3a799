#include "qabe/integer.hpp"

#include <algorithm>
#include <stdexcept>

#include "qabe/errors.hpp"

namespace qabe {

std::int64_t to_int64(const Integer& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(floor_mod(a, m)) * floor_mod(b, m)) % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (exp < 0) return pow_mod(inv_mod(base, m), -exp, m);
  std::int64_t result = 1 % m;
  std::int64_t b = floor_mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd64(a, b) * b;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, r = floor_mod(a, m), y = 1;
  while (r != 0) {
    std::int64_t q = g / r;
    std::int64_t t = g - q * r;
    g = r;
    r = t;
    t = x - q * y;
    x = y;
    y = t;
  }
  if (g != 1) throw PreconditionError("inv_mod: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return floor_mod(x, m);
}

std::int64_t euler_phi(std::int64_t n) {
  if (n <= 0) throw PreconditionError("euler_phi: n must be positive");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}


std::vector<std::int64_t> prime_factors(std::int64_t n) {
  if (n <= 0) throw PreconditionError("prime_factors: n must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0 || p < 2) throw PreconditionError("valuation: need n != 0 and p >= 2");
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
  if (n <= 0) throw PreconditionError("units_mod: n must be positive");
  if (n == 1) return {0};
  std::vector<std::int64_t> out;
  for (std::int64_t t = 1; t < n; ++t)
    if (gcd64(t, n) == 1) out.push_back(t);
  return out;
}

std::int64_t crt(std::int64_t a1, std::int64_t m1, std::int64_t a2, std::int64_t m2) {
  if (gcd64(m1, m2) != 1) throw PreconditionError("crt: moduli must be coprime");
  const std::int64_t m = m1 * m2;
  // x = a1 + m1 * ((a2 - a1) / m1 mod m2)
  const std::int64_t k = mul_mod(floor_mod(a2 - a1, m2), inv_mod(m1 % m2, m2), m2);
  return floor_mod(a1 + mul_mod(m1, k, m), m);
}

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

}  // namespace qabe
