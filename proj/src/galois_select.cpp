#include "qabe/galois_select.hpp"

#include <cstdlib>

#include "qabe/cyclotomic.hpp"
#include "qabe/errors.hpp"

namespace qabe {

namespace {

bool is_generator(std::int64_t g, std::int64_t m, std::int64_t order, const std::vector<std::int64_t>& factors) {
  if (gcd64(g, m) != 1) return false;
  for (std::int64_t f : factors)
    if (pow_mod(g, order / f, m) == 1) return false;
  return true;
}

}  // namespace

bool in_S(std::int64_t r) { return r == -1 || is_prime(r); }

int legendre(const Integer& a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw PreconditionError("legendre: modulus must be an odd prime");
  const std::int64_t r = to_int64(floor_mod(a, make_integer(p)));
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::int64_t primitive_root(std::int64_t m, RootPolicy policy) {
  const std::vector<std::int64_t> ps = m > 1 ? prime_factors(m) : std::vector<std::int64_t>{};
  if (ps.size() != 1 || ps[0] == 2) throw PreconditionError("primitive_root: modulus must be an odd prime power");
  const std::int64_t order = euler_phi(m);
  const std::vector<std::int64_t> factors = prime_factors(order);
  if (policy == RootPolicy::smallest) {
    for (std::int64_t g = 2; g < m; ++g)
      if (is_generator(g, m, order, factors)) return g;
  } else {
    for (std::int64_t g = m - 1; g >= 2; --g)
      if (is_generator(g, m, order, factors)) return g;
  }
  throw InternalError("primitive_root: none found mod " + std::to_string(m));
}

GaloisElement sigma_generator(std::int64_t r, std::int64_t n, RootPolicy policy) {
  if (n <= 0 || n % 4 != 0) throw PreconditionError("sigma_generator: level must be a positive multiple of 4");
  if (!in_S(r)) throw PreconditionError("sigma_generator: " + std::to_string(r) + " is not -1 or a prime");
  if (r == -1) return {n, n - 1};
  if (n % r != 0) return {n, 1};
  std::int64_t rk = 1;
  while (n % (rk * r) == 0) rk *= r;
  const std::int64_t rest = n / rk;
  std::int64_t local = 1;
  if (r == 2) {
    if (rk >= 8) local = policy == RootPolicy::smallest ? 5 : rk - 3;
  } else {
    local = primitive_root(rk, policy);
  }
  return {n, crt(local, rk, 1, rest)};
}

int e_cocycle(std::int64_t p, const GaloisElement& g) {
  if (!in_S(p)) throw PreconditionError("e_cocycle: " + std::to_string(p) + " is not -1 or a prime");
  const std::int64_t need = 4 * std::llabs(p);
  if (g.level % need != 0)
    throw PreconditionError("e_cocycle: level " + std::to_string(g.level) + " does not contain sqrt(" +
                            std::to_string(p) + ")");
  const CycloNum root = sqrt_exact(p);
  const CycloNum image = root.galois(g.rep);
  if (image == root) return 0;
  if (image == -root) return 1;
  throw InternalError("e_cocycle: sigma does not map sqrt to +-sqrt");
}

}  // namespace qabe
