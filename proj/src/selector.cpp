#include <cstddef>
#include <vector>

#include "qabe/distribution.hpp"
#include "qabe/errors.hpp"

namespace qabe {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_integer(const Integer& v, std::uint64_t h) {
  const std::size_t n = mpz_size(v.get_mpz_t());
  h = splitmix64(h ^ n);
  for (std::size_t i = 0; i < n; ++i) h = splitmix64(h ^ mpz_getlimbn(v.get_mpz_t(), i));
  return h;
}

// Discrete logarithms to base g modulo a prime m; throws if g is not a
// primitive root.
std::vector<std::int64_t> dlog_table(std::int64_t g, std::int64_t m) {
  std::vector<std::int64_t> table(static_cast<std::size_t>(m), -1);
  std::int64_t x = 1;
  for (std::int64_t i = 0; i < m - 1; ++i) {
    if (table[static_cast<std::size_t>(x)] != -1)
      throw PreconditionError("selector: " + std::to_string(g) + " is not a primitive root mod " + std::to_string(m));
    table[static_cast<std::size_t>(x)] = i;
    x = mul_mod(x, g, m);
  }
  return table;
}

bool small(const TorusPoint& a, std::int64_t& num, std::int64_t& den) {
  if (!mpz_fits_slong_p(a.den().get_mpz_t())) return false;
  num = to_int64(a.num());
  den = to_int64(a.den());
  return true;
}

}  // namespace

Selector::Selector(std::string name, Rule rule)
    : name_(std::make_shared<const std::string>(std::move(name))),
      rule_(std::make_shared<const Rule>(std::move(rule))) {}

bool Selector::contains(const TorusPoint& a) const {
  if (a.is_half_integer()) throw PreconditionError("selector queried at " + a.to_string() + " in (1/2)Z");
  if (a.below_half()) return (*rule_)(a);
  return !(*rule_)(-a);
}

Selector Selector::canonical() {
  return Selector("canonical", [](const TorusPoint&) { return true; });
}

Selector Selector::seeded(std::uint64_t seed) {
  return Selector("seeded:" + std::to_string(seed), [seed](const TorusPoint& m) {
    std::uint64_t h = hash_integer(m.den(), splitmix64(seed));
    h = hash_integer(m.num(), h);
    return (h & 1U) == 0;
  });
}

Selector Selector::main_formula(std::int64_t p, std::int64_t q, const Integer& t_p, const Integer& t_q) {
  if (!is_prime(p) || !is_prime(q) || p >= q) throw PreconditionError("main_formula selector: need primes p < q");
  const std::string name = "main-formula:" + std::to_string(p) + "," + std::to_string(q);
  const std::int64_t gq = to_int64(floor_mod(t_q, make_integer(q)));
  auto logq = std::make_shared<const std::vector<std::int64_t>>(dlog_table(gq, q));

  if (p == 2) {
    if (floor_mod(t_q, Integer(4)) != 1) throw PreconditionError("main_formula selector: t_q must be 1 mod 4");
    const std::int64_t inv4 = inv_mod(4, q);
    return Selector(name, [q, inv4, logq](const TorusPoint& m) {
      std::int64_t n = 0, d = 0;
      if (!small(m, n, d)) return true;
      const std::int64_t half = (q - 1) / 2;
      // orbit of [4/q]
      if (d == q) return (*logq)[static_cast<std::size_t>(mul_mod(n, inv4, q))] < half;
      // [q/4] in T, [-q/4] not
      if (d == 4) return floor_mod(n, 4) == floor_mod(q, 4);
      // orbit of [1/2 + 2/q]
      if (d == 2 * q) return (*logq)[static_cast<std::size_t>(mul_mod(n, inv4, q))] < half;
      // orbit of [-1/4 + 1/q] in T, orbit of [1/4 + 1/q] not
      if (d == 4 * q) return floor_mod(n, 4) != floor_mod(q, 4);
      return true;
    });
  }

  const std::int64_t gp = to_int64(floor_mod(t_p, make_integer(p)));
  if (floor_mod(t_p, make_integer(q)) != 1 || floor_mod(t_q, make_integer(p)) != 1)
    throw PreconditionError("main_formula selector: t_p must be 1 mod q and t_q must be 1 mod p");
  auto logp = std::make_shared<const std::vector<std::int64_t>>(dlog_table(gp, p));
  const std::int64_t inv_q = inv_mod(q, p);
  const std::int64_t inv_p = inv_mod(p, q);
  const std::int64_t inv_mq = inv_mod(-q, p);
  return Selector(name, [p, q, inv_q, inv_p, inv_mq, logp, logq](const TorusPoint& m) {
    std::int64_t n = 0, d = 0;
    if (!small(m, n, d)) return true;
    // orbit of [q/p]
    if (d == p) return (*logp)[static_cast<std::size_t>(mul_mod(n, inv_q, p))] < (p - 1) / 2;
    // orbit of [p/q]
    if (d == q) return (*logq)[static_cast<std::size_t>(mul_mod(n, inv_p, q))] < (q - 1) / 2;
    // orbit of [-1/p + 1/q]; only the sigma_p exponent matters
    if (d == p * q) return (*logp)[static_cast<std::size_t>(mul_mod(n, inv_mq, p))] < (p - 1) / 2;
    return true;
  });
}

}  // namespace qabe
