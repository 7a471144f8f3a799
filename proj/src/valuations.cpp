#include "qabe/valuations.hpp"

#include "qabe/das.hpp"
#include "qabe/errors.hpp"
#include "qabe/galois_select.hpp"

namespace qabe {

namespace {

// k if den = r^k, else -1.
int pure_power(const Integer& den, std::int64_t r) {
  Integer d = den;
  const Integer rz = make_integer(r);
  int k = 0;
  while (d % rz == 0) {
    d /= rz;
    ++k;
  }
  return d == 1 && k > 0 ? k : -1;
}

int sign_power(const Rational& v) {
  if (v.get_den() != 1) throw InternalError("seo: valuation is not an integer");
  return mpz_odd_p(v.get_num_mpz_t()) ? -1 : 1;
}

}  // namespace

Rational v_at(std::int64_t r, const FormalSum& s) {
  if (!is_prime(r)) throw PreconditionError("v_at: " + std::to_string(r) + " is not prime");
  Rational total = 0;
  for (const auto& [a, m] : s.terms()) {
    const int k = pure_power(a.den(), r);
    if (k < 0) continue;
    Integer weight_den;
    mpz_ui_pow_ui(weight_den.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(k - 1));
    total += Rational(m, weight_den);
  }
  total.canonicalize();
  return total;
}

SeoResult seo(std::int64_t p, std::int64_t q) {
  if (p < 3 || !is_prime(p) || !is_prime(q) || p >= q) throw PreconditionError("seo_check: need odd primes p < q");
  const FormalSum a = canonical_apq(p, q);
  SeoResult r;
  r.v_p = v_at(p, a);
  r.v_q = v_at(q, a);
  r.legendre_p_q = legendre(p, q);
  r.legendre_q_p = legendre(q, p);
  r.holds = sign_power(r.v_q) == r.legendre_p_q && sign_power(r.v_p) == r.legendre_q_p;
  return r;
}

}  // namespace qabe
