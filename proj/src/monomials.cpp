#include "qabe/monomials.hpp"

#include "qabe/das.hpp"
#include "qabe/errors.hpp"

namespace qabe {

namespace {

constexpr long kGuard = 32;

// Product of x_a^m over the support, with x_a supplied per point.
template <typename Value, typename F>
Value monomial(const FormalSum& s, Value one, F&& value_at) {
  Value num = one;
  Value den = one;
  for (const auto& [a, m] : s.terms()) {
    if (a.is_zero()) continue;
    const Value x = value_at(a);
    Value& target = m > 0 ? num : den;
    const Integer e = abs(m);
    for (Integer i = 0; i < e; ++i) target = target * x;
  }
  return num / den;
}

BigReal round_to(const BigReal& x, long prec) { return x.rounded(prec); }

}  // namespace

BigReal sin_eval(const FormalSum& s, long prec) {
  const long wp = prec + kGuard;
  const BigReal two = BigReal::from_integer(2, wp);
  return round_to(monomial(s, BigReal::from_integer(1, wp),
                           [&](const TorusPoint& a) { return two * sin_pi_rational(a, wp); }),
                  prec);
}

BigReal gamma_eval(const FormalSum& s, long prec) {
  const long wp = prec + kGuard;
  const BigReal root_two_pi = sqrt(BigReal::from_integer(2, wp) * pi(wp));
  return round_to(monomial(s, BigReal::from_integer(1, wp),
                           [&](const TorusPoint& a) { return root_two_pi / gamma(a.value(), wp); }),
                  prec);
}

ComplexBall xi_eval(const FormalSum& s, long prec) {
  const long wp = prec + kGuard;
  const ComplexBall one = ComplexBall::one(wp);
  return monomial(s, one, [&](const TorusPoint& a) { return one - ComplexBall::unit(a.value(), wp); });
}

int sign_rule(const FormalSum& s, const Integer& t) {
  if (!in_A_doubleprime(s)) throw PreconditionError("sign_rule: argument is not in A''");
  if (mpz_even_p(t.get_mpz_t())) throw PreconditionError("sign_rule: t must be odd");
  const FormalSum moved = s - galois_act(t, s);
  const Integer parity = deg(p_projector(moved));
  int sign = mpz_odd_p(parity.get_mpz_t()) ? -1 : 1;
  if (floor_mod(t, Integer(4)) == 3 && mpz_odd_p(deg(s).get_mpz_t())) sign = -sign;
  return sign;
}

BigReal gamma_sine_constant(std::int64_t p, std::int64_t q, long prec) {
  if (!is_prime(p) || !is_prime(q) || p >= q) throw PreconditionError("gamma_sine_constant: need primes p < q");
  const long wp = prec + kGuard;
  if (p == 2) {
    return round_to(pow_rational(Rational(2), Rational(-(q - 1), 8), wp) * pow_rational(Rational(q), Rational(1, 8), wp),
                    prec);
  }
  return round_to(pow_rational(Rational(p), Rational(-(q - 1) * (q - 1), 16 * q), wp) *
                      pow_rational(Rational(q), Rational((p - 1) * (p - 1), 16 * p), wp),
                  prec);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

FactorizationResult gamma_sine_factorization(std::int64_t p, std::int64_t q, long prec,
                                             std::optional<Rational> tolerance, long max_prec) {
  if (prec < 32) throw PreconditionError("precision must be at least 32 bits");
  Rational tol;
  if (tolerance) {
    tol = *tolerance;
  } else {
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(prec / 2));
    tol = Rational(Integer(1), two_pow);
  }
  if (tol <= 0) throw PreconditionError("tolerance must be positive");
  if (max_prec < prec) max_prec = 4 * prec;
  const FormalSum a = canonical_apq(p, q);
  FactorizationResult r;
  for (long wp = prec; wp <= max_prec; wp *= 2) {
    r.prec = wp;
    r.ratio = gamma_eval(a, wp) / sqrt(sin_eval(a, wp));
    r.constant = gamma_sine_constant(p, q, wp);
    r.difference = r.ratio - r.constant;
    if (r.ratio.certified_close(r.constant, tol)) {
      r.verdict = Verdict::pass;
      return r;
    }
    // Refuted when every point of the difference ball is at least tol away
    // from zero.
    const BigReal shifted_up = r.difference - BigReal::from_rational(tol, wp);
    const BigReal shifted_down = r.difference + BigReal::from_rational(tol, wp);
    if (shifted_up.is_positive() || shifted_down.is_negative()) {
      r.verdict = Verdict::fail;
      return r;
    }
  }
  r.verdict = Verdict::inconclusive;
  return r;
}

}  // namespace qabe
