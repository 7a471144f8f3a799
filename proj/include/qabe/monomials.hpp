#pragma once

// Numeric values of sine, Gamma and xi monomials, the parity sign rule for
// Galois conjugates of sine monomials, and the Gamma/sine factorization
// check for Das classes.

#include <cstdint>
#include <optional>

#include "qabe/bigreal.hpp"
#include "qabe/distribution.hpp"

namespace qabe {

// prod (2 sin pi a)^m, [0] -> 1.
BigReal sin_eval(const FormalSum& s, long prec);

// prod (sqrt(2 pi) / Gamma(a))^m for 0 < a < 1, [0] -> 1.
BigReal gamma_eval(const FormalSum& s, long prec);

// prod (1 - e(a))^m, [0] -> 1.
ComplexBall xi_eval(const FormalSum& s, long prec);

// (-1)^deg P((1 - sigma_t) s) * eps^deg s with eps = +1 if t = 1 mod 4 and
// -1 otherwise.  Requires s in A'' and t odd and prime to every
// denominator of s.
int sign_rule(const FormalSum& s, const Integer& t);
inline int sign_rule(const FormalSum& s, std::int64_t t) { return sign_rule(s, make_integer(t)); }

// p^-((q-1)^2/(16q)) q^((p-1)^2/(16p)) for odd p, 2^-((q-1)/8) q^(1/8) for
// p = 2.
BigReal gamma_sine_constant(std::int64_t p, std::int64_t q, long prec);

enum class Verdict { pass, fail, inconclusive };

const char* verdict_name(Verdict v);

struct FactorizationResult {
  Verdict verdict = Verdict::inconclusive;
  long prec = 0;      // precision of the deciding evaluation
  BigReal ratio;      // Gamma(a) / sqrt(sin a)
  BigReal constant;
  BigReal difference;
};

// Certifies |Gamma(a_pq) / sqrt(sin a_pq) - constant| < tolerance
// (default 2^(-prec/2)).  A ball that neither certifies nor refutes this
// is retried at doubled precision up to max_prec (default 4 prec).
FactorizationResult gamma_sine_factorization(std::int64_t p, std::int64_t q, long prec,
                                             std::optional<Rational> tolerance = std::nullopt,
                                             long max_prec = 0);
inline bool gamma_sine_factorization_check(std::int64_t p, std::int64_t q, long prec) {
  return gamma_sine_factorization(p, q, prec).verdict == Verdict::pass;
}

}  // namespace qabe
