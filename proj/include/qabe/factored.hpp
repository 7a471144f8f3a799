#pragma once

// Elements of Q(zeta_N) of the form u * z^e * prod_k (1 - z^k)^m_k with
// u rational, z = zeta_N and 0 < k < N/2.  Sine and xi monomials live in
// this multiplicative group, where products, quotients and Galois
// conjugates cost O(#factors) and equality reduces to one polynomial
// identity in Z[z].

#include <cstdint>
#include <map>
#include <string>

#include "qabe/bigreal.hpp"
#include "qabe/cyclotomic.hpp"
#include "qabe/distribution.hpp"

namespace qabe {

class FactoredCyclo {
 public:
  // 1 at level 1.
  FactoredCyclo();

  static FactoredCyclo one(std::int64_t level);
  // Throws PreconditionError for r = 0.
  static FactoredCyclo rational(std::int64_t level, const Rational& r);
  static FactoredCyclo root(std::int64_t level, std::int64_t e);
  // 1 - z^k, k not divisible by the level.
  static FactoredCyclo one_minus_zeta(std::int64_t level, std::int64_t k);

  std::int64_t level() const { return level_; }
  const Rational& scalar() const { return scalar_; }
  std::int64_t root_exponent() const { return root_; }
  const std::map<std::int64_t, std::int64_t>& factors() const { return factors_; }

  friend FactoredCyclo operator*(const FactoredCyclo& a, const FactoredCyclo& b);
  friend FactoredCyclo operator/(const FactoredCyclo& a, const FactoredCyclo& b);
  FactoredCyclo operator-() const;
  FactoredCyclo inverse() const;
  FactoredCyclo pow(std::int64_t e) const;

  FactoredCyclo galois(std::int64_t t) const;
  FactoredCyclo conj() const { return galois(-1); }
  FactoredCyclo embed(std::int64_t m) const;

  // Exact: the quotient is expanded in Z[z]/(z^N - 1) and reduced modulo
  // Phi_N.
  bool is_one() const;
  friend bool operator==(const FactoredCyclo& a, const FactoredCyclo& b) { return (a / b).is_one(); }

  // Exact: conj(x)/x is a signed power of z read off the factors.
  bool is_real() const;
  // Requires is_real().  Ball evaluation from 128 bits, doubling.
  int sign_of_real() const;
  ComplexBall evaluate(long prec) const;

  CycloNum to_cyclo() const;
  std::string to_string() const;

 private:
  FactoredCyclo(std::int64_t level, Rational scalar, std::int64_t root);
  // Multiplies by (1 - z^k)^m, normalizing k into (0, N/2).
  void add_factor(std::int64_t k, std::int64_t m);
  static void lift_common(const FactoredCyclo& a, const FactoredCyclo& b, FactoredCyclo& a_out,
                          FactoredCyclo& b_out);

  std::int64_t level_;
  Rational scalar_;
  std::int64_t root_;                           // exponent of z, in [0, N)
  std::map<std::int64_t, std::int64_t> factors_;  // k -> exponent, nonzero
};

// sin(s) and xi(s) as factored elements at level n (same level conditions
// as sin_exact and xi_exact).
FactoredCyclo sin_factored(const FormalSum& s, std::int64_t n);
FactoredCyclo xi_factored(const FormalSum& s, std::int64_t n);

}  // namespace qabe
