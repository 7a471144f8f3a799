#pragma once

// Exact arithmetic in Q(zeta_N).  Elements are kept in the power basis
// 1, z, ..., z^(phi(N)-1), z = zeta_N = e^(2 pi i / N), reduced modulo the
// N-th cyclotomic polynomial; coefficients share one positive denominator.

#include <cstdint>
#include <string>
#include <vector>

#include "qabe/bigreal.hpp"
#include "qabe/distribution.hpp"
#include "qabe/integer.hpp"

namespace qabe {

// Coefficients of Phi_n, constant term first.  Memoized; safe to call from
// several threads.
const std::vector<std::int64_t>& cyclotomic_poly(std::int64_t n);

class CycloNum {
 public:
  // Zero at level 1.
  CycloNum();

  static CycloNum zero(std::int64_t level);
  static CycloNum from_rational(std::int64_t level, const Rational& r);
  // zeta_level^k.
  static CycloNum zeta(std::int64_t level, std::int64_t k);
  // sum coeffs[i] z^i for any number of coefficients; reduced.
  static CycloNum from_coeffs(std::int64_t level, const std::vector<Rational>& coeffs);

  std::int64_t level() const { return level_; }
  std::size_t degree() const { return num_.size(); }  // phi(level)
  Rational coeff(std::size_t i) const;
  std::vector<Rational> coeffs() const;
  bool is_zero() const;
  bool is_rational() const;

  // Same element in Q(zeta_m), level | m.
  CycloNum embed(std::int64_t m) const;

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  // Throws PreconditionError on division by zero.
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  CycloNum operator-() const;
  CycloNum inverse() const;
  CycloNum pow(std::int64_t e) const;
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  // sigma_t: z -> z^t; gcd(t, level) = 1.
  CycloNum galois(std::int64_t t) const;
  CycloNum conj() const { return galois(-1); }
  bool is_real() const { return conj() == *this; }
  // -1, 0 or +1.  Requires is_real().  Exact zero test, then ball
  // evaluation from 128 bits, doubling until the sign is certified.
  int sign_of_real() const;

  ComplexBall evaluate(long prec) const;

  // Polynomial in z, e.g. "1 - z^2 + 3/2*z^5".
  std::string to_string() const;

 private:
  CycloNum(std::int64_t level, std::vector<Integer> num, Integer den);
  // Reduces a coefficient vector of any length modulo Phi_level and
  // normalizes the denominator.
  static CycloNum reduce(std::int64_t level, std::vector<Integer> poly, Integer den);
  static void lift_common(const CycloNum& a, const CycloNum& b, CycloNum& a_out, CycloNum& b_out);

  std::int64_t level_;
  std::vector<Integer> num_;
  Integer den_;
};

inline CycloNum galois_act_cyclo(std::int64_t t, const CycloNum& z) { return z.galois(t); }

// xi(s) = prod (1 - e(a))^m, [0] -> 1; every denominator divides n.
CycloNum xi_exact(const FormalSum& s, std::int64_t n);

// sin(s) = prod (2 sin pi a)^m, [0] -> 1, through
// 2 sin(pi a) = i e(-a/2) (1 - e(a)); needs 4 | n and 2 den(a) | n.
CycloNum sin_exact(const FormalSum& s, std::int64_t n);

// Smallest level at which sin_exact(s, .) is defined: lcm(4, 2 den(a)).
std::int64_t sin_level(const FormalSum& s);

// The positive square root of d for d = 2 or an odd prime, and zeta_4 for
// d = -1; at level 4|d| (8 for d = 2).
CycloNum sqrt_exact(std::int64_t d);

}  // namespace qabe
