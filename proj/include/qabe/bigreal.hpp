#pragma once

// Real balls mid +- rad over MPFR.  Every operation returns a ball that
// contains the exact result for all inputs in the operand balls.  The
// midpoint carries the working precision; the radius is a 64-bit float
// rounded upward.

#include <mpfr.h>

#include <string>

#include "qabe/integer.hpp"
#include "qabe/torus.hpp"

namespace qabe {

struct BallAccess;

class BigReal {
 public:
  // Exact zero at 64 bits.
  BigReal();
  ~BigReal();
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;

  static BigReal from_integer(const Integer& v, long prec);
  static BigReal from_rational(const Rational& v, long prec);
  // The ball [mid - rad, mid + rad] with mid, rad given as decimal strings.
  static BigReal from_strings(const std::string& mid, const std::string& rad, long prec);

  // The same ball with its midpoint rounded to prec bits (radius widened
  // to cover the rounding).
  BigReal rounded(long prec) const;

  long prec() const { return static_cast<long>(mpfr_get_prec(mid_)); }
  const mpfr_t& mid() const { return mid_; }
  const mpfr_t& rad() const { return rad_; }
  double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  double rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

  bool is_exact() const { return mpfr_zero_p(rad_) != 0; }
  bool is_positive() const;  // every point > 0
  bool is_negative() const;  // every point < 0
  bool contains_zero() const { return !is_positive() && !is_negative(); }
  bool contains(const Rational& v) const;
  bool overlaps(const BigReal& other) const;
  // Upper bound for |x| over the ball.
  BigReal abs_upper() const;

  // log2 of rad/|mid|, or +inf if the ball contains zero, -inf if exact.
  double relative_radius_log2() const;

  // Upper bound of |x - y| over both balls is below eps.
  bool certified_close(const BigReal& other, const Rational& eps) const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  // Throws PreconditionError if b contains zero.
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  BigReal operator-() const;

  // Decimal form with only certified digits after the point, e.g.
  // "2.0000000000" or "1.4142135623730950488".  Appends " +- r" when
  // show_radius is set.
  std::string to_decimal(int max_digits = 60, bool show_radius = false) const;

 private:
  explicit BigReal(long prec);
  // Adds |mid| * 2^(1-prec) to the radius when an MPFR result was rounded.
  void add_rounding(int ternary);

  mpfr_t mid_;
  mpfr_t rad_;

  friend struct BallAccess;
};

// Elementary functions with ball semantics.  prec is the working precision
// of the result midpoint (at least 32 bits); radii are at most a few ulps
// beyond the propagated input error.
BigReal pi(long prec);
BigReal sqrt(const BigReal& x);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sin_pi_rational(const Rational& a, long prec);
inline BigReal sin_pi_rational(const TorusPoint& a, long prec) { return sin_pi_rational(a.value(), prec); }
BigReal cos_pi_rational(const Rational& a, long prec);
BigReal pow_rational(const BigReal& x, const Rational& r);
BigReal log(const Rational& x, long prec);
BigReal exp(const Rational& x, long prec);
BigReal pow_rational(const Rational& x, const Rational& r, long prec);

// Gamma(a) for rational a > 0 by Spouge's formula, with relative radius at
// most 2^(8 - prec).
BigReal gamma(const Rational& a, long prec);

// Complex balls as pairs of real balls.
struct ComplexBall {
  BigReal re;
  BigReal im;

  static ComplexBall one(long prec);
  // e(a) = exp(2 pi i a).
  static ComplexBall unit(const Rational& a, long prec);

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  // Throws PreconditionError if |b|^2 contains zero.
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
  ComplexBall scaled(const BigReal& k) const { return {re * k, im * k}; }
};

}  // namespace qabe
