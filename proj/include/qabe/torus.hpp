#pragma once

// Points of Q/Z in canonical form num/den with 0 <= num < den and
// gcd(num, den) = 1.  The point 0 is 0/1.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "qabe/integer.hpp"

namespace qabe {

class TorusPoint {
 public:
  TorusPoint() : num_(0), den_(1) {}

  // Canonical representative of num/den mod Z.  Throws PreconditionError
  // on a zero denominator.
  static TorusPoint make(const Integer& num, const Integer& den);
  static TorusPoint make(std::int64_t num, std::int64_t den) {
    return make(make_integer(num), make_integer(den));
  }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  // t * a mod Z.
  TorusPoint scaled(const Integer& t) const;
  TorusPoint scaled(std::int64_t t) const { return scaled(make_integer(t)); }

  TorusPoint operator-() const;
  friend TorusPoint operator+(const TorusPoint& a, const TorusPoint& b);
  friend TorusPoint operator-(const TorusPoint& a, const TorusPoint& b) { return a + (-b); }

  // Odd order, i.e. lies in Z_2.
  bool is_two_adic_integer() const { return mpz_odd_p(den_.get_mpz_t()) != 0; }
  // Odd order and 2-adic valuation zero; 0 is not a unit.
  bool is_two_adic_unit() const {
    return is_two_adic_integer() && mpz_odd_p(num_.get_mpz_t()) != 0;
  }
  // Lies in (1/2)Z / Z, i.e. is 0 or 1/2.
  bool is_half_integer() const { return den_ == 1 || den_ == 2; }

  // Strictly below 1/2 as a real number in [0, 1).
  bool below_half() const { return 2 * num_ < den_; }

  Rational value() const { return Rational(num_, den_); }

  // "num/den"; the zero point renders as "0/1".
  std::string to_string() const;

  // Structural order (den, then num).  Not the order of the reals.
  friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const TorusPoint& a, const TorusPoint& b) {
    int c = mpz_cmp(a.den_.get_mpz_t(), b.den_.get_mpz_t());
    if (c == 0) c = mpz_cmp(a.num_.get_mpz_t(), b.num_.get_mpz_t());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  TorusPoint(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {}

  Integer num_;
  Integer den_;
};

inline TorusPoint make_point(const Integer& num, const Integer& den) {
  return TorusPoint::make(num, den);
}

inline TorusPoint scale_point(const Integer& t, const TorusPoint& a) { return a.scaled(t); }

inline bool is_two_adic_integer(const TorusPoint& a) { return a.is_two_adic_integer(); }
inline bool is_two_adic_unit(const TorusPoint& a) { return a.is_two_adic_unit(); }
inline bool is_half_integer(const TorusPoint& a) { return a.is_half_integer(); }

std::ostream& operator<<(std::ostream& os, const TorusPoint& a);

}  // namespace qabe
