#include "qabe/torus.hpp"

#include "qabe/errors.hpp"

namespace qabe {

TorusPoint TorusPoint::make(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("make_point: zero denominator");
  Integer n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Integer g = gcd(n, d);
  if (g != 1) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
  }
  mpz_fdiv_r(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return TorusPoint(std::move(n), std::move(d));
}

TorusPoint TorusPoint::scaled(const Integer& t) const { return make(t * num_, den_); }

TorusPoint TorusPoint::operator-() const {
  if (num_ == 0) return *this;
  return TorusPoint(den_ - num_, den_);
}

TorusPoint operator+(const TorusPoint& a, const TorusPoint& b) {
  return TorusPoint::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::string TorusPoint::to_string() const { return num_.get_str() + "/" + den_.get_str(); }

std::ostream& operator<<(std::ostream& os, const TorusPoint& a) { return os << a.to_string(); }

}  // namespace qabe
