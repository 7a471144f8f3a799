#include "qabe/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qabe/errors.hpp"

namespace qabe {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

class Scratch {
 public:
  explicit Scratch(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void check_prec(long prec) {
  if (prec < 32) throw PreconditionError("precision must be at least 32 bits");
}

}  // namespace

struct BallAccess {
  static BigReal make(long prec) { return BigReal(prec); }
  static mpfr_ptr mid(BigReal& x) { return x.mid_; }
  static mpfr_ptr rad(BigReal& x) { return x.rad_; }
  static void rounding(BigReal& x, int ternary) { x.add_rounding(ternary); }

  // rad(x) += v, rounded up.
  static void widen(BigReal& x, mpfr_srcptr v) { mpfr_add(x.rad_, x.rad_, v, MPFR_RNDU); }

  // Lower bound of |x| over the ball (may be negative when it meets 0).
  static void abs_lower(mpfr_ptr out, const BigReal& x) {
    mpfr_abs(out, x.mid_, MPFR_RNDD);
    mpfr_sub(out, out, x.rad_, MPFR_RNDD);
  }
  static void abs_upper(mpfr_ptr out, const BigReal& x) {
    mpfr_abs(out, x.mid_, MPFR_RNDU);
    mpfr_add(out, out, x.rad_, MPFR_RNDU);
  }
  static void lower(mpfr_ptr out, const BigReal& x) { mpfr_sub(out, x.mid_, x.rad_, MPFR_RNDD); }
  static void upper(mpfr_ptr out, const BigReal& x) { mpfr_add(out, x.mid_, x.rad_, MPFR_RNDU); }
};

BigReal::BigReal() : BigReal(64) {}

BigReal::BigReal(long prec) {
  mpfr_init2(mid_, prec);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

BigReal::~BigReal() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(mid_, mpfr_get_prec(other.mid_));
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

BigReal::BigReal(BigReal&& other) noexcept : BigReal(other) {}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(mid_, mpfr_get_prec(other.mid_));
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
  }
  return *this;
}

void BigReal::add_rounding(int ternary) {
  if (ternary == 0) return;
  Scratch e(kRadPrec);
  mpfr_abs(e.get(), mid_, MPFR_RNDU);
  mpfr_mul_2si(e.get(), e.get(), 1 - prec(), MPFR_RNDU);
  mpfr_add(rad_, rad_, e.get(), MPFR_RNDU);
}

BigReal BigReal::from_integer(const Integer& v, long prec) {
  check_prec(prec);
  BigReal r(prec);
  r.add_rounding(mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN));
  return r;
}

BigReal BigReal::from_rational(const Rational& v, long prec) {
  check_prec(prec);
  BigReal r(prec);
  r.add_rounding(mpfr_set_q(r.mid_, v.get_mpq_t(), MPFR_RNDN));
  return r;
}

BigReal BigReal::from_strings(const std::string& mid, const std::string& rad, long prec) {
  check_prec(prec);
  BigReal r(prec);
  if (mpfr_set_str(r.mid_, mid.c_str(), 10, MPFR_RNDN) != 0) r.add_rounding(1);
  Scratch e(kRadPrec);
  if (mpfr_set_str(e.get(), rad.c_str(), 10, MPFR_RNDU) < 0) throw ParseError("bad radius " + rad);
  mpfr_add(r.rad_, r.rad_, e.get(), MPFR_RNDU);
  // mpfr_set_str returns 0 on success regardless of rounding, so always
  // account for one rounding of the midpoint.
  r.add_rounding(1);
  return r;
}

BigReal BigReal::rounded(long prec) const {
  check_prec(prec);
  BigReal r(prec);
  const int t = mpfr_set(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  r.add_rounding(t);
  return r;
}

bool BigReal::is_positive() const {
  Scratch lo(prec() + 1);
  BallAccess::lower(lo.get(), *this);
  return mpfr_sgn(lo.get()) > 0;
}

bool BigReal::is_negative() const {
  Scratch hi(prec() + 1);
  BallAccess::upper(hi.get(), *this);
  return mpfr_sgn(hi.get()) < 0;
}

bool BigReal::contains(const Rational& v) const {
  BigReal d = *this - from_rational(v, std::max(prec(), 64L) + 64);
  return d.contains_zero();
}

bool BigReal::overlaps(const BigReal& other) const { return (*this - other).contains_zero(); }

BigReal BigReal::abs_upper() const {
  BigReal r(prec() + 1);
  BallAccess::abs_upper(r.mid_, *this);
  return r;
}

double BigReal::relative_radius_log2() const {
  if (is_exact()) return -std::numeric_limits<double>::infinity();
  if (contains_zero()) return std::numeric_limits<double>::infinity();
  long e_rad = 0, e_mid = 0;
  double m_rad = mpfr_get_d_2exp(&e_rad, rad_, MPFR_RNDU);
  double m_mid = mpfr_get_d_2exp(&e_mid, mid_, MPFR_RNDN);
  return std::log2(std::fabs(m_rad)) + static_cast<double>(e_rad) - std::log2(std::fabs(m_mid)) -
         static_cast<double>(e_mid);
}

bool BigReal::certified_close(const BigReal& other, const Rational& eps) const {
  BigReal d = *this - other;
  BigReal bound = d.abs_upper();
  Scratch e(std::max(prec(), other.prec()) + 64);
  mpfr_set_q(e.get(), eps.get_mpq_t(), MPFR_RNDD);
  Scratch b(std::max(prec(), other.prec()) + 64);
  BallAccess::upper(b.get(), bound);
  return mpfr_cmp(b.get(), e.get()) < 0;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.prec(), b.prec()));
  int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  r.add_rounding(t);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.prec(), b.prec()));
  int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  r.add_rounding(t);
  return r;
}

BigReal BigReal::operator-() const {
  BigReal r = *this;
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.prec(), b.prec()));
  int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // |a| rb + |b| ra + ra rb
  Scratch x(kRadPrec), y(kRadPrec);
  mpfr_abs(x.get(), a.mid_, MPFR_RNDU);
  mpfr_mul(x.get(), x.get(), b.rad_, MPFR_RNDU);
  mpfr_abs(y.get(), b.mid_, MPFR_RNDU);
  mpfr_mul(y.get(), y.get(), a.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, x.get(), y.get(), MPFR_RNDU);
  mpfr_mul(x.get(), a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, x.get(), MPFR_RNDU);
  r.add_rounding(t);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  if (b.contains_zero()) throw PreconditionError("division by a ball containing zero");
  BigReal r(std::max(a.prec(), b.prec()));
  int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  if (!a.is_exact() || !b.is_exact()) {
    // (ra + |a/b| rb) / (|b| - rb)
    Scratch num(kRadPrec), den(kRadPrec);
    mpfr_abs(num.get(), r.mid_, MPFR_RNDU);
    mpfr_mul(num.get(), num.get(), b.rad_, MPFR_RNDU);
    mpfr_add(num.get(), num.get(), a.rad_, MPFR_RNDU);
    BallAccess::abs_lower(den.get(), b);
    mpfr_div(r.rad_, num.get(), den.get(), MPFR_RNDU);
    // The midpoint quotient itself is off by at most one rounding of |a/b|,
    // already covered below; the propagated bound uses the rounded
    // quotient, so widen by one more ulp to cover that.
    r.add_rounding(1);
  }
  r.add_rounding(t);
  return r;
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  BigReal n = b.re * b.re + b.im * b.im;
  ComplexBall num = a * ComplexBall{b.re, -b.im};
  return {num.re / n, num.im / n};
}

std::string BigReal::to_decimal(int max_digits, bool show_radius) const {
  // Digits after the point: d with rad < 10^-d / 2, capped.
  int digits = max_digits;
  if (!is_exact()) {
    long e = 0;
    double m = mpfr_get_d_2exp(&e, rad_, MPFR_RNDU);
    double log10_rad = (std::log2(m) + static_cast<double>(e)) * std::log10(2.0);
    digits = std::clamp(static_cast<int>(std::floor(-log10_rad - std::log10(2.0))) - 1, 0, max_digits);
  } else {
    digits = std::min(max_digits, static_cast<int>(static_cast<double>(prec()) * std::log10(2.0)));
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", digits, mid_);
  std::string out(buf);
  mpfr_free_str(buf);
  if (show_radius) {
    mpfr_asprintf(&buf, " +- %.3Re", rad_);
    out += buf;
    mpfr_free_str(buf);
  }
  return out;
}

BigReal pi(long prec) {
  check_prec(prec);
  BigReal r = BallAccess::make(prec);
  BallAccess::rounding(r, mpfr_const_pi(BallAccess::mid(r), MPFR_RNDN));
  return r;
}

BigReal sqrt(const BigReal& x) {
  Scratch lo(x.prec() + 1);
  BallAccess::lower(lo.get(), x);
  if (mpfr_sgn(lo.get()) < 0) throw PreconditionError("sqrt of a ball meeting the negative axis");
  BigReal r = BallAccess::make(x.prec());
  int t = mpfr_sqrt(BallAccess::mid(r), x.mid(), MPFR_RNDN);
  if (!x.is_exact()) {
    if (mpfr_sgn(lo.get()) == 0) {
      // sqrt over [0, hi]: radius sqrt(hi).
      Scratch hi(kRadPrec);
      BallAccess::upper(hi.get(), x);
      mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
      BallAccess::widen(r, hi.get());
    } else {
      Scratch e(kRadPrec);
      mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
      mpfr_div(e.get(), x.rad(), lo.get(), MPFR_RNDU);
      BallAccess::widen(r, e.get());
    }
  }
  BallAccess::rounding(r, t);
  return r;
}

BigReal log(const BigReal& x) {
  if (!x.is_positive()) throw PreconditionError("log of a ball not contained in (0, inf)");
  BigReal r = BallAccess::make(x.prec());
  int t = mpfr_log(BallAccess::mid(r), x.mid(), MPFR_RNDN);
  if (!x.is_exact()) {
    Scratch lo(x.prec() + 1), e(kRadPrec);
    BallAccess::lower(lo.get(), x);
    mpfr_div(e.get(), x.rad(), lo.get(), MPFR_RNDU);
    BallAccess::widen(r, e.get());
  }
  BallAccess::rounding(r, t);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r = BallAccess::make(x.prec());
  int t = mpfr_exp(BallAccess::mid(r), x.mid(), MPFR_RNDN);
  if (!x.is_exact()) {
    Scratch hi(kRadPrec);
    BallAccess::upper(hi.get(), x);
    mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
    // exp(hi) * (exp(rad) - 1) bounds |exp(y) - exp(mid)|.
    Scratch e(kRadPrec);
    mpfr_expm1(e.get(), x.rad(), MPFR_RNDU);
    mpfr_mul(e.get(), e.get(), hi.get(), MPFR_RNDU);
    BallAccess::widen(r, e.get());
  }
  BallAccess::rounding(r, t);
  return r;
}

BigReal sin(const BigReal& x) {
  BigReal r = BallAccess::make(x.prec());
  int t = mpfr_sin(BallAccess::mid(r), x.mid(), MPFR_RNDN);
  BallAccess::widen(r, x.rad());
  BallAccess::rounding(r, t);
  return r;
}

BigReal cos(const BigReal& x) {
  BigReal r = BallAccess::make(x.prec());
  int t = mpfr_cos(BallAccess::mid(r), x.mid(), MPFR_RNDN);
  BallAccess::widen(r, x.rad());
  BallAccess::rounding(r, t);
  return r;
}

namespace {

// Reduces a to r in (-1, 1] with sin(pi a) = sign * sin(pi r) etc.; the
// reduction is exact on rationals, so only the final evaluation rounds.
Rational reduce_mod2(const Rational& a) {
  Integer q;
  Rational two_floor = a / 2;
  mpz_fdiv_q(q.get_mpz_t(), two_floor.get_num_mpz_t(), two_floor.get_den_mpz_t());
  Rational r = a - Rational(2 * q);
  return r;  // in [0, 2)
}

}  // namespace

BigReal sin_pi_rational(const Rational& a, long prec) {
  check_prec(prec);
  Rational r = reduce_mod2(a);
  int sign = 1;
  if (r >= 1) {
    r -= 1;
    sign = -1;
  }
  // r in [0, 1); fold to [0, 1/2] for accuracy.
  if (r > Rational(1, 2)) r = 1 - r;
  if (r == 0) return BigReal::from_integer(0, prec);
  if (r == Rational(1, 2)) return BigReal::from_integer(sign, prec);
  if (r == Rational(1, 6)) return BigReal::from_rational(Rational(sign, 2), prec);
  BigReal v = sin(pi(prec + 16) * BigReal::from_rational(r, prec + 16));
  return sign < 0 ? -v : v;
}

BigReal cos_pi_rational(const Rational& a, long prec) { return sin_pi_rational(a + Rational(1, 2), prec); }

BigReal pow_rational(const BigReal& x, const Rational& r) {
  if (r == 0) return BigReal::from_integer(1, x.prec());
  return exp(log(x) * BigReal::from_rational(r, x.prec()));
}

BigReal log(const Rational& x, long prec) { return log(BigReal::from_rational(x, prec)); }

BigReal exp(const Rational& x, long prec) { return exp(BigReal::from_rational(x, prec)); }

BigReal pow_rational(const Rational& x, const Rational& r, long prec) {
  if (x <= 0) throw PreconditionError("pow_rational needs a positive base");
  return pow_rational(BigReal::from_rational(x, prec + 16), r);
}

namespace {

// Gamma(z + 1) for rational z >= 0 by Spouge's formula with parameter A at
// working precision wp.  Returns a ball that includes the truncation error
// bound sqrt(A) (2 pi)^-(A + 1/2) relative to the result.
BigReal spouge_gamma1(const Rational& z, long wp, long big_a) {
  const BigReal two_pi = pi(wp) * BigReal::from_integer(2, wp);
  BigReal sum = sqrt(two_pi);
  BigReal factorial = BigReal::from_integer(1, wp);  // (k-1)!
  const BigReal zb = BigReal::from_rational(z, wp);
  for (long k = 1; k < big_a; ++k) {
    if (k > 1) factorial = factorial * BigReal::from_integer(k - 1, wp);
    // c_k = (-1)^(k-1) / (k-1)! * (A-k)^(k-1/2) * e^(A-k)
    const BigReal base = BigReal::from_integer(big_a - k, wp);
    BigReal ck = exp(log(base) * BigReal::from_rational(Rational(2 * k - 1, 2), wp) +
                     BigReal::from_integer(big_a - k, wp)) /
                 factorial;
    if (k % 2 == 0) ck = -ck;
    sum = sum + ck / (zb + BigReal::from_integer(k, wp));
  }
  const BigReal za = zb + BigReal::from_integer(big_a, wp);
  BigReal result = exp(log(za) * (zb + BigReal::from_rational(Rational(1, 2), wp)) - za) * sum;
  // Truncation: relative error at most sqrt(A) (2 pi)^-(A+1/2); use a
  // slightly larger power-of-two bound.
  const double log2_err = 0.5 * std::log2(static_cast<double>(big_a)) -
                          (static_cast<double>(big_a) + 0.5) * std::log2(2.0 * M_PI) + 1.0;
  Scratch e(64), m(64);
  mpfr_abs(m.get(), result.mid(), MPFR_RNDU);
  mpfr_add(m.get(), m.get(), result.rad(), MPFR_RNDU);
  mpfr_mul_2si(e.get(), m.get(), static_cast<long>(std::ceil(log2_err)), MPFR_RNDU);
  BallAccess::widen(result, e.get());
  return result;
}

}  // namespace

BigReal gamma(const Rational& a, long prec) {
  check_prec(prec);
  if (a <= 0) throw PreconditionError("gamma needs a positive argument");
  // Shift to z = a - 1 + m >= 0 via Gamma(a) = Gamma(a + m) / (a (a+1) ... (a+m-1)).
  long shift = 0;
  Rational z = a - 1;
  while (z < 0) {
    z += 1;
    ++shift;
  }
  const long big_a = static_cast<long>(std::ceil((static_cast<double>(prec) + 12.0) / std::log2(2.0 * M_PI))) + 1;
  long wp = 2 * prec + 64;
  for (int attempt = 0; attempt < 8; ++attempt, wp *= 2) {
    BigReal g = spouge_gamma1(z, wp, big_a);
    for (long i = 0; i < shift; ++i) g = g / BigReal::from_rational(a + i, wp);
    if (g.relative_radius_log2() <= static_cast<double>(8 - prec)) {
      return g.rounded(prec);
    }
  }
  throw InternalError("gamma: precision target not reached");
}

ComplexBall ComplexBall::one(long prec) { return {BigReal::from_integer(1, prec), BigReal::from_integer(0, prec)}; }

ComplexBall ComplexBall::unit(const Rational& a, long prec) {
  return {cos_pi_rational(2 * a, prec), sin_pi_rational(2 * a, prec)};
}

}  // namespace qabe
