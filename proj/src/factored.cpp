#include "qabe/factored.hpp"

#include <sstream>
#include <vector>

#include "qabe/errors.hpp"

namespace qabe {

FactoredCyclo::FactoredCyclo() : FactoredCyclo(1, Rational(1), 0) {}

FactoredCyclo::FactoredCyclo(std::int64_t level, Rational scalar, std::int64_t root)
    : level_(level), scalar_(std::move(scalar)), root_(floor_mod(root, level)) {
  if (level <= 0) throw PreconditionError("factored cyclotomic: level must be positive");
}

FactoredCyclo FactoredCyclo::one(std::int64_t level) { return FactoredCyclo(level, Rational(1), 0); }

FactoredCyclo FactoredCyclo::rational(std::int64_t level, const Rational& r) {
  if (r == 0) throw PreconditionError("factored cyclotomic: zero is not representable");
  return FactoredCyclo(level, r, 0);
}

FactoredCyclo FactoredCyclo::root(std::int64_t level, std::int64_t e) { return FactoredCyclo(level, Rational(1), e); }

FactoredCyclo FactoredCyclo::one_minus_zeta(std::int64_t level, std::int64_t k) {
  FactoredCyclo x = one(level);
  x.add_factor(k, 1);
  return x;
}

void FactoredCyclo::add_factor(std::int64_t k, std::int64_t m) {
  if (m == 0) return;
  const std::int64_t n = level_;
  k = floor_mod(k, n);
  if (k == 0) throw PreconditionError("factored cyclotomic: 1 - z^0 = 0");
  if (2 * k == n) {
    // 1 - (-1) = 2
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(m > 0 ? m : -m));
    scalar_ = m > 0 ? Rational(scalar_ * two_pow) : Rational(scalar_ / two_pow);
    return;
  }
  if (2 * k > n) {
    // 1 - z^k = -z^k (1 - z^(n-k))
    if (m % 2 != 0) scalar_ = -scalar_;
    root_ = floor_mod(root_ + mul_mod(k, floor_mod(m, n), n), n);
    k = n - k;
  }
  auto [it, inserted] = factors_.try_emplace(k, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) factors_.erase(it);
  }
}

void FactoredCyclo::lift_common(const FactoredCyclo& a, const FactoredCyclo& b, FactoredCyclo& a_out,
                                FactoredCyclo& b_out) {
  const std::int64_t m = lcm64(a.level_, b.level_);
  a_out = a.embed(m);
  b_out = b.embed(m);
}

FactoredCyclo operator*(const FactoredCyclo& a, const FactoredCyclo& b) {
  if (a.level_ != b.level_) {
    FactoredCyclo x, y;
    FactoredCyclo::lift_common(a, b, x, y);
    return x * y;
  }
  FactoredCyclo r = a;
  r.scalar_ *= b.scalar_;
  r.root_ = floor_mod(r.root_ + b.root_, r.level_);
  for (const auto& [k, m] : b.factors_) r.add_factor(k, m);
  return r;
}

FactoredCyclo FactoredCyclo::inverse() const {
  FactoredCyclo r(level_, 1 / scalar_, -root_);
  for (const auto& [k, m] : factors_) r.factors_.emplace(k, -m);
  return r;
}

FactoredCyclo operator/(const FactoredCyclo& a, const FactoredCyclo& b) { return a * b.inverse(); }

FactoredCyclo FactoredCyclo::operator-() const {
  FactoredCyclo r = *this;
  r.scalar_ = -r.scalar_;
  return r;
}

FactoredCyclo FactoredCyclo::pow(std::int64_t e) const {
  Integer s_num, s_den;
  const unsigned long ae = static_cast<unsigned long>(e > 0 ? e : -e);
  mpz_pow_ui(s_num.get_mpz_t(), scalar_.get_num_mpz_t(), ae);
  mpz_pow_ui(s_den.get_mpz_t(), scalar_.get_den_mpz_t(), ae);
  Rational s = e >= 0 ? Rational(s_num, s_den) : Rational(s_den, s_num);
  s.canonicalize();
  FactoredCyclo r(level_, s, mul_mod(root_, floor_mod(e, level_), level_));
  if (e != 0)
    for (const auto& [k, m] : factors_) r.factors_.emplace(k, m * e);
  return r;
}

FactoredCyclo FactoredCyclo::galois(std::int64_t t) const {
  const std::int64_t tt = floor_mod(t, level_);
  if (level_ > 1 && gcd64(tt, level_) != 1)
    throw PreconditionError("galois: " + std::to_string(t) + " is not prime to " + std::to_string(level_));
  FactoredCyclo r(level_, scalar_, mul_mod(root_, tt, level_));
  for (const auto& [k, m] : factors_) r.add_factor(mul_mod(k, tt, level_), m);
  return r;
}

FactoredCyclo FactoredCyclo::embed(std::int64_t m) const {
  if (m <= 0 || m % level_ != 0)
    throw PreconditionError("embed: level " + std::to_string(level_) + " does not divide " + std::to_string(m));
  if (m == level_) return *this;
  const std::int64_t step = m / level_;
  FactoredCyclo r(m, scalar_, root_ * step);
  for (const auto& [k, e] : factors_) r.add_factor(k * step, e);
  return r;
}

bool FactoredCyclo::is_one() const {
  if (factors_.empty()) return (scalar_ == 1 && root_ == 0) || (scalar_ == -1 && 2 * root_ == level_);
  // num(u) z^e prod_{m>0} (1 - z^k)^m - den(u) prod_{m<0} (1 - z^k)^-m
  const std::size_t n = static_cast<std::size_t>(level_);
  std::vector<Integer> pos(n), neg(n), tmp(n);
  pos[static_cast<std::size_t>(root_)] = scalar_.get_num();
  neg[0] = scalar_.get_den();
  for (const auto& [k, m] : factors_) {
    std::vector<Integer>& target = m > 0 ? pos : neg;
    const std::size_t shift = static_cast<std::size_t>(k);
    for (std::int64_t rep = 0; rep < (m > 0 ? m : -m); ++rep) {
      // target *= (1 - z^k) in Z[z]/(z^n - 1)
      for (std::size_t i = 0; i < n; ++i) tmp[i] = target[(i + n - shift) % n];
      for (std::size_t i = 0; i < n; ++i) target[i] -= tmp[i];
    }
  }
  std::vector<Integer> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = pos[i] - neg[i];
  const std::vector<std::int64_t>& phi = cyclotomic_poly(level_);
  const std::size_t d = phi.size() - 1;
  std::vector<std::pair<std::size_t, std::int64_t>> sparse;
  for (std::size_t j = 0; j < d; ++j)
    if (phi[j] != 0) sparse.emplace_back(j, phi[j]);
  for (std::size_t i = n; i-- > d;) {
    if (diff[i] == 0) continue;
    for (const auto& [j, c] : sparse) {
      Integer& t = diff[i - d + j];
      if (c > 0)
        mpz_submul_ui(t.get_mpz_t(), diff[i].get_mpz_t(), static_cast<unsigned long>(c));
      else
        mpz_addmul_ui(t.get_mpz_t(), diff[i].get_mpz_t(), static_cast<unsigned long>(-c));
    }
    diff[i] = 0;
  }
  for (std::size_t i = 0; i < d; ++i)
    if (diff[i] != 0) return false;
  return true;
}

bool FactoredCyclo::is_real() const {
  // conj(1 - z^k) = -z^-k (1 - z^k), so conj(x)/x = (-1)^M z^E with
  // M = sum m_k and E = -2e - sum k m_k.
  std::int64_t parity = 0;
  std::int64_t e = floor_mod(-2 * root_, level_);
  for (const auto& [k, m] : factors_) {
    parity += m;
    e = floor_mod(e - mul_mod(k, floor_mod(m, level_), level_), level_);
  }
  if (floor_mod(parity, 2) == 0) return e == 0;
  return 2 * e == level_;
}

ComplexBall FactoredCyclo::evaluate(long prec) const {
  const long wp = prec + 32;
  ComplexBall acc = ComplexBall::unit(Rational(root_, level_), wp).scaled(BigReal::from_rational(scalar_, wp));
  const ComplexBall unit = ComplexBall::one(wp);
  for (const auto& [k, m] : factors_) {
    ComplexBall f = unit - ComplexBall::unit(Rational(k, level_), wp);
    if (m < 0) f = unit / f;
    const std::int64_t am = m > 0 ? m : -m;
    ComplexBall power = unit;
    ComplexBall base = f;
    for (std::int64_t e = am; e > 0; e >>= 1) {
      if (e & 1) power = power * base;
      if (e > 1) base = base * base;
    }
    acc = acc * power;
  }
  return acc;
}

int FactoredCyclo::sign_of_real() const {
  if (!is_real()) throw PreconditionError("sign_of_real: argument is not real");
  for (long prec = 128; prec <= (1L << 20); prec *= 2) {
    const ComplexBall v = evaluate(prec);
    if (v.re.is_positive()) return 1;
    if (v.re.is_negative()) return -1;
  }
  throw InternalError("sign_of_real: sign not certified");
}

CycloNum FactoredCyclo::to_cyclo() const {
  CycloNum acc = CycloNum::from_rational(level_, scalar_) * CycloNum::zeta(level_, root_);
  const CycloNum one = CycloNum::from_rational(level_, Rational(1));
  for (const auto& [k, m] : factors_) acc = acc * (one - CycloNum::zeta(level_, k)).pow(m);
  return acc;
}

std::string FactoredCyclo::to_string() const {
  std::ostringstream out;
  out << scalar_.get_str();
  if (root_ != 0) out << " * z^" << root_;
  for (const auto& [k, m] : factors_) {
    out << " * (1 - z^" << k << ")";
    if (m != 1) out << "^" << m;
  }
  return out.str();
}

namespace {

void require_divides(const TorusPoint& a, std::int64_t n, std::int64_t factor) {
  if (make_integer(n) % (a.den() * factor) != 0)
    throw PreconditionError("level " + std::to_string(n) + " is too small for " + a.to_string());
}

}  // namespace

FactoredCyclo sin_factored(const FormalSum& s, std::int64_t n) {
  if (n <= 0 || n % 4 != 0) throw PreconditionError("sin_factored: level must be a positive multiple of 4");
  FactoredCyclo acc = FactoredCyclo::one(n);
  for (const auto& [a, m] : s.terms()) {
    if (a.is_zero()) continue;
    require_divides(a, n, 2);
    const std::int64_t step = to_int64(make_integer(n) / a.den());
    const std::int64_t num = to_int64(a.num());
    const std::int64_t e = to_int64(m);
    // 2 sin(pi a) = z^(n/4 - num step / 2) (1 - z^(num step))
    FactoredCyclo f = FactoredCyclo::root(n, n / 4 - num * (step / 2)) *
                      FactoredCyclo::one_minus_zeta(n, mul_mod(num, step, n));
    acc = acc * f.pow(e);
  }
  return acc;
}

FactoredCyclo xi_factored(const FormalSum& s, std::int64_t n) {
  if (n <= 0) throw PreconditionError("xi_factored: level must be positive");
  FactoredCyclo acc = FactoredCyclo::one(n);
  for (const auto& [a, m] : s.terms()) {
    if (a.is_zero()) continue;
    require_divides(a, n, 1);
    const std::int64_t k = to_int64(a.num() * (make_integer(n) / a.den()));
    acc = acc * FactoredCyclo::one_minus_zeta(n, k).pow(to_int64(m));
  }
  return acc;
}

}  // namespace qabe
