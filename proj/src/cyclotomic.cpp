#include "qabe/cyclotomic.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "qabe/errors.hpp"
#include "qabe/galois_select.hpp"

namespace qabe {

namespace {

std::int64_t checked_mul_sub(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_sub_overflow(acc, prod, &out))
    throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  return out;
}

std::vector<std::int64_t> compute_cyclotomic(std::int64_t n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<std::int64_t>& b = cyclotomic_poly(d);
    const std::size_t db = b.size() - 1;
    const std::size_t da = poly.size() - 1;
    std::vector<std::int64_t> quotient(da - db + 1, 0);
    for (std::size_t i = da + 1; i-- > db;) {
      const std::int64_t c = poly[i];
      quotient[i - db] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) poly[i - db + j] = checked_mul_sub(poly[i - db + j], c, b[j]);
    }
    for (std::size_t j = 0; j < db; ++j)
      if (poly[j] != 0) throw InternalError("cyclotomic_poly: inexact division");
    poly = std::move(quotient);
  }
  return poly;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::int64_t, std::unique_ptr<const std::vector<std::int64_t>>>& cache() {
  static std::map<std::int64_t, std::unique_ptr<const std::vector<std::int64_t>>> c;
  return c;
}

struct Sparse {
  std::vector<std::pair<std::size_t, std::int64_t>> terms;  // (index, coeff) of Phi below the top
  std::size_t degree = 0;
};

Sparse sparse_of(std::int64_t level) {
  const std::vector<std::int64_t>& phi = cyclotomic_poly(level);
  Sparse s;
  s.degree = phi.size() - 1;
  for (std::size_t j = 0; j < s.degree; ++j)
    if (phi[j] != 0) s.terms.emplace_back(j, phi[j]);
  return s;
}

void require_level(std::int64_t level) {
  if (level <= 0) throw PreconditionError("cyclotomic level must be positive");
}

// Dense Rational polynomials for the inverse computation.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out(std::max(a.size(), q.size() + b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

const std::vector<std::int64_t>& cyclotomic_poly(std::int64_t n) {
  if (n <= 0) throw PreconditionError("cyclotomic_poly: n must be positive");
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(n);
    if (it != cache().end()) return *it->second;
  }
  std::vector<std::int64_t> poly = n == 1 ? std::vector<std::int64_t>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = cache().try_emplace(n, std::make_unique<const std::vector<std::int64_t>>(std::move(poly)));
  return *it->second;
}

CycloNum::CycloNum() : level_(1), num_(1), den_(1) {}

CycloNum::CycloNum(std::int64_t level, std::vector<Integer> num, Integer den)
    : level_(level), num_(std::move(num)), den_(std::move(den)) {}

CycloNum CycloNum::reduce(std::int64_t level, std::vector<Integer> poly, Integer den) {
  const Sparse phi = sparse_of(level);
  const std::size_t d = phi.degree;
  for (std::size_t i = poly.size(); i-- > d;) {
    if (poly[i] == 0) continue;
    const Integer c = poly[i];
    for (const auto& [j, coeff] : phi.terms) {
      Integer& target = poly[i - d + j];
      if (coeff > 0)
        mpz_submul_ui(target.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(coeff));
      else
        mpz_addmul_ui(target.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-coeff));
    }
    poly[i] = 0;
  }
  poly.resize(d);
  if (den < 0) {
    den = -den;
    for (auto& c : poly) c = -c;
  }
  Integer g = den;
  for (const auto& c : poly) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  bool all_zero = true;
  for (const auto& c : poly)
    if (c != 0) all_zero = false;
  if (all_zero) return CycloNum(level, std::move(poly), Integer(1));
  if (g != 1) {
    for (auto& c : poly) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  return CycloNum(level, std::move(poly), std::move(den));
}

CycloNum CycloNum::zero(std::int64_t level) {
  require_level(level);
  return CycloNum(level, std::vector<Integer>(static_cast<std::size_t>(euler_phi(level))), Integer(1));
}

CycloNum CycloNum::from_rational(std::int64_t level, const Rational& r) {
  CycloNum z = zero(level);
  z.num_[0] = r.get_num();
  z.den_ = r.get_den();
  if (r == 0) z.den_ = 1;
  return z;
}

CycloNum CycloNum::zeta(std::int64_t level, std::int64_t k) {
  require_level(level);
  std::vector<Integer> poly(static_cast<std::size_t>(level));
  poly[static_cast<std::size_t>(floor_mod(k, level))] = 1;
  return reduce(level, std::move(poly), Integer(1));
}

CycloNum CycloNum::from_coeffs(std::int64_t level, const std::vector<Rational>& coeffs) {
  require_level(level);
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, c.get_den());
  std::vector<Integer> poly(std::max<std::size_t>(coeffs.size(), static_cast<std::size_t>(level)));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Rational scaled = coeffs[i] * den;
    poly[i % static_cast<std::size_t>(level)] += scaled.get_num();
  }
  poly.resize(static_cast<std::size_t>(level));
  return reduce(level, std::move(poly), std::move(den));
}

Rational CycloNum::coeff(std::size_t i) const {
  if (i >= num_.size()) return Rational(0);
  Rational r(num_[i], den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycloNum::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
  return out;
}

bool CycloNum::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

CycloNum CycloNum::embed(std::int64_t m) const {
  require_level(m);
  if (m % level_ != 0)
    throw PreconditionError("embed: level " + std::to_string(level_) + " does not divide " + std::to_string(m));
  if (m == level_) return *this;
  const std::size_t step = static_cast<std::size_t>(m / level_);
  std::vector<Integer> poly(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < num_.size(); ++i) poly[i * step] = num_[i];
  return reduce(m, std::move(poly), den_);
}

void CycloNum::lift_common(const CycloNum& a, const CycloNum& b, CycloNum& a_out, CycloNum& b_out) {
  const std::int64_t m = lcm64(a.level_, b.level_);
  a_out = a.embed(m);
  b_out = b.embed(m);
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  if (a.level_ != b.level_) {
    CycloNum x, y;
    CycloNum::lift_common(a, b, x, y);
    return x + y;
  }
  std::vector<Integer> poly(a.num_.size());
  const Integer den = a.den_ * b.den_;
  for (std::size_t i = 0; i < poly.size(); ++i) poly[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  return CycloNum::reduce(a.level_, std::move(poly), den);
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.level_ != b.level_) {
    CycloNum x, y;
    CycloNum::lift_common(a, b, x, y);
    return x * y;
  }
  const std::size_t d = a.num_.size();
  std::vector<Integer> poly(d == 0 ? 0 : 2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(poly[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  return CycloNum::reduce(a.level_, std::move(poly), a.den_ * b.den_);
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero in Q(zeta_" + std::to_string(level_) + ")");
  const std::vector<std::int64_t>& phi = cyclotomic_poly(level_);
  QPoly r0(phi.begin(), phi.end());
  QPoly r1 = coeffs();
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw InternalError("inverse: element shares a factor with Phi_n");
  for (auto& c : s1) c /= r1[0];
  return from_coeffs(level_, s1);
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

CycloNum CycloNum::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum result = from_rational(level_, Rational(1));
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.level_ != b.level_) {
    CycloNum x, y;
    CycloNum::lift_common(a, b, x, y);
    return x == y;
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CycloNum CycloNum::galois(std::int64_t t) const {
  const std::int64_t tt = floor_mod(t, level_);
  if (gcd64(tt, level_) != 1 && level_ > 1)
    throw PreconditionError("galois: " + std::to_string(t) + " is not prime to " + std::to_string(level_));
  std::vector<Integer> poly(static_cast<std::size_t>(level_));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    poly[static_cast<std::size_t>(mul_mod(static_cast<std::int64_t>(i), tt, level_))] += num_[i];
  }
  return reduce(level_, std::move(poly), den_);
}

ComplexBall CycloNum::evaluate(long prec) const {
  ComplexBall acc{BigReal::from_integer(0, prec), BigReal::from_integer(0, prec)};
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const ComplexBall u = ComplexBall::unit(Rational(static_cast<long>(i), level_), prec);
    acc = acc + u.scaled(BigReal::from_integer(num_[i], prec));
  }
  const BigReal inv_den = BigReal::from_integer(1, prec) / BigReal::from_integer(den_, prec);
  return acc.scaled(inv_den);
}

int CycloNum::sign_of_real() const {
  if (!is_real()) throw PreconditionError("sign_of_real: argument is not real");
  if (is_zero()) return 0;
  for (long prec = 128; prec <= (1L << 20); prec *= 2) {
    const ComplexBall v = evaluate(prec);
    if (v.re.is_positive()) return 1;
    if (v.re.is_negative()) return -1;
  }
  throw InternalError("sign_of_real: sign not certified");
}

std::string CycloNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (i == 0) {
      out << rational_text(c);
      continue;
    }
    if (c != 1) out << rational_text(c) << "*";
    out << "z";
    if (i > 1) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

namespace {

// 1 / (1 - w) for w = z^k of exact order d > 1: -(1/d) sum_j j w^j.
CycloNum inverse_one_minus(std::int64_t level, std::int64_t k) {
  const std::int64_t d = level / gcd64(k, level);
  std::vector<Rational> poly(static_cast<std::size_t>(level), Rational(0));
  for (std::int64_t j = 1; j < d; ++j)
    poly[static_cast<std::size_t>(mul_mod(j, k, level))] += Rational(-j, d);
  return CycloNum::from_coeffs(level, poly);
}

CycloNum one_minus(std::int64_t level, std::int64_t k) {
  return CycloNum::from_rational(level, Rational(1)) - CycloNum::zeta(level, k);
}

void require_divides(const TorusPoint& a, std::int64_t n, std::int64_t factor) {
  const Integer need = a.den() * factor;
  if (make_integer(n) % need != 0)
    throw PreconditionError("level " + std::to_string(n) + " is too small for " + a.to_string());
}

}  // namespace

CycloNum xi_exact(const FormalSum& s, std::int64_t n) {
  require_level(n);
  CycloNum acc = CycloNum::from_rational(n, Rational(1));
  for (const auto& [a, m] : s.terms()) {
    if (a.is_zero()) continue;
    require_divides(a, n, 1);
    const std::int64_t k = to_int64(a.num() * (make_integer(n) / a.den()));
    const std::int64_t e = to_int64(m);
    const CycloNum f = e > 0 ? one_minus(n, k) : inverse_one_minus(n, k);
    acc = acc * f.pow(e > 0 ? e : -e);
  }
  return acc;
}

std::int64_t sin_level(const FormalSum& s) {
  std::int64_t level = 4;
  for (const auto& [a, m] : s.terms())
    if (!a.is_zero()) level = lcm64(level, 2 * to_int64(a.den()));
  return level;
}

CycloNum sin_exact(const FormalSum& s, std::int64_t n) {
  require_level(n);
  if (n % 4 != 0) throw PreconditionError("sin_exact: level must be divisible by 4");
  CycloNum acc = CycloNum::from_rational(n, Rational(1));
  std::int64_t root = 0;
  for (const auto& [a, m] : s.terms()) {
    if (a.is_zero()) continue;
    require_divides(a, n, 2);
    const std::int64_t step = to_int64(make_integer(n) / a.den());
    const std::int64_t num = to_int64(a.num());
    const std::int64_t k = mul_mod(num, step, n);
    const std::int64_t e = to_int64(m);
    // i e(-a/2) = z^(n/4 - num * step / 2)
    root = floor_mod(root + e * floor_mod(n / 4 - num * (step / 2), n), n);
    const CycloNum f = e > 0 ? one_minus(n, k) : inverse_one_minus(n, k);
    acc = acc * f.pow(e > 0 ? e : -e);
  }
  return acc * CycloNum::zeta(n, root);
}

CycloNum sqrt_exact(std::int64_t d) {
  CycloNum root;
  if (d == -1) return CycloNum::zeta(4, 1);
  if (d == 2) {
    root = CycloNum::zeta(8, 1) + CycloNum::zeta(8, -1);
  } else if (d > 2 && is_prime(d)) {
    const std::int64_t level = 4 * d;
    std::vector<Rational> poly(static_cast<std::size_t>(level), Rational(0));
    for (std::int64_t a = 1; a < d; ++a) poly[static_cast<std::size_t>(4 * a)] = legendre(a, d);
    CycloNum g = CycloNum::from_coeffs(level, poly);
    root = d % 4 == 1 ? g : g * CycloNum::zeta(level, -d);
  } else {
    throw PreconditionError("sqrt_exact: " + std::to_string(d) + " is not -1, 2 or an odd prime");
  }
  if (root * root != CycloNum::from_rational(root.level(), Rational(d)))
    throw InternalError("sqrt_exact: square check failed for " + std::to_string(d));
  if (root.sign_of_real() != 1) throw InternalError("sqrt_exact: root is not positive for " + std::to_string(d));
  return root;
}

}  // namespace qabe
