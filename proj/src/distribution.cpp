#include "qabe/distribution.hpp"

#include "qabe/errors.hpp"

namespace qabe {

FormalSum FormalSum::single(const TorusPoint& a, const Integer& coeff) {
  FormalSum s;
  s.add_term(a, coeff);
  return s;
}

Integer FormalSum::coefficient(const TorusPoint& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Integer(0) : it->second;
}

void FormalSum::add_term(const TorusPoint& a, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

FormalSum FormalSum::operator-() const {
  FormalSum r = *this;
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

FormalSum operator*(const Integer& k, const FormalSum& s) {
  if (k == 0) return {};
  FormalSum r = s;
  for (auto& [a, c] : r.terms_) c *= k;
  return r;
}

Integer deg(const FormalSum& s) {
  Integer d = 0;
  for (const auto& [a, c] : s.terms()) d += c;
  return d;
}

FormalSum galois_act(const Integer& t, const FormalSum& s) {
  FormalSum r;
  for (const auto& [a, c] : s.terms()) {
    if (gcd(t, a.den()) != 1)
      throw PreconditionError("galois_act: " + t.get_str() + " is not prime to the order of " + a.to_string());
    r.add_term(a.scaled(t), c);
  }
  return r;
}

FormalSum y_op(std::int64_t p, const FormalSum& s) {
  if (!is_prime(p)) throw PreconditionError("y_op: " + std::to_string(p) + " is not prime");
  const Integer pz = make_integer(p);
  FormalSum r;
  for (const auto& [a, c] : s.terms()) {
    r.add_term(a, c);
    const Integer den = pz * a.den();
    Integer num = a.num();
    for (std::int64_t i = 0; i < p; ++i) {
      r.add_term(TorusPoint::make(num, den), -c);
      num += a.den();
    }
  }
  return r;
}

FormalSum theta_op(std::int64_t p, const Integer& t_p, const FormalSum& s) {
  if (p < 3 || !is_prime(p)) throw PreconditionError("theta_op: p must be an odd prime");
  FormalSum r;
  Integer power = 1;
  for (std::int64_t i = 0; i <= (p - 3) / 2; ++i) {
    r += galois_act(power, s);
    power *= t_p;
  }
  return r;
}

bool in_A_prime(const FormalSum& s) {
  for (const auto& [a, c] : s.terms())
    if (a.is_half_integer()) return false;
  return true;
}

bool in_A_doubleprime(const FormalSum& s) {
  for (const auto& [a, c] : s.terms())
    if (a.is_zero() || !a.is_two_adic_integer()) return false;
  return true;
}

FormalSum p_projector(const FormalSum& s) {
  if (!in_A_doubleprime(s)) throw PreconditionError("p_projector: argument is not supported on odd-order points in (0,1)");
  FormalSum r;
  for (const auto& [a, c] : s.terms())
    if (a.is_two_adic_unit()) r.add_term(a, c);
  return r;
}

FormalSum lift(const Selector& h, const FormalSum& s) {
  FormalSum r;
  for (const auto& [a, c] : s.terms()) {
    if (a.is_half_integer()) throw PreconditionError("lift: support meets (1/2)Z at " + a.to_string());
    if (h.contains(a)) r.add_term(a, c);
  }
  return r;
}

}  // namespace qabe
