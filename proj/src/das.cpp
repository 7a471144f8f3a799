#include "qabe/das.hpp"

#include "qabe/errors.hpp"

namespace qabe {

namespace {

void require_prime(std::int64_t p, const char* who) {
  if (!is_prime(p)) throw PreconditionError(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

void require_pair(std::int64_t p, std::int64_t q, const char* who) {
  require_prime(p, who);
  require_prime(q, who);
  if (p == q) throw PreconditionError(std::string(who) + ": primes must be distinct");
}

void require_ordered(std::int64_t p, std::int64_t q, const char* who) {
  require_pair(p, q, who);
  if (p > q) throw PreconditionError(std::string(who) + ": need p < q");
}

FormalSum plus_conj(const FormalSum& s) { return s + conjugate(s); }

FormalSum word(std::int64_t p, std::int64_t q, const Selector& h, const FormalSum& x) {
  return lift(h, y_op(p, lift(h, y_op(q, x)))) - lift(h, y_op(q, lift(h, y_op(p, x))));
}

}  // namespace

FormalSum base_x(std::int64_t p) {
  require_prime(p, "base_x");
  FormalSum x = FormalSum::single(TorusPoint());
  if (p == 2) x.add_term(TorusPoint::make(1, 2), 1);
  return x;
}

FormalSum pair_x(std::int64_t p, std::int64_t q) { return (p == 2 || q == 2) ? base_x(2) : FormalSum::single(TorusPoint()); }

FormalSum das_representative(std::int64_t p, std::int64_t q, const Selector& h) {
  require_ordered(p, q, "das_representative");
  return word(p, q, h, pair_x(p, q));
}

FormalSum canonical_apq(std::int64_t p, std::int64_t q) {
  require_ordered(p, q, "canonical_apq");
  FormalSum a;
  const Integer pq = make_integer(p * q);
  if (p != 2) {
    for (std::int64_t i = 1; i <= (p - 1) / 2; ++i) {
      a.add_term(TorusPoint::make(i, p), 1);
      for (std::int64_t k = 0; k <= (q - 1) / 2; ++k)
        a.add_term(TorusPoint::make(make_integer(i + k * p), pq), -1);
    }
    for (std::int64_t j = 1; j <= (q - 1) / 2; ++j) {
      a.add_term(TorusPoint::make(j, q), -1);
      for (std::int64_t l = 0; l <= (p - 1) / 2; ++l)
        a.add_term(TorusPoint::make(make_integer(j + l * q), pq), 1);
    }
    return a;
  }
  // [1/4] - sum_k [1/(4q) + k/q]
  a.add_term(TorusPoint::make(1, 4), 1);
  for (std::int64_t k = 0; k <= (q - 1) / 2; ++k) a.add_term(TorusPoint::make(1 + 4 * k, 4 * q), -1);
  // - sum_j ([j/q] + [-1/(2q) + j/q] - [j/(2q)] - [-1/(4q) + j/(2q)])
  for (std::int64_t j = 1; j <= (q - 1) / 2; ++j) {
    a.add_term(TorusPoint::make(j, q), -1);
    a.add_term(TorusPoint::make(2 * j - 1, 2 * q), -1);
    a.add_term(TorusPoint::make(j, 2 * q), 1);
    a.add_term(TorusPoint::make(2 * j - 1, 4 * q), 1);
  }
  return a;
}

bool first_das_identity_check(std::int64_t p, std::int64_t q, const Selector& h) {
  require_pair(p, q, "first_das_identity_check");
  const FormalSum x = pair_x(p, q);
  const FormalSum a = word(p, q, h, x);
  const FormalSum rhs = y_op(p, lift(h, y_op(q, x))) - y_op(q, lift(h, y_op(p, x))) + plus_conj(a);
  return Integer(2) * a == rhs;
}

SecondDasWitness second_das_witness(std::int64_t p, std::int64_t q, const Selector& h, const Selector& h_bar) {
  require_pair(p, q, "second_das_identity_check");
  const FormalSum x = pair_x(p, q);
  SecondDasWitness w;
  w.a = word(p, q, h, x);
  w.a_bar = word(p, q, h_bar, x);
  const FormalSum yq = y_op(q, x), yp = y_op(p, x);
  const FormalSum dq = lift(h, lift(h, yq) - lift(h_bar, yq));
  const FormalSum dp = lift(h, lift(h, yp) - lift(h_bar, yp));
  w.b = y_op(p, dq) - y_op(q, dp);
  w.c = lift(h, w.a - w.a_bar) - lift(h, w.b);
  return w;
}

bool second_das_identity_check(std::int64_t p, std::int64_t q, const Selector& h, const Selector& h_bar) {
  const SecondDasWitness w = second_das_witness(p, q, h, h_bar);
  return w.a - w.a_bar == w.b + plus_conj(w.c);
}

ConjugationData conjugation_data(std::int64_t p, std::int64_t q, const Selector& h, const Integer& t, const Integer& n) {
  require_pair(p, q, "conjugation_data");
  if (n <= 0 || n % (4 * make_integer(p * q)) != 0)
    throw PreconditionError("conjugation_data: level must be a positive multiple of 4pq");
  if (gcd(t, n) != 1) throw PreconditionError("conjugation_data: t must be prime to the level");
  const Integer tt = floor_mod(t, n);
  const FormalSum x = pair_x(p, q);
  auto one_minus_sigma = [&tt](const FormalSum& s) { return s - galois_act(tt, s); };

  const FormalSum a = word(p, q, h, x);
  ConjugationData d;
  d.u_p = lift(h, one_minus_sigma(lift(h, y_op(q, x))));
  d.u_q = lift(h, one_minus_sigma(lift(h, y_op(p, x))));
  d.b_sigma = y_op(p, d.u_p) - y_op(q, d.u_q);
  d.c_sigma = lift(h, one_minus_sigma(a)) - lift(h, d.b_sigma);
  if (one_minus_sigma(a) != d.b_sigma + plus_conj(d.c_sigma))
    throw InternalError("Das conjugation formula failed for p=" + std::to_string(p) + " q=" + std::to_string(q) +
                        " t=" + tt.get_str() + " selector " + h.name());
  return d;
}

TorsionWitness torsion_witness(std::int64_t p, std::int64_t q) {
  require_ordered(p, q, "torsion_witness_check");
  const Selector h = Selector::canonical();
  const FormalSum x = base_x(p);
  TorsionWitness w;
  w.a = canonical_apq(p, q);
  w.y_p = lift(h, y_op(q, x));
  w.y_q = lift(h, y_op(p, x));
  w.holds = Integer(2) * w.a == y_op(p, w.y_p) - y_op(q, w.y_q) + plus_conj(w.a);
  return w;
}

}  // namespace qabe
