#pragma once

// Das classes a_pq and exact checks of the identities relating them:
// the first and second Das identities, the conjugation formula and the
// torsion witness.

#include <cstdint>

#include "qabe/distribution.hpp"

namespace qabe {

// [0] for odd p, [0] + [1/2] for p = 2.
FormalSum base_x(std::int64_t p);

// The x used for an unordered pair of distinct primes: base_x(2) when 2 is
// one of them, [0] otherwise.
FormalSum pair_x(std::int64_t p, std::int64_t q);

// (H Y_p H Y_q - H Y_q H Y_p) x.
FormalSum das_representative(std::int64_t p, std::int64_t q, const Selector& h);

// The closed-form sum for a_pq with respect to the canonical selector.
FormalSum canonical_apq(std::int64_t p, std::int64_t q);

// 2a = (Y_p H Y_q - Y_q H Y_p) x + (1 + sigma_{-1}) a.
bool first_das_identity_check(std::int64_t p, std::int64_t q, const Selector& h);

struct SecondDasWitness {
  FormalSum a;
  FormalSum a_bar;
  FormalSum b;
  FormalSum c;
};

SecondDasWitness second_das_witness(std::int64_t p, std::int64_t q, const Selector& h, const Selector& h_bar);

// a - a_bar = b + (1 + sigma_{-1}) c.
bool second_das_identity_check(std::int64_t p, std::int64_t q, const Selector& h, const Selector& h_bar);

struct ConjugationData {
  FormalSum u_p;      // H (1 - sigma) H Y_q x
  FormalSum u_q;      // H (1 - sigma) H Y_p x
  FormalSum b_sigma;  // Y_p u_p - Y_q u_q
  FormalSum c_sigma;  // H (1 - sigma) a - H b_sigma
};

// Data for sigma = sigma_t acting at level n, where 4pq | n and
// gcd(t, n) = 1.  Verifies (1 - sigma) a = b + (1 + sigma_{-1}) c and
// throws InternalError if it fails.
ConjugationData conjugation_data(std::int64_t p, std::int64_t q, const Selector& h, const Integer& t, const Integer& n);

struct TorsionWitness {
  FormalSum a;    // canonical_apq(p, q)
  FormalSum y_p;  // H Y_q x, so the Y_p-part is Y_p(y_p)
  FormalSum y_q;  // H Y_p x
  bool holds = false;
};

// 2a = Y_p(H Y_q x) - Y_q(H Y_p x) + (1 + sigma_{-1}) a for the canonical
// lifting operator.
TorsionWitness torsion_witness(std::int64_t p, std::int64_t q);
inline bool torsion_witness_check(std::int64_t p, std::int64_t q) { return torsion_witness(p, q).holds; }

}  // namespace qabe
