#pragma once

// The free abelian group A on symbols [a], a in Q/Z, with its Galois
// action and the operator calculus used to build and manipulate Das
// classes: Y_p, Theta_p, the parity projector P, deg, and lifting
// operators H_T.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include "qabe/integer.hpp"
#include "qabe/torus.hpp"

namespace qabe {

class FormalSum {
 public:
  using Terms = std::map<TorusPoint, Integer>;

  FormalSum() = default;

  static FormalSum zero() { return {}; }
  static FormalSum single(const TorusPoint& a, const Integer& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const TorusPoint& a) const;

  // Adds coeff * [a], dropping the term if it cancels.
  void add_term(const TorusPoint& a, const Integer& coeff);

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator-=(const FormalSum& other);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  FormalSum operator-() const;
  friend FormalSum operator*(const Integer& k, const FormalSum& s);

  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

inline FormalSum add(const FormalSum& s, const FormalSum& t) { return s + t; }
inline FormalSum negate(const FormalSum& s) { return -s; }
inline FormalSum scale(const Integer& k, const FormalSum& s) { return k * s; }
inline FormalSum single(const TorusPoint& a) { return FormalSum::single(a); }

Integer deg(const FormalSum& s);

// sigma_t[a] = [t a].  Throws PreconditionError unless t is prime to every
// denominator in the support.
FormalSum galois_act(const Integer& t, const FormalSum& s);
inline FormalSum galois_act(std::int64_t t, const FormalSum& s) { return galois_act(make_integer(t), s); }

// Complex conjugation sigma_{-1}.
inline FormalSum conjugate(const FormalSum& s) { return galois_act(-1, s); }

// Y_p[a] = [a] - sum_{i=0}^{p-1} [(a+i)/p].
FormalSum y_op(std::int64_t p, const FormalSum& s);

// Theta_p = sum_{i=0}^{(p-3)/2} sigma_{t_p}^i for an odd prime p.
FormalSum theta_op(std::int64_t p, const Integer& t_p, const FormalSum& s);

// Keeps the terms whose point is a 2-adic unit.  Requires s in A''.
FormalSum p_projector(const FormalSum& s);

// A': no support point in (1/2)Z.
bool in_A_prime(const FormalSum& s);
// A'': support points of odd order in the open interval (0, 1).
bool in_A_doubleprime(const FormalSum& s);

// A lifting-operator datum: for each pair {a, 1-a} with a not in (1/2)Z it
// names the member lying in T.  Immutable and safe to share between
// threads.
class Selector {
 public:
  // Decides, for a point m with 0 < m < 1/2, whether m (rather than 1-m)
  // lies in T.
  using Rule = std::function<bool(const TorusPoint&)>;

  Selector(std::string name, Rule rule);

  // T = (0, 1/2).
  static Selector canonical();

  // Pseudorandom but deterministic per seed.
  static Selector seeded(std::uint64_t seed);

  // The lifting operator singled out in the proof of the Main Formula.  It
  // is pinned on the orbits of [q/p], [p/q], [-1/p+1/q] under the inertia
  // generators (odd p), respectively [4/q], [q/4], [1/2+2/q], [+-1/4+1/q]
  // (p = 2), and is canonical elsewhere.  t_p, t_q are the integers
  // realizing sigma_p, sigma_q.
  static Selector main_formula(std::int64_t p, std::int64_t q, const Integer& t_p, const Integer& t_q);

  // True iff a lies in T.  Requires a not in (1/2)Z.
  bool contains(const TorusPoint& a) const;

  const std::string& name() const { return *name_; }

 private:
  std::shared_ptr<const std::string> name_;
  std::shared_ptr<const Rule> rule_;
};

// H_T: keeps the terms chosen by the selector.  Requires s in A'.
FormalSum lift(const Selector& h, const FormalSum& s);

}  // namespace qabe
