#pragma once

// The map D on Q^ab x / squares via the log wedge formula: a family
// v_sigma with sigma(u) = v_sigma^2 u yields signs
// alpha_rs = (sigma_r v_s / v_s) / (sigma_s v_r / v_r) and
// D(u) = sum over alpha_rs = -1 of e_r ^ e_s.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qabe/cyclotomic.hpp"
#include "qabe/distribution.hpp"
#include "qabe/errors.hpp"
#include "qabe/factored.hpp"
#include "qabe/galois_select.hpp"

namespace qabe {

// An element of the second exterior power of H^1 with Z/2 coefficients in
// the basis e_r ^ e_s, r < s in S = {-1, 2, 3, 5, ...}.
class WedgeClass {
 public:
  WedgeClass() = default;
  static WedgeClass basis(std::int64_t r, std::int64_t s);

  // Adds e_r ^ e_s (mod 2); r != s, order irrelevant.
  void toggle(std::int64_t r, std::int64_t s);

  const std::set<std::pair<std::int64_t, std::int64_t>>& pairs() const { return pairs_; }
  bool is_zero() const { return pairs_.empty(); }

  // "e_-1 ^ e_5 + e_3 ^ e_7", or "0".
  std::string to_string() const;
  // "[[-1,5],[3,7]]".
  std::string to_json() const;

  friend bool operator==(const WedgeClass& a, const WedgeClass& b) { return a.pairs_ == b.pairs_; }

 private:
  std::set<std::pair<std::int64_t, std::int64_t>> pairs_;
};

// {v_t : t in (Z/N)^x} attached to u, checked on construction.  Value is
// CycloNum or FactoredCyclo.
template <typename Value>
class VFamily {
 public:
  // Throws InternalError naming the first t with sigma_t(u) != v_t^2 u.
  VFamily(std::int64_t level, Value u, const std::function<Value(std::int64_t)>& v_of_t) : level_(level), u_(u) {
    for (std::int64_t t : units_mod(level)) {
      Value v = v_of_t(t);
      if (!(u_.galois(t) == v * v * u_))
        throw InternalError("v-family check sigma_t(u) = v_t^2 u failed at t = " + std::to_string(t));
      values_.emplace(t, std::move(v));
    }
  }

  std::int64_t level() const { return level_; }
  const Value& u() const { return u_; }
  const Value& v(std::int64_t t) const { return values_.at(floor_mod(t, level_)); }
  std::size_t size() const { return values_.size(); }

  // alpha_rs in {-1, +1}, exactly.  InternalError if the ratio is not +-1.
  int alpha(std::int64_t r, std::int64_t s, RootPolicy policy = RootPolicy::smallest) const {
    const std::int64_t tr = sigma_generator(r, level_, policy).rep;
    const std::int64_t ts = sigma_generator(s, level_, policy).rep;
    const Value& vr = v(tr);
    const Value& vs = v(ts);
    const Value lhs = vs.galois(tr) * vr;
    const Value rhs = vr.galois(ts) * vs;
    if (lhs == rhs) return 1;
    if (lhs == -rhs) return -1;
    throw InternalError("alpha_" + std::to_string(r) + "," + std::to_string(s) + " is not +-1");
  }

 private:
  std::int64_t level_;
  Value u_;
  std::map<std::int64_t, Value> values_;
};

// -1, 2 and the odd primes dividing n: the members of S whose generators
// can act nontrivially on Q(zeta_n).
std::vector<std::int64_t> relevant_primes(std::int64_t n);

struct AlphaEntry {
  std::int64_t r = 0;
  std::int64_t s = 0;
  int exact = 0;  // from the v-family ratio
  int signs = 0;  // from certified signs of conjugated sines (0 if not computed)
};

struct DResult {
  std::int64_t level = 0;
  std::string selector;
  std::size_t family_size = 0;
  std::vector<AlphaEntry> alphas;
  WedgeClass wedge;
};

// D(sqrt(l)) at level 4l (8 for l = 2) with v_t in {1, zeta_4}.
DResult d_of_sqrt_prime_detailed(std::int64_t l, RootPolicy policy = RootPolicy::smallest);
inline WedgeClass d_of_sqrt_prime(std::int64_t l) { return d_of_sqrt_prime_detailed(l).wedge; }

struct DSinOptions {
  RootPolicy policy = RootPolicy::smallest;
  // Default: Selector::main_formula for the chosen sigma_p, sigma_q.
  std::optional<Selector> selector;
};

// D(sin a_pq) at level 4pq with v_t = 1 / sin c_t.  The v-family is
// validated exactly for every t; each alpha is computed exactly and from
// certified signs, and the two must agree.
DResult d_of_sin_apq_detailed(std::int64_t p, std::int64_t q, const DSinOptions& options = {});
inline WedgeClass d_of_sin_apq(std::int64_t p, std::int64_t q) { return d_of_sin_apq_detailed(p, q).wedge; }

// (-1)^deg(P(1 - sigma_q) c_p - P(1 - sigma_p) c_q) with the Main Formula
// selector; odd primes 2 < p < q.
int alpha_odd_combinatorial(std::int64_t p, std::int64_t q, RootPolicy policy = RootPolicy::smallest);

}  // namespace qabe
