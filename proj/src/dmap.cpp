#include "qabe/dmap.hpp"

#include <sstream>

#include "qabe/das.hpp"

namespace qabe {

WedgeClass WedgeClass::basis(std::int64_t r, std::int64_t s) {
  WedgeClass w;
  w.toggle(r, s);
  return w;
}

void WedgeClass::toggle(std::int64_t r, std::int64_t s) {
  if (r == s) throw PreconditionError("wedge: e_r ^ e_r is zero; need r != s");
  if (!in_S(r) || !in_S(s)) throw PreconditionError("wedge: indices must be -1 or primes");
  const auto key = r < s ? std::make_pair(r, s) : std::make_pair(s, r);
  if (!pairs_.erase(key)) pairs_.insert(key);
}

std::string WedgeClass::to_string() const {
  if (pairs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [r, s] : pairs_) {
    if (!first) out << " + ";
    out << "e_" << r << " ^ e_" << s;
    first = false;
  }
  return out.str();
}

std::string WedgeClass::to_json() const {
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (const auto& [r, s] : pairs_) {
    if (!first) out << ",";
    out << "[" << r << "," << s << "]";
    first = false;
  }
  out << "]";
  return out.str();
}

std::vector<std::int64_t> relevant_primes(std::int64_t n) {
  std::vector<std::int64_t> out{-1, 2};
  for (std::int64_t r : prime_factors(n))
    if (r != 2) out.push_back(r);
  return out;
}

namespace {

template <typename Value>
void collect_alphas(const VFamily<Value>& family, RootPolicy policy, DResult& out) {
  const std::vector<std::int64_t> rs = relevant_primes(family.level());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      AlphaEntry e;
      e.r = rs[i];
      e.s = rs[j];
      e.exact = family.alpha(e.r, e.s, policy);
      out.alphas.push_back(e);
      if (e.exact == -1) out.wedge.toggle(e.r, e.s);
    }
  }
}

}  // namespace

DResult d_of_sqrt_prime_detailed(std::int64_t l, RootPolicy policy) {
  if (!is_prime(l)) throw PreconditionError("d_of_sqrt_prime: " + std::to_string(l) + " is not prime");
  const std::int64_t level = l == 2 ? 8 : 4 * l;
  const CycloNum root = sqrt_exact(l).embed(level);
  const CycloNum one = CycloNum::from_rational(level, Rational(1));
  const CycloNum i = CycloNum::zeta(level, level / 4);
  const VFamily<CycloNum> family(level, root, [&](std::int64_t t) { return root.galois(t) == root ? one : i; });
  DResult out;
  out.level = level;
  out.family_size = family.size();
  collect_alphas(family, policy, out);
  return out;
}

DResult d_of_sin_apq_detailed(std::int64_t p, std::int64_t q, const DSinOptions& options) {
  if (!is_prime(p) || !is_prime(q) || p >= q) throw PreconditionError("d_of_sin_apq: need primes p < q");
  const std::int64_t level = 4 * p * q;
  const Integer n = make_integer(level);
  const std::int64_t tp = sigma_generator(p, level, options.policy).rep;
  const std::int64_t tq = sigma_generator(q, level, options.policy).rep;
  const Selector h =
      options.selector ? *options.selector : Selector::main_formula(p, q, make_integer(tp), make_integer(tq));

  const FormalSum a = das_representative(p, q, h);
  const FactoredCyclo u = sin_factored(a, level);
  std::map<std::int64_t, FactoredCyclo> sin_c;
  const VFamily<FactoredCyclo> family(level, u, [&](std::int64_t t) {
    const ConjugationData d = conjugation_data(p, q, h, make_integer(t), n);
    FactoredCyclo s = sin_factored(d.c_sigma, level);
    sin_c.emplace(t, s);
    return s.inverse();
  });

  DResult out;
  out.level = level;
  out.selector = h.name();
  out.family_size = family.size();
  collect_alphas(family, options.policy, out);
  // alpha_rs = sign(sigma_s sin c_r) sign(sigma_r sin c_s)
  for (AlphaEntry& e : out.alphas) {
    const std::int64_t tr = sigma_generator(e.r, level, options.policy).rep;
    const std::int64_t ts = sigma_generator(e.s, level, options.policy).rep;
    e.signs = sin_c.at(tr).galois(ts).sign_of_real() * sin_c.at(ts).galois(tr).sign_of_real();
    if (e.signs != e.exact)
      throw InternalError("alpha_" + std::to_string(e.r) + "," + std::to_string(e.s) +
                          ": sign evaluation disagrees with the exact ratio");
  }
  return out;
}

int alpha_odd_combinatorial(std::int64_t p, std::int64_t q, RootPolicy policy) {
  if (p < 3 || !is_prime(p) || !is_prime(q) || p >= q)
    throw PreconditionError("alpha_odd_combinatorial: need odd primes p < q");
  const std::int64_t level = 4 * p * q;
  const Integer n = make_integer(level);
  const Integer tp = make_integer(sigma_generator(p, level, policy).rep);
  const Integer tq = make_integer(sigma_generator(q, level, policy).rep);
  const Selector h = Selector::main_formula(p, q, tp, tq);
  const FormalSum cp = conjugation_data(p, q, h, tp, n).c_sigma;
  const FormalSum cq = conjugation_data(p, q, h, tq, n).c_sigma;
  const FormalSum x = p_projector(cp - galois_act(tq, cp)) - p_projector(cq - galois_act(tp, cq));
  return mpz_odd_p(deg(x).get_mpz_t()) ? -1 : 1;
}

}  // namespace qabe
