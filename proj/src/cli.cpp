#include "qabe/cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "qabe/das.hpp"
#include "qabe/dmap.hpp"
#include "qabe/errors.hpp"
#include "qabe/galois_select.hpp"
#include "qabe/monomials.hpp"
#include "qabe/report.hpp"
#include "qabe/text.hpp"
#include "qabe/valuations.hpp"

namespace qabe::cli {

namespace {

using nlohmann::json;

std::string pair_input(std::int64_t p, std::int64_t q) { return std::to_string(p) + " " + std::to_string(q); }

int digits_for(long prec) { return static_cast<int>(std::floor(static_cast<double>(prec) * std::log10(2.0))); }

json ball_json(const BigReal& x, long prec) {
  return {{"value", x.to_decimal(digits_for(prec))}, {"radius", x.to_decimal(digits_for(prec), true)}};
}

Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

CaseReport das_class_case(std::int64_t p, std::int64_t q, bool closed) {
  const FormalSum a = closed ? canonical_apq(p, q) : das_representative(p, q, Selector::canonical());
  CaseReport c;
  c.input = pair_input(p, q);
  c.text = format_sum(a);
  c.certificate = {{"sum", c.text}, {"form", closed ? "closed" : "operator"}};
  return c;
}

std::vector<CaseReport> identity_cases(std::int64_t p, std::int64_t q, int seeds) {
  std::vector<Selector> selectors{Selector::canonical()};
  for (int k = 1; k <= seeds; ++k) selectors.push_back(Selector::seeded(static_cast<std::uint64_t>(k)));
  const Selector canonical = Selector::canonical();
  std::vector<CaseReport> out;
  for (const Selector& h : selectors) {
    const bool first = first_das_identity_check(p, q, h);
    const SecondDasWitness w = second_das_witness(p, q, canonical, h);
    const bool second = w.a - w.a_bar == w.b + w.c + conjugate(w.c);
    CaseReport c;
    c.input = pair_input(p, q) + " selector=" + h.name();
    c.outcome = verdict_of(first && second);
    c.text = std::string("first ") + (first ? "holds" : "FAILS") + ", second " + (second ? "holds" : "FAILS");
    c.certificate = {{"selector", h.name()},
                     {"first_identity", first},
                     {"second_identity", second},
                     {"a", format_sum(w.a)},
                     {"a_bar", format_sum(w.a_bar)},
                     {"b", format_sum(w.b)},
                     {"c", format_sum(w.c)}};
    out.push_back(std::move(c));
  }
  return out;
}

CaseReport torsion_case(std::int64_t p, std::int64_t q) {
  const TorsionWitness w = torsion_witness(p, q);
  CaseReport c;
  c.input = pair_input(p, q);
  c.outcome = verdict_of(w.holds);
  c.text = "2a = Y_p(" + format_sum(w.y_p) + ") - Y_q(" + format_sum(w.y_q) + ") + (1 + sigma_-1) a";
  c.certificate = {{"a", format_sum(w.a)}, {"y_p_argument", format_sum(w.y_p)}, {"y_q_argument", format_sum(w.y_q)}};
  return c;
}

json alphas_json(const DResult& r) {
  json arr = json::array();
  for (const AlphaEntry& e : r.alphas) {
    json j = {{"r", e.r}, {"s", e.s}, {"alpha", e.exact}};
    if (e.signs != 0) j["alpha_from_signs"] = e.signs;
    arr.push_back(j);
  }
  return arr;
}

CaseReport d_case(const std::string& input, const DResult& r, const WedgeClass& expected) {
  CaseReport c;
  c.input = input;
  c.outcome = verdict_of(r.wedge == expected);
  c.text = r.wedge.to_string();
  c.certificate = {{"level", r.level},
                   {"family_size", r.family_size},
                   {"alphas", alphas_json(r)},
                   {"wedge", r.wedge.to_string()},
                   {"wedge_pairs", json::parse(r.wedge.to_json())},
                   {"expected", expected.to_string()}};
  if (!r.selector.empty()) c.certificate["selector"] = r.selector;
  return c;
}

CaseReport seo_case(std::int64_t p, std::int64_t q) {
  const SeoResult s = seo(p, q);
  CaseReport c;
  c.input = pair_input(p, q);
  c.outcome = verdict_of(s.holds);
  c.text = "v_p=" + s.v_p.get_str() + " (q/p)=" + std::to_string(s.legendre_q_p) + " v_q=" + s.v_q.get_str() +
           " (p/q)=" + std::to_string(s.legendre_p_q);
  c.certificate = {{"v_p", s.v_p.get_str()},
                   {"v_q", s.v_q.get_str()},
                   {"legendre_q_p", s.legendre_q_p},
                   {"legendre_p_q", s.legendre_p_q}};
  return c;
}

CaseReport gamma_case(std::int64_t p, std::int64_t q, long prec, long max_prec) {
  const FactorizationResult r = gamma_sine_factorization(p, q, prec, std::nullopt, max_prec);
  CaseReport c;
  c.input = pair_input(p, q);
  c.outcome = r.verdict;
  c.text = "Gamma(a)/sqrt(sin a) = " + r.ratio.to_decimal(40) + ", constant " + r.constant.to_decimal(40);
  c.certificate = {{"prec", r.prec},
                   {"ratio", ball_json(r.ratio, r.prec)},
                   {"constant", ball_json(r.constant, r.prec)},
                   {"difference", ball_json(r.difference, r.prec)}};
  return c;
}

CaseReport eval_case(const std::string& kind, const std::string& text, long prec) {
  const FormalSum s = parse_sum(text);
  CaseReport c;
  c.input = kind + " " + format_sum(s);
  if (kind == "xi") {
    const ComplexBall z = xi_eval(s, prec);
    c.text = z.re.to_decimal(digits_for(prec)) + " + " + z.im.to_decimal(digits_for(prec)) + "*i";
    c.certificate = {{"re", ball_json(z.re, prec)}, {"im", ball_json(z.im, prec)}};
    return c;
  }
  const BigReal v = kind == "sin" ? sin_eval(s, prec) : gamma_eval(s, prec);
  c.text = v.to_decimal(digits_for(prec));
  c.certificate = ball_json(v, prec);
  return c;
}

CaseReport act_case(const std::string& t_text, const std::string& text) {
  const FormalSum s = parse_sum(text);
  Integer t;
  if (t.set_str(t_text, 10) != 0) throw ParseError("not an integer: " + t_text);
  const FormalSum r = galois_act(t, s);
  CaseReport c;
  c.input = t_text + " " + format_sum(s);
  c.text = format_sum(r);
  c.certificate = {{"sum", c.text}};
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Das classes, sine monomials and the map D."};
  app.name("qabe");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON report");

  std::int64_t p = 0, q = 0, l = 0;
  int seeds = 10;
  long prec = 256, max_prec = 0, seo_max = 200;
  bool operator_form = false, closed_form = false;
  std::string policy = "smallest", kind, sum_text, t_text;

  auto* das = app.add_subcommand("das-class", "Print the Das class a_pq");
  das->add_option("p", p)->required();
  das->add_option("q", q)->required();
  auto* op_flag = das->add_flag("--operator-form", operator_form, "Apply the operator word (default)");
  das->add_flag("--closed-form", closed_form, "Use the closed-form sum")->excludes(op_flag);

  auto* verify = app.add_subcommand("verify", "Run a verification");
  verify->require_subcommand(1);
  auto* identities = verify->add_subcommand("identities", "First and second Das identities");
  identities->add_option("p", p)->required();
  identities->add_option("q", q)->required();
  identities->add_option("--seeds", seeds, "Number of seeded lifting operators")->check(CLI::NonNegativeNumber);
  auto* torsion = verify->add_subcommand("torsion", "Torsion witness for a_pq");
  torsion->add_option("p", p)->required();
  torsion->add_option("q", q)->required();
  auto* main_formula = verify->add_subcommand("main-formula", "D(sin a_pq) = e_p ^ e_q");
  main_formula->add_option("p", p)->required();
  main_formula->add_option("q", q)->required();
  main_formula->add_option("--policy", policy, "Primitive root choice")
      ->check(CLI::IsMember({"smallest", "largest"}));
  auto* auxiliary = verify->add_subcommand("auxiliary", "D(sqrt l) = e_-1 ^ e_l");
  auxiliary->add_option("l", l)->required();
  auto* seo_cmd = verify->add_subcommand("seo", "Valuations of sin a_pq against Legendre symbols");
  auto* seo_p = seo_cmd->add_option("p", p);
  auto* seo_q = seo_cmd->add_option("q", q);
  seo_p->needs(seo_q);
  seo_q->needs(seo_p);
  seo_cmd->add_option("--max", seo_max, "Check all odd pairs p < q < B")->excludes(seo_p);
  auto* gamma_cmd = verify->add_subcommand("gamma", "Gamma(a_pq) / sqrt(sin a_pq) against its constant");
  gamma_cmd->add_option("p", p)->required();
  gamma_cmd->add_option("q", q)->required();
  gamma_cmd->add_option("--prec", prec, "Precision in bits")->check(CLI::Range(32L, 1L << 20));
  gamma_cmd->add_option("--max-prec", max_prec, "Precision ceiling in bits (default 4 * prec)");

  auto* eval = app.add_subcommand("eval", "Evaluate a monomial numerically");
  eval->add_option("kind", kind)->required()->check(CLI::IsMember({"sin", "gamma", "xi"}));
  eval->add_option("sum", sum_text)->required();
  eval->add_option("--prec", prec, "Precision in bits")->check(CLI::Range(32L, 1L << 20));

  auto* act = app.add_subcommand("act", "Apply sigma_t to a formal sum");
  act->add_option("t", t_text)->required();
  act->add_option("sum", sum_text)->required();

  // A formal sum may start with '-', which would read as an option; a
  // leading space keeps it positional and the sum parser ignores it.
  std::vector<std::string> reversed;
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    reversed.push_back(it->size() > 1 && (*it)[0] == '-' && it->find('[') != std::string::npos ? " " + *it : *it);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Report report;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (das->parsed()) {
      report.command = "das-class";
      report.value_only = true;
      report.cases.push_back(das_class_case(p, q, closed_form));
    } else if (identities->parsed()) {
      report.command = "verify identities";
      report.cases = identity_cases(p, q, seeds);
    } else if (torsion->parsed()) {
      report.command = "verify torsion";
      report.cases.push_back(torsion_case(p, q));
    } else if (main_formula->parsed()) {
      report.command = "verify main-formula";
      DSinOptions options;
      options.policy = policy == "largest" ? RootPolicy::largest : RootPolicy::smallest;
      report.cases.push_back(d_case(pair_input(p, q), d_of_sin_apq_detailed(p, q, options), WedgeClass::basis(p, q)));
    } else if (auxiliary->parsed()) {
      report.command = "verify auxiliary";
      report.cases.push_back(d_case(std::to_string(l), d_of_sqrt_prime_detailed(l), WedgeClass::basis(-1, l)));
    } else if (seo_cmd->parsed()) {
      report.command = "verify seo";
      if (seo_p->count() > 0) {
        report.cases.push_back(seo_case(p, q));
      } else {
        const std::vector<std::int64_t> ps = primes_between(3, seo_max - 1);
        for (std::size_t i = 0; i < ps.size(); ++i)
          for (std::size_t j = i + 1; j < ps.size(); ++j) report.cases.push_back(seo_case(ps[i], ps[j]));
      }
    } else if (gamma_cmd->parsed()) {
      report.command = "verify gamma";
      report.cases.push_back(gamma_case(p, q, prec, max_prec));
    } else if (eval->parsed()) {
      report.command = "eval " + kind;
      report.value_only = true;
      report.cases.push_back(eval_case(kind, sum_text, prec));
    } else if (act->parsed()) {
      report.command = "act";
      report.value_only = true;
      report.cases.push_back(act_case(t_text, sum_text));
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (as_json)
    out << report.to_json().dump(2) << "\n";
  else
    out << report.to_text();
  return report.exit_code();
}

}  // namespace qabe::cli
