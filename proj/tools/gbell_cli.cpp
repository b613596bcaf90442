// gbell: construct generalized Bell polynomials, isolate their zeros and
// run the verification suites. Exit codes: 0 ok, 1 a suite case failed,
// 2 usage or domain error, 3 internal invariant violated.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gbell/gbell.hpp"
#include "report_io.hpp"

using namespace gbell;
using gbell::cli::Json;
using gbell::cli::Payload;

namespace {

struct Globals {
  std::string format = "json";
  std::string out;
  std::string width = "1/1048576";
  std::uint64_t seed = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  for (const auto& item : split(s, ',')) {
    out.push_back(parse_rational(item, pos));
    pos += item.size() + 1;
  }
  if (out.empty()) throw DomainError("empty rational list");
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& s) {
  std::vector<std::size_t> out;
  for (const Rational& r : parse_rational_list(s)) {
    if (!is_integer(r) || sgn(r) < 0) throw DomainError("expected nonnegative integers, got " + to_string(r));
    out.push_back(r.get_num().get_ui());
  }
  return out;
}

Json coeff_json(const ExactPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  if (p.is_zero()) a.push_back("0");
  return a;
}

// --- construct ---------------------------------------------------------------

struct ConstructArgs {
  std::string phi;
  std::size_t n = 0;
  std::string route = "recurrence";
};

Payload run_construct(const ConstructArgs& a, int& exit_code) {
  const PhiSequence phi = parse_phi(a.phi);
  Payload p;
  p.header = {"route", "j", "coefficient"};
  std::vector<std::pair<std::string, ExactPoly>> built;
  if (a.route == "definition" || a.route == "all") built.emplace_back("definition", genbell_via_definition(phi, a.n));
  if (a.route == "recurrence" || a.route == "all") built.emplace_back("recurrence", genbell_via_recurrence(phi, a.n));
  if (a.route == "rho" || a.route == "all") built.emplace_back("rho", genbell_via_rho(phi, a.n));
  if (built.empty()) throw DomainError("unknown route '" + a.route + "'");
  Json routes = Json::object();
  for (const auto& [name, poly] : built) {
    routes[name] = coeff_json(poly);
    for (std::size_t j = 0; j < poly.coeffs().size(); ++j)
      p.rows.push_back({name, std::to_string(j), to_string(poly.coeffs()[j])});
  }
  p.results["coeffs"] = coeff_json(built.front().second);
  p.results["routes"] = std::move(routes);
  if (a.route == "all") {
    const bool agree = built[0].second == built[1].second && built[1].second == built[2].second;
    p.results["agree"] = agree;
    if (!agree) exit_code = 3;
  }
  return p;
}

// --- roots -------------------------------------------------------------------

struct RootsArgs {
  std::string phi;
  std::size_t n = 1;
};

Payload run_roots(const RootsArgs& a, const Rational& width) {
  if (a.n == 0) throw DomainError("roots: n must be >= 1");
  const PhiSequence phi = parse_phi(a.phi);
  const ExactPoly be = genbell(phi, a.n);
  RootIsolation iso = isolate_roots(be, width);
  Payload p;
  p.header = {"index", "kind", "lo", "hi", "multiplicity", "approx"};
  Json roots = Json::array();
  for (std::size_t i = 0; i < iso.roots.size(); ++i) {
    const RealRoot& r = iso.roots[i];
    roots.push_back(cli::root_json(r));
    std::ostringstream approx;
    approx.precision(17);
    approx << r.approx();
    p.rows.push_back({std::to_string(i), r.is_point() ? "point" : "interval", to_string(r.lo()), to_string(r.hi()),
                      std::to_string(r.multiplicity()), approx.str()});
  }
  p.results["coeffs"] = coeff_json(be);
  p.results["roots"] = std::move(roots);
  p.results["counts"] = {{"negative", iso.negative_count()},
                         {"zero", iso.zero_multiplicity()},
                         {"positive", iso.positive_count()},
                         {"nonreal", iso.nonreal()}};
  p.results["simple"] = iso.square_free();

  bool nonneg = true;
  for (std::size_t i = 1; i <= a.n; ++i) nonneg = nonneg && sgn(phi[i]) >= 0;
  if (nonneg) {
    LeftmostZeroBounds b = leftmost_zero_bounds(phi, a.n, width);
    RealRoot zeta1 = iso.roots.front();
    bool ok = zeta1.compare_to(b.lower) > 0;
    if (ok && !(be == bell_poly(a.n))) ok = compare_roots(zeta1, b.upper) < 0;
    p.results["leftmost_bounds"] = {{"alpha", to_string(b.alpha)},
                                    {"lower", to_string(b.lower)},
                                    {"upper", cli::root_json(b.upper)},
                                    {"satisfied", ok}};
  }
  return p;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::size_t trials = 0;
  std::size_t n_max = 12;
  std::size_t n_lo = 1;
  std::size_t n = 0;
  std::string phi, psi, s, gamma, probes, perturb;
  std::size_t m = 2;
};

VerificationReport run_suite(const VerifyArgs& a, const Globals& g, const SuiteOptions& opt) {
  auto need = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw DomainError("suite " + a.suite + " needs " + flag);
    return v;
  };
  auto trials_or = [&](std::size_t d) { return a.trials ? a.trials : d; };
  VerificationReport r;
  if (a.suite == "nonneg") {
    if (a.phi.empty()) return verify_nonneg_batch(g.seed, trials_or(50), a.n_max, opt);
    std::vector<std::size_t> probes = a.probes.empty() ? std::vector<std::size_t>{1} : parse_size_list(a.probes);
    std::vector<std::pair<std::size_t, Rational>> perturbations;
    if (!a.perturb.empty())
      for (const auto& item : split(a.perturb, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) throw DomainError("perturbation must be l:M, got '" + item + "'");
        perturbations.emplace_back(parse_size_list(parts[0]).front(), parse_rational(parts[1]));
      }
    r = verify_nonneg_theorem(parse_phi(a.phi), a.n_max, probes, perturbations, opt);
  } else if (a.suite == "monotonicity") {
    r = verify_monotonicity(parse_phi(need(a.phi, "--phi")), parse_phi(need(a.psi, "--psi")), a.n ? a.n : a.n_max, opt);
  } else if (a.suite == "leftmost") {
    r = verify_leftmost_bounds(parse_phi(need(a.phi, "--phi")), a.n_max, opt);
  } else if (a.suite == "one-negative") {
    if (a.phi.empty()) return verify_one_negative_batch(g.seed, trials_or(20), a.n_max, opt);
    r = verify_one_negative(parse_phi(a.phi), a.n_max, opt);
  } else if (a.suite == "finite-support") {
    r = verify_finite_support(parse_phi(need(a.phi, "--phi")), a.n_lo, a.n_max, opt);
  } else if (a.suite == "zero-multiplicity") {
    if (a.phi.empty()) return verify_zero_multiplicity_batch(g.seed, trials_or(5), 4);
    const PhiSequence phi = parse_phi(a.phi);
    r = verify_zero_multiplicity(phi, a.n ? a.n : detail::support_length(phi) + 1);
  } else if (a.suite == "negative-pair") {
    r = verify_negative_pair(a.m, a.n_max, opt);
  } else if (a.suite == "shift") {
    r = explore_shift_interlacing(parse_phi(need(a.phi, "--phi")), parse_rational(need(a.s, "--s")), a.n_max, opt);
  } else if (a.suite == "conjecture") {
    r = explore_conjecture(parse_rational_list(need(a.gamma, "--gamma")), a.n_max, opt);
  } else if (a.suite == "routes") {
    return verify_routes(g.seed, trials_or(20), a.n_max);
  } else if (a.suite == "classical") {
    r = verify_classical(a.n_max);
  } else if (a.suite == "identities") {
    return verify_identities(g.seed, trials_or(20), a.n_max);
  } else if (a.suite == "oracles") {
    return verify_oracles(g.seed, trials_or(10), a.n_max);
  } else if (a.suite == "laguerre") {
    return verify_laguerre_bridge(g.seed, trials_or(20), a.n_max, trials_or(20) / 2);
  } else {
    throw DomainError("unknown suite '" + a.suite + "'");
  }
  r.seed = g.seed;
  return r;
}

// --- laguerre ----------------------------------------------------------------

struct LaguerreArgs {
  std::string alpha, nvec;
  bool check_orth = false;
};

Payload run_laguerre(const LaguerreArgs& a) {
  AlphaVector alpha{parse_rational_list(a.alpha)};
  MultiIndex nvec{parse_size_list(a.nvec)};
  const PhiSequence phi = laguerre_phi_sequence(alpha, nvec);
  const ExactPoly l = multiple_laguerre(alpha, nvec);
  Payload p;
  p.header = {"kind", "index", "value"};
  Json prefix = Json::array();
  for (std::size_t i = 0; i < phi.prefix().size(); ++i) {
    prefix.push_back(to_string(phi.prefix()[i]));
    p.rows.push_back({"phi", std::to_string(i + 1), to_string(phi.prefix()[i])});
  }
  for (std::size_t j = 0; j < l.coeffs().size(); ++j) p.rows.push_back({"coeff", std::to_string(j), to_string(l.coeffs()[j])});
  p.results["phi_prefix"] = std::move(prefix);
  p.results["polynomial"] = coeff_json(l);
  p.results["integer_difference_warning"] = alpha.has_integer_difference();
  if (alpha.has_integer_difference())
    std::cerr << "warning: some alpha_i - alpha_j is an integer; the multiple orthogonality reading does not apply\n";
  if (a.check_orth) {
    Json checks = Json::array();
    for (const auto& c : multiple_orthogonality_conditions(alpha, nvec)) {
      checks.push_back({{"j", c.j}, {"k", c.k}, {"value", to_string(c.value)}, {"holds", c.holds()}});
      p.rows.push_back({"orth", std::to_string(c.j) + ":" + std::to_string(c.k), to_string(c.value)});
    }
    p.results["orthogonality"] = std::move(checks);
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Bell polynomials: construction, zeros and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--width", g.width, "isolation width, a rational");
  app.add_option("--seed", g.seed, "seed for randomized suites");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "coefficients of Be_n^phi");
  construct->add_option("--phi", ca.phi, "phi spec r1,r2,...[;tail=zero|const:R|affine:A]")->required();
  construct->add_option("--n", ca.n)->required();
  construct->add_option("--route", ca.route)->check(CLI::IsMember({"definition", "recurrence", "rho", "all"}));

  RootsArgs ra;
  auto* roots = app.add_subcommand("roots", "certified isolation of the real zeros of Be_n^phi");
  roots->add_option("--phi", ra.phi)->required();
  roots->add_option("--n", ra.n)->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", va.suite)->required();
  verify->add_option("--trials", va.trials);
  verify->add_option("--n-max", va.n_max);
  verify->add_option("--n-lo", va.n_lo);
  verify->add_option("--n", va.n);
  verify->add_option("--phi", va.phi);
  verify->add_option("--psi", va.psi);
  verify->add_option("--s", va.s);
  verify->add_option("--gamma", va.gamma);
  verify->add_option("--m", va.m);
  verify->add_option("--l-probe", va.probes, "comma list of removal indices");
  verify->add_option("--perturb", va.perturb, "comma list of l:M pairs");

  LaguerreArgs la;
  auto* laguerre = app.add_subcommand("laguerre", "multiple Laguerre polynomial through the Bell bridge");
  laguerre->add_option("--alpha", la.alpha)->required();
  laguerre->add_option("--nvec", la.nvec)->required();
  laguerre->add_flag("--check-orth", la.check_orth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int exit_code = 0;
  Payload payload;
  Json inputs = Json::object();
  std::string command;
  try {
    const Rational width = parse_rational(g.width);
    if (sgn(width) <= 0) throw DomainError("--width must be positive");
    inputs["width"] = to_string(width);
    if (*construct) {
      command = "construct";
      inputs.update({{"phi", ca.phi}, {"n", ca.n}, {"route", ca.route}});
      payload = run_construct(ca, exit_code);
    } else if (*roots) {
      command = "roots";
      inputs.update({{"phi", ra.phi}, {"n", ra.n}});
      payload = run_roots(ra, width);
    } else if (*verify) {
      command = "verify";
      inputs.update({{"suite", va.suite}, {"seed", g.seed}, {"n_max", va.n_max}});
      for (const auto& [k, v] : {std::pair{"phi", va.phi}, {"psi", va.psi}, {"s", va.s}, {"gamma", va.gamma},
                                 {"l_probe", va.probes}, {"perturb", va.perturb}})
        if (!v.empty()) inputs[k] = v;
      if (va.trials) inputs["trials"] = va.trials;
      if (va.suite == "negative-pair") inputs["m"] = va.m;
      if (va.suite == "finite-support") inputs["n_lo"] = va.n_lo;
      if (va.n) inputs["n"] = va.n;
      const VerificationReport report = run_suite(va, g, SuiteOptions{width, kRefinementBudget});
      payload = cli::report_payload(report);
      if (!report.passed()) exit_code = 1;
    } else {
      command = "laguerre";
      inputs.update({{"alpha", la.alpha}, {"nvec", la.nvec}, {"check_orth", la.check_orth}});
      payload = run_laguerre(la);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  const double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::ofstream file;
  if (!g.out.empty()) {
    file.open(g.out);
    if (!file) {
      std::cerr << "error: cannot open " << g.out << "\n";
      return 2;
    }
  }
  std::ostream& os = g.out.empty() ? std::cout : file;
  if (g.format == "csv")
    cli::write_csv(os, payload);
  else
    os << cli::envelope(command, std::move(inputs), std::move(payload.results), millis).dump(2) << "\n";
  return exit_code;
}
