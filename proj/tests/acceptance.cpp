// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gbell/gbell.hpp"
#include "oracles.hpp"

using namespace gbell;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

std::string counts(const VerificationReport& r) {
  const ReportSummary s = r.summary();
  return std::to_string(s.pass) + " pass, " + std::to_string(s.fail) + " fail, " + std::to_string(s.undecided) +
         " undecided, " + std::to_string(s.report_only) + " report-only";
}

bool clean(const VerificationReport& r) { return r.passed() && r.summary().undecided == 0 && r.summary().pass > 0; }

std::string first_problem(const VerificationReport& r) {
  for (const auto& c : r.cases)
    if (c.outcome == Outcome::fail || c.outcome == Outcome::undecided) {
      std::string in;
      for (const auto& [k, v] : c.inputs) in += k + "=" + v + " ";
      return "; first problem: " + in + "[" + c.clause + "] " + c.observed;
    }
  return "";
}

Verdict summarize(const VerificationReport& r) { return {clean(r), counts(r) + (clean(r) ? "" : first_problem(r))}; }

VerificationReport keep_clauses(const VerificationReport& r, const std::vector<std::string>& prefixes) {
  VerificationReport out;
  out.suite = r.suite;
  for (const auto& c : r.cases)
    for (const auto& p : prefixes)
      if (c.clause.rfind(p, 0) == 0) {
        out.cases.push_back(c);
        break;
      }
  return out;
}

Verdict route_agreement() {
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport r = verify_routes(1, 200, 25);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Verdict v = summarize(r);
  v.ok = v.ok && secs < 60;
  v.detail += ", " + std::to_string(secs) + " s";
  return v;
}

Verdict classical_reduction() {
  VerificationReport r = verify_classical(40);
  bool oracle_ok = true;
  for (std::size_t n = 0; n <= 40; ++n) {
    const ExactPoly be = genbell(PhiSequence(), n);
    for (std::size_t j = 0; j <= n; ++j) oracle_ok = oracle_ok && be.coeff(j) == Rational(oracle::stirling_alternating(n, j));
  }
  Verdict v = summarize(r);
  v.ok = v.ok && oracle_ok;
  v.detail += oracle_ok ? "; coefficients equal the alternating-sum S(n,j)" : "; alternating-sum oracle disagrees";
  return v;
}

Verdict oracle_agreement() { return summarize(verify_oracles(1, 50, 15)); }

Verdict laguerre_bridge() {
  VerificationReport r = verify_laguerre_bridge(1, 20, 12, 10);
  Rng rng(12);
  bool explicit_ok = true;
  for (int t = 0; t < 20; ++t) {
    const long den = rng.between(1, 8);
    const Rational a = make_rational(rng.between(-(den - 1), 6 * den), den);
    Rational fact(1);
    for (std::size_t n = 0; n <= 12; ++n) {
      if (n) fact *= static_cast<unsigned long>(n);
      ExactPoly lhs = ExactPoly(oracle::laguerre_explicit(a, n)).reflect();
      lhs *= fact;
      explicit_ok = explicit_ok && lhs == genbell(laguerre_phi_sequence({{a}}, {{n}}), n);
    }
  }
  Verdict v = summarize(r);
  v.ok = v.ok && explicit_ok;
  v.detail += explicit_ok ? "; explicit-sum Laguerre oracle agrees" : "; explicit-sum Laguerre oracle disagrees";
  return v;
}

VerificationReport nonneg_corpus() {
  static const VerificationReport r = verify_nonneg_batch(1, 200, 15);
  return r;
}

Verdict nonneg_theorem() {
  const VerificationReport r = nonneg_corpus();
  VerificationReport theorem = r;
  theorem.cases.clear();
  for (const auto& c : r.cases)
    if (c.clause.rfind("lower bound", 0) != 0 && c.clause.rfind("zeta_1 <=", 0) != 0) theorem.cases.push_back(c);
  return summarize(theorem);
}

Verdict leftmost_bounds() {
  return summarize(keep_clauses(nonneg_corpus(), {"lower bound", "zeta_1 <="}));
}

Verdict one_negative() { return summarize(verify_one_negative_batch(1, 100, 12)); }

Verdict shift_counterexample() {
  const VerificationReport fail = explore_shift_interlacing(parse_phi("1/2"), make_rational(3, 2), 4);
  const VerificationReport hold = explore_shift_interlacing(parse_phi("1/2"), Rational(1), 12);
  const bool ok = fail.finding("first_failure_n") == "4" && hold.finding("first_failure_n") == "none" &&
                  fail.summary().undecided == 0 && hold.summary().undecided == 0;
  return {ok, "s=3/2 first failure n=" + fail.finding("first_failure_n") +
                  "; s=1 first failure up to n=12: " + hold.finding("first_failure_n")};
}

Verdict zero_multiplicity() {
  VerificationReport r = verify_zero_multiplicity_batch(1, 5, 4);
  r.absorb(verify_zero_multiplicity(parse_phi("-1"), 2), "a");
  r.absorb(verify_zero_multiplicity(parse_phi("-1,-2"), 4), "b");
  r.absorb(verify_zero_multiplicity(parse_phi("-3,-1,1/2,-2"), 5), "c");
  return summarize(r);
}

Verdict negative_pair() {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  for (std::size_t m = 2; m <= 5; ++m) r.absorb(verify_negative_pair(m, 25), "m" + std::to_string(m));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Verdict v = summarize(r);
  v.ok = v.ok && secs < 120;
  v.detail += ", " + std::to_string(secs) + " s";
  return v;
}

Verdict finite_support() {
  Verdict v{true, ""};
  for (const char* text : {"-3/2", "-3/2,-7/2", "5/2,-1/2,-9/2"}) {
    const VerificationReport r = verify_finite_support(parse_phi(text), 1, 45);
    const std::string n0 = r.finding("n0");
    const bool ok = clean(r) && n0 != "none" && std::stoul(n0) <= 30;
    v.ok = v.ok && ok;
    v.detail += std::string(v.detail.empty() ? "" : "; ") + "phi=(" + text + ") n0=" + n0 + " |H|=" + r.finding("s") +
                " " + (ok ? "ok" : counts(r) + first_problem(r));
  }
  return v;
}

Verdict conjecture() {
  const std::size_t n_max = 40;
  const VerificationReport r = explore_conjecture({Rational(1), Rational(-1), make_rational(1, 2)}, n_max);
  const std::string first = r.finding("first_real_n");
  const bool found = first != "none" && std::stoul(first) + 20 <= n_max;
  return {found && clean(r), "first all-real n=" + first + " (report-only); persistence through n=" +
                                 std::to_string(n_max) + ": " + counts(r)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"route agreement, 200 random phi, n<=25", route_agreement},
      {"classical reduction n<=40 and T(Be_n)=Be_{n+1}", classical_reduction},
      {"identity suite, 100 random cases each", [] { return summarize(verify_identities(1, 100, 12)); }},
      {"series oracles vs exact evaluation, rel 1e-9", oracle_agreement},
      {"nonnegative zero theorem, 200 random phi, n<=15", nonneg_theorem},
      {"leftmost-zero bounds on the same corpus", leftmost_bounds},
      {"one negative parameter, 100 random phi, n<=12", one_negative},
      {"shift counterexample s=3/2 at n=4, none for s=1", shift_counterexample},
      {"zero multiplicity at x=0, l<=4, both directions", zero_multiplicity},
      {"negative pair m=2..5, 3<=n<=25", negative_pair},
      {"finite support: n0<=30, real simple, |H| positive zeros, interlacing", finite_support},
      {"Laguerre bridge and multiple orthogonality", laguerre_bridge},
      {"conjecture explorer x^2-x+1/2, persistence 20 steps", conjecture},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.ok) ++failures;
    std::printf("AC%02zu %s  %s  [%s] (%.1f s)\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
