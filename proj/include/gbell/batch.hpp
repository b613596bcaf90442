#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "gbell/bounds.hpp"
#include "gbell/construct.hpp"
#include "gbell/laguerre.hpp"
#include "gbell/random.hpp"
#include "gbell/report.hpp"
#include "gbell/series.hpp"
#include "gbell/stirling.hpp"
#include "gbell/suites.hpp"

namespace gbell {

// Randomized and corpus-level suites. Trial seeds are drawn up front from the
// master seed, trials run concurrently, and reports are merged in trial
// order, so a run is reproducible regardless of scheduling.

namespace detail {

template <class F>
std::vector<VerificationReport> run_trials(std::size_t trials, std::uint64_t seed, F&& trial) {
  Rng master(seed);
  std::vector<std::uint64_t> seeds(trials);
  for (auto& s : seeds) s = master.next();
  std::vector<VerificationReport> out(trials);
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < trials; start += workers) {
    std::vector<std::future<VerificationReport>> batch;
    for (std::size_t t = start; t < std::min(trials, start + workers); ++t)
      batch.push_back(std::async(std::launch::async, [&trial, &seeds, t] { return trial(t, seeds[t]); }));
    for (std::size_t i = 0; i < batch.size(); ++i) out[start + i] = batch[i].get();
  }
  return out;
}

inline VerificationReport merge(std::string suite, std::uint64_t seed, const std::vector<VerificationReport>& parts) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.seed = seed;
  for (std::size_t t = 0; t < parts.size(); ++t) r.absorb(parts[t], "trial" + std::to_string(t));
  return r;
}

inline std::string first_mismatch(const std::vector<ExactPoly>& a, const std::vector<ExactPoly>& b) {
  for (std::size_t n = 0; n < a.size(); ++n)
    if (!(a[n] == b[n])) return "differ at n=" + std::to_string(n);
  return "agree";
}

}  // namespace detail

/// The three construction routes agree coefficientwise for n <= n_max.
inline VerificationReport verify_routes(std::uint64_t seed, std::size_t trials, std::size_t n_max) {
  auto parts = detail::run_trials(trials, seed, [n_max](std::size_t, std::uint64_t s) {
    Rng rng(s);
    const PhiSequence phi = random_nonneg_phi(rng);
    VerificationReport r;
    detail::CaseLog log(r, {{"phi", phi.to_string()}, {"n_max", std::to_string(n_max)}});
    const std::vector<ExactPoly> rec = genbell_sequence(phi, n_max);
    std::vector<ExactPoly> def, rho;
    for (std::size_t n = 0; n <= n_max; ++n) {
      def.push_back(genbell_via_definition(phi, n));
      rho.push_back(genbell_via_rho(phi, n));
    }
    const std::string a = detail::first_mismatch(def, rec), b = detail::first_mismatch(rho, rec);
    log.check({}, "definition route equals recurrence route", "agree", a == "agree", a);
    log.check({}, "rho route equals recurrence route", "agree", b == "agree", b);
    return r;
  });
  return detail::merge("routes", seed, parts);
}

/// phi = 0 gives the classical Bell polynomials with Stirling coefficients,
/// and x(1 + d/dx) raises the index.
inline VerificationReport verify_classical(std::size_t n_max) {
  VerificationReport r;
  r.suite = "classical";
  const PhiSequence zero;
  const std::vector<ExactPoly> be = genbell_sequence(zero, n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    detail::CaseLog log(r, {{"n", std::to_string(n)}});
    bool stirling = be[n].degree() == static_cast<long>(n);
    for (std::size_t j = 0; j <= n && stirling; ++j) stirling = be[n].coeff(j) == Rational(stirling2(n, j));
    log.check({}, "Be_n^0 has coefficients S(n,j)", "equal", stirling, stirling ? "equal" : "differ");
    log.check({}, "Be_n^0 equals the recurrence-built Be_n", "equal", be[n] == bell_poly_by_recurrence(n),
              be[n] == bell_poly_by_recurrence(n) ? "equal" : "differ");
    const bool raised = raise_operator(be[n]) == be[n + 1];
    log.check({}, "T(Be_n) = Be_{n+1}", "equal", raised, raised ? "equal" : "differ");
  }
  return r;
}

/// Removal recurrence, perturbation identity and d/dphi_i identity on random
/// signed phi, 1 <= l <= n <= n_max.
inline VerificationReport verify_identities(std::uint64_t seed, std::size_t trials, std::size_t n_max) {
  auto parts = detail::run_trials(trials, seed, [n_max](std::size_t, std::uint64_t s) {
    Rng rng(s);
    std::vector<Rational> p(static_cast<std::size_t>(rng.between(1, 8)));
    for (auto& v : p) v = rng.rational(-20, 20);
    const PhiSequence phi(std::move(p));
    const std::size_t n = static_cast<std::size_t>(rng.between(1, static_cast<long>(n_max)));
    const std::size_t l = static_cast<std::size_t>(rng.between(1, static_cast<long>(n)));
    Rational m = rng.rational(1, 20);
    if (rng.below(2)) m = -m;
    const Rational h = rng.rational(1, 20);
    VerificationReport r;
    detail::CaseLog log(r, {{"phi", phi.to_string()}, {"n", std::to_string(n)}, {"l", std::to_string(l)}});
    const bool rec = check_general_recurrence(phi, l, n - 1) && check_general_recurrence(phi, l, n);
    log.check({}, "Be_{n+1} = phi_l Be_n^{phi^{l}} + x(1 + d/dx) Be_n^{phi^{l}}", "holds", rec, rec ? "holds" : "fails");
    const bool pert = check_perturbation_identity(phi, l, m, n);
    log.check({{"M", to_string(m)}}, "Be_n^{phi^{l,M}} = Be_n^phi + M Be_{n-1}^{phi^{l}}", "holds", pert,
              pert ? "holds" : "fails");
    const bool deriv = partial_derivative_wrt_phi(phi, l, n) == phi_difference_quotient(phi, l, n, h);
    log.check({{"h", to_string(h)}}, "d Be_n / d phi_l = Be_{n-1}^{phi^{l}}", "holds", deriv, deriv ? "holds" : "fails");
    return r;
  });
  return detail::merge("identities", seed, parts);
}

/// Poisson-moment and hypergeometric series against exact evaluation.
inline VerificationReport verify_oracles(std::uint64_t seed, std::size_t trials, std::size_t n_max, double rel_tol = 1e-9) {
  const std::vector<Rational> xs{make_rational(1, 2), Rational(1), Rational(5), Rational(10)};
  auto parts = detail::run_trials(trials, seed, [&xs, n_max, rel_tol](std::size_t, std::uint64_t s) {
    Rng rng(s);
    std::vector<Rational> p(static_cast<std::size_t>(rng.between(1, 8)));
    for (auto& v : p) v = rng.rational(1, 20);  // the ratio form excludes 0, -1, ...
    const PhiSequence phi(std::move(p), TailRule::constant(rng.rational(1, 20)));
    VerificationReport r;
    detail::CaseLog log(r, {{"phi", phi.to_string()}});
    const std::vector<ExactPoly> be = genbell_sequence(phi, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
      for (const Rational& x : xs) {
        const double exact = to_double(be[n](x));
        const double ex = std::exp(to_double(x));
        const double values[3] = {poisson_moment_eval(phi, n, x, rel_tol * 1e-3),
                                  hypergeometric_eval(phi, n, x, rel_tol * 1e-3) / ex,
                                  hypergeometric_eval(phi, n, x, rel_tol * 1e-3, HypergeometricForm::ratio) / ex};
        const char* names[3] = {"Poisson moment", "hypergeometric raw", "hypergeometric ratio"};
        for (int k = 0; k < 3; ++k) {
          const double rel = std::fabs(values[k] - exact) / std::max(std::fabs(exact), 1e-300);
          log.check({{"n", std::to_string(n)}, {"x", to_string(x)}},
                    std::string(names[k]) + " series matches exact value", "rel err < " + std::to_string(rel_tol),
                    rel < rel_tol, "rel err " + std::to_string(rel));
        }
      }
    }
    return r;
  });
  return detail::merge("oracles", seed, parts);
}

/// Random nonnegative phi: the nonnegative zero theorem with three probed
/// removals and perturbations of both signs, monotonicity against a random
/// dominating psi, and the leftmost-zero bounds.
inline VerificationReport verify_nonneg_batch(std::uint64_t seed, std::size_t trials, std::size_t n_max,
                                              const SuiteOptions& opt = {}) {
  auto parts = detail::run_trials(trials, seed, [n_max, &opt](std::size_t, std::uint64_t s) {
    Rng rng(s);
    const PhiSequence phi = random_nonneg_phi(rng);
    std::vector<std::size_t> probes;
    const long reach = static_cast<long>(std::min(n_max, phi.prefix_length() + 1));
    while (probes.size() < 3) {
      const auto l = static_cast<std::size_t>(rng.between(1, std::max(reach, 3L)));
      if (std::find(probes.begin(), probes.end(), l) == probes.end()) probes.push_back(l);
    }
    std::vector<std::pair<std::size_t, Rational>> perturbations;
    perturbations.emplace_back(static_cast<std::size_t>(rng.between(1, reach)), rng.rational(1, 20));
    std::vector<std::size_t> positive;
    for (std::size_t i = 1; i <= phi.prefix_length(); ++i)
      if (sgn(phi[i]) > 0) positive.push_back(i);
    if (!positive.empty()) {
      const std::size_t l = positive[rng.below(positive.size())];
      // M in (-phi_l, 0)
      perturbations.emplace_back(l, -phi[l] * make_rational(rng.between(1, 7), 8));
    }
    VerificationReport r = verify_nonneg_theorem(phi, n_max, probes, perturbations, opt);
    const std::size_t n = static_cast<std::size_t>(rng.between(1, static_cast<long>(n_max)));
    r.absorb(verify_monotonicity(phi, random_dominating(phi, n, rng), n, opt), "monotonicity");
    r.absorb(verify_leftmost_bounds(phi, n_max, opt), "leftmost");
    return r;
  });
  return detail::merge("nonneg", seed, parts);
}

inline VerificationReport verify_one_negative_batch(std::uint64_t seed, std::size_t trials, std::size_t n_max,
                                                    const SuiteOptions& opt = {}) {
  auto parts = detail::run_trials(trials, seed, [n_max, &opt](std::size_t, std::uint64_t s) {
    Rng rng(s);
    return verify_one_negative(random_one_negative_phi(rng), n_max, opt);
  });
  return detail::merge("one-negative", seed, parts);
}

/// Sequences hitting -1, ..., -(t) for t < max_multiplicity, padded with
/// random entries that avoid the negative integers; each is checked at the
/// first three admissible n.
inline VerificationReport verify_zero_multiplicity_batch(std::uint64_t seed, std::size_t per_level,
                                                         std::size_t max_multiplicity) {
  auto parts = detail::run_trials(per_level * max_multiplicity, seed,
                                  [per_level](std::size_t t, std::uint64_t s) {
                                    Rng rng(s);
                                    const std::size_t hits = t / per_level;
                                    std::vector<Rational> p;
                                    for (std::size_t v = 1; v <= hits; ++v) p.push_back(-Rational(static_cast<unsigned long>(v)));
                                    const auto extra = static_cast<std::size_t>(rng.between(0, 3));
                                    for (std::size_t e = 0; e < extra; ++e) {
                                      Rational v = rng.rational(-20, 20);
                                      // -(hits+1) would raise the multiplicity
                                      if (v == -Rational(static_cast<unsigned long>(hits + 1))) v = make_rational(1, 2);
                                      p.push_back(v);
                                    }
                                    // shuffle so the hits are not always leading
                                    for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
                                    const PhiSequence phi(std::move(p));
                                    const std::size_t k = detail::support_length(phi);
                                    VerificationReport r;
                                    for (std::size_t n = k + 1; n <= k + 3; ++n)
                                      r.absorb(verify_zero_multiplicity(phi, n), "n" + std::to_string(n));
                                    return r;
                                  });
  return detail::merge("zero-multiplicity", seed, parts);
}

/// q = 1: n! L_n^alpha(-x) from the three-term recurrence equals
/// Be_n^{phi^alpha}; q = 2: exact multiple orthogonality.
inline VerificationReport verify_laguerre_bridge(std::uint64_t seed, std::size_t trials, std::size_t n_max,
                                                 std::size_t orth_trials) {
  auto alpha_draw = [](Rng& rng) {
    const long den = rng.between(1, 8);
    return make_rational(rng.between(-(den - 1), 6 * den), den);  // > -1
  };
  auto parts = detail::run_trials(trials + orth_trials, seed, [=](std::size_t t, std::uint64_t s) {
    Rng rng(s);
    VerificationReport r;
    if (t < trials) {
      const Rational a = alpha_draw(rng);
      detail::CaseLog log(r, {{"alpha", to_string(a)}});
      Rational fact(1);
      for (std::size_t n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        ExactPoly lhs = classical_laguerre_oracle(a, n).reflect();
        lhs *= fact;
        const ExactPoly rhs = genbell(laguerre_phi_sequence({{a}}, {{n}}), n);
        log.check({{"n", std::to_string(n)}}, "n! L_n^alpha(-x) = Be_n^{phi^alpha}", "equal", lhs == rhs,
                  lhs == rhs ? "equal" : "differ");
      }
      return r;
    }
    AlphaVector alpha;
    do alpha = {{alpha_draw(rng), alpha_draw(rng)}};
    while (alpha.has_integer_difference());
    const MultiIndex nvec{{static_cast<std::size_t>(rng.between(0, 4)), static_cast<std::size_t>(rng.between(0, 4))}};
    detail::CaseLog log(r, {{"alpha", to_string(alpha.values[0]) + "," + to_string(alpha.values[1])},
                            {"nvec", std::to_string(nvec.parts[0]) + "," + std::to_string(nvec.parts[1])}});
    for (const auto& c : multiple_orthogonality_conditions(alpha, nvec))
      log.check({{"j", std::to_string(c.j)}, {"k", std::to_string(c.k)}}, "multiple orthogonality against x^{alpha_j+k} e^{-x}",
                "0", c.holds(), to_string(c.value));
    return r;
  });
  return detail::merge("laguerre", seed, parts);
}

}  // namespace gbell
