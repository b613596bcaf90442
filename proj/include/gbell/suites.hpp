#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbell/bounds.hpp"
#include "gbell/construct.hpp"
#include "gbell/errors.hpp"
#include "gbell/interlace.hpp"
#include "gbell/isolate.hpp"
#include "gbell/phi.hpp"
#include "gbell/report.hpp"

namespace gbell {

// Each zero theorem becomes a suite of clause checks over a range of n.
// Clauses of theorems are pass/fail; statements about open problems are
// report-only; a root comparison that cannot be settled is undecided.

struct SuiteOptions {
  Rational width = default_width();
  std::size_t budget = kRefinementBudget;
};

namespace detail {

inline std::string str(std::size_t v) { return std::to_string(v); }

inline std::string describe(const RootIsolation& iso) {
  return "real=" + str(iso.real_with_multiplicity()) + " neg=" + str(iso.negative_count()) +
         " zero=" + str(iso.zero_multiplicity()) + " pos=" + str(iso.positive_count()) +
         " nonreal=" + str(iso.nonreal()) + " simple=" + (iso.square_free() ? "true" : "false");
}

class CaseLog {
 public:
  CaseLog(VerificationReport& report, Fields base) : report_(report), base_(std::move(base)) {}

  void record(const Fields& extra, std::string clause, std::string expected, std::string observed, Outcome o) {
    CaseRecord c;
    c.inputs = base_;
    c.inputs.insert(c.inputs.end(), extra.begin(), extra.end());
    c.clause = std::move(clause);
    c.expected = std::move(expected);
    c.observed = std::move(observed);
    c.outcome = o;
    report_.cases.push_back(std::move(c));
  }

  void check(const Fields& extra, std::string clause, std::string expected, bool ok, std::string observed) {
    record(extra, std::move(clause), std::move(expected), std::move(observed), ok ? Outcome::pass : Outcome::fail);
  }

  /// Runs f() -> pair<bool ok, string observed>; an UndecidedError becomes
  /// an undecided case.
  template <class F>
  void guarded(const Fields& extra, const std::string& clause, const std::string& expected, F&& f) {
    try {
      auto [ok, observed] = f();
      check(extra, clause, expected, ok, std::move(observed));
    } catch (const UndecidedError& e) {
      record(extra, clause, expected, e.what(), Outcome::undecided);
    }
  }

  /// Pass/fail case asserting that U interlaces V.
  void interlaces(const Fields& extra, const std::string& clause, std::vector<RealRoot> u, std::vector<RealRoot> v,
                  std::size_t budget) {
    guarded(extra, clause, "interlaces", [&] {
      const InterlacingVerdict verdict = check_interlace(std::move(u), std::move(v), budget);
      return std::pair{verdict.holds, verdict.holds ? std::string("interlaces") : verdict.witness};
    });
  }

  /// Pass/fail case asserting a < b (or a > b when `less` is false).
  void ordered(const Fields& extra, const std::string& clause, RealRoot a, RealRoot b, bool less, std::size_t budget) {
    guarded(extra, clause, less ? "a < b" : "a > b", [&] {
      const int c = compare_roots(a, b, budget);
      return std::pair{less ? c < 0 : c > 0, std::string(c < 0 ? "a < b" : "a > b")};
    });
  }

 private:
  VerificationReport& report_;
  Fields base_;
};

inline std::vector<RootIsolation> isolate_all(const std::vector<ExactPoly>& polys, const Rational& width) {
  std::vector<RootIsolation> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(isolate_roots(p, width));
  return out;
}

inline RootIsolation isolate_genbell(const PhiSequence& phi, std::size_t n, const Rational& width) {
  return isolate_roots(genbell(phi, n), width);
}

/// Last index holding a nonzero entry of the prefix: the smallest K with
/// phi_i = 0 for i > K.
inline std::size_t support_length(const PhiSequence& phi) {
  std::size_t k = phi.prefix_length();
  while (k > 0 && phi.prefix()[k - 1] == 0) --k;
  return k;
}

inline void require_zero_tail(const PhiSequence& phi, const char* who) {
  if (phi.tail().kind != TailKind::zero) throw DomainError(std::string(who) + ": needs a zero tail");
}

inline void require_no_negative_integer(const PhiSequence& phi, const char* who) {
  for (const Rational& f : phi.prefix())
    if (is_negative_integer(f)) throw DomainError(std::string(who) + ": needs phi_i not in {-1,-2,...}");
}

}  // namespace detail

/// Zero theorem for phi >= 0, clause by clause for n <= n_max:
///  - Be_n^phi(0) != 0 exactly when n < i_0 = min{i : phi_i = 0};
///  - Be_n^phi has n simple real zeros, all <= 0;
///  - the negative zeros of Be_{n+1}^phi interlace those of Be_n^{phi^{l}} for each probed l;
///  - for each (l, M), M != 0, M > -phi_l and l <= n: the negative zeros of
///    Be_n^{phi^{l,M}} interlace those of Be_n^phi when M > 0, the reverse when M < 0.
inline VerificationReport verify_nonneg_theorem(const PhiSequence& phi, std::size_t n_max,
                                                const std::vector<std::size_t>& l_probes,
                                                const std::vector<std::pair<std::size_t, Rational>>& perturbations,
                                                const SuiteOptions& opt = {}) {
  for (std::size_t i = 1; i <= n_max + 1; ++i)
    if (sgn(phi[i]) < 0) throw DomainError("verify_nonneg_theorem: needs phi_i >= 0");
  for (const auto& [l, m] : perturbations)
    if (l == 0 || m == 0 || !(m > -phi[l])) throw DomainError("verify_nonneg_theorem: perturbation needs l >= 1, M != 0, M > -phi_l");
  for (std::size_t l : l_probes)
    if (l == 0) throw DomainError("verify_nonneg_theorem: probe l must be >= 1");

  VerificationReport report;
  report.suite = "nonneg";
  detail::CaseLog log(report, {{"phi", phi.to_string()}});
  const std::vector<ExactPoly> be = genbell_sequence(phi, n_max);
  const std::vector<RootIsolation> iso = detail::isolate_all(be, opt.width);

  std::optional<std::size_t> i0;
  for (std::size_t i = 1; i <= n_max && !i0; ++i)
    if (phi[i] == 0) i0 = i;
  report.add_finding("i0", i0 ? detail::str(*i0) : "none");

  for (std::size_t n = 0; n <= n_max; ++n) {
    const Fields at{{"n", detail::str(n)}};
    const bool expect_nonzero = !i0 || n < *i0;
    const Rational c0 = be[n](Rational(0));
    log.check(at, "constant term vanishes iff n >= i0", expect_nonzero ? "nonzero" : "zero",
              (c0 != 0) == expect_nonzero, "Be_n(0)=" + to_string(c0));
    if (n == 0) continue;
    const RootIsolation& z = iso[n];
    log.check(at, "n simple real nonpositive zeros", "real=n simple pos=0",
              z.real_with_multiplicity() == n && z.square_free() && z.positive_count() == 0, detail::describe(z));
  }

  for (std::size_t n = 0; n < n_max; ++n) {
    for (std::size_t l : l_probes) {
      const PhiSequence removed = phi.materialized(l).remove_term(l);
      const RootIsolation v = detail::isolate_genbell(removed, n, opt.width);
      log.interlaces({{"n", detail::str(n)}, {"l", detail::str(l)}},
                     "negative zeros of Be_{n+1} interlace negative zeros of Be_n^{phi^{l}}", iso[n + 1].negative(),
                     v.negative(), opt.budget);
    }
  }

  for (const auto& [l, m] : perturbations) {
    const PhiSequence bumped = phi.perturb(l, m);
    for (std::size_t n = std::max<std::size_t>(l, 1); n <= n_max; ++n) {
      const RootIsolation p = detail::isolate_genbell(bumped, n, opt.width);
      const Fields at{{"n", detail::str(n)}, {"l", detail::str(l)}, {"M", to_string(m)}};
      if (sgn(m) > 0)
        log.interlaces(at, "M>0: negative zeros of Be_n^{phi^{l,M}} interlace those of Be_n^phi", p.negative(),
                       iso[n].negative(), opt.budget);
      else
        log.interlaces(at, "M<0: negative zeros of Be_n^phi interlace those of Be_n^{phi^{l,M}}", iso[n].negative(),
                       p.negative(), opt.budget);
    }
  }
  return report;
}

/// Zeros decrease along phi < psi: zeta_k(psi) < zeta_k(phi) for every k.
/// A zero at x = 0 forced in both polynomials by a common vanishing
/// parameter cannot move, and is expected to stay put.
inline VerificationReport verify_monotonicity(const PhiSequence& phi, const PhiSequence& psi, std::size_t n,
                                              const SuiteOptions& opt = {}) {
  if (n == 0) throw DomainError("verify_monotonicity: n must be positive");
  bool strict = false;
  for (std::size_t i = 1; i <= n; ++i) {
    if (sgn(phi[i]) < 0 || sgn(psi[i]) < 0) throw DomainError("verify_monotonicity: needs nonnegative sequences");
    if (phi[i] > psi[i]) throw DomainError("verify_monotonicity: needs phi_i <= psi_i");
    if (phi[i] < psi[i]) strict = true;
  }
  if (!strict) throw DomainError("verify_monotonicity: needs phi_i < psi_i for some i <= n");

  VerificationReport report;
  report.suite = "monotonicity";
  detail::CaseLog log(report, {{"phi", phi.to_string()}, {"psi", psi.to_string()}, {"n", detail::str(n)}});
  const RootIsolation a = detail::isolate_genbell(phi, n, opt.width);
  const RootIsolation b = detail::isolate_genbell(psi, n, opt.width);
  if (a.distinct() != n || b.distinct() != n) {
    log.check({}, "both polynomials have n real zeros", "n and n", false,
              detail::str(a.distinct()) + " and " + detail::str(b.distinct()));
    return report;
  }
  bool common_zero = false;
  for (std::size_t i = 1; i <= n; ++i)
    if (psi[i] == 0) common_zero = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Fields at{{"k", detail::str(k + 1)}};
    const RealRoot& za = a.roots[k];
    const RealRoot& zb = b.roots[k];
    if (common_zero && k + 1 == n) {
      const bool both_zero = za.is_point() && zb.is_point() && sgn(za.lo()) == 0 && sgn(zb.lo()) == 0;
      log.check(at, "zeta_n stays at 0 under a common zero parameter", "zeta_n(psi) = zeta_n(phi) = 0", both_zero,
                za.to_string() + " vs " + zb.to_string());
      continue;
    }
    log.ordered(at, "zeta_k(psi) < zeta_k(phi)", zb, za, true, opt.budget);
  }
  return report;
}

/// Leftmost-zero bounds for phi >= 0: -4n - alpha_n - 2 < zeta_1(n) <= xi_1,
/// with xi_1 the leftmost zero of the classical Be_n.
inline VerificationReport verify_leftmost_bounds(const PhiSequence& phi, std::size_t n_max,
                                                 const SuiteOptions& opt = {}) {
  VerificationReport report;
  report.suite = "leftmost-bounds";
  detail::CaseLog log(report, {{"phi", phi.to_string()}});
  const std::vector<ExactPoly> be = genbell_sequence(phi, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const LeftmostZeroBounds bounds = leftmost_zero_bounds(phi, n, opt.width);
    RootIsolation z = isolate_roots(be[n], opt.width);
    RealRoot zeta1 = z.roots.front();
    const Fields at{{"n", detail::str(n)}, {"alpha_n", to_string(bounds.alpha)}, {"lower", to_string(bounds.lower)}};
    log.check(at, "lower bound -4n-alpha_n-2 < zeta_1", "zeta_1 > lower", zeta1.compare_to(bounds.lower) > 0,
              "zeta_1 in " + zeta1.to_string());
    if (be[n] == bell_poly(n)) {
      log.check(at, "zeta_1 <= xi_1", "equal (phi_i = 0 for i <= n)", true, "identical polynomials");
    } else {
      log.ordered(at, "zeta_1 <= xi_1", zeta1, bounds.upper, true, opt.budget);
    }
  }
  return report;
}

/// Theorem for one negative parameter phi_m < 0, all other phi_i > 0.
/// Checked for n up to the largest N <= n_max such that phi_1..phi_N satisfy
/// that hypothesis (a zero entry, e.g. from a zero tail, ends the range).
inline VerificationReport verify_one_negative(const PhiSequence& phi, std::size_t n_max, const SuiteOptions& opt = {}) {
  std::optional<std::size_t> m;
  std::size_t n_eff = 0;
  for (std::size_t i = 1; i <= n_max; ++i) {
    if (sgn(phi[i]) < 0) {
      if (m) throw DomainError("verify_one_negative: more than one negative entry");
      m = i;
    }
  }
  for (std::size_t i = 1; i <= n_max && sgn(phi[i]) != 0; ++i) n_eff = i;
  if (!m) throw DomainError("verify_one_negative: needs exactly one negative entry");
  const std::size_t mm = *m;
  const std::size_t top = std::min(n_max, n_eff);

  VerificationReport report;
  report.suite = "one-negative";
  report.add_finding("m", detail::str(mm));
  report.add_finding("n_checked", detail::str(top));
  detail::CaseLog log(report, {{"phi", phi.to_string()}});
  const std::vector<ExactPoly> be = genbell_sequence(phi, top);
  const std::vector<RootIsolation> iso = detail::isolate_all(be, opt.width);
  auto positive_root = [](const RootIsolation& z) { return z.positive().front(); };

  for (std::size_t n = 1; n <= top; ++n) {
    const RootIsolation& z = iso[n];
    const Fields at{{"n", detail::str(n)}};
    if (n < mm)
      log.check(at, "n < m: n simple negative zeros", "neg=n simple",
                z.negative_count() == n && z.square_free() && z.nonreal() == 0, detail::describe(z));
    else
      log.check(at, "n >= m: n-1 simple negative zeros and one positive zero", "neg=n-1 pos=1 simple",
                z.negative_count() == n - 1 && z.positive_count() == 1 && z.square_free() && z.nonreal() == 0,
                detail::describe(z));
  }

  // removal interlacing: Be_{n+1}^phi against Be_n^{phi^{l}}
  for (std::size_t n = 0; n + 1 <= top; ++n) {
    std::vector<std::size_t> probes{1, 2, mm, mm + 1, n + 1};
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    for (std::size_t l : probes) {
      if (l > n + 1) continue;
      const RootIsolation v = detail::isolate_genbell(phi.materialized(l).remove_term(l), n, opt.width);
      const Fields at{{"n", detail::str(n)}, {"l", detail::str(l)}};
      if (l == mm) {
        log.interlaces(at, "l=m: zeros of Be_{n+1} interlace zeros of Be_n^{phi^{m}}", iso[n + 1].roots, v.roots,
                       opt.budget);
        continue;
      }
      log.interlaces(at, "l!=m: negative zeros of Be_{n+1} interlace negative zeros of Be_n^{phi^{l}}",
                     iso[n + 1].negative(), v.negative(), opt.budget);
      if (n >= mm)
        log.ordered(at, "l!=m, n>=m: positive zero of Be_{n+1} < positive zero of Be_n^{phi^{l}}",
                    positive_root(iso[n + 1]), positive_root(v), true, opt.budget);
    }
  }

  // monotonicity through single-parameter bumps, and perturbation interlacing
  for (std::size_t n = 1; n <= top; ++n) {
    std::vector<std::size_t> probes{1, 2, mm, mm + 1};
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    for (std::size_t l : probes) {
      if (l > n) continue;
      std::vector<Rational> bumps;
      if (l == mm)
        bumps = {-phi[mm] / 2, Rational(-1)};  // stays negative either way
      else
        bumps = {Rational(1), -phi[l] / 2};  // stays positive either way
      for (const Rational& bump : bumps) {
        const RootIsolation p = detail::isolate_genbell(phi.perturb(l, bump), n, opt.width);
        const Fields at{{"n", detail::str(n)}, {"l", detail::str(l)}, {"M", to_string(bump)}};
        const bool up = sgn(bump) > 0;
        // every negative zero decreases as any phi_i grows
        const std::size_t negs = std::min(p.negative_count(), iso[n].negative_count());
        for (std::size_t k = 0; k < negs; ++k)
          log.ordered(at, "negative zeros decrease in phi_" + std::string(l == mm ? "m" : "i"), p.negative()[k],
                      iso[n].negative()[k], up, opt.budget);
        if (n >= mm && p.positive_count() == 1 && iso[n].positive_count() == 1) {
          // the positive zero decreases in phi_m, increases in phi_i (i != m)
          const bool pert_below = (l == mm) == up;
          log.ordered(at, l == mm ? "positive zero decreases in phi_m" : "positive zero increases in phi_i, i != m",
                      positive_root(p), positive_root(iso[n]), pert_below, opt.budget);
        }
        if (n < std::max(mm, l)) continue;
        if (l != mm) {
          if (up)
            log.interlaces(at, "l!=m, M>0: negative zeros of Be_n^{phi^{l,M}} interlace those of Be_n^phi",
                           p.negative(), iso[n].negative(), opt.budget);
          else
            log.interlaces(at, "l!=m, M<0: negative zeros of Be_n^phi interlace those of Be_n^{phi^{l,M}}",
                           iso[n].negative(), p.negative(), opt.budget);
        } else {
          if (up)
            log.interlaces(at, "l=m, M>0: zeros of Be_n^{phi^{m,M}} interlace zeros of Be_n^phi", p.roots,
                           iso[n].roots, opt.budget);
          else
            log.interlaces(at, "l=m, M<0: zeros of Be_n^phi interlace zeros of Be_n^{phi^{m,M}}", iso[n].roots,
                           p.roots, opt.budget);
        }
      }
    }
  }
  return report;
}

/// Finitely supported phi (zero tail, phi_i not in {-1,-2,...}) over
/// n_lo <= n <= n_hi:
///  - at least n-K+1 (K odd) or n-K (K even) real zeros for n >= K;
///  - a simple zero at 0 for n >= K+1;
///  - n_0 = first n >= K with all zeros real and simple and |H| positive
///    zeros; from n_0 on the same holds for every n in the window, and both
///    the negative and the positive zero sets interlace between n and n+1;
///  - once all zeros are real (resp. real and simple) they stay so.
/// An n_0 outside the window is undecided, not a failure.
inline VerificationReport verify_finite_support(const PhiSequence& phi, std::size_t n_lo, std::size_t n_hi,
                                                const SuiteOptions& opt = {}) {
  detail::require_zero_tail(phi, "verify_finite_support");
  detail::require_no_negative_integer(phi, "verify_finite_support");
  if (n_lo > n_hi) throw DomainError("verify_finite_support: empty n range");
  const std::size_t k = detail::support_length(phi);
  const std::vector<std::size_t> h = sign_change_set(phi);
  const std::size_t s = h.size();

  VerificationReport report;
  report.suite = "finite-support";
  std::string h_text;
  for (std::size_t l : h) h_text += (h_text.empty() ? "" : ",") + detail::str(l);
  report.add_finding("K", detail::str(k));
  report.add_finding("H", "{" + h_text + "}");
  report.add_finding("s", detail::str(s));
  detail::CaseLog log(report, {{"phi", phi.to_string()}});

  const std::vector<ExactPoly> be = genbell_sequence(phi, n_hi + 1);
  const std::size_t first = std::max<std::size_t>(n_lo, 1);
  std::vector<std::optional<RootIsolation>> iso(n_hi + 1);
  for (std::size_t n = first; n <= n_hi; ++n) iso[n] = isolate_roots(be[n], opt.width);

  std::optional<std::size_t> n0, first_real, first_real_simple;
  for (std::size_t n = first; n <= n_hi; ++n) {
    const RootIsolation& z = *iso[n];
    const Fields at{{"n", detail::str(n)}};
    log.record(at, "zero counts", "", detail::describe(z), Outcome::report_only);
    if (n >= k) {
      const std::size_t floor = (k % 2 == 1) ? n - k + 1 : n - k;
      log.check(at, "at least n-K+1 (K odd) / n-K (K even) real zeros", ">= " + detail::str(floor),
                z.real_with_multiplicity() >= floor, "real=" + detail::str(z.real_with_multiplicity()));
      if (!first_real && z.nonreal() == 0) first_real = n;
      if (!first_real_simple && z.all_real_simple()) first_real_simple = n;
      if (!n0 && z.all_real_simple() && z.positive_count() == s) n0 = n;
    }
    if (n >= k + 1)
      log.check(at, "simple zero at x = 0 for n >= K+1", "1", z.zero_multiplicity() == 1,
                detail::str(z.zero_multiplicity()));
    if (first_real && n > *first_real)
      log.check(at, "all zeros stay real once real", "nonreal=0", z.nonreal() == 0, detail::describe(z));
    if (first_real_simple && n > *first_real_simple)
      log.check(at, "zeros stay real and simple once real and simple", "real simple", z.all_real_simple(),
                detail::describe(z));
  }
  report.add_finding("first_all_real_n", first_real ? detail::str(*first_real) : "none");
  report.add_finding("n0", n0 ? detail::str(*n0) : "none");
  if (!n0) {
    log.record({}, "n0 exists in window", "n0 <= " + detail::str(n_hi), "not found", Outcome::undecided);
    return report;
  }
  for (std::size_t n = *n0; n <= n_hi; ++n) {
    const RootIsolation& z = *iso[n];
    const Fields at{{"n", detail::str(n)}};
    log.check(at, "n >= n0: all zeros real and simple", "real simple", z.all_real_simple(), detail::describe(z));
    log.check(at, "n >= n0: positive zero count equals |H|", detail::str(s), z.positive_count() == s,
              detail::str(z.positive_count()));
    if (n + 1 > n_hi) continue;
    const RootIsolation& next = *iso[n + 1];
    log.interlaces(at, "negative zeros of Be_{n+1} interlace negative zeros of Be_n", next.negative(), z.negative(),
                   opt.budget);
    log.interlaces(at, "positive zeros of Be_{n+1} interlace positive zeros of Be_n", next.positive(), z.positive(),
                   opt.budget);
  }
  return report;
}

/// Multiplicity of x = 0 in Be_n^phi (zero tail, n > K) against the
/// prediction l = 1 + max{t : -1, ..., -t all occur among phi_1..phi_K}.
inline VerificationReport verify_zero_multiplicity(const PhiSequence& phi, std::size_t n) {
  detail::require_zero_tail(phi, "verify_zero_multiplicity");
  const std::size_t k = detail::support_length(phi);
  if (n < k + 1) throw DomainError("verify_zero_multiplicity: needs n >= K+1");
  std::size_t t = 0;
  auto hits = [&](std::size_t v) {
    const Rational target = -Rational(static_cast<unsigned long>(v));
    return std::find(phi.prefix().begin(), phi.prefix().end(), target) != phi.prefix().end();
  };
  while (hits(t + 1)) ++t;
  const std::size_t predicted = 1 + t;

  VerificationReport report;
  report.suite = "zero-multiplicity";
  report.add_finding("K", detail::str(k));
  report.add_finding("predicted", detail::str(predicted));
  detail::CaseLog log(report, {{"phi", phi.to_string()}, {"n", detail::str(n)}});
  const std::size_t here = multiplicity_at_zero(genbell(phi, n));
  const std::size_t there = multiplicity_at_zero(genbell(phi, n + 1));
  log.check({}, "phi hits -1..-(l-1) implies multiplicity l", detail::str(predicted), here == predicted,
            detail::str(here));
  bool back = true;
  for (std::size_t v = 1; v < here; ++v) back = back && hits(v);
  log.check({}, "multiplicity l implies phi hits -1..-(l-1)", "true", back, back ? "true" : "false");
  log.check({{"n2", detail::str(n + 1)}}, "same multiplicity for every n >= K+1", detail::str(here), there == here,
            detail::str(there));
  return report;
}

/// phi = (-m, -m, 0, 0, ...), m >= 2: for 3 <= n <= n_max a simple zero at
/// 0, exactly two non-real zeros, n-3 simple negative zeros, and the
/// negative zeros of Be_n interlace those of Be_{n-1}.
inline VerificationReport verify_negative_pair(std::size_t m, std::size_t n_max, const SuiteOptions& opt = {}) {
  if (m < 2) throw DomainError("verify_negative_pair: needs m >= 2");
  const Rational mm(static_cast<unsigned long>(m));
  const PhiSequence phi({-mm, -mm});
  VerificationReport report;
  report.suite = "negative-pair";
  detail::CaseLog log(report, {{"m", detail::str(m)}, {"phi", phi.to_string()}});
  const std::vector<ExactPoly> be = genbell_sequence(phi, std::max<std::size_t>(n_max, 2));
  std::vector<std::optional<RootIsolation>> iso(be.size());
  for (std::size_t n = 2; n <= n_max; ++n) iso[n] = isolate_roots(be[n], opt.width);
  for (std::size_t n = 3; n <= n_max; ++n) {
    const RootIsolation& z = *iso[n];
    const Fields at{{"n", detail::str(n)}};
    log.check(at, "simple zero at 0, two non-real, n-3 simple negative, none positive",
              "zero=1 nonreal=2 neg=" + detail::str(n - 3) + " pos=0 simple",
              z.zero_multiplicity() == 1 && z.nonreal() == 2 && z.negative_count() == n - 3 &&
                  z.positive_count() == 0 && z.square_free(),
              detail::describe(z));
    log.interlaces(at, "negative zeros of Be_n interlace negative zeros of Be_{n-1}", z.negative(),
                   iso[n - 1]->negative(), opt.budget);
  }
  return report;
}

/// Open problem: for which s > 0 do the zeros of Be_n^{s+phi} interlace the
/// zeros of Be_n^phi for every n? Reports the first failing n <= n_max.
inline VerificationReport explore_shift_interlacing(const PhiSequence& phi, const Rational& s, std::size_t n_max,
                                                    const SuiteOptions& opt = {}) {
  if (sgn(s) <= 0) throw DomainError("explore_shift_interlacing: needs s > 0");
  for (std::size_t i = 1; i <= n_max; ++i)
    if (sgn(phi[i]) < 0) throw DomainError("explore_shift_interlacing: needs phi_i >= 0");
  const PhiSequence shifted = phi.shifted(s);
  VerificationReport report;
  report.suite = "shift";
  detail::CaseLog log(report, {{"phi", phi.to_string()}, {"s", to_string(s)}});
  const std::vector<ExactPoly> base = genbell_sequence(phi, n_max);
  const std::vector<ExactPoly> moved = genbell_sequence(shifted, n_max);
  std::optional<std::size_t> first_failure;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Fields at{{"n", detail::str(n)}};
    try {
      const InterlacingVerdict v =
          check_interlace(isolate_roots(moved[n], opt.width).roots, isolate_roots(base[n], opt.width).roots, opt.budget);
      if (!v.holds && !first_failure) first_failure = n;
      log.record(at, "zeros of Be_n^{s+phi} interlace zeros of Be_n^phi", "open problem",
                 v.holds ? "interlaces" : "fails: " + v.witness, Outcome::report_only);
    } catch (const UndecidedError& e) {
      log.record(at, "zeros of Be_n^{s+phi} interlace zeros of Be_n^phi", "open problem", e.what(), Outcome::undecided);
    }
  }
  report.add_finding("first_failure_n", first_failure ? detail::str(*first_failure) : "none");
  return report;
}

/// Open conjecture: p_n = sum_j gamma_j Be_{n-j} (gamma_0 = 1) has only real
/// zeros for n large whenever P(x) = sum_j gamma_j x^{K-j} has no positive
/// integer root. Reports the first all-real n (report-only); asserts the
/// proven parts: p_n = T^{n-K}(p_K), and real (resp. real simple) zeros
/// persist once reached.
inline VerificationReport explore_conjecture(const std::vector<Rational>& gamma, std::size_t n_max,
                                             const SuiteOptions& opt = {}) {
  if (gamma.empty() || gamma.front() != 1) throw DomainError("explore_conjecture: needs gamma_0 = 1");
  const std::size_t k = gamma.size() - 1;
  if (n_max < k) throw DomainError("explore_conjecture: needs n_max >= K");
  std::vector<Rational> p_coeffs(gamma.rbegin(), gamma.rend());
  const ExactPoly p_seed(p_coeffs);
  if (p_seed.degree() > 0) {
    const Rational bound = root_bound(p_seed);
    for (unsigned long v = 1; Rational(v) < bound; ++v)
      if (p_seed(Rational(v)) == 0) throw DomainError("explore_conjecture: P(m) = 0 at m = " + std::to_string(v));
  }

  VerificationReport report;
  report.suite = "conjecture";
  std::string gamma_text;
  for (const auto& g : gamma) gamma_text += (gamma_text.empty() ? "" : ",") + to_string(g);
  detail::CaseLog log(report, {{"gamma", gamma_text}});

  auto direct = [&](std::size_t n) {
    ExactPoly p;
    for (std::size_t j = 0; j <= k; ++j) p += bell_poly(n - j) * gamma[j];
    return p;
  };
  ExactPoly iterated = direct(k);
  std::optional<std::size_t> first_real, first_real_simple;
  for (std::size_t n = k; n <= n_max; ++n) {
    const ExactPoly p = direct(n);
    const Fields at{{"n", detail::str(n)}};
    if (n > k) {
      iterated = raise_operator(iterated);
      log.check(at, "p_n = T^{n-K}(p_K)", "equal", iterated == p, iterated == p ? "equal" : "differ");
    }
    if (p.degree() <= 0) continue;
    const RootIsolation z = isolate_roots(p, opt.width);
    log.record(at, "zero counts", "", detail::describe(z), Outcome::report_only);
    if (first_real && n > *first_real)
      log.check(at, "all zeros stay real once real", "nonreal=0", z.nonreal() == 0, detail::describe(z));
    if (first_real_simple && n > *first_real_simple)
      log.check(at, "zeros stay real and simple once real and simple", "real simple", z.all_real_simple(),
                detail::describe(z));
    if (!first_real && z.nonreal() == 0) first_real = n;
    if (!first_real_simple && z.all_real_simple()) first_real_simple = n;
  }
  report.add_finding("K", detail::str(k));
  report.add_finding("first_real_n", first_real ? detail::str(*first_real) : "none");
  report.add_finding("first_real_simple_n", first_real_simple ? detail::str(*first_real_simple) : "none");
  log.record({}, "first n with only real zeros", "open conjecture",
             first_real ? detail::str(*first_real) : "none up to n_max", Outcome::report_only);
  return report;
}

}  // namespace gbell
