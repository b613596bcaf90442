#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "gbell/errors.hpp"
#include "gbell/phi.hpp"
#include "gbell/rational.hpp"

namespace gbell {

// Floating-point evaluations of Be_n^phi(x) through its two infinite series.
// They are oracles for the exact constructions, nothing more.

enum class HypergeometricForm {
  raw,    ///< sum_j prod_i (j + phi_i) x^j / j!
  ratio,  ///< (prod_i phi_i) nFn(1 + phi; phi; x), built from term ratios
};

namespace detail {

struct SeriesState {
  std::vector<long double> phi;
  long double x = 0;
  std::size_t cap = 0;
};

inline SeriesState series_state(const PhiSequence& phi, std::size_t n, const Rational& x, double tol) {
  if (!(tol > 0)) throw DomainError("series tolerance must be positive");
  SeriesState s;
  for (const Rational& f : phi.first(n)) s.phi.push_back(static_cast<long double>(to_double(f)));
  s.x = static_cast<long double>(to_double(x));
  s.cap = 10 * (n + static_cast<std::size_t>(std::ceil(std::fabs(to_double(x)))) + 50);
  return s;
}

/// Bound on sum_{k>j} |t_k| given |t_j|, valid once every j + phi_i > 0 and
/// the term ratio |x|/(j+1) prod (j+1+phi_i)/(j+phi_i) is below one; that
/// ratio decreases in j from there on. Returns infinity when not applicable.
inline long double tail_bound(const SeriesState& s, std::size_t j, long double abs_term) {
  const long double jj = static_cast<long double>(j);
  if (jj <= std::fabs(s.x)) return INFINITY;
  long double ratio = std::fabs(s.x) / (jj + 1);
  for (long double f : s.phi) {
    if (jj + f <= 0) return INFINITY;
    ratio *= (jj + 1 + f) / (jj + f);
  }
  if (ratio >= 1) return INFINITY;
  return abs_term * ratio / (1 - ratio);
}

/// Sums sum_j c_j x^j / j! * scale with c_j = prod_i (j + phi_i).
inline long double raw_series(const SeriesState& s, long double scale, double tol) {
  long double weight = scale;  // scale * x^j / j!
  long double sum = 0;
  for (std::size_t j = 0; j < s.cap; ++j) {
    long double prod = 1;
    for (long double f : s.phi) prod *= static_cast<long double>(j) + f;
    const long double term = weight * prod;
    sum += term;
    if (j > std::fabs(s.x) + static_cast<long double>(s.phi.size()) &&
        tail_bound(s, j, std::fabs(term)) < 0.5L * tol * (1 + std::fabs(sum)))
      break;
    weight *= s.x / static_cast<long double>(j + 1);
  }
  return sum;
}

}  // namespace detail

/// E[(t + phi_1)...(t + phi_n)] for t ~ Poisson(x), which equals Be_n^phi(x).
/// Accurate to about tol * (1 + |value|).
inline double poisson_moment_eval(const PhiSequence& phi, std::size_t n, const Rational& x, double tol) {
  if (sgn(x) <= 0) throw DomainError("poisson_moment_eval: x must be positive");
  const detail::SeriesState s = detail::series_state(phi, n, x, tol);
  return static_cast<double>(detail::raw_series(s, std::exp(-s.x), tol));
}

/// e^x Be_n^phi(x) through the hypergeometric series. The ratio form needs
/// phi_i not in {0, -1, -2, ...} for i <= n.
inline double hypergeometric_eval(const PhiSequence& phi, std::size_t n, const Rational& x, double tol,
                                  HypergeometricForm form = HypergeometricForm::raw) {
  const detail::SeriesState s = detail::series_state(phi, n, x, tol);
  if (form == HypergeometricForm::raw) return static_cast<double>(detail::raw_series(s, 1, tol));

  long double front = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (is_nonpositive_integer(phi[i]))
      throw DomainError("hypergeometric ratio form needs phi_i not in {0,-1,-2,...}");
    front *= static_cast<long double>(to_double(phi[i]));
  }
  // t_{j+1} / t_j = x/(j+1) * prod_i (1 + phi_i + j) / (phi_i + j)
  long double term = 1;
  long double sum = 0;
  for (std::size_t j = 0; j < s.cap; ++j) {
    sum += term;
    const long double jj = static_cast<long double>(j);
    if (jj > std::fabs(s.x) + static_cast<long double>(n) &&
        detail::tail_bound(s, j, std::fabs(term * front)) < 0.5L * tol * (1 + std::fabs(sum * front)))
      break;
    long double ratio = s.x / (jj + 1);
    for (long double f : s.phi) ratio *= (1 + f + jj) / (f + jj);
    term *= ratio;
  }
  return static_cast<double>(front * sum);
}

}  // namespace gbell
