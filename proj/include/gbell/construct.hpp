#pragma once

#include <cstddef>
#include <vector>

#include "gbell/errors.hpp"
#include "gbell/phi.hpp"
#include "gbell/poly.hpp"
#include "gbell/stirling.hpp"

namespace gbell {

/// Be_n^phi = sum_j Phi_{n-j}^n Be_j, built from the symmetric functions and
/// the classical Bell polynomials.
inline ExactPoly genbell_via_definition(const PhiSequence& phi, std::size_t n) {
  const std::vector<Rational> e = elementary_symmetric(phi, n);
  ExactPoly out;
  for (std::size_t j = 0; j <= n; ++j) {
    if (e[n - j] == 0) continue;
    out += bell_poly(j) * e[n - j];
  }
  return out;
}

/// Be_{k+1}^phi = x (1 + d/dx) Be_k^phi + phi_{k+1} Be_k^phi, from Be_0^phi = 1.
inline ExactPoly genbell_via_recurrence(const PhiSequence& phi, std::size_t n) {
  ExactPoly p = ExactPoly::constant(1);
  for (std::size_t k = 0; k < n; ++k) p = raise_operator(p) + p * phi[k + 1];
  return p;
}

/// rho_{n,0..n}: coordinates of prod_{i<=n}(x + phi_i) in the falling
/// factorial basis x(x-1)...(x-j+1), by
///   rho_{n+1,j} = rho_{n,j-1} + (phi_{n+1} + j) rho_{n,j}.
inline std::vector<Rational> rho_coefficients(const PhiSequence& phi, std::size_t n) {
  std::vector<Rational> rho{Rational(1)};
  for (std::size_t k = 0; k < n; ++k) {
    const Rational f = phi[k + 1];
    std::vector<Rational> next(k + 2);
    next[0] = f * rho[0];
    for (std::size_t j = 1; j <= k; ++j) next[j] = rho[j - 1] + (f + static_cast<unsigned long>(j)) * rho[j];
    next[k + 1] = rho[k];
    rho = std::move(next);
  }
  return rho;
}

/// Be_n^phi = sum_j rho_{n,j} x^j.
inline ExactPoly genbell_via_rho(const PhiSequence& phi, std::size_t n) {
  return ExactPoly(rho_coefficients(phi, n));
}

/// Default construction route.
inline ExactPoly genbell(const PhiSequence& phi, std::size_t n) { return genbell_via_recurrence(phi, n); }

/// Be_0^phi .. Be_{n_max}^phi in one pass of the recurrence.
inline std::vector<ExactPoly> genbell_sequence(const PhiSequence& phi, std::size_t n_max) {
  std::vector<ExactPoly> out;
  out.reserve(n_max + 1);
  out.push_back(ExactPoly::constant(1));
  for (std::size_t k = 0; k < n_max; ++k) out.push_back(raise_operator(out.back()) + out.back() * phi[k + 1]);
  return out;
}

/// Checks Be_{n+1}^phi = phi_l Be_n^{phi^{l}} + x(1 + d/dx) Be_n^{phi^{l}}
/// for n >= l - 1, where phi^{l} is phi with phi_l removed.
inline bool check_general_recurrence(const PhiSequence& phi, std::size_t l, std::size_t n) {
  if (l == 0) throw DomainError("check_general_recurrence: l must be >= 1");
  if (n + 1 < l) throw DomainError("check_general_recurrence: requires n >= l - 1");
  const ExactPoly lhs = genbell(phi, n + 1);
  const ExactPoly removed = genbell(phi.materialized(l).remove_term(l), n);
  return lhs == removed * phi[l] + raise_operator(removed);
}

/// Checks Be_n^{phi^{l,M}} = Be_n^phi + M Be_{n-1}^{phi^{l}} for l <= n.
inline bool check_perturbation_identity(const PhiSequence& phi, std::size_t l, const Rational& m, std::size_t n) {
  if (l == 0 || l > n) throw DomainError("check_perturbation_identity: requires 1 <= l <= n");
  const ExactPoly lhs = genbell(phi.perturb(l, m), n);
  const ExactPoly rhs = genbell(phi, n) + genbell(phi.materialized(l).remove_term(l), n - 1) * m;
  return lhs == rhs;
}

/// d Be_n^phi / d phi_i = Be_{n-1}^{phi^{i}} for 1 <= i <= n.
inline ExactPoly partial_derivative_wrt_phi(const PhiSequence& phi, std::size_t i, std::size_t n) {
  if (i == 0 || i > n) throw DomainError("partial_derivative_wrt_phi: requires 1 <= i <= n");
  return genbell(phi.materialized(i).remove_term(i), n - 1);
}

/// (Be_n^{phi + h e_i} - Be_n^phi) / h. Be_n^phi is affine in each phi_i, so
/// the quotient does not depend on h.
inline ExactPoly phi_difference_quotient(const PhiSequence& phi, std::size_t i, std::size_t n, const Rational& h) {
  if (h == 0) throw DomainError("phi_difference_quotient: h must be nonzero");
  return (genbell(phi.perturb(i, h), n) - genbell(phi, n)) * (Rational(1) / h);
}

}  // namespace gbell
