#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gbell/errors.hpp"
#include "gbell/isolate.hpp"
#include "gbell/phi.hpp"
#include "gbell/stirling.hpp"

namespace gbell {

/// P(x) = prod_{i<=K} (x + phi_i) over the explicit prefix.
inline ExactPoly prefix_polynomial(const PhiSequence& phi) {
  ExactPoly p = ExactPoly::constant(1);
  for (const Rational& f : phi.prefix()) p *= ExactPoly({f, Rational(1)});
  return p;
}

/// H = { l >= 1 : P(l) P(l+1) < 0 } for P = prefix_polynomial(phi). Beyond
/// l = ceil(max |phi_i|) + 1 every factor l + phi_i is positive, so the scan
/// stops there.
inline std::vector<std::size_t> sign_change_set(const PhiSequence& phi) {
  if (phi.tail().kind != TailKind::zero) throw DomainError("positive_zero_prediction needs a zero tail");
  for (const Rational& f : phi.prefix())
    if (is_negative_integer(f)) throw DomainError("positive_zero_prediction needs phi_i not in {-1,-2,...}");
  const ExactPoly p = prefix_polynomial(phi);
  Rational reach(0);
  for (const Rational& f : phi.prefix()) reach = std::max(reach, Rational(abs(f)));
  const std::size_t last = static_cast<std::size_t>(ceil_of(reach).get_ui()) + 1;
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l <= last; ++l) {
    const Rational a = p(Rational(static_cast<unsigned long>(l)));
    const Rational b = p(Rational(static_cast<unsigned long>(l + 1)));
    if (sgn(a) * sgn(b) < 0) out.push_back(l);
  }
  return out;
}

/// |H|: the eventual number of positive zeros of Be_n^phi.
inline std::size_t positive_zero_prediction(const PhiSequence& phi) { return sign_change_set(phi).size(); }

/// max{-1, phi_1 - 1, ..., phi_n - n}.
inline Rational leftmost_shift_parameter(const PhiSequence& phi, std::size_t n) {
  Rational a(-1);
  for (std::size_t i = 1; i <= n; ++i) a = std::max(a, Rational(phi[i] - static_cast<unsigned long>(i)));
  return a;
}

struct LeftmostZeroBounds {
  Rational alpha;  ///< leftmost_shift_parameter(phi, n)
  Rational lower;  ///< -4n - alpha - 2, strictly below the leftmost zero
  RealRoot upper;  ///< leftmost zero of the classical Be_n, at or above it
};

/// Bounds for the leftmost zero of Be_n^phi, phi >= 0.
inline LeftmostZeroBounds leftmost_zero_bounds(const PhiSequence& phi, std::size_t n,
                                               const Rational& width = default_width()) {
  if (n == 0) throw DomainError("leftmost_zero_bounds: n must be positive");
  for (std::size_t i = 1; i <= n; ++i)
    if (sgn(phi[i]) < 0) throw DomainError("leftmost_zero_bounds: needs phi_i >= 0");
  LeftmostZeroBounds out;
  out.alpha = leftmost_shift_parameter(phi, n);
  out.lower = -Rational(4 * static_cast<unsigned long>(n)) - out.alpha - 2;
  RootIsolation classical = isolate_roots(bell_poly(n), width);
  out.upper = classical.roots.front();
  return out;
}

}  // namespace gbell
