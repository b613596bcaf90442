#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "gbell/construct.hpp"
#include "gbell/errors.hpp"
#include "gbell/phi.hpp"
#include "gbell/poly.hpp"

namespace gbell {

struct MultiIndex {
  std::vector<std::size_t> parts;

  std::size_t total() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }
};

struct AlphaVector {
  std::vector<Rational> values;

  /// True when some alpha_i - alpha_j (i != j) is an integer. The Bell side
  /// is still defined; only the multiple-orthogonality reading degrades.
  bool has_integer_difference() const {
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j)
        if (is_integer(values[i] - values[j])) return true;
    return false;
  }
};

/// Block pattern alpha_1+1..alpha_1+n_1, alpha_2+1..alpha_2+n_2, ..., zero tail.
inline PhiSequence laguerre_phi_sequence(const AlphaVector& alpha, const MultiIndex& nvec) {
  if (alpha.values.size() != nvec.parts.size() || nvec.parts.empty())
    throw DomainError("laguerre: alpha and multi-index must have the same nonzero length");
  std::vector<Rational> prefix;
  for (std::size_t j = 0; j < nvec.parts.size(); ++j)
    for (std::size_t i = 1; i <= nvec.parts[j]; ++i) prefix.push_back(alpha.values[j] + static_cast<unsigned long>(i));
  return PhiSequence(std::move(prefix));
}

/// L_n^alpha(x) = (-1)^{|n|} Be_{|n|}^{phi^{alpha,n}}(-x). With this
/// normalization the leading coefficient is (-1)^{|n|}.
inline ExactPoly multiple_laguerre(const AlphaVector& alpha, const MultiIndex& nvec) {
  const std::size_t n = nvec.total();
  ExactPoly p = genbell(laguerre_phi_sequence(alpha, nvec), n).reflect();
  if (n % 2 == 1) p = -p;
  return p;
}

/// Classical L_n^alpha from (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
/// Standard normalization: leading coefficient (-1)^n / n!.
inline ExactPoly classical_laguerre_oracle(const Rational& alpha, std::size_t n) {
  ExactPoly prev = ExactPoly::constant(1);
  if (n == 0) return prev;
  ExactPoly cur({alpha + 1, Rational(-1)});
  for (std::size_t k = 1; k < n; ++k) {
    const Rational kk(static_cast<unsigned long>(k));
    ExactPoly next = ExactPoly({2 * kk + 1 + alpha, Rational(-1)}) * cur - prev * (kk + alpha);
    next *= Rational(1) / (kk + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct OrthogonalityCheck {
  std::size_t j = 0;  ///< weight index, 1-based
  std::size_t k = 0;  ///< moment power
  Rational value;     ///< integral of L x^{alpha_j + k} e^{-x} divided by Gamma(alpha_j + 1)
  bool holds() const { return value == 0; }
};

/// All conditions int_0^inf L(x) x^{alpha_j} e^{-x} x^k dx = 0, k < n_j,
/// evaluated exactly: x^m contributes the rising product (alpha_j+1)...(alpha_j+k+m).
inline std::vector<OrthogonalityCheck> multiple_orthogonality_conditions(const AlphaVector& alpha,
                                                                         const MultiIndex& nvec) {
  for (const Rational& a : alpha.values)
    if (a <= -1) throw DomainError("orthogonality needs every alpha_j > -1");
  const ExactPoly l = multiple_laguerre(alpha, nvec);
  std::vector<OrthogonalityCheck> out;
  for (std::size_t j = 0; j < nvec.parts.size(); ++j) {
    const Rational& a = alpha.values[j];
    for (std::size_t k = 0; k < nvec.parts[j]; ++k) {
      Rational moment(1);  // (a+1)_{k}
      for (std::size_t t = 1; t <= k; ++t) moment *= a + static_cast<unsigned long>(t);
      Rational sum(0);
      for (std::size_t m = 0; m < l.coeffs().size(); ++m) {
        sum += l.coeffs()[m] * moment;
        moment *= a + static_cast<unsigned long>(k + m + 1);
      }
      out.push_back({j + 1, k, sum});
    }
  }
  return out;
}

inline bool check_multiple_orthogonality(const AlphaVector& alpha, const MultiIndex& nvec) {
  for (const auto& c : multiple_orthogonality_conditions(alpha, nvec))
    if (!c.holds()) return false;
  return true;
}

}  // namespace gbell
