#pragma once

// Reference computations that share no code path with the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

inline Z binomial(std::size_t n, std::size_t k) {
  Z out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline Z factorial(std::size_t n) {
  Z out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// S(n,j) = (1/j!) sum_k (-1)^k C(j,k) (j-k)^n.
inline Z stirling_alternating(std::size_t n, std::size_t j) {
  Z sum = 0;
  for (std::size_t k = 0; k <= j; ++k) {
    Z p;
    mpz_ui_pow_ui(p.get_mpz_t(), j - k, n);
    Z term = binomial(j, k) * p;
    sum += (k % 2 ? -term : term);
  }
  return sum / factorial(j);
}

/// Counts set partitions of {1..n} into j blocks by enumerating restricted
/// growth strings. Exponential; n <= 10 or so.
inline std::uint64_t stirling_enumerated(std::size_t n, std::size_t j) {
  std::uint64_t count = 0;
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      if (blocks == j) ++count;
      return;
    }
    for (std::size_t b = 0; b <= blocks && b < j; ++b) {
      a[i] = b;
      walk(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return j == 0 ? 1 : 0;
  walk(0, 0);
  return count;
}

/// Coefficients (low to high) of E[q(t)], t ~ Poisson(x), q(t) = prod (t + phi_i):
/// Newton's forward series q(t) = sum_j Delta^j q(0) C(t, j) and E[C(t,j)] = x^j/j!.
inline std::vector<Q> genbell_by_differences(const std::vector<Q>& phi) {
  const std::size_t n = phi.size();
  std::vector<Q> values(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    Q v = 1;
    for (const Q& f : phi) v *= Q(static_cast<unsigned long>(t)) + f;
    values[t] = v;
  }
  std::vector<Q> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    out[j] = values[0] / Q(factorial(j));
    for (std::size_t t = 0; t + 1 < values.size(); ++t) values[t] = values[t + 1] - values[t];
    values.pop_back();
  }
  return out;
}

/// L_n^alpha(x) = sum_k (-1)^k C(n + alpha, n - k) x^k / k!, generalized binomial.
inline std::vector<Q> laguerre_explicit(const Q& alpha, std::size_t n) {
  std::vector<Q> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t r = n - k;
    Q b = 1;  // C(n + alpha, r)
    for (std::size_t i = 0; i < r; ++i) b *= (Q(static_cast<unsigned long>(n)) + alpha - Q(static_cast<unsigned long>(i)));
    b /= Q(factorial(r));
    b /= Q(factorial(k));
    out[k] = (k % 2 ? -b : b);
  }
  return out;
}

/// Interlacing by direct reading of the definition on exact distinct values.
inline bool interlaces(std::vector<Q> u, std::vector<Q> v) {
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  if (!(u.size() == v.size() + 1 || u.size() == v.size())) return false;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    std::size_t inside = 0;
    for (const Q& y : v)
      if (u[i] < y && y < u[i + 1]) ++inside;
    if (inside != 1) return false;
  }
  if (u.size() == v.size() && !u.empty() && !(u.back() < v.back())) return false;
  return true;
}

}  // namespace oracle
