#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gbell/phi.hpp"
#include "gbell/rational.hpp"

namespace gbell {

// Seeded generators for the randomized suites. std::uniform_int_distribution
// is implementation-defined, so draws go through Rng::below to keep reports
// identical across standard libraries.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do v = engine_();
    while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  /// num/den with num in [num_lo, num_hi], den in [1, den_hi].
  Rational rational(long num_lo, long num_hi, long den_hi = 8) {
    const long num = between(num_lo, num_hi);
    const long den = between(1, den_hi);
    return make_rational(num, den);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Nonnegative prefix of length 1..8, entries p/q with p in [0,20],
/// q in [1,8], zero tail.
inline PhiSequence random_nonneg_phi(Rng& rng) {
  std::vector<Rational> p(static_cast<std::size_t>(rng.between(1, 8)));
  for (auto& v : p) v = rng.rational(0, 20);
  return PhiSequence(std::move(p));
}

/// Exactly one negative entry phi_m, m within the prefix; every other entry,
/// the constant tail included, is strictly positive.
inline PhiSequence random_one_negative_phi(Rng& rng) {
  std::vector<Rational> p(static_cast<std::size_t>(rng.between(1, 8)));
  for (auto& v : p) v = rng.rational(1, 20);
  const std::size_t m = static_cast<std::size_t>(rng.below(p.size()));
  p[m] = -rng.rational(1, 20);
  return PhiSequence(std::move(p), TailRule::constant(rng.rational(1, 20)));
}

/// psi with phi <= psi on 1..n and strict inequality somewhere in 1..n.
inline PhiSequence random_dominating(const PhiSequence& phi, std::size_t n, Rng& rng) {
  PhiSequence psi = phi.materialized(n);
  std::vector<Rational> p = psi.prefix();
  const std::size_t strict = static_cast<std::size_t>(rng.below(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == strict)
      p[i] += rng.rational(1, 20);
    else if (rng.below(2) == 0)
      p[i] += rng.rational(0, 20);
  }
  return PhiSequence(std::move(p), phi.tail());
}

}  // namespace gbell
