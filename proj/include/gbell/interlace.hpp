#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gbell/errors.hpp"
#include "gbell/isolate.hpp"

namespace gbell {

/// Bisections allowed per root when separating two overlapping intervals.
inline constexpr std::size_t kRefinementBudget = 64;

namespace detail {

inline std::string shared_root_diagnosis(const RealRoot& a, const RealRoot& b) {
  if (a.carrier() == b.carrier()) return "refinement budget exhausted";
  const ExactPoly g = gcd(a.carrier()->to_exact(), b.carrier()->to_exact());
  if (g.degree() > 0) {
    const Rational lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
    if (lo < hi && sturm_count(g, lo, hi) > 0) return "shared root in " + a.to_string();
  }
  return "refinement budget exhausted";
}

}  // namespace detail

/// Strict order of two real roots: -1 if a < b, +1 if a > b. Intervals are
/// refined, at most `budget` bisections each, until they separate. Equal
/// roots, or a budget overrun, raise UndecidedError; they never compare as
/// ordered.
inline int compare_roots(RealRoot& a, RealRoot& b, std::size_t budget = kRefinementBudget) {
  std::size_t used_a = 0, used_b = 0;
  for (;;) {
    if (a.is_point()) {
      const int c = b.compare_to(a.lo());
      if (c == 0) throw UndecidedError("shared root at " + a.to_string());
      return -c;
    }
    if (b.is_point()) {
      const int c = a.compare_to(b.lo());
      if (c == 0) throw UndecidedError("shared root at " + b.to_string());
      return c;
    }
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    const bool pick_a = (used_b >= budget) || (used_a < budget && a.width() >= b.width());
    if (used_a >= budget && used_b >= budget)
      throw UndecidedError("cannot order " + a.to_string() + " and " + b.to_string() + ": " +
                           detail::shared_root_diagnosis(a, b));
    if (pick_a) {
      a.bisect();
      ++used_a;
    } else {
      b.bisect();
      ++used_b;
    }
  }
}

/// Ascending sort by compare_roots.
inline void sort_roots(std::vector<RealRoot>& roots, std::size_t budget = kRefinementBudget) {
  for (std::size_t i = 1; i < roots.size(); ++i)
    for (std::size_t j = i; j > 0 && compare_roots(roots[j], roots[j - 1], budget) < 0; --j)
      std::swap(roots[j], roots[j - 1]);
}

struct InterlacingVerdict {
  bool holds = false;
  std::string witness;  ///< first violated clause; empty when holds
};

/// Whether U interlaces V: between any two consecutive elements of U lies
/// exactly one element of V, and either |U| = |V| + 1, or |U| = |V| and
/// max U < max V. Two empty sets interlace vacuously. The relation is not
/// symmetric when |U| = |V|. Throws UndecidedError if some element of U
/// cannot be separated from some element of V.
inline InterlacingVerdict check_interlace(std::vector<RealRoot> u, std::vector<RealRoot> v,
                                          std::size_t budget = kRefinementBudget) {
  sort_roots(u, budget);
  sort_roots(v, budget);
  const std::size_t k = u.size(), kappa = v.size();
  if (!(k == kappa + 1 || k == kappa))
    return {false, "sizes |U|=" + std::to_string(k) + ", |V|=" + std::to_string(kappa)};

  // merged order as a tag sequence: true for an element of U
  std::vector<bool> from_u;
  std::size_t i = 0, j = 0;
  while (i < k || j < kappa) {
    if (j == kappa || (i < k && compare_roots(u[i], v[j], budget) < 0)) {
      from_u.push_back(true);
      ++i;
    } else {
      from_u.push_back(false);
      ++j;
    }
  }
  std::size_t gap = 0, between = 0;
  bool seen_u = false;
  for (const bool tag : from_u) {
    if (tag) {
      if (seen_u && between != 1)
        return {false, "gap " + std::to_string(gap) + " of U holds " + std::to_string(between) + " elements of V"};
      if (seen_u) ++gap;
      seen_u = true;
      between = 0;
    } else if (seen_u) {
      ++between;
    }
  }
  if (k == kappa && k > 0 && from_u.back()) return {false, "max U > max V with |U| = |V|"};
  return {true, {}};
}

}  // namespace gbell
