#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "gbell/errors.hpp"
#include "gbell/poly.hpp"
#include "gbell/rational.hpp"

namespace gbell {

/// Growable triangle of Stirling numbers of the second kind, filled by
/// S(n,j) = j S(n-1,j) + S(n-1,j-1). Safe for concurrent readers; growth
/// takes the exclusive lock.
class StirlingTable {
 public:
  StirlingTable() { rows_.push_back({BigInt(1)}); }

  BigInt operator()(std::size_t n, std::size_t j) const {
    if (j > n) throw DomainError("stirling2: j > n");
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][j];
    }
    std::unique_lock lock(mutex_);
    grow(n);
    return rows_[n][j];
  }

  /// Copy of row n: S(n,0..n).
  std::vector<BigInt> row(std::size_t n) const {
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n];
    }
    std::unique_lock lock(mutex_);
    grow(n);
    return rows_[n];
  }

  std::size_t rows_built() const {
    std::shared_lock lock(mutex_);
    return rows_.size();
  }

 private:
  void grow(std::size_t n) const {
    while (rows_.size() <= n) {
      const std::vector<BigInt>& prev = rows_.back();
      const std::size_t m = rows_.size();
      std::vector<BigInt> next(m + 1);
      next[0] = 0;
      for (std::size_t j = 1; j < m; ++j) next[j] = BigInt(static_cast<unsigned long>(j)) * prev[j] + prev[j - 1];
      next[m] = 1;
      rows_.push_back(std::move(next));
    }
  }

  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<BigInt>> rows_;
};

inline const StirlingTable& stirling_table() {
  static const StirlingTable table;
  return table;
}

inline BigInt stirling2(std::size_t n, std::size_t j) { return stirling_table()(n, j); }

/// Be_n(x) = sum_j S(n,j) x^j.
inline ExactPoly bell_poly(std::size_t n) {
  const std::vector<BigInt> row = stirling_table().row(n);
  std::vector<Rational> c(row.begin(), row.end());
  return ExactPoly(std::move(c));
}

/// Be_n by iterating Be_{k+1} = x (1 + d/dx) Be_k from Be_0 = 1.
inline ExactPoly bell_poly_by_recurrence(std::size_t n) {
  ExactPoly p = ExactPoly::constant(1);
  for (std::size_t k = 0; k < n; ++k) p = raise_operator(p);
  return p;
}

}  // namespace gbell
