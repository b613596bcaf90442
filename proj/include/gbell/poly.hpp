#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gbell/errors.hpp"
#include "gbell/rational.hpp"

namespace gbell {

/// Dense univariate polynomial over Q. Index j of coeffs() is the
/// coefficient of x^j; the highest stored coefficient is never zero, so the
/// zero polynomial has an empty coefficient vector.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  ExactPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static ExactPoly constant(const Rational& c) { return ExactPoly(std::vector<Rational>{c}); }
  static ExactPoly x() { return ExactPoly({Rational(0), Rational(1)}); }
  /// c * x^k
  static ExactPoly monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return ExactPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Rational(0); }
  const Rational& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  ExactPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = c_[j] * static_cast<unsigned long>(j);
    return ExactPoly(std::move(d));
  }

  /// p(-x)
  ExactPoly reflect() const {
    std::vector<Rational> v = c_;
    for (std::size_t j = 1; j < v.size(); j += 2) v[j] = -v[j];
    return ExactPoly(std::move(v));
  }

  /// p(x) / x^k; every removed coefficient must be zero.
  ExactPoly divide_by_x_power(std::size_t k) const {
    for (std::size_t j = 0; j < std::min(k, c_.size()); ++j)
      if (c_[j] != 0) throw DomainError("divide_by_x_power: x^k does not divide p");
    if (k >= c_.size()) return {};
    return ExactPoly(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
  }

  ExactPoly monic() const {
    if (c_.empty()) return {};
    const Rational lead = c_.back();
    std::vector<Rational> v(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) v[j] = c_[j] / lead;
    return ExactPoly(std::move(v));
  }

  ExactPoly& operator+=(const ExactPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
  }
  ExactPoly& operator-=(const ExactPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
  }
  ExactPoly& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator-(ExactPoly a) { return a *= Rational(-1); }
  friend ExactPoly operator*(ExactPoly a, const Rational& s) { return a *= s; }
  friend ExactPoly operator*(const Rational& s, ExactPoly a) { return a *= s; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return ExactPoly(std::move(v));
  }
  ExactPoly& operator*=(const ExactPoly& o) { return *this = *this * o; }

  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.c_ == b.c_; }

  /// "x^3 + 3*x^2 + x" style, highest degree first.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (long j = degree(); j >= 0; --j) {
      const Rational& c = c_[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      const bool neg = sgn(c) < 0;
      const Rational mag = abs(c);
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      const bool unit = (mag == 1);
      if (!unit || j == 0) out += gbell::to_string(mag);
      if (j > 0) {
        if (!unit) out += "*";
        out += "x";
        if (j > 1) out += "^" + std::to_string(j);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactPoly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

struct PolyDivision {
  ExactPoly quotient;
  ExactPoly remainder;
};

inline PolyDivision divmod(const ExactPoly& a, const ExactPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by the zero polynomial");
  if (a.degree() < b.degree()) return {ExactPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> q(r.size() - db);
  const Rational& lead = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational factor = r[k + db] / lead;
    q[k] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= factor * b.coeffs()[j];
  }
  r.resize(db);
  return {ExactPoly(std::move(q)), ExactPoly(std::move(r))};
}

inline ExactPoly operator%(const ExactPoly& a, const ExactPoly& b) { return divmod(a, b).remainder; }
inline ExactPoly operator/(const ExactPoly& a, const ExactPoly& b) { return divmod(a, b).quotient; }

/// Monic gcd. gcd(0, 0) is 0. Each remainder is made monic to keep the
/// rational coefficients from growing.
inline ExactPoly gcd(ExactPoly a, ExactPoly b) {
  while (!b.is_zero()) {
    ExactPoly r = (a % b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Exact quotient a / b; throws if b does not divide a.
inline ExactPoly exact_quotient(const ExactPoly& a, const ExactPoly& b) {
  PolyDivision d = divmod(a, b);
  if (!d.remainder.is_zero()) throw InternalError("exact_quotient: nonzero remainder");
  return d.quotient;
}

/// Square-free factorization (Yun). Returns f_1, f_2, ..., f_m, monic, with
/// p = lead(p) * f_1 * f_2^2 * ... * f_m^m; entries may be the constant 1.
inline std::vector<ExactPoly> square_free_factors(const ExactPoly& p) {
  if (p.is_zero()) throw DomainError("square-free factorization of the zero polynomial");
  std::vector<ExactPoly> out;
  if (p.degree() == 0) return out;
  const ExactPoly f = p.monic();
  const ExactPoly df = f.derivative();
  ExactPoly a = gcd(f, df);
  ExactPoly b = exact_quotient(f, a);
  ExactPoly c = exact_quotient(df, a);
  ExactPoly d = c - b.derivative();
  while (b.degree() > 0) {
    ExactPoly g = gcd(b, d);
    out.push_back(g);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

/// Monic square-free part p / gcd(p, p').
inline ExactPoly square_free_part(const ExactPoly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  return exact_quotient(p.monic(), gcd(p, p.derivative()));
}

/// Index of the lowest nonzero coefficient, i.e. the multiplicity of x = 0.
inline std::size_t lowest_degree(const ExactPoly& p) {
  if (p.is_zero()) throw DomainError("lowest degree of the zero polynomial");
  std::size_t j = 0;
  while (p.coeffs()[j] == 0) ++j;
  return j;
}

/// The operator p -> x (p + p'). It maps Be_n to Be_{n+1}.
inline ExactPoly raise_operator(const ExactPoly& p) {
  return ExactPoly::x() * (p + p.derivative());
}

}  // namespace gbell
