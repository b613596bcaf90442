#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gbell/errors.hpp"
#include "gbell/poly.hpp"
#include "gbell/rational.hpp"

namespace gbell {

/// Primitive integer polynomial, a positive multiple of an ExactPoly. Used
/// for sign evaluation, where only signs matter and mpz Horner is cheap.
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(const ExactPoly& p) {
    if (p.is_zero()) return;
    BigInt den(1);
    for (const Rational& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    c_.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) c_.push_back(c.get_num() * (den / c.get_den()));
    make_primitive();
  }

  explicit IntPoly(std::vector<BigInt> c) : c_(std::move(c)) {
    trim();
    make_primitive();
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const { return c_.back(); }

  /// Sign of p(r), computed as the sign of q^d p(p/q) with integer Horner.
  int sign_at(const Rational& r) const {
    if (c_.empty()) return 0;
    const BigInt& num = r.get_num();
    const BigInt& den = r.get_den();
    BigInt acc = c_.back();
    BigInt den_pow(1);
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
      den_pow *= den;
      acc *= num;
      acc += c_[k] * den_pow;
    }
    return sgn(acc);
  }

  IntPoly derivative() const {
    std::vector<BigInt> d;
    for (std::size_t j = 1; j < c_.size(); ++j) d.push_back(c_[j] * static_cast<unsigned long>(j));
    return IntPoly(std::move(d));
  }

  ExactPoly to_exact() const { return ExactPoly(std::vector<Rational>(c_.begin(), c_.end())); }

  /// -(sign-corrected pseudo-remainder of a by b), made primitive: the next
  /// member of a Sturm chain. A positive rescaling of -rem(a, b).
  friend IntPoly negated_remainder(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    const BigInt& lead = b.c_.back();
    int scale_sign = 1;
    while (r.size() >= b.c_.size()) {
      const BigInt top = r.back();
      const std::size_t shift = r.size() - b.c_.size();
      for (auto& v : r) v *= lead;
      if (sgn(lead) < 0) scale_sign = -scale_sign;
      for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= top * b.c_[j];
      while (!r.empty() && r.back() == 0) r.pop_back();
      IntPoly::divide_content(r);
    }
    if (scale_sign > 0)
      for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
  }

 private:
  static void divide_content(std::vector<BigInt>& v) {
    BigInt g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
      for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void make_primitive() { divide_content(c_); }

  std::vector<BigInt> c_;
};

/// Sturm chain p, p', -rem, ... of a square-free polynomial.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
    chain_.push_back(p);
    if (p.degree() == 0) return;
    chain_.push_back(p.derivative());
    while (chain_.back().degree() > 0) {
      IntPoly next = negated_remainder(chain_[chain_.size() - 2], chain_.back());
      if (next.is_zero()) break;
      chain_.push_back(std::move(next));
    }
  }

  /// Sign variations at r, zeros dropped.
  std::size_t variations(const Rational& r) const {
    std::size_t v = 0;
    int last = 0;
    for (const auto& q : chain_) {
      const int s = q.sign_at(r);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  /// Distinct real roots in (lo, hi]; valid for any lo < hi because a root
  /// at lo is invisible to the zero-dropping variation count.
  std::size_t count(const Rational& lo, const Rational& hi) const {
    const std::size_t a = variations(lo);
    const std::size_t b = variations(hi);
    return a >= b ? a - b : 0;
  }

  const IntPoly& base() const { return chain_.front(); }
  std::size_t size() const { return chain_.size(); }

 private:
  std::vector<IntPoly> chain_;
};

/// Power of two strictly above the Cauchy bound 1 + max |c_j / c_d|.
inline Rational root_bound(const ExactPoly& p) {
  if (p.is_zero()) throw DomainError("root bound of the zero polynomial");
  Rational m(0);
  const Rational lead = abs(p.leading());
  for (std::size_t j = 0; j + 1 < p.coeffs().size(); ++j) m = std::max(m, Rational(abs(p.coeffs()[j]) / lead));
  const Rational cauchy = m + 1;
  Rational b(1);
  while (b <= cauchy) b *= 2;
  return b;
}

/// Number of distinct real roots of p in (lo, hi].
inline std::size_t sturm_count(const ExactPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("sturm_count: zero polynomial");
  if (!(lo < hi)) throw DomainError("sturm_count: requires lo < hi");
  if (p.degree() == 0) return 0;
  return SturmChain(IntPoly(square_free_part(p))).count(lo, hi);
}

/// One real root: an exact rational point (lo == hi), or an open interval
/// (lo, hi) holding exactly one root of `carrier`, a square-free polynomial
/// with nonzero values of opposite sign at lo and hi.
class RealRoot {
 public:
  RealRoot() = default;

  static RealRoot point(Rational r, std::size_t multiplicity, std::shared_ptr<const IntPoly> carrier) {
    RealRoot out;
    out.lo_ = r;
    out.hi_ = std::move(r);
    out.multiplicity_ = multiplicity;
    out.carrier_ = std::move(carrier);
    return out;
  }

  static RealRoot interval(Rational lo, Rational hi, std::size_t multiplicity,
                           std::shared_ptr<const IntPoly> carrier) {
    RealRoot out;
    out.sign_lo_ = carrier->sign_at(lo);
    if (out.sign_lo_ == 0 || carrier->sign_at(hi) != -out.sign_lo_ || !(lo < hi))
      throw InternalError("RealRoot::interval: endpoints do not bracket a simple root");
    out.lo_ = std::move(lo);
    out.hi_ = std::move(hi);
    out.multiplicity_ = multiplicity;
    out.carrier_ = std::move(carrier);
    return out;
  }

  bool is_point() const { return lo_ == hi_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  std::size_t multiplicity() const { return multiplicity_; }
  void set_multiplicity(std::size_t m) { multiplicity_ = m; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  double approx() const { return to_double(midpoint()); }
  const std::shared_ptr<const IntPoly>& carrier() const { return carrier_; }

  /// Halves the interval; becomes a point if the midpoint is the root.
  void bisect() {
    if (is_point()) return;
    split_at(midpoint());
  }

  void refine_below(const Rational& width) {
    while (!is_point() && !(hi_ - lo_ < width)) bisect();
  }

  /// Sign of (root - r). Exact; refines the interval when r falls inside it.
  int compare_to(const Rational& r) {
    if (is_point()) return cmp(lo_, r) < 0 ? -1 : (lo_ == r ? 0 : 1);
    if (r <= lo_) return 1;
    if (r >= hi_) return -1;
    split_at(r);
    if (is_point()) return 0;
    return r <= lo_ ? 1 : -1;
  }

  /// Tests whether some rational with denominator dividing `den` is the root,
  /// and turns the interval into that point if so. Any rational root of a
  /// primitive integer polynomial has denominator dividing its leading
  /// coefficient, so with den = |lead(carrier)| a negative answer proves the
  /// root irrational.
  bool detect_rational(const BigInt& den) {
    if (is_point()) return true;
    const Rational step = make_rational(BigInt(1), den);
    while (!(hi_ - lo_ < step)) {
      bisect();
      if (is_point()) return true;
    }
    BigInt k;
    const Rational scaled = lo_ * den;
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const Rational candidate = make_rational(k + 1, den);
    if (candidate < hi_ && carrier_->sign_at(candidate) == 0) {
      lo_ = hi_ = candidate;
      return true;
    }
    return false;
  }

  std::string to_string() const {
    if (is_point()) return gbell::to_string(lo_);
    return "(" + gbell::to_string(lo_) + ", " + gbell::to_string(hi_) + ")";
  }

 private:
  void split_at(const Rational& m) {
    const int s = carrier_->sign_at(m);
    if (s == 0) {
      lo_ = hi_ = m;
    } else if (s == sign_lo_) {
      lo_ = m;
    } else {
      hi_ = m;
    }
  }

  Rational lo_, hi_;
  std::size_t multiplicity_ = 1;
  int sign_lo_ = 0;
  std::shared_ptr<const IntPoly> carrier_;
};

/// Certified isolation of all real roots of a polynomial, sorted ascending.
struct RootIsolation {
  std::vector<RealRoot> roots;
  ExactPoly square_free_part;
  std::size_t degree = 0;

  std::size_t distinct() const { return roots.size(); }
  std::size_t real_with_multiplicity() const {
    std::size_t n = 0;
    for (const auto& r : roots) n += r.multiplicity();
    return n;
  }
  std::size_t nonreal() const { return degree - real_with_multiplicity(); }
  /// gcd(p, p') is constant.
  bool square_free() const { return static_cast<std::size_t>(square_free_part.degree()) == degree; }
  /// Every zero, real or not, is simple, and all are real.
  bool all_real_simple() const { return square_free() && nonreal() == 0; }

  // No interval straddles 0, so the sign of each root is read off its endpoints.
  std::vector<RealRoot> negative() const {
    std::vector<RealRoot> out;
    for (const auto& r : roots)
      if (sgn(r.hi()) < 0 || (!r.is_point() && sgn(r.hi()) <= 0)) out.push_back(r);
    return out;
  }
  std::vector<RealRoot> positive() const {
    std::vector<RealRoot> out;
    for (const auto& r : roots)
      if (sgn(r.lo()) > 0 || (!r.is_point() && sgn(r.lo()) >= 0)) out.push_back(r);
    return out;
  }
  /// Multiplicity of the root x = 0, or 0 when p(0) != 0.
  std::size_t zero_multiplicity() const {
    for (const auto& r : roots)
      if (r.is_point() && sgn(r.lo()) == 0) return r.multiplicity();
    return 0;
  }
  std::size_t negative_count() const { return negative().size(); }
  std::size_t positive_count() const { return positive().size(); }
};

namespace detail {

/// Emits, in ascending order, the roots of chain.base() in (lo, hi); the
/// endpoints are not roots and v_lo, v_hi are their sign variations.
inline void isolate_span(const SturmChain& chain, const std::shared_ptr<const IntPoly>& carrier, const Rational& lo,
                         const Rational& hi, std::size_t v_lo, std::size_t v_hi, std::vector<RealRoot>& out) {
  const std::size_t count = v_lo - v_hi;
  if (count == 0) return;
  if (count == 1) {
    out.push_back(RealRoot::interval(lo, hi, 1, carrier));
    return;
  }
  const Rational mid = (lo + hi) / 2;
  if (carrier->sign_at(mid) != 0) {
    const std::size_t v_mid = chain.variations(mid);
    isolate_span(chain, carrier, lo, mid, v_lo, v_mid, out);
    isolate_span(chain, carrier, mid, hi, v_mid, v_hi, out);
    return;
  }
  // mid is a root: fence it off with nonzero endpoints enclosing no other root
  Rational delta = (hi - lo) / 4;
  for (;;) {
    const Rational a = mid - delta, b = mid + delta;
    if (carrier->sign_at(a) != 0 && carrier->sign_at(b) != 0) {
      const std::size_t va = chain.variations(a), vb = chain.variations(b);
      if (va - vb == 1) {
        isolate_span(chain, carrier, lo, a, v_lo, va, out);
        out.push_back(RealRoot::point(mid, 1, carrier));
        isolate_span(chain, carrier, b, hi, vb, v_hi, out);
        return;
      }
    }
    delta /= 2;
  }
}

/// Roots of a square-free polynomial as exact points and isolating
/// intervals narrower than `width`. No interval contains 0, and a root left
/// as an interval is certified irrational.
inline std::vector<RealRoot> isolate_square_free(const ExactPoly& sf, const Rational& width) {
  std::vector<RealRoot> out;
  if (sf.degree() <= 0) return out;
  auto carrier = std::make_shared<const IntPoly>(sf);
  const SturmChain chain(*carrier);
  const Rational bound = root_bound(sf);
  isolate_span(chain, carrier, -bound, bound, chain.variations(-bound), chain.variations(bound), out);
  const BigInt lead = abs(carrier->leading());
  for (auto& r : out) {
    r.refine_below(width);
    if (!r.is_point()) r.compare_to(Rational(0));
    if (!r.is_point()) r.detect_rational(lead);
  }
  return out;
}

}  // namespace detail

/// Default isolation width, 2^-20.
inline Rational default_width() { return make_rational(BigInt(1), BigInt(1) << 20); }

/// Isolates every real root of p. Multiplicities come from the square-free
/// factorization p = c f_1 f_2^2 ... f_m^m; the roots themselves are isolated
/// on the square-free part, which is the carrier of every interval.
inline RootIsolation isolate_roots(const ExactPoly& p, const Rational& width = default_width()) {
  if (p.is_zero()) throw DomainError("isolate_roots: zero polynomial");
  if (sgn(width) <= 0) throw DomainError("isolate_roots: width must be positive");
  RootIsolation out;
  out.degree = static_cast<std::size_t>(p.degree());
  if (p.degree() == 0) {
    out.square_free_part = ExactPoly::constant(1);
    return out;
  }
  const std::vector<ExactPoly> factors = square_free_factors(p);
  ExactPoly sf = ExactPoly::constant(1);
  for (const auto& f : factors) sf *= f;
  out.square_free_part = sf;
  out.roots = detail::isolate_square_free(sf, width);
  if (factors.size() == 1) return out;

  std::vector<IntPoly> int_factors;
  for (const auto& f : factors) int_factors.emplace_back(f);
  for (auto& r : out.roots) {
    std::size_t mult = 0;
    for (std::size_t i = 0; i < int_factors.size() && mult == 0; ++i) {
      const IntPoly& f = int_factors[i];
      if (f.degree() <= 0) continue;
      const bool hit = r.is_point() ? f.sign_at(r.lo()) == 0 : f.sign_at(r.lo()) != f.sign_at(r.hi());
      if (hit) mult = i + 1;
    }
    if (mult == 0) throw InternalError("isolate_roots: root not found in any square-free factor");
    r.set_multiplicity(mult);
  }
  return out;
}

struct RealRootCount {
  std::size_t distinct = 0;
  std::size_t with_multiplicity = 0;
};

/// Global real-root counts from Sturm chains over (-B, B], B above the root
/// bound, one chain per square-free factor.
inline RealRootCount real_root_count(const ExactPoly& p) {
  if (p.is_zero()) throw DomainError("real_root_count: zero polynomial");
  RealRootCount out;
  if (p.degree() == 0) return out;
  const Rational b = root_bound(p);
  const std::vector<ExactPoly> factors = square_free_factors(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    const std::size_t c = SturmChain(IntPoly(factors[i])).count(-b, b);
    out.distinct += c;
    out.with_multiplicity += c * (i + 1);
  }
  return out;
}

/// Multiplicity of the root x = 0: the index of the lowest nonzero coefficient.
inline std::size_t multiplicity_at_zero(const ExactPoly& p) { return lowest_degree(p); }

}  // namespace gbell
