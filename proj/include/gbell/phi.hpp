#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gbell/errors.hpp"
#include "gbell/rational.hpp"

namespace gbell {

enum class TailKind { zero, constant, affine };

/// Rule giving phi_i past the explicit prefix: 0, a constant r, or alpha + i.
struct TailRule {
  TailKind kind = TailKind::zero;
  Rational value{0};

  static TailRule zero() { return {}; }
  static TailRule constant(Rational r) { return {TailKind::constant, std::move(r)}; }
  static TailRule affine(Rational alpha) { return {TailKind::affine, std::move(alpha)}; }

  friend bool operator==(const TailRule& a, const TailRule& b) {
    if (a.kind != b.kind) return false;
    return a.kind == TailKind::zero || a.value == b.value;
  }
};

/// The parameter sequence (phi_i)_{i>=1}: an explicit prefix phi_1..phi_L
/// plus a tail rule. Indexing is 1-based, as everywhere in this library.
class PhiSequence {
 public:
  PhiSequence() = default;
  explicit PhiSequence(std::vector<Rational> prefix, TailRule tail = TailRule::zero())
      : prefix_(std::move(prefix)), tail_(std::move(tail)) {}

  /// phi_i = r for every i >= 1.
  static PhiSequence constant(const Rational& r) { return PhiSequence({}, TailRule::constant(r)); }
  /// phi_i = alpha + i for every i >= 1.
  static PhiSequence affine(const Rational& alpha) { return PhiSequence({}, TailRule::affine(alpha)); }

  const std::vector<Rational>& prefix() const { return prefix_; }
  const TailRule& tail() const { return tail_; }
  std::size_t prefix_length() const { return prefix_.size(); }

  Rational operator[](std::size_t i) const {
    if (i == 0) throw DomainError("phi is indexed from 1");
    if (i <= prefix_.size()) return prefix_[i - 1];
    switch (tail_.kind) {
      case TailKind::zero: return Rational(0);
      case TailKind::constant: return tail_.value;
      case TailKind::affine: return tail_.value + static_cast<unsigned long>(i);
    }
    return Rational(0);
  }

  /// phi_1..phi_n.
  std::vector<Rational> first(std::size_t n) const {
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back((*this)[i]);
    return out;
  }

  /// The sequence with phi_l deleted; later entries move one place left.
  PhiSequence remove_term(std::size_t l) const {
    if (l == 0) throw DomainError("remove_term: l must be >= 1");
    if (l > prefix_.size()) {
      if (tail_.kind == TailKind::affine)
        throw DomainError("remove_term: removal inside an affine tail is unsupported");
      return *this;
    }
    std::vector<Rational> p = prefix_;
    p.erase(p.begin() + static_cast<long>(l - 1));
    TailRule t = tail_;
    // phi'_i = phi_{i+1} = alpha + (i + 1) past the new prefix
    if (t.kind == TailKind::affine) t.value += 1;
    return PhiSequence(std::move(p), std::move(t));
  }

  /// phi_i + M delta_{i,l}; the prefix is extended from the tail rule if needed.
  PhiSequence perturb(std::size_t l, const Rational& m) const {
    if (l == 0) throw DomainError("perturb: l must be >= 1");
    if (m == 0) return *this;
    PhiSequence out = materialized(l);
    out.prefix_[l - 1] += m;
    return out;
  }

  /// (s + phi_i)_i, applied to every entry including the tail.
  PhiSequence shifted(const Rational& s) const {
    std::vector<Rational> p = prefix_;
    for (auto& v : p) v += s;
    TailRule t = tail_;
    switch (t.kind) {
      case TailKind::zero: t = TailRule::constant(s); break;
      case TailKind::constant:
      case TailKind::affine: t.value += s; break;
    }
    if (t.kind == TailKind::constant && t.value == 0) t = TailRule::zero();
    return PhiSequence(std::move(p), std::move(t));
  }

  /// Same sequence with the prefix extended to at least n explicit entries.
  PhiSequence materialized(std::size_t n) const {
    if (n <= prefix_.size()) return *this;
    PhiSequence out = *this;
    // an affine tail alpha + i is indexed absolutely, so it needs no adjustment
    for (std::size_t i = prefix_.size() + 1; i <= n; ++i) out.prefix_.push_back((*this)[i]);
    return out;
  }

  /// phi_i == other_i for i = 1..n.
  bool agrees_on(const PhiSequence& other, std::size_t n) const {
    for (std::size_t i = 1; i <= n; ++i)
      if ((*this)[i] != other[i]) return false;
    return true;
  }

  friend bool operator==(const PhiSequence& a, const PhiSequence& b) {
    return a.prefix_ == b.prefix_ && a.tail_ == b.tail_;
  }

  /// Textual form "r1,r2,...;tail=zero|const:R|affine:A". A zero tail is
  /// written out explicitly so the output is unambiguous.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
      if (i) out += ",";
      out += gbell::to_string(prefix_[i]);
    }
    out += ";tail=";
    switch (tail_.kind) {
      case TailKind::zero: out += "zero"; break;
      case TailKind::constant: out += "const:" + gbell::to_string(tail_.value); break;
      case TailKind::affine: out += "affine:" + gbell::to_string(tail_.value); break;
    }
    return out;
  }

 private:
  std::vector<Rational> prefix_;
  TailRule tail_;
};

/// Parses "r1,...,rL[;tail=zero|const:R|affine:A]". An empty prefix is
/// allowed ("" or ";tail=const:2"). Errors carry the character position.
inline PhiSequence parse_phi(std::string_view text) {
  std::string_view body = text;
  std::string_view tail_text;
  std::size_t tail_pos = 0;
  if (const auto semi = text.find(';'); semi != std::string_view::npos) {
    body = text.substr(0, semi);
    tail_text = text.substr(semi + 1);
    tail_pos = semi + 1;
  }
  std::vector<Rational> prefix;
  std::size_t start = 0;
  const bool blank = body.find_first_not_of(' ') == std::string_view::npos;
  while (!blank) {
    const std::size_t comma = body.find(',', start);
    const std::string_view item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    prefix.push_back(parse_rational(item, start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  TailRule tail;
  if (tail_pos != 0) {
    constexpr std::string_view key = "tail=";
    if (tail_text.substr(0, key.size()) != key)
      throw DomainError("invalid phi spec at position " + std::to_string(tail_pos) + ": expected 'tail='");
    const std::string_view rule = tail_text.substr(key.size());
    const std::size_t rule_pos = tail_pos + key.size();
    if (rule == "zero") {
      tail = TailRule::zero();
    } else if (rule.substr(0, 6) == "const:") {
      tail = TailRule::constant(parse_rational(rule.substr(6), rule_pos + 6));
    } else if (rule.substr(0, 7) == "affine:") {
      tail = TailRule::affine(parse_rational(rule.substr(7), rule_pos + 7));
    } else {
      throw DomainError("invalid phi spec at position " + std::to_string(rule_pos) +
                        ": tail must be zero, const:R or affine:A");
    }
  }
  return PhiSequence(std::move(prefix), std::move(tail));
}

/// Phi_0^n .. Phi_n^n: the elementary symmetric functions of phi_1..phi_n,
/// so that prod_{i<=n} (x + phi_i) = sum_j Phi_{n-j}^n x^j.
inline std::vector<Rational> elementary_symmetric(const PhiSequence& phi, std::size_t n) {
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational f = phi[i];
    for (std::size_t k = i; k >= 1; --k) e[k] += f * e[k - 1];
  }
  return e;
}

}  // namespace gbell
