#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "gbell/errors.hpp"

namespace gbell {

// GMP rationals are kept canonical by every arithmetic operator, so equality
// is structural. Anything built from a numerator/denominator pair goes
// through make_rational, which canonicalizes.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// True for -1, -2, -3, ...
inline bool is_negative_integer(const Rational& r) { return is_integer(r) && sgn(r) < 0; }

/// True for 0, -1, -2, ...
inline bool is_nonpositive_integer(const Rational& r) { return is_integer(r) && sgn(r) <= 0; }

inline BigInt floor_of(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline BigInt ceil_of(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// Parses an optionally signed integer or "p/q". `offset` is added to the
/// position reported on failure so callers can point into a larger string.
inline Rational parse_rational(std::string_view text, std::size_t offset = 0) {
  auto fail = [&](std::size_t pos, const std::string& what) -> Rational {
    throw DomainError("invalid rational '" + std::string(text) + "' at position " +
                      std::to_string(offset + pos) + ": " + what);
  };
  std::size_t i = 0;
  auto read_int = [&](bool allow_sign) -> std::string {
    std::string digits;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
      if (text[i] == '-') digits.push_back('-');
      ++i;
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') digits.push_back(text[i++]);
    if (i == start) fail(i, "expected digit");
    return digits;
  };
  while (i < text.size() && text[i] == ' ') ++i;
  const std::string num = read_int(true);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int(false);
  }
  while (i < text.size() && text[i] == ' ') ++i;
  if (i != text.size()) fail(i, "unexpected character");
  const BigInt d(den);
  if (d == 0) fail(i, "zero denominator");
  return make_rational(BigInt(num), d);
}

}  // namespace gbell
