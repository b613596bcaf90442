#pragma once

#include <stdexcept>
#include <string>

namespace gbell {

/// Input outside an operation's mathematical domain (bad φ, j > n, zero divisor, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A root comparison that could not be settled: a shared root, or the
/// refinement budget ran out before two isolating intervals separated.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gbell
