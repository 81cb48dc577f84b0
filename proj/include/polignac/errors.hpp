#pragma once

#include <stdexcept>

namespace polignac {

/// Input outside an operation's mathematical domain (modulus < 2, k out of
/// range, malformed index constraints, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A coprimality or admissibility requirement of a derived operation failed
/// (combination gcds, benchmark inputs rejected by a theorem).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace polignac
