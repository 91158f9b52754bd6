#pragma once

#include <stdexcept>
#include <string>

namespace sctk {

// Operands built over different parameter spaces, malformed shapes, bad labels.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A denominator vanished: either at an evaluation point or while constructing
// a quotient whose divisor is identically zero.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration cap (columns, bases, subset sizes) was hit. Callers report
// this as an inconclusive outcome instead of guessing.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sctk
