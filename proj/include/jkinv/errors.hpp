#pragma once

#include <stdexcept>
#include <string>

namespace jkinv {

// Bad or out-of-range arguments supplied by the caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition (skewness, shape, applicability) does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Structure constants or representation matrices violate Jacobi / homomorphism.
class InvalidAlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bookkeeping identity failed after a computation. Always a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Samples could not be ordered by dominance; the sampling height is too small.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jkinv
