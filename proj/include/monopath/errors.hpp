#pragma once

#include <stdexcept>
#include <string>

namespace monopath {

// Base for every error raised by the library. Infeasible systems and
// incoherent paths are results, not errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input or an argument violating a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An exhaustive scan would exceed its configured size limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Finite-field grid q^d larger than the configured limit.
class TooLarge : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class NotPrime : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class OutOfBox : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotSwappable : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NestingWord : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class UnsupportedDimension : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Two of the shifted values a'_i + m and a'_j + l coincide, i.e. the point
// lies on the hyperplane x_i - x_j = l - m of the deformed arrangement.
class NonGenericFunctional : public Error {
 public:
  NonGenericFunctional(int letter_a, int shift_a, int letter_b, int shift_b);

  int letter_a;
  int shift_a;
  int letter_b;
  int shift_b;
};

// An identity that must hold by construction failed. Indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monopath
