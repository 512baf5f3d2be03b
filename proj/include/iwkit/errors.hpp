#pragma once

#include <stdexcept>
#include <string>

namespace iwkit {

// Base of every error the library raises. The CLI maps the concrete type to
// its exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (mixed primes, non-monic divisor, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A value could not be distinguished from zero, or a rank from a length, at
// the working precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A result does not fit under the degree cap.
class DegreeOverflow : public InputError {
 public:
  DegreeOverflow(const std::string& what, int required_cap)
      : InputError(what + " (requires degree cap >= " + std::to_string(required_cap) + ")"),
        required_cap_(required_cap) {}
  int required_cap() const noexcept { return required_cap_; }

 private:
  int required_cap_;
};

// The zero series has no Iwasawa invariants.
class ZeroSeriesError : public InputError {
 public:
  ZeroSeriesError() : InputError("series is indistinguishable from zero") {}
};

// A formula was evaluated outside the range where it holds.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

// A mathematically undefined quantity was requested (e.g. a Kobayashi rank
// across a transition with infinite kernel).
class UndefinedResult : public Error {
 public:
  using Error::Error;
};

}  // namespace iwkit
