#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or hyperplane text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A call whose documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The Jacobian quotient did not certify within the degree cap, so the
/// germ is treated as having a non-isolated singularity.
class NotIsolated : public Error {
 public:
  using Error::Error;
};

/// Newton number requested on a support that misses a coordinate axis.
class NonConvenient : public Error {
 public:
  using Error::Error;
};

/// Axis-padding did not reach a stable Newton number within the cap.
class StabilizationFailure : public Error {
 public:
  using Error::Error;
};

/// A sample reported a larger Milnor number than the base germ.
class SemicontinuityViolation : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not (a bug, never user error).
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace singlab
