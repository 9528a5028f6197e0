#pragma once

#include <stdexcept>
#include <string>

namespace mdssd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad field order, wrong parity, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The self-duality criterion on an evaluation set does not hold.
class ConditionUnsatisfied : public Error {
 public:
  using Error::Error;
};

/// The requested (q, n) has no self-dual code because q = 3 mod 4 and n = 2 mod 4.
class BlockedByNonexistence : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search or certification would exceed its configured budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A check that must hold whenever its inputs were accepted failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// An artifact or claim file could not be parsed or violates a schema invariant.
class MalformedArtifact : public Error {
 public:
  using Error::Error;
};

}  // namespace mdssd
