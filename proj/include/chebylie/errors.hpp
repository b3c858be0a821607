#pragma once

#include <stdexcept>
#include <string>

namespace chebylie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Lie type, index or parameter violates a stated bound.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// Operands live in lattices of different rank.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Fixed-width coordinate arithmetic would wrap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Input does not satisfy an operation's precondition (not dominant, not
/// invariant, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration cap or work budget would be exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity the algorithms rely on did not hold. Seeing one of
/// these means a bug, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace chebylie
