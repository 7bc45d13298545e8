#pragma once

#include <stdexcept>
#include <string>

namespace affhecke {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (CLI grammar, window or word syntax).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands of different rank, or functions on mismatched orbit domains.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument outside the admissible range of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An element outside the positive cone was passed where one is required.
class NotPositive : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A family of orbit functions violating the required compatibilities.
class IncompatibleFamily : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Checked 64-bit coefficient arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A size guard rejected the request before any work was done.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A post-condition that the code guarantees was found violated.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

}  // namespace affhecke
