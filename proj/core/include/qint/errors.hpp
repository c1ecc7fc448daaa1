#pragma once

#include <stdexcept>
#include <string>

namespace qint {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad genus, unknown id, shift too large, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Elementary move requested on an edge that does not support it.
class MoveError : public Error {
 public:
  using Error::Error;
};

/// Odd boundary intersection total on a pants piece.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Input object failed structural validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured state cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Leading-term oracle called outside its hypotheses.
class OracleError : public Error {
 public:
  using Error::Error;
};

}  // namespace qint
