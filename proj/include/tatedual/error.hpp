#pragma once

#include <stdexcept>
#include <string>

namespace tatedual {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (bad digit list, unparsable rational, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain: non-prime modulus, mismatched
/// precision, non-unit inversion, a hypothesis that does not hold, etc.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace tatedual
