#pragma once

#include <stdexcept>
#include <string>

namespace borelcover {

// Each error class maps to a distinct CLI exit code (see cli.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input that parses but violates a mathematical precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size or iteration limit was exceeded.
class ScaleCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace borelcover
