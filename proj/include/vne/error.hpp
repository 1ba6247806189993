#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vne {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// Structurally invalid input, e.g. a self-loop.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Unknown node label or index.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Iterative numerical method failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Random graph generator could not satisfy its post-condition.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// File system failure; message includes the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vne
