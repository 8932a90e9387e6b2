#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netgame {

/// Base for all library errors. The CLI maps these to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller-supplied argument is outside the operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Numerical data that cannot be processed (corrupt moments, singular systems, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace netgame
