#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace almostperm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// The requested p-th root does not exist.
class NoExactRoot : public Error {
public:
  using Error::Error;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// An exhaustive search was asked to go beyond its configured size cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

} // namespace almostperm
