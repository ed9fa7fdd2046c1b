#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqdepth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Generators that do not describe a valid pair J ⊆ I.
class InvalidIdealPair : public Error {
 public:
  using Error::Error;
};

/// The module I/J is zero, so it has no poset, depth or Stanley depth.
class ZeroModuleError : public Error {
 public:
  ZeroModuleError() : Error("zero module: I = J, the poset is empty") {}
};

/// An operation was called outside its documented preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace sqdepth
