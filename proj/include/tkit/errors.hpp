#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tkit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex or item index lies outside the host graph or instance.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Operands disagree on vertex count or dimension.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine was asked to handle an input above its size guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed value (bad creation sequence, bad number, bad vertex map).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation's documented precondition on its arguments.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An instance lacks the structure an operation requires, e.g. it has no
/// equivalent graph. Carries the offending item set (1-based) when known.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::vector<int> witness = {})
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tkit
