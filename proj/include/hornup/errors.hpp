#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hornup {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed implication, context, or set literal text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line number; 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive routine was asked to run on a universe beyond its guard.
class UniverseTooLarge : public Error {
 public:
  UniverseTooLarge(std::size_t n, std::size_t limit)
      : Error("universe of " + std::to_string(n) + " attributes exceeds limit of " +
              std::to_string(limit)) {}
};

/// The binary part is not transitive where a transitive one is required.
class UnpreparedBasis : public Error {
 public:
  using Error::Error;
};

/// Two attributes imply each other through binary implications.
class BinaryCycleError : public Error {
 public:
  using Error::Error;
};

/// A caller-side contract was violated (wrong kind of basis, set not closed, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hornup
