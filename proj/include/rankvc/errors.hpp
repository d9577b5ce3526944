#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankvc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown label, index out of range, dimension mismatch.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed. Carries the 1-based line number (0 when
/// the problem is not tied to a single line).
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A randomized step hit a bad sample; the caller may draw again.
class RetryableError : public Error {
 public:
  using Error::Error;
};

/// A brute-force oracle was asked to enumerate an instance above its limit.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

class ContractLoopError : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked outside its domain (e.g. the vertex rule on a
/// vertex whose column is not a co-loop).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The flat spanned by a vertex neighbourhood has rank zero, so no
/// non-loop point lies on it.
class DegenerateFlatError : public Error {
 public:
  using Error::Error;
};

}  // namespace rankvc
