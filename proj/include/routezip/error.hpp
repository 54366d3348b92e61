#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace routezip {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A value outside its mathematical domain (non-positive weight, self-loop).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A node id outside the declared node range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Cost arithmetic exceeded the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Invalid path argument (non-consecutive concatenation, missing edge, empty path).
class PathError : public Error {
 public:
  using Error::Error;
};

/// Decompression found a gap that is not a unique shortest path, or data that
/// does not belong to the graph it is applied to.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Binary data with a bad magic, non-canonical varint, or inconsistent content.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Binary data ended before the declared content.
class LengthError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Binary data with an unknown method or record tag.
class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// An operation needs an input that was not provided, such as a hierarchy
/// for CH compression or a split graph for via nodes.
class MissingInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace routezip
