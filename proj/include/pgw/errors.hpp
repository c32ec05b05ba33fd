#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed presentation or permutation source. Line and column are 1-based;
/// a column of 0 means the error applies to the whole line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(format(line, column, what)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& what) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A group file that cannot be read.
class IoError : public Error {
 public:
  using Error::Error;
};

class InconsistentPresentation : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed its configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Generator images that do not extend to an automorphism.
class InvalidAutomorphism : public Error {
 public:
  using Error::Error;
};

/// A property that the construction guarantees turned out false.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace pgw
