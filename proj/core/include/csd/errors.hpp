#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class NotInComplex : public Error {
 public:
  using Error::Error;
};

class FiltrationOutOfRange : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotAFreePair : public Error {
 public:
  using Error::Error;
};

class InvalidVertexMap : public Error {
 public:
  using Error::Error;
};

class MonotonicityError : public Error {
 public:
  using Error::Error;
};

class UnknownEdge : public Error {
 public:
  using Error::Error;
};

class EmptyLandmarks : public Error {
 public:
  using Error::Error;
};

class InvalidSimplex : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line` is 1-based, `column` is the 1-based offset of
/// the offending token within the line (0 when the whole line is at fault).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ":" + std::to_string(column) +
              ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace csd
