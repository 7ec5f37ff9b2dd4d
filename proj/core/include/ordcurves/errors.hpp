#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordcurves {

// Malformed textual input. Line and column are 1-based; zero means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A documented hypothesis of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A property that the theory guarantees was observed to fail.
class LemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ordcurves
