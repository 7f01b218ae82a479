#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crop {

// Base for everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition or invariant (bad label, missing
// score column, alpha out of range, ...). CLI exit code 1.
struct ValidationError : Error {
  using Error::Error;
};

// Malformed input stream. Carries the 1-based line number. CLI exit code 1.
struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
  std::size_t line_number;
};

// File could not be opened or written. CLI exit code 2.
struct IoError : Error {
  using Error::Error;
};

// A computed result broke an internal invariant. CLI exit code 3.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace crop
