#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace enumkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A well-formed instance that violates a problem precondition.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// Conflict budget, iteration cap, or search-space cap exhausted. Never
// conflated with a negative answer.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace enumkit
