#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symdyn {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a call outside an operation's preconditions.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Parse failure with the 1-based line number of the offending input.
class ParseError : public UsageError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : UsageError("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An enumeration or search would exceed its configured cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& message, std::size_t cap)
      : Error(message + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// A structural invariant failed, e.g. a transversal that does not cover an element.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace symdyn
