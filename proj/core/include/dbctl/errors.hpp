#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dbctl {

// Base class for everything the engine can refuse to do.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (expression grammar or problem files).
class ParseError : public Error {
public:
  ParseError(std::string msg, std::size_t offset, std::vector<std::string> expected)
      : Error(msg + " at offset " + std::to_string(offset)),
        message(std::move(msg)), offset(offset), expected(std::move(expected)) {}

  std::string message;
  std::size_t offset;                  // byte offset into the input
  std::vector<std::string> expected;   // tokens that would have been accepted
};

// Domain violations: division by identically-zero denominators, unbound
// symbols at evaluation, nonlinear multiplier equations, and the like.
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace dbctl
