#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argmine {

// Base for all toolkit failures. `code` is a stable machine-readable tag
// (e.g. "COVERED_TEXT_MISMATCH") that tests and the CLI key on.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed input. `line` is 1-based; 0 when the failure is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string& message, std::size_t line = 0)
      : Error(std::move(code), line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class BoundsError : public Error {
 public:
  explicit BoundsError(const std::string& message) : Error("OUT_OF_BOUNDS", message) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace argmine
