#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emph {

// Input that cannot be read at all: bad syntax, wrong column count.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tensor shape incompatibility; the message names the offending primitive.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a training run cannot continue (e.g. non-finite loss).
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emph
