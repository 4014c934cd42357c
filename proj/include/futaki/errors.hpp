#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace futaki {

/// Malformed polynomial expression. `position()` is a 0-based byte offset
/// into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// Rejected input: inhomogeneous or zero generator, mismatched variable
/// counts, malformed job files. Maps to CLI exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sampled integer sequence never settled into a polynomial of the
/// expected degree within the sampled range.
class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical identity that must hold exactly did not. Maps to CLI exit
/// code 2; never raised by bad user input.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace futaki
