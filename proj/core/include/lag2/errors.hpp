#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lag2 {

// Input is well-formed but outside the mathematical domain of an operation
// (rational input where a quadratic irrational is required, division by zero,
// a pole of a kappa formula).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CrossFieldError : public DomainError {
 public:
  CrossFieldError() : DomainError("cross-field arithmetic unsupported") {}
};

// Malformed text input. `position()` is the 0-based byte offset of the
// offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An internal cross-check between two independent routes disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enclosure refinement hit the configured cap before deciding a result.
class PrecisionLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lag2
