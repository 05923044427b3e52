#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace parity_forge {

// Raised by invert/divide when the leading coefficient has no inverse in the
// coefficient ring.
class non_unit_error : public std::domain_error {
 public:
  explicit non_unit_error(std::string constant)
      : std::domain_error("constant term " + constant + " is not a unit"),
        constant_(std::move(constant)) {}

  const std::string& constant() const noexcept { return constant_; }

 private:
  std::string constant_;
};

// Malformed text input. position is a 0-based character offset (or a 1-based
// line number for line-oriented formats, see line()).
class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t position, std::size_t line = 0)
      : std::invalid_argument(what), position_(position), line_(line) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

// A check or family that cannot be instantiated as written, e.g. a progression
// offset formula that does not divide exactly. Distinct from a failing check.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace parity_forge
