#pragma once

#include <stdexcept>
#include <string>

namespace mineo {

// Malformed input or violated precondition.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance exceeds a documented size limit of an exhaustive routine.
class limit_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Text-format error carrying the 1-based line it was detected on
// (0 means end of input).
class parse_error : public validation_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : validation_error(line == 0 ? "end of file: " + what
                                   : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mineo
