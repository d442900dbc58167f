#pragma once

#include <stdexcept>
#include <string>

namespace cauchy {

// Argument outside the mathematical domain of an operation (d < 2, x <= 0, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Point set whose affine hull is lower-dimensional than required, or which is
// ambiguous at the coplanarity tolerance.
class degenerate_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class dimension_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed polytope file; `line()` is 1-based, 0 when not tied to a line.
// what() reads "source:line: message" with absent parts omitted.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& message, const std::string& source = {})
      : std::runtime_error(format(source, line, message)), line_(line), message_(message) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(const std::string& source, std::size_t line, const std::string& message) {
    std::string out = source;
    if (line) out += (out.empty() ? "line " : ":") + std::to_string(line);
    return out.empty() ? message : out + ": " + message;
  }
  std::size_t line_;
  std::string message_;
};

}  // namespace cauchy
