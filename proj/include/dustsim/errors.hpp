#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dustsim {

// A closed form was evaluated outside its mathematical domain
// (e.g. the break-even threshold at beta <= 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A simulation configuration cannot produce meaningful statistics
// (e.g. too few line crossings fit in the requested duration).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data; carries the 1-based line number of the offending row
// (0 when no line applies, e.g. an unreadable file).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(
            line == 0 ? message
                      : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dustsim
