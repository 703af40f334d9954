#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xorkneser {

// Caller passed arguments outside an operation's domain.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A construction's mathematical hypothesis is not met by the parameters.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Requested work exceeds the configured resource budget.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t field, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ", field " +
                           std::to_string(field) + ": " + what),
        line_(line), field_(field) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t field() const noexcept { return field_; }

private:
  std::size_t line_;
  std::size_t field_;
};

} // namespace xorkneser
