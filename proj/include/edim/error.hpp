#pragma once

#include <stdexcept>
#include <string>

namespace edim {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition.
class invalid_argument : public error {
public:
  using error::error;
};

// The request is well formed but outside what the implemented theory
// determines. Every refusal names the missing result.
class refusal : public error {
public:
  using error::error;
};

// Signature enumeration would exceed the configured family budget.
class budget_exceeded : public error {
public:
  budget_exceeded(unsigned long long budget, const std::string& what)
      : error("enumeration budget of " + std::to_string(budget) +
              " signature families exceeded while enumerating " + what),
        budget_(budget) {}
  unsigned long long budget() const noexcept { return budget_; }

private:
  unsigned long long budget_;
};

// An internal consistency check failed (two independent routes disagree,
// a rational quantity came out irrational, ...). Never valid output.
class internal_error : public error {
public:
  using error::error;
};

} // namespace edim
