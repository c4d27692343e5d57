#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

// Invalid argument to a numerical routine: dimension mismatch, out-of-range
// order, parameter outside its documented interval.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Non-finite state encountered while integrating; carries the failing time.
class IntegrationBlowup : public std::runtime_error {
public:
  IntegrationBlowup(double t, const std::string& what)
      : std::runtime_error(what), time_(t) {}
  double time() const noexcept { return time_; }

private:
  double time_ = 0.0;
};

// |H_uu| fell below the degeneracy threshold where a division by it was
// required; callers should fall back to degeneracy_order().
class DegenerateDenominator : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Trigonometric polynomial with (numerically) all-zero coefficients.
class DegeneratePolynomial : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Derivative-free search hit a non-finite objective; carries the offending
// perturbation vector, formatted into the message.
class SearchError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Scenario file rejected: syntax error (with line/column from the parser) or
// schema violation (with a JSON-pointer-style path).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace loewner
