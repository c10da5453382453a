#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace spinalfven {

/// Input rejected before any computation; `field()` names the offending input.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Valid inputs that fall outside the domain where a formula holds
/// (beyond ion-cyclotron resonance, sound-Alfven resonance, empty locus).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Non-finite field values appeared during time integration.
class BlowUpError : public std::runtime_error {
 public:
  explicit BlowUpError(std::size_t step)
      : std::runtime_error("solver blow-up: non-finite amplitude after step " + std::to_string(step)),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Non-fatal flag raised when a model assumption (weak field, small spin
/// parameter) is violated by the inputs.
struct RegimeWarning {
  std::string code;
  std::string message;
};

}  // namespace spinalfven
