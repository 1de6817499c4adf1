#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace photonfluid {

/// Bad input: out-of-range parameters, malformed config, wrong dimensions.
/// The CLI maps this family to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Repulsive interaction required; raised for self-focusing media.
class AttractiveMediumError : public ValidationError {
 public:
  explicit AttractiveMediumError(const std::string& what)
      : ValidationError("attractive medium: " + what) {}
};

/// Numerical failure during a computation (exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Negative Bogoliubov radicand, or a zero-energy mode where u, v diverge.
class UnstableModeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Non-fatal diagnostics (resonance mismatch, paraxiality). Defaults to stderr.
using WarningSink = std::function<void(const std::string&)>;
void set_warning_sink(WarningSink sink);
void warn(const std::string& message);

}  // namespace photonfluid
