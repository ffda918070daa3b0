#pragma once

#include <stdexcept>
#include <string>

namespace swpm {

/// Invalid or inconsistent user input (config files, presets, CLI flags).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The numerical solution left the representable range: NaN/Inf, stress
/// overflow, CFL retry exhaustion, or a Riemann iteration that failed.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swpm
