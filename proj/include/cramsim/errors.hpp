#pragma once

#include <stdexcept>
#include <string>

namespace cramsim {

// Invalid configuration / parameter values. CLI exit code 2.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violations on physics operations (e.g. T = 0 where a thermal
// distribution is required, non-unit magnetization input).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures: non-convergent fixed point, level never crossed. CLI exit code 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cramsim
