#ifndef PERMEAFLOW_ERRORS_HPP
#define PERMEAFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permeaflow {

/// Bad user input: grid sizes, parameter ranges, malformed config files.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative solver (Krylov, block Gauss, Newton) exhausted its budget.
class NonconvergenceError : public std::runtime_error {
 public:
  NonconvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), final_residual(residual) {}
  double final_residual;
};

/// A well-posedness requirement failed at runtime (e.g. Poisson compatibility).
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permeaflow

#endif
