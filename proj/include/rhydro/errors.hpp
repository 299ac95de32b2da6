#ifndef RHYDRO_ERRORS_HPP
#define RHYDRO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rhydro {

// Invalid arguments, malformed configs, out-of-range sites. CLI exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver blow-up, tolerance failure, overflow. CLI exit code 3.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Guards against state-space or matrix sizes we refuse to handle. CLI exit code 3.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rhydro

#endif
