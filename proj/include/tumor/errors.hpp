#ifndef TUMOR_ERRORS_HPP
#define TUMOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tumor {

/// Bad user input: config files, CLI arguments, invalid parameter ranges.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The solver produced or was handed an inadmissible state
/// (negative density, CFL violation, nonfinite field, ...).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failures on read or write.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace tumor

#endif
