#pragma once

#include <stdexcept>
#include <string>

namespace sfgft {

/// Base error for this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed its contract (non-convergence, residual too
/// large, matrix not positive definite, ...).
struct NumericalError : Error {
    explicit NumericalError(const std::string& what) : Error(what) {}
};

/// Bad configuration or experiment input.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace sfgft
