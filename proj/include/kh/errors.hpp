#pragma once

#include <stdexcept>
#include <string>

namespace kh {

// Error taxonomy maps onto the CLI exit codes: validation -> 2,
// regime-infeasible -> 3, numerical failure -> 4.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RegimeError : std::runtime_error {
    explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kh
