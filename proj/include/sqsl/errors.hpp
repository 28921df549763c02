#pragma once

#include <stdexcept>
#include <string>

namespace sqsl {

/// Raised when an adaptive integration or a root search exhausts its budget
/// before meeting the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sqsl
