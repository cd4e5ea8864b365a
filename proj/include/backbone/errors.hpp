#pragma once

#include <stdexcept>
#include <string>

namespace backbone {

// Bad user input: malformed files, out-of-range arguments, contract violations.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Edge budget that cannot be met (e.g. m_bar < n-1 for a connectivity-preserving method).
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solver failed to converge, persistent Lanczos breakdown, etc.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace backbone
