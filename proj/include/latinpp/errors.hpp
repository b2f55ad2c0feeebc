#pragma once

#include <stdexcept>

namespace latinpp {

// Error taxonomy shared by the library and the CLI (exit codes 2/3/4).

/// Malformed input or misuse of an interface (CLI exit code 2).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Structurally valid input that violates a mathematical precondition
/// (CLI exit code 3).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Request exceeds the deliberate desk-scale limits (CLI exit code 4).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace latinpp
