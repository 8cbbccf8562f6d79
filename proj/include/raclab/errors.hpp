#pragma once

#include <stdexcept>
#include <string>

namespace raclab {

// Caller broke a documented precondition (maps to CLI exit code 2).
struct ContractViolation : std::invalid_argument {
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// Requested instance exceeds the configured work cap (CLI exit code 3).
struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// An iterative routine hit its iteration cap before reaching tolerance.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Two redundant evaluation paths that must agree did not.
struct InternalConsistencyError : std::runtime_error {
    explicit InternalConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw ContractViolation(message);
}

}  // namespace raclab
