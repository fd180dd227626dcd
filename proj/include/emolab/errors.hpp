#pragma once

#include <stdexcept>
#include <string>

namespace emolab {

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when exhaustive enumeration is requested beyond the supported size.
class SizeGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Raised when an operation has no meaning for the given problem family.
class UnsupportedProblem : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw ContractViolation(message);
}

}  // namespace emolab
