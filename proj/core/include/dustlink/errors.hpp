#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace dustlink {

/// Raised when an input violates a documented precondition or type invariant.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a numeric routine detects that its monotonicity assumption does not hold.
class NumericAssumptionViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw InvalidInput(message);
    }
}

inline void require_finite(double value, const std::string& name)
{
    require(std::isfinite(value), name + " must be finite");
}

inline void require_positive(double value, const std::string& name)
{
    require(std::isfinite(value) && value > 0.0, name + " must be positive and finite");
}

inline void require_non_negative(double value, const std::string& name)
{
    require(std::isfinite(value) && value >= 0.0, name + " must be non-negative and finite");
}

} // namespace detail
} // namespace dustlink
