#pragma once

#include <stdexcept>
#include <string>

namespace bdm
{

/// Invalid argument to a numerical routine (negative x, n out of range, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Adaptive quadrature hit its depth or panel limit above tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// (n-1) * int p_{n,k}(t) t^j dt diverges (n <= j+1).
struct DivergentMoment : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedSequence : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnboundedFunction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MissingDerivatives : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Log-log fit undefined because some error is not strictly positive.
struct ZeroError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace bdm
