#pragma once

#include <stdexcept>

namespace meanprop {

// Input outside the mathematical domain of an operation (negative root,
// non-positive length, infeasible cosine triple, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A checker was handed a configuration that does not satisfy the
// hypothesis of the proposition it verifies.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A point on the arc sits at an endpoint of the diameter.
class DegeneratePositionError : public DomainError {
public:
    using DomainError::DomainError;
};

// Malformed request: unknown figure, flag or option value.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace meanprop
