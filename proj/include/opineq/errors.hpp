#pragma once

#include <stdexcept>
#include <string>

namespace opineq {

// Dimension disagreement between operands.
struct DimMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An eigenvalue fell outside the domain of the scalar function being applied.
struct DomainViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// Input required to be strictly positive was not.
struct NonPositiveInput : std::domain_error {
    using std::domain_error::domain_error;
};

// Matrix failed the positive-definiteness check at construction.
struct NotPositiveDefinite : std::domain_error {
    using std::domain_error::domain_error;
};

// Jacobi sweeps exhausted without reaching the off-diagonal threshold.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sandwich constants do not satisfy 0 < m' <= m < M <= M', or the pair
// fails the spectral separation they assert.
struct InvalidCondition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Window bounds are not ordered positive reals.
struct InvalidWindow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Spectrum escapes the window a bound family requires.
struct WindowViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// Grid search found no sign change at the requested resolution.
struct NoWitnessFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace opineq
