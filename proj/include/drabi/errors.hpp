#pragma once

#include <stdexcept>
#include <string>

namespace drabi {

// Configuration / input problems (CLI exit code 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

// Numerical / domain failures (CLI exit code 3).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyBranch : NumericalError {
    using NumericalError::NumericalError;
};
struct WellCeiling : NumericalError {
    using NumericalError::NumericalError;
};
struct SingularEnergy : NumericalError {
    using NumericalError::NumericalError;
};
struct NoConvergence : NumericalError {
    using NumericalError::NumericalError;
};
struct BasisMismatch : NumericalError {
    using NumericalError::NumericalError;
};
struct TransientNotBracketed : NumericalError {
    using NumericalError::NumericalError;
};
struct NoApproachFound : NumericalError {
    using NumericalError::NumericalError;
};
struct PrecisionExhausted : NumericalError {
    PrecisionExhausted(const std::string& msg, double bound)
        : NumericalError(msg), gap_upper_bound(bound) {}
    double gap_upper_bound;  // last resolved |dE|, an upper bound on the true gap
};
struct IndexOutOfRange : NumericalError {
    using NumericalError::NumericalError;
};
struct WindowOutOfRange : NumericalError {
    using NumericalError::NumericalError;
};
struct UnassignedPopulation : NumericalError {
    using NumericalError::NumericalError;
};
struct UndefinedEnsemble : NumericalError {
    using NumericalError::NumericalError;
};
struct InsufficientLevels : NumericalError {
    using NumericalError::NumericalError;
};
struct InvalidProbability : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace drabi
