#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

// Bad or malformed input: schema violations, invariant failures,
// degenerate configurations that make a requested operation ill-defined.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Failures of the numerical machinery (corrector divergence, singular
// geometry encountered mid-computation).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Removing the requested edge does not leave a one-degree-of-freedom
// mechanism (pinned nullity != 1).
struct NotAMechanismError : NumericalError {
    explicit NotAMechanismError(const std::string& msg) : NumericalError(msg) {}
};

// A path point hit the cone apex.
struct SingularityError : NumericalError {
    explicit SingularityError(const std::string& msg) : NumericalError(msg) {}
};

// Predictor-corrector could not converge even after step halving.
struct CorrectorDivergenceError : NumericalError {
    int step_index;
    CorrectorDivergenceError(const std::string& msg, int step)
        : NumericalError(msg), step_index(step) {}
};

}  // namespace rigidity
