// errors.hpp -- exception types thrown by the qwalk library.
#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Amplitude would hop past the stored lattice window.
struct BoundaryOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested more steps than the field's window was sized for.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The closed-form eigenvector denominator alpha - beta*e^{-ik} vanished.
struct DegenerateEigenvectors : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quadrature node landed on (or the parameterization forces one onto)
// a vanishing denominator of the closed-form integrand.
struct QuadratureNodeSingular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Too few trace entries in the regression window.
struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Observed speed is super-ballistic: no barrier angle reproduces it.
struct SlopeOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotNormalized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qwalk
