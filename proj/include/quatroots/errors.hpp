#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quatroots {

// Inverse of a (near-)zero quaternion, or a similarity transform with h ~ 0.
struct ZeroDivision : std::domain_error {
    using std::domain_error::domain_error;
};

// p * conj(p) produced coefficients whose imaginary residue exceeds the bound;
// signals corrupted arithmetic upstream.
struct RealityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two iterates (nearly) share a congruence class mid-sweep. Carries the index
// of the offending iterate so the driver can perturb it and retry.
struct ClassCollision : std::runtime_error {
    std::size_t index;
    double magnitude;
    double threshold;
    ClassCollision(std::size_t i, double mag, double thr)
        : std::runtime_error("class collision at iterate " + std::to_string(i)),
          index(i),
          magnitude(mag),
          threshold(thr) {}
};

struct TooManyCollisions : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Convergence-order estimate requested for error values outside (0, 1).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// classify_zero called on a point that is not an approximate zero.
struct NotAZero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The two spherical-zero criteria disagree (tolerance pathology near the
// decision boundary); better to fail loudly than to guess.
struct DiagnosticConflict : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input document.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Constant polynomial where degree >= 1 is required.
struct DegreeZero : ParseError {
    using ParseError::ParseError;
};

// Known-roots / start list size does not match the polynomial degree.
struct CountMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace quatroots
