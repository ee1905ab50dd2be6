#pragma once

#include <stdexcept>
#include <string>

namespace wigkit {

/** Two directions are parallel or antiparallel where a distinct pair is required. */
struct DegenerateDirections : std::domain_error {
    using std::domain_error::domain_error;
};

/** A family-parameter configuration with vanishing tangent, no finite solution. */
struct DegenerateTheta : std::domain_error {
    using std::domain_error::domain_error;
};

/** Frequency ratio p0/omega0 must be strictly positive. */
struct NonPositiveRatio : std::domain_error {
    using std::domain_error::domain_error;
};

/** A four-vector violates the lightlike mass-shell constraint. */
struct NotLightlike : std::domain_error {
    using std::domain_error::domain_error;
};

/** Symmetric eigendecomposition produced a non-positive eigenvalue. */
struct DecompositionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Momentum direction antiparallel to the reference axis; the standard rotation family is singular there. */
struct AntipodalDirection : std::domain_error {
    using std::domain_error::domain_error;
};

/** Spherical triangle with parallel/antiparallel vertices or vanishing volume. */
struct DegenerateTriangle : std::domain_error {
    using std::domain_error::domain_error;
};

/** Side lengths that do not form a spherical triangle. */
struct InvalidSides : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace wigkit
