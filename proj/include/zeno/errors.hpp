#ifndef ZENO_ERRORS_HPP
#define ZENO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zeno {

// Thrown when a matrix fails the relative Hermiticity check.
struct NotHermitian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a matrix fails the unitarity check ||U'U - I|| <= tol.
struct NotUnitary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coupling schedule violates K_n < n where the Zeno error functional needs it.
struct ScheduleViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two kick phases coincide modulo 2*pi; the resonance constant diverges.
struct ResonantPhases : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientPoints : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonpositiveValues : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step rotation angle underflows; cannot normalize the rotation axis.
struct DegenerateAngle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zeno

#endif
