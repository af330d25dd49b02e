#pragma once
// Error taxonomy.  numerics uses plain std::domain_error; the richer types
// below carry enough context for the CLI exit-code contract.

#include <stdexcept>
#include <string>

namespace hcgap {

// picard: class/surface size disagreement.
struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// picard: Gruson-Peskine coordinates that do not invert to an integer class.
struct IntegralityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// builder errors.
struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfStrip : BuildError {
    using BuildError::BuildError;
};
struct RegionError : BuildError {
    using BuildError::BuildError;
};
struct LiftError : BuildError {
    using BuildError::BuildError;
};
struct UnreachableError : BuildError {
    using BuildError::BuildError;
};

// smoothness: a certificate whose class is not of the expected shape.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// smoothness: verification failed; message names the first failing check.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// oracle: enumeration would exceed the configured cap.
struct ResourceCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hcgap
