// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace zetaprime {

// Base class for every numerical failure the library can raise. The CLI maps
// these to exit code 4; anything else escaping is a bug.
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested too close to the pole of zeta at s = 1.
struct PoleProximity : NumericsError {
    using NumericsError::NumericsError;
};

// The evaluator cannot meet the requested tolerance within its term and
// precision caps.
struct ToleranceUnreachable : NumericsError {
    using NumericsError::NumericsError;
};

// A quotient was requested at a point where the denominator is too small to
// certify anything (e.g. zeta'/zeta next to a zero or the pole of zeta).
struct NearSingularity : NumericsError {
    using NumericsError::NumericsError;
};

// A series tail cannot be bounded by the requested tolerance before the
// configured truncation cap.
struct TailBoundFailure : NumericsError {
    using NumericsError::NumericsError;
};

// A zero (or pole) of the contour function sits too close to a rectangle
// boundary for the winding number to be trustworthy. Callers perturb and
// retry.
struct BoundaryZero : NumericsError {
    using NumericsError::NumericsError;
};

// Two independent counting methods disagree. Deliberately fatal: a mismatch
// means a zero was missed or double counted and no downstream number can be
// trusted.
struct CountMismatch : NumericsError {
    using NumericsError::NumericsError;
};

// A zero table does not cover the t-range a computation needs.
struct InsufficientCoverage : NumericsError {
    using NumericsError::NumericsError;
};

// A polynomial root failed its backward-error verification.
struct RootVerificationFailure : NumericsError {
    using NumericsError::NumericsError;
};

// A persisted cache file has an incompatible format version.
struct CacheVersionMismatch : NumericsError {
    using NumericsError::NumericsError;
};

// Malformed persisted data (bad hash, unparseable record, ...).
struct MalformedTable : NumericsError {
    using NumericsError::NumericsError;
};

} // namespace zetaprime
