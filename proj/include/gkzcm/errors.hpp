// Error taxonomy for the gkzcm library.
//
// Every failure mode callers are expected to handle has its own type, so the
// CLI can map user errors to exit code 1 and genuine invariant breaches
// (internal_error) to exit code 2.
#pragma once

#include <stdexcept>
#include <string>

namespace gkzcm {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vector/exponent lengths disagree with the ring or with each other.
struct dimension_error : error {
    using error::error;
};

// Operands belong to different polynomial rings or Weyl algebras.
struct ring_mismatch_error : error {
    using error::error;
};

// Input violates a documented precondition; message names the violated
// assumption.
struct validation_error : error {
    using error::error;
};

// Operand is not homogeneous for the requested grading.
struct grading_error : error {
    using error::error;
};

// Weight vector outside the supported class (nonstrict pair weights, or
// negative component weights in the Weyl engine).
struct unsupported_weight_error : error {
    using error::error;
};

// The operation's result is undefined for this input (e.g. initial form of 0).
struct undefined_input_error : error {
    using error::error;
};

// Unit ideal where a nonempty variety / nonzero quotient module is required.
struct empty_variety_error : error {
    using error::error;
};

// A bounded search exhausted its region without certifying either answer.
// Deliberately distinct from a negative result.
struct inconclusive_error : error {
    using error::error;
};

// Operation only defined for a specific dimension (d = 2 semigroup test).
struct unsupported_dimension_error : error {
    using error::error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

}  // namespace gkzcm
