#pragma once

#include <stdexcept>

namespace gmecert {

// Base class for all library failures.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand dimensions do not match the declared system shape.
struct shape_error : error {
    using error::error;
};

// A requested object would exceed the configured total-dimension cap.
struct size_error : error {
    using error::error;
};

// An input violates a documented precondition or type invariant.
struct contract_error : error {
    using error::error;
};

// A numeric kernel failed (non-convergence, invalid radicand, ...).
struct numeric_error : error {
    using error::error;
};

// The operation is not defined for this input (e.g. mixed local dimensions).
struct unsupported_error : error {
    using error::error;
};

// A state-specification document could not be parsed.
struct parse_error : error {
    using error::error;
};

} // namespace gmecert
