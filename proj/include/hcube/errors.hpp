// Error types shared across the library. Everything throws; there are no
// error codes and no partial results.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcube {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed argument, unparsable text, or a violated operation precondition
// that is the caller's fault.
struct InputError : Error {
    using Error::Error;
};

// Requested the rational part of a value with a nonzero root-of-unity part.
struct NotRationalError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

// The integer is not of the form (q-1)n - qh for any h in [0, n].
struct NotAnEigenvalueError : Error {
    using Error::Error;
};

// A function claimed to be an eigenfunction is not one.
struct NotEigenfunctionError : Error {
    using Error::Error;
};

// Two vertices of the same color see different color counts among their
// neighbors; carries the witness pair.
struct NotEquitableError : Error {
    std::size_t vertex_a;
    std::size_t vertex_b;
    int color;

    NotEquitableError(std::size_t a, std::size_t b, int c)
        : Error("coloring is not equitable: vertices " + std::to_string(a) + " and " +
                std::to_string(b) + " share color " + std::to_string(c) +
                " but have different neighbor color counts"),
          vertex_a(a), vertex_b(b), color(c) {}
};

// The parameter matrix has an eigenvalue outside the hypercube spectrum, or
// fewer than r independent eigenvectors were found.
struct NotDiagonalizableError : Error {
    using Error::Error;
};

// A library invariant was breached; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace hcube
