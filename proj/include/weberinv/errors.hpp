#pragma once

#include <stdexcept>
#include <string>

namespace weberinv {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Evaluation requested at (or too close to) a pole.
struct PoleError : Error {
    using Error::Error;
};

/// An iterative scheme failed to reach its tolerance within budget.
struct ConvergenceError : Error {
    using Error::Error;
};

/// A structural rewrite was requested on an expression it does not apply to.
struct RewriteError : Error {
    using Error::Error;
};

/// A numerical limit (t -> 0+ extrapolation) failed to stabilise.
struct LimitError : Error {
    using Error::Error;
};

/// A derivation step's probe residual exceeded its certificate bound.
struct CertificateError : Error {
    using Error::Error;
};

} // namespace weberinv
