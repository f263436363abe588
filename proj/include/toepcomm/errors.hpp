#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toepcomm {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- input / precondition errors (CLI exit code 2) ----

// Malformed symbol-DSL input. `position` is the 1-based character offset
// of the offending character.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (position " + std::to_string(pos) + ")"), position(pos) {}
};

// compose(outer, inner) where inner does not map the closed disk into itself.
struct CompositionDomainError : Error {
    using Error::Error;
};

// eval_circle called with fewer than 2N nodes.
struct ResolutionError : Error {
    using Error::Error;
};

struct ConstantSymbolError : Error {
    using Error::Error;
};

struct UnsupportedSymbol : Error {
    using Error::Error;
};

struct OrderMismatch : Error {
    using Error::Error;
};

struct DimensionCap : Error {
    using Error::Error;
};

struct NotUnimodular : Error {
    using Error::Error;
};

// Generic violated precondition that has no more specific class above.
struct PreconditionError : Error {
    using Error::Error;
};

// ---- measurement / resolution errors (CLI exit code 3) ----

// Winding query point too close to the curve polyline.
struct OnCurveError : Error {
    using Error::Error;
};

// Dyadic refinement hit the node cap and the winding residual stayed large.
struct ResolutionExhausted : Error {
    using Error::Error;
};

struct EmptyProfile : Error {
    using Error::Error;
};

// Argument-principle count and companion-matrix root count disagree.
struct OracleMismatch : Error {
    using Error::Error;
};

// A root of phi - phi(lambda) sits numerically on the unit circle.
struct BoundaryZeroError : Error {
    using Error::Error;
};

struct IllConditioned : Error {
    using Error::Error;
};

struct NotACommutantElement : Error {
    using Error::Error;
};

// True when `e` indicates bad input rather than a failed measurement.
bool is_input_error(const Error& e);

}  // namespace toepcomm
