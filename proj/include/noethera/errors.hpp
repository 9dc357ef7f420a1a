#pragma once

#include <stdexcept>
#include <string>

namespace noethera {

// Base class for every error the engine raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands built against different problem declarations.
struct ContextMismatchError : Error {
    using Error::Error;
};

// Symbolic or negative exponent applied where the result would leave the
// representable class (e.g. a power of a multi-term sum).
struct UnsupportedPowerError : Error {
    using Error::Error;
};

// Jet order above what an operation accepts, or a prolongation too shallow
// for the expression it is applied to.
struct JetOrderError : Error {
    using Error::Error;
};

// Residual with a jet-independent part: outside the class the divergence
// test can decide.
struct OutOfScopeError : Error {
    using Error::Error;
};

struct NotADivergenceError : Error {
    using Error::Error;
};

// Degenerate scaling degree in the homotopy integral.
struct HomotopyDegeneracyError : Error {
    using Error::Error;
};

// On-shell substitution impossible for the designated solved variable.
struct CannotSolveError : Error {
    using Error::Error;
};

struct SizeMismatchError : Error {
    using Error::Error;
};

// Text input errors carry a character position (0-based; -1 if unknown).
struct ParseError : Error {
    int position;
    ParseError(const std::string& what, int pos = -1) : Error(what), position(pos) {}
};

// Problem-file validation errors carry the offending field path.
struct SchemaError : Error {
    std::string field;
    SchemaError(const std::string& what, std::string field_path = {})
        : Error(what), field(std::move(field_path)) {}
};

} // namespace noethera
