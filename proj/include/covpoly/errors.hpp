#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace covpoly {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingEdgeError : Error {
    using Error::Error;
};

struct VertexOutOfRangeError : Error {
    using Error::Error;
};

struct InvalidSizeError : Error {
    using Error::Error;
};

struct CapExceededError : Error {
    using Error::Error;
};

// malformed input; offset is a byte offset (graph6) or line number (edge lists)
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

struct LaurentViolationError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// a Laurent identity left negative exponents behind; signals invalid inputs
struct CancellationError : Error {
    using Error::Error;
};

struct NotForestError : Error {
    using Error::Error;
};

struct NotSimpleError : Error {
    using Error::Error;
};

struct MalformedPolynomialError : Error {
    using Error::Error;
};

struct IdentityViolationError : Error {
    using Error::Error;
};

}  // namespace covpoly
