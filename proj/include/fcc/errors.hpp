#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcc {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimension parameter outside the supported range.
struct InvalidDimension : Error {
    using Error::Error;
};

/// Malformed tree text; `position` is the byte offset of the offending character.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
};

/// Sizes of related arguments do not agree.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Operation requires a complex with at least one maximal cell.
struct DegenerateComplex : Error {
    using Error::Error;
};

/// Requested enumeration would exceed the configured work cap.
struct ResourceCapExceeded : Error {
    using Error::Error;
};

/// Evaluation point hits a pole of the expression.
struct PoleError : Error {
    using Error::Error;
};

/// Output format not implemented for this dimension.
struct UnsupportedDimension : Error {
    using Error::Error;
};

} // namespace fcc
