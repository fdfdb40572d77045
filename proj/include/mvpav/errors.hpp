#pragma once

#include <stdexcept>
#include <string>

namespace mvpav {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Concrete syntax error; `pos` is a 0-based byte offset into the input.
struct ParseError : Error {
    ParseError(std::string msg, std::size_t pos_)
        : Error(std::move(msg)), pos(pos_) {}
    std::size_t pos;
};

/// A connective was used that the governing profile does not enable.
struct ProfileError : Error {
    using Error::Error;
};

/// Evaluation failure (typically a variable missing from the valuation).
struct EvalError : Error {
    using Error::Error;
};

/// An operation was called outside its stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

/// A configured size/cap was exceeded (carrier bound, region cap, ...).
struct SizeBoundError : Error {
    using Error::Error;
};

}  // namespace mvpav
