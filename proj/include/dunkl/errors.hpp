#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Mixing values built for different dimensions d.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Generator or parameter index outside 1..d (or 1..d+3 for L indices).
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Bad request at the tool level (unknown filter prefix, bad flag value).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax error in the expression grammar, with source position.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error(what), line(line), col(col) {}
    int line;
    int col;
};

}  // namespace dunkl
