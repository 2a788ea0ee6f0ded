#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unn {

// A pattern has no embedded neighbors to reconstruct from (M <= 1, or an
// empty dataset where at least two patterns are required).
class NoNeighborsError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed numeric CSV input. Rows and columns are 1-based in messages.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t row, std::size_t col)
        : std::runtime_error(what), row_(row), col_(col) {}

    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

// Exhaustive search refused because the instance exceeds the size cap.
class SizeCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejection sampling exhausted its draw budget.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace unn
