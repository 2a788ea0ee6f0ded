#pragma once

#include <filesystem>
#include <string>

#include "unn/dataset.hpp"
#include "unn/ordering.hpp"

namespace unn {

// Shortest decimal form that round-trips the exact double (std::to_chars).
std::string format_double(double value);

// Comma-separated numeric matrix, LF newlines, no quoting. An optional
// single header row is detected by its first non-numeric field and skipped.
// Malformed input raises ParseError carrying the 1-based row and column.
Dataset load_csv(const std::filesystem::path& path);

// Writes one pattern per line with round-trip-exact formatting, no header.
void save_csv(const Dataset& data, const std::filesystem::path& path);

// Ordering files carry the fixed header "index,slot" followed by one
// pattern per row. The rows must form a bijection onto slots 0..m-1.
LatentOrdering load_ordering_csv(const std::filesystem::path& path);

// Rows are written in ascending pattern-index order.
void save_ordering_csv(const LatentOrdering& ordering, const std::filesystem::path& path);

} // namespace unn
