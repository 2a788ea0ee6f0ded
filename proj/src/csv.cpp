#include "unn/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <utility>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include "unn/errors.hpp"

namespace unn {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const std::size_t pos = text.find('\n');
        std::string_view line = text.substr(0, pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        if (pos == std::string_view::npos) {
            break;
        }
        text.remove_prefix(pos + 1);
    }
    // a trailing newline is not an extra empty row
    if (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    for (;;) {
        const std::size_t pos = line.find(',');
        fields.push_back(line.substr(0, pos));
        if (pos == std::string_view::npos) {
            return fields;
        }
        line.remove_prefix(pos + 1);
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_double(std::string_view field, double& out) {
    field = trim(field);
    if (field.empty()) {
        return false;
    }
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc() && ptr == field.data() + field.size();
}

double parse_cell(std::string_view field, std::size_t row, std::size_t col) {
    double value = 0.0;
    if (!parse_double(field, value)) {
        throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(col) +
                             ": expected a number, got '" + std::string(trim(field)) + "'",
                         row, col);
    }
    if (!std::isfinite(value)) {
        throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(col) +
                             ": value is not finite",
                         row, col);
    }
    return value;
}

int parse_int_cell(std::string_view field, std::size_t row, std::size_t col) {
    field = trim(field);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(col) +
                             ": expected an integer, got '" + std::string(field) + "'",
                         row, col);
    }
    return value;
}

void check_arity(std::size_t got, std::size_t want, std::size_t row) {
    if (got != want) {
        const std::size_t col = std::min(got, want) + 1;
        throw ParseError("row " + std::to_string(row) + ": expected " + std::to_string(want) +
                             " fields, got " + std::to_string(got),
                         row, col);
    }
}

} // namespace

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

Dataset load_csv(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    const std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty()) {
        throw ParseError("empty dataset file: " + path.string(), 0, 0);
    }

    // header row: first row with any non-numeric field
    std::size_t first_data = 0;
    {
        double ignored = 0.0;
        for (std::string_view field : split_fields(lines[0])) {
            if (!parse_double(field, ignored)) {
                first_data = 1;
                break;
            }
        }
    }
    if (first_data >= lines.size()) {
        throw ParseError("no data rows after header: " + path.string(), 1, 1);
    }

    const std::size_t d = split_fields(lines[first_data]).size();
    Matrix points(static_cast<Eigen::Index>(lines.size() - first_data), static_cast<Eigen::Index>(d));
    for (std::size_t r = first_data; r < lines.size(); ++r) {
        const std::vector<std::string_view> fields = split_fields(lines[r]);
        check_arity(fields.size(), d, r + 1);
        for (std::size_t c = 0; c < d; ++c) {
            points(static_cast<Eigen::Index>(r - first_data), static_cast<Eigen::Index>(c)) =
                parse_cell(fields[c], r + 1, c + 1);
        }
    }
    return Dataset(std::move(points));
}

void save_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    for (Eigen::Index i = 0; i < data.size(); ++i) {
        for (Eigen::Index j = 0; j < data.dim(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << format_double(data.patterns()(i, j));
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

LatentOrdering load_ordering_csv(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    const std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty()) {
        throw ParseError("empty ordering file: " + path.string(), 0, 0);
    }
    if (trim(lines[0]) != "index,slot") {
        throw ParseError("ordering file must start with the header 'index,slot'", 1, 1);
    }
    const std::size_t m = lines.size() - 1;
    std::vector<int> by_slot(m, -1);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const std::vector<std::string_view> fields = split_fields(lines[r]);
        check_arity(fields.size(), 2, r + 1);
        const int pattern = parse_int_cell(fields[0], r + 1, 1);
        const int slot = parse_int_cell(fields[1], r + 1, 2);
        if (slot < 0 || static_cast<std::size_t>(slot) >= m) {
            throw ParseError("row " + std::to_string(r + 1) + ": slot " + std::to_string(slot) +
                                 " out of range [0, " + std::to_string(m) + ")",
                             r + 1, 2);
        }
        if (by_slot[static_cast<std::size_t>(slot)] != -1) {
            throw ParseError("row " + std::to_string(r + 1) + ": slot " + std::to_string(slot) +
                                 " assigned twice",
                             r + 1, 2);
        }
        if (pattern < 0) {
            throw ParseError("row " + std::to_string(r + 1) + ": negative pattern index", r + 1, 1);
        }
        by_slot[static_cast<std::size_t>(slot)] = pattern;
    }
    return LatentOrdering(std::move(by_slot)); // rejects duplicate patterns
}

void save_ordering_csv(const LatentOrdering& ordering, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    std::vector<std::pair<int, int>> rows; // (pattern, slot)
    rows.reserve(static_cast<std::size_t>(ordering.m()));
    for (int s = 0; s < ordering.m(); ++s) {
        rows.emplace_back(ordering.pattern_at(s), s);
    }
    std::sort(rows.begin(), rows.end());
    out << "index,slot\n";
    for (const auto& [pattern, slot] : rows) {
        out << pattern << ',' << slot << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

} // namespace unn
