#pragma once

#include <optional>
#include <string>
#include <vector>

namespace agency::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a named column, or nullopt.
    std::optional<std::size_t> column(const std::string& name) const;
};

// Reads a comma-separated file with a header row.  Supports double-quoted
// fields with "" escapes; rejects rows whose field count differs from the
// header.  Decimal parsing elsewhere is locale-independent (from_chars).
Table read_file(const std::string& path);
Table parse(const std::string& text, const std::string& origin);

// Locale-independent float/int parsing; returns nullopt on any trailing junk.
std::optional<double> parse_double(const std::string& field);
std::optional<long long> parse_int(const std::string& field);

// Serializes one row, quoting only fields that need it.
std::string format_row(const std::vector<std::string>& fields);

}  // namespace agency::csv
