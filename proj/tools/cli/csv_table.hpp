#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dustlink::cli {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_number(double value);

/// Plain comma-separated table. Fields never contain commas or quotes, so
/// no quoting is applied.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of `name` in the header. Throws IoError if absent.
    std::size_t column(std::string_view name) const;

    void write(std::ostream& out, bool with_header = true) const;

    /// Throws IoError on an empty stream or ragged rows.
    static CsvTable read(std::istream& in);
};

/// Parses a numeric CSV field. Throws IoError when it is not a number.
double parse_number(std::string_view text);

} // namespace dustlink::cli
