#include "csv_table.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>

#include "cli_errors.hpp"

namespace dustlink::cli {

namespace {

std::vector<std::string> split(std::string_view line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

void strip_cr(std::string& line)
{
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

} // namespace

std::string format_number(double value)
{
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

double parse_number(std::string_view text)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw IoError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::size_t CsvTable::column(std::string_view name) const
{
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    throw IoError("csv has no column '" + std::string(name) + "'");
}

void CsvTable::write(std::ostream& out, bool with_header) const
{
    auto emit = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i != 0) {
                out << ',';
            }
            out << fields[i];
        }
        out << '\n';
    };
    if (with_header) {
        emit(header);
    }
    for (const auto& row : rows) {
        emit(row);
    }
}

CsvTable CsvTable::read(std::istream& in)
{
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError("csv is empty");
    }
    strip_cr(line);
    table.header = split(line);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) {
            continue;
        }
        auto fields = split(line);
        if (fields.size() != table.header.size()) {
            throw IoError("csv line " + std::to_string(line_no) + ": expected " +
                          std::to_string(table.header.size()) + " fields, got " +
                          std::to_string(fields.size()));
        }
        table.rows.push_back(std::move(fields));
    }
    return table;
}

} // namespace dustlink::cli
