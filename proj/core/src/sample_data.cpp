#include "dustlink/sample_data.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "dustlink/errors.hpp"

namespace dustlink {

namespace {

constexpr std::string_view kHeader = "id,density_g_cm3,eps1,eps2";

const std::array<SoilSample, 9>& table()
{
    static const std::array<SoilSample, 9> samples{{
        {"1", 2.5426, {5.0384, 0.0509}},
        {"2", 2.56857, {5.4851, 0.0562}},
        {"3", 2.6138, {5.4801, 0.0694}},
        {"4", 2.62714, {7.5929, 0.1140}},
        {"5", 2.4202, {6.7899, 0.1296}},
        {"6", 2.9232, {5.4003, 0.0787}},
        {"7", 2.4732, {7.4707, 0.1344}},
        {"8", 2.5425, {5.5713, 0.0704}},
        {"9", 2.4764, {8.3078, 0.1329}},
    }};
    return samples;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_field(std::string_view text, std::size_t line, std::string_view column)
{
    text = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidInput("samples csv line " + std::to_string(line) + ": column " +
                           std::string(column) + " is not a number: '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

std::span<const SoilSample> reference_samples()
{
    return table();
}

std::vector<SoilSample> read_samples_csv(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw InvalidInput("samples csv is empty");
    }
    ++line_no;
    // Tolerate a UTF-8 byte order mark.
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) {
        line.erase(0, 3);
    }
    if (trim(line) != kHeader) {
        throw InvalidInput("samples csv line 1: expected header '" + std::string(kHeader) + "'");
    }

    std::vector<SoilSample> samples;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view view = trim(line);
        if (view.empty()) {
            continue;
        }
        std::array<std::string_view, 4> fields;
        std::size_t start = 0;
        std::size_t count = 0;
        while (true) {
            const auto comma = view.find(',', start);
            if (count == fields.size()) {
                throw InvalidInput("samples csv line " + std::to_string(line_no) +
                                   ": expected 4 fields");
            }
            fields[count++] = view.substr(start, comma - start);
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (count != fields.size()) {
            throw InvalidInput("samples csv line " + std::to_string(line_no) +
                               ": expected 4 fields");
        }

        const double density = parse_field(fields[1], line_no, "density_g_cm3");
        const double eps1 = parse_field(fields[2], line_no, "eps1");
        const double eps2 = parse_field(fields[3], line_no, "eps2");
        try {
            detail::require_positive(density, "density");
            samples.push_back({std::string(trim(fields[0])), density, ComplexPermittivity{eps1, eps2}});
        } catch (const InvalidInput& e) {
            throw InvalidInput("samples csv line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return samples;
}

std::vector<SoilSample> load_samples_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open samples csv: " + path.string());
    }
    return read_samples_csv(in);
}

void write_samples_csv(std::ostream& out, std::span<const SoilSample> samples)
{
    out << kHeader << '\n';
    for (const auto& s : samples) {
        std::array<char, 64> buf{};
        out << s.id;
        for (double v : {s.density_g_cm3, s.permittivity.eps1(), s.permittivity.eps2()}) {
            const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
            out << ',' << std::string_view(buf.data(), static_cast<std::size_t>(res.ptr - buf.data()));
        }
        out << '\n';
    }
}

} // namespace dustlink
