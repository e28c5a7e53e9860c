#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "cli_errors.hpp"
#include "csv_table.hpp"

using namespace dustlink::cli;

TEST(FormatNumber, RoundTripsExactly)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> exponent(-12.0, 12.0);
    for (int i = 0; i < 2000; ++i) {
        const double v = std::pow(10.0, exponent(rng)) * (i % 2 ? -1.0 : 1.0);
        EXPECT_EQ(parse_number(format_number(v)), v);
    }
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(390.0), "390");
    EXPECT_EQ(format_number(0.1), "0.1");
}

TEST(ParseNumber, RejectsGarbage)
{
    EXPECT_THROW(parse_number(""), IoError);
    EXPECT_THROW(parse_number("abc"), IoError);
    EXPECT_THROW(parse_number("1.5x"), IoError);
    EXPECT_EQ(parse_number("-2.5e3"), -2500.0);
}

TEST(CsvTable, WriteReadRoundTrip)
{
    CsvTable t{{"a", "b"}, {{"1", "x"}, {"2.5", "y"}}};
    std::stringstream s;
    t.write(s);
    EXPECT_EQ(s.str(), "a,b\n1,x\n2.5,y\n");
    const auto back = CsvTable::read(s);
    EXPECT_EQ(back.header, t.header);
    EXPECT_EQ(back.rows, t.rows);
    EXPECT_EQ(back.column("b"), 1u);
    EXPECT_THROW((void)back.column("c"), IoError);
}

TEST(CsvTable, RowsOnlyWhenHeaderSuppressed)
{
    CsvTable t{{"a"}, {{"1"}}};
    std::ostringstream s;
    t.write(s, false);
    EXPECT_EQ(s.str(), "1\n");
}

TEST(CsvTable, ReadRejectsEmptyAndRagged)
{
    std::istringstream empty("");
    EXPECT_THROW(CsvTable::read(empty), IoError);
    std::istringstream ragged("a,b\n1,2\n3\n");
    EXPECT_THROW(CsvTable::read(ragged), IoError);
}

TEST(CsvTable, ReadHandlesCrLf)
{
    std::istringstream crlf("a,b\r\n1,2\r\n");
    const auto t = CsvTable::read(crlf);
    EXPECT_EQ(t.header.back(), "b");
    EXPECT_EQ(t.rows.at(0).back(), "2");
}
