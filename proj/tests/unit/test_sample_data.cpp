#include <gtest/gtest.h>

#include <sstream>

#include "dustlink/errors.hpp"
#include "dustlink/sample_data.hpp"

using namespace dustlink;

TEST(SampleData, EmbeddedTableHasNineSamples)
{
    const auto samples = reference_samples();
    ASSERT_EQ(samples.size(), 9u);
    EXPECT_EQ(samples.front().id, "1");
    EXPECT_DOUBLE_EQ(samples[5].density_g_cm3, 2.9232);
    EXPECT_DOUBLE_EQ(samples[8].permittivity.eps1(), 8.3078);
    EXPECT_DOUBLE_EQ(samples[8].permittivity.eps2(), 0.1329);
}

TEST(SampleData, ShippedFixtureMatchesEmbeddedTable)
{
    const auto loaded = load_samples_csv(DUSTLINK_SAMPLES_CSV);
    const auto embedded = reference_samples();
    ASSERT_EQ(loaded.size(), embedded.size());
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        EXPECT_EQ(loaded[i].id, embedded[i].id);
        EXPECT_EQ(loaded[i].density_g_cm3, embedded[i].density_g_cm3);
        EXPECT_EQ(loaded[i].permittivity, embedded[i].permittivity);
    }
}

TEST(SampleData, WriteThenReadPreservesValues)
{
    std::stringstream buffer;
    write_samples_csv(buffer, reference_samples());
    const auto back = read_samples_csv(buffer);
    ASSERT_EQ(back.size(), 9u);
    for (std::size_t i = 0; i < back.size(); ++i) {
        EXPECT_EQ(back[i].permittivity, reference_samples()[i].permittivity);
        EXPECT_EQ(back[i].density_g_cm3, reference_samples()[i].density_g_cm3);
    }
}

TEST(SampleData, AcceptsCrlfAndBom)
{
    std::istringstream in("\xEF\xBB\xBFid,density_g_cm3,eps1,eps2\r\nA,2.5,5.0,0.1\r\n\r\n");
    const auto s = read_samples_csv(in);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].id, "A");
}

TEST(SampleData, ReportsLineOfMalformedRow)
{
    std::istringstream bad_number("id,density_g_cm3,eps1,eps2\n1,2.5,5.0,0.1\n2,2.5,abc,0.1\n");
    try {
        read_samples_csv(bad_number);
        FAIL() << "expected InvalidInput";
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }

    std::istringstream bad_header("id,density,eps1,eps2\n");
    EXPECT_THROW(read_samples_csv(bad_header), InvalidInput);

    std::istringstream too_many("id,density_g_cm3,eps1,eps2\n1,2.5,5.0,0.1,9\n");
    EXPECT_THROW(read_samples_csv(too_many), InvalidInput);

    std::istringstream zero_density("id,density_g_cm3,eps1,eps2\n1,0,5.0,0.1\n");
    EXPECT_THROW(read_samples_csv(zero_density), InvalidInput);

    std::istringstream gain_medium("id,density_g_cm3,eps1,eps2\n1,2.5,5.0,-0.1\n");
    EXPECT_THROW(read_samples_csv(gain_medium), InvalidInput);

    EXPECT_THROW(load_samples_csv("/nonexistent/samples.csv"), InvalidInput);
}
