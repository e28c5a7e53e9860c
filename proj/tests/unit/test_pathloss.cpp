#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dustlink/errors.hpp"
#include "dustlink/pathloss.hpp"
#include "golden.hpp"

using namespace dustlink;
using dustlink::testing::golden_number;
using nlohmann::json;

TEST(BaselinePathLoss, UrbanInterceptAtUnitDistanceAndFrequency)
{
    EXPECT_DOUBLE_EQ(baseline_path_loss({Environment::Urban, 0.0}, {1.0, 1.0}), 38.77);
    EXPECT_DOUBLE_EQ(baseline_path_loss({Environment::Highway, 0.0}, {1.0, 1.0}), 23.4);
}

TEST(BaselinePathLoss, OperatingPointsMatchOracle)
{
    const double urban = baseline_path_loss({Environment::Urban, 0.0}, {390.0, 5.9});
    EXPECT_NEAR(urban, 96.07, 0.01);
    EXPECT_NEAR(urban, golden_number("/pathloss/urban_390_5.9"_json_pointer), 1e-12);

    const double highway = baseline_path_loss({Environment::Highway, 0.0}, {390.0, 28.0});
    EXPECT_NEAR(highway, 104.16, 0.01);
    EXPECT_NEAR(highway, golden_number("/pathloss/highway_390_28"_json_pointer), 1e-12);

    EXPECT_NEAR(baseline_path_loss({Environment::Urban, 0.0}, {390.0, 28.0}),
                golden_number("/pathloss/urban_390_28"_json_pointer), 1e-12);
    EXPECT_NEAR(baseline_path_loss({Environment::Highway, 0.0}, {390.0, 5.9}),
                golden_number("/pathloss/highway_390_5.9"_json_pointer), 1e-12);
}

TEST(BaselinePathLoss, ShadowingAddsDirectly)
{
    const LinkGeometry g{390.0, 5.9};
    EXPECT_NEAR(baseline_path_loss({Environment::Urban, 4.5}, g) - baseline_path_loss({Environment::Urban, 0.0}, g),
                4.5, 1e-12);
    EXPECT_THROW(baseline_path_loss({Environment::Urban, -1.0}, g), InvalidInput);
}

TEST(BaselinePathLoss, RejectsDegenerateGeometry)
{
    EXPECT_THROW(baseline_path_loss({}, {0.0, 5.9}), InvalidInput);
    EXPECT_THROW(baseline_path_loss({}, {390.0, 0.0}), InvalidInput);
    EXPECT_THROW(baseline_path_loss({}, {-1.0, 5.9}), InvalidInput);
}

TEST(BaselinePathLoss, StrictlyIncreasingInDistanceAndFrequency)
{
    for (auto env : {Environment::Urban, Environment::Highway}) {
        double previous = -INFINITY;
        for (double d = 1.0; d <= 5000.0; d *= 1.1) {
            const double l = baseline_path_loss({env, 0.0}, {d, 28.0});
            EXPECT_GT(l, previous);
            previous = l;
        }
        previous = -INFINITY;
        for (double f = 0.5; f <= 100.0; f *= 1.1) {
            const double l = baseline_path_loss({env, 0.0}, {390.0, f});
            EXPECT_GT(l, previous);
            previous = l;
        }
    }
}

TEST(BaselinePathLoss, ScenarioOrderingDependsOnGeometry)
{
    // Urban exceeds highway at the short-range operating point but the
    // steeper highway slope wins at long range.
    const LinkGeometry near{390.0, 5.9};
    EXPECT_GT(baseline_path_loss({Environment::Urban, 0.0}, near),
              baseline_path_loss({Environment::Highway, 0.0}, near));
    const LinkGeometry far{1e6, 100.0};
    EXPECT_LT(baseline_path_loss({Environment::Urban, 0.0}, far),
              baseline_path_loss({Environment::Highway, 0.0}, far));
}

TEST(ModifiedPathLoss, ClearAirEqualsBaseline)
{
    for (auto env : {Environment::Urban, Environment::Highway}) {
        for (auto mode : {DistanceMode::PerKm, DistanceMode::AsPrinted}) {
            const Scenario s{env, 1.0};
            const LinkGeometry g{250.0, 28.0};
            EXPECT_EQ(modified_path_loss(s, g, 0.0, mode), baseline_path_loss(s, g));
        }
    }
}

TEST(ModifiedPathLoss, PerKmScalesByPathLength)
{
    const Scenario urban{Environment::Urban, 0.0};
    const LinkGeometry km{1000.0, 5.9};
    EXPECT_NEAR(modified_path_loss(urban, km, 10.0), baseline_path_loss(urban, km) + 10.0, 1e-12);

    const Scenario highway{Environment::Highway, 0.0};
    const LinkGeometry g{390.0, 28.0};
    const double expected = golden_number("/pathloss/highway_390_28"_json_pointer) + 7.8;
    EXPECT_NEAR(modified_path_loss(highway, g, 20.0), expected, 1e-9);
    EXPECT_NEAR(modified_path_loss(highway, g, 20.0), 111.96, 0.01);
}

TEST(ModifiedPathLoss, AsPrintedAddsAttenuationVerbatim)
{
    const Scenario s{Environment::Highway, 0.0};
    const LinkGeometry g{390.0, 28.0};
    EXPECT_NEAR(modified_path_loss(s, g, 20.0, DistanceMode::AsPrinted), baseline_path_loss(s, g) + 20.0, 1e-12);
}

TEST(ModifiedPathLoss, AffineInAttenuationWithPathLengthSlope)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(1.0, 3000.0);
    std::uniform_real_distribution<double> att(0.0, 50.0);
    for (int i = 0; i < 200; ++i) {
        const LinkGeometry g{dist(rng), 5.9};
        const Scenario s{i % 2 ? Environment::Urban : Environment::Highway, 0.0};
        const double a = att(rng);
        const double h = 0.5;
        const double slope = (modified_path_loss(s, g, a + h) - modified_path_loss(s, g, a)) / h;
        EXPECT_NEAR(slope, g.distance_m / 1000.0, 1e-9);
    }
}

TEST(ModifiedPathLoss, RejectsNegativeAttenuation)
{
    EXPECT_THROW(modified_path_loss({}, {390.0, 5.9}, -1.0), InvalidInput);
}

TEST(Parsing, EnvironmentAndDistanceMode)
{
    EXPECT_EQ(parse_environment("Urban"), Environment::Urban);
    EXPECT_EQ(parse_environment("HIGHWAY"), Environment::Highway);
    EXPECT_THROW(parse_environment("rural"), InvalidInput);
    EXPECT_EQ(parse_distance_mode("as-printed"), DistanceMode::AsPrinted);
    EXPECT_EQ(to_string(DistanceMode::PerKm), "per-km");
    EXPECT_THROW(parse_distance_mode("km"), InvalidInput);
}

TEST(LogNormalShadowing, ZeroSigmaIsDeterministicZero)
{
    std::mt19937_64 rng(1);
    const auto before = rng;
    EXPECT_EQ(LogNormalShadowing(0.0).draw(rng), 0.0);
    EXPECT_EQ(rng, before);
    EXPECT_THROW(LogNormalShadowing(-1.0), InvalidInput);
}

TEST(LogNormalShadowing, SeededDrawsReproduceAndHaveRequestedSpread)
{
    const LogNormalShadowing shadowing(4.0);
    std::mt19937_64 a(99);
    std::mt19937_64 b(99);
    double sum = 0.0;
    double sum_sq = 0.0;
    constexpr int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double x = shadowing.draw(a);
        EXPECT_EQ(x, shadowing.draw(b));
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(sum_sq / n - mean * mean);
    EXPECT_NEAR(mean, 0.0, 0.1);
    EXPECT_NEAR(sd, 4.0, 0.1);
}
