#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "gazekit/metrics.hpp"
#include "gazekit/noise.hpp"
#include "gazekit/rng.hpp"
#include "gazekit/types.hpp"

namespace {

using namespace gazekit;

GazeSeries grid_walk(std::size_t n) {
    std::vector<GazeSample> samples;
    samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double fi = static_cast<double>(i);
        samples.push_back({fi, 100.0 + 0.25 * fi, 200.0 - 0.125 * fi});
    }
    return GazeSeries(std::move(samples));
}

// ---- Rng primitive ----

TEST(RngTest, EngineMatchesStandardReference) {
    // The C++ standard pins mt19937_64's 10000th output for the default
    // seed 5489; hitting it proves the seed goes into the engine unmodified.
    std::mt19937_64 reference;
    Rng rng(5489u);
    std::uint64_t last = 0;
    for (int i = 0; i < 10000; ++i) last = rng.next_u64();
    for (int i = 0; i < 9999; ++i) reference();
    EXPECT_EQ(last, 9981545732273789042ull);
    EXPECT_EQ(reference(), last);
}

TEST(RngTest, UniformUsesTop53Bits) {
    std::mt19937_64 reference(42);
    Rng rng(42u);
    for (int i = 0; i < 100; ++i) {
        const double expected = static_cast<double>(reference() >> 11) * 0x1.0p-53;
        EXPECT_EQ(rng.next_double(), expected);
    }
    for (int i = 0; i < 1000; ++i) {
        const double value = rng.uniform(-3.0, 5.0);
        EXPECT_GE(value, -3.0);
        EXPECT_LT(value, 5.0);
    }
}

TEST(RngTest, GaussianFollowsDocumentedBoxMuller) {
    // Re-derive the stream from a raw engine using only the documented
    // recipe; every value must match bit for bit.
    std::mt19937_64 reference(7);
    Rng rng(7u);
    for (int pair = 0; pair < 50; ++pair) {
        const double u1 = 1.0 - static_cast<double>(reference() >> 11) * 0x1.0p-53;
        const double u2 = static_cast<double>(reference() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        EXPECT_EQ(rng.next_gaussian(), r * std::cos(angle));
        EXPECT_EQ(rng.next_gaussian(), r * std::sin(angle));
    }
}

TEST(RngTest, GaussianMomentsAreStandardNormal) {
    Rng rng(2024u);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0, sum3 = 0.0, sum4 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.next_gaussian();
        sum += z;
        sum2 += z * z;
        sum3 += z * z * z;
        sum4 += z * z * z * z;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    EXPECT_NEAR(mean, 0.0, 0.01);
    EXPECT_NEAR(var, 1.0, 0.02);
    EXPECT_NEAR(sum3 / n, 0.0, 0.05) << "third moment (skewness numerator)";
    EXPECT_NEAR(sum4 / n, 3.0, 0.1) << "fourth moment of a standard normal";
}

// ---- add_noise ----

TEST(AddNoiseTest, SigmaZeroIsExactCopy) {
    const GazeSeries series = grid_walk(64);
    const GazeSeries out = add_noise(series, {0.0, 999});
    ASSERT_EQ(out.size(), series.size());
    EXPECT_EQ(out.sample_rate_hz(), series.sample_rate_hz());
    for (std::size_t i = 0; i < out.size(); ++i) {
        EXPECT_EQ(out[i].t, series[i].t);
        EXPECT_EQ(out[i].x, series[i].x);
        EXPECT_EQ(out[i].y, series[i].y);
    }
}

TEST(AddNoiseTest, MatchesManualReconstruction) {
    // x is perturbed before y within each sample, one Box-Muller pair per
    // sample; rebuild the exact output from a raw engine.
    const GazeSeries series = grid_walk(40);
    const double sigma = 2.5;
    const GazeSeries out = add_noise(series, {sigma, 31u});

    std::mt19937_64 reference(31);
    const auto uniform = [&reference] {
        return static_cast<double>(reference() >> 11) * 0x1.0p-53;
    };
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        // Deviates are formed first, then scaled — same grouping as the
        // library, so the doubles must agree bit for bit.
        const double z0 = r * std::cos(angle);
        const double z1 = r * std::sin(angle);
        EXPECT_EQ(out[i].t, series[i].t);
        EXPECT_EQ(out[i].x, series[i].x + sigma * z0) << "sample " << i;
        EXPECT_EQ(out[i].y, series[i].y + sigma * z1) << "sample " << i;
    }
}

TEST(AddNoiseTest, SameSpecSameOutput) {
    const GazeSeries series = grid_walk(500);
    const GazeSeries a = add_noise(series, {10.0, 77});
    const GazeSeries b = add_noise(series, {10.0, 77});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].x, b[i].x);
        EXPECT_EQ(a[i].y, b[i].y);
    }
}

TEST(AddNoiseTest, DifferentSeedsDecorrelated) {
    const GazeSeries series = grid_walk(100000);
    const GazeSeries a = add_noise(series, {10.0, 1});
    const GazeSeries b = add_noise(series, {10.0, 2});
    std::vector<double> da, db;
    for (std::size_t i = 0; i < series.size(); ++i) {
        da.push_back(a[i].x - series[i].x);
        da.push_back(a[i].y - series[i].y);
        db.push_back(b[i].x - series[i].x);
        db.push_back(b[i].y - series[i].y);
    }
    EXPECT_LT(std::abs(pearson_r(da, db)), 0.02);
}

TEST(AddNoiseTest, OffsetsHaveRequestedScale) {
    const GazeSeries series = grid_walk(100000);
    const double sigma = 10.0;
    const GazeSeries out = add_noise(series, {sigma, 5});
    double sum = 0.0, sum2 = 0.0;
    const double n = 2.0 * static_cast<double>(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        for (double d : {out[i].x - series[i].x, out[i].y - series[i].y}) {
            sum += d;
            sum2 += d * d;
        }
    }
    const double mean = sum / n;
    EXPECT_NEAR(mean, 0.0, 0.1);
    EXPECT_NEAR(std::sqrt(sum2 / n - mean * mean), sigma, 0.1);
}

TEST(AddNoiseTest, TimestampsNeverTouched) {
    const GazeSeries series = grid_walk(256);
    const GazeSeries out = add_noise(series, {50.0, 9});
    for (std::size_t i = 0; i < series.size(); ++i) {
        EXPECT_EQ(out[i].t, series[i].t);
    }
}

TEST(AddNoiseTest, RejectsEmptyAndNegativeSigma) {
    try {
        add_noise(GazeSeries{}, {1.0, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptySeries);
    }
    try {
        add_noise(grid_walk(10), {-0.5, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidConfig);
    }
}

}  // namespace
