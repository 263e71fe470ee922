#include <gtest/gtest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "gazekit/synth.hpp"
#include "gazekit/types.hpp"

namespace {

using namespace gazekit;

/// Maximal same-label runs, in order.
std::vector<std::pair<Label, std::size_t>> runs_of(const LabelSeries& labels) {
    std::vector<std::pair<Label, std::size_t>> runs;
    for (Label label : labels) {
        if (runs.empty() || runs.back().first != label) {
            runs.emplace_back(label, 0u);
        }
        ++runs.back().second;
    }
    return runs;
}

TEST(SynthTest, SampleCountAndTimestampsFollowRate) {
    SynthConfig config;
    config.duration_ms = 2000.0;
    const SynthResult at_1k = generate(config);
    ASSERT_EQ(at_1k.series.size(), 2000u);
    ASSERT_EQ(at_1k.labels.size(), 2000u);
    EXPECT_DOUBLE_EQ(at_1k.series.sample_rate_hz(), 1000.0);
    for (std::size_t i = 0; i < at_1k.series.size(); ++i) {
        EXPECT_DOUBLE_EQ(at_1k.series[i].t, static_cast<double>(i));
    }

    config.rate_hz = 500.0;
    config.duration_ms = 1234.0;
    const SynthResult at_500 = generate(config);
    ASSERT_EQ(at_500.series.size(), 617u) << "llround(1234 * 500 / 1000)";
    EXPECT_DOUBLE_EQ(at_500.series.sample_rate_hz(), 500.0);
    EXPECT_DOUBLE_EQ(at_500.series[1].t, 2.0) << "500 Hz -> 2 ms steps";
    EXPECT_DOUBLE_EQ(at_500.series[616].t, 1232.0);
}

TEST(SynthTest, StartsWithFixationAndAlternates) {
    SynthConfig config;
    config.duration_ms = 10000.0;
    const SynthResult result = generate(config);
    const auto runs = runs_of(result.labels);
    ASSERT_GE(runs.size(), 4u);
    EXPECT_EQ(runs.front().first, Label::Fixation);
    for (std::size_t i = 1; i < runs.size(); ++i) {
        EXPECT_NE(runs[i].first, runs[i - 1].first);
    }
}

TEST(SynthTest, RunLengthsMatchConfiguredDurations) {
    SynthConfig config;
    config.duration_ms = 30000.0;
    const SynthResult result = generate(config);
    const auto runs = runs_of(result.labels);
    // Durations are uniform in [200,400] / [20,80] ms at 1 kHz, so complete
    // runs hold that many samples; only the final run may be cut short.
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        if (runs[i].first == Label::Fixation) {
            EXPECT_GE(runs[i].second, 200u) << "run " << i;
            EXPECT_LE(runs[i].second, 400u) << "run " << i;
        } else {
            EXPECT_GE(runs[i].second, 20u) << "run " << i;
            EXPECT_LE(runs[i].second, 80u) << "run " << i;
        }
    }
    const auto& last = runs.back();
    EXPECT_LE(last.second, last.first == Label::Fixation ? 400u : 80u);
}

TEST(SynthTest, RunLengthsScaleWithRate) {
    SynthConfig config;
    config.duration_ms = 20000.0;
    config.rate_hz = 500.0;
    const auto runs = runs_of(generate(config).labels);
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        if (runs[i].first == Label::Fixation) {
            EXPECT_GE(runs[i].second, 100u);
            EXPECT_LE(runs[i].second, 200u);
        } else {
            EXPECT_GE(runs[i].second, 10u);
            EXPECT_LE(runs[i].second, 40u);
        }
    }
}

TEST(SynthTest, ZeroJitterFreezesFixations) {
    SynthConfig config;
    config.duration_ms = 5000.0;
    config.fix_jitter_px = 0.0;
    const SynthResult result = generate(config);
    for (std::size_t i = 1; i < result.series.size(); ++i) {
        if (result.labels[i] == Label::Fixation &&
            result.labels[i - 1] == Label::Fixation) {
            EXPECT_EQ(result.series[i].x, result.series[i - 1].x) << "sample " << i;
            EXPECT_EQ(result.series[i].y, result.series[i - 1].y) << "sample " << i;
        }
    }
}

TEST(SynthTest, SaccadePeakSpeedIsTwiceTheMean) {
    // Pin every episode parameter so each saccade covers 300 px in
    // 101 intervals; the raised-cosine profile peaks at twice the mean
    // speed, i.e. 2 * 300 / 101 px/ms.
    SynthConfig config;
    config.duration_ms = 5000.0;
    config.fix_duration_ms = {100.0, 100.0};
    config.sac_duration_ms = {100.0, 100.0};
    config.sac_amplitude_px = {300.0, 300.0};
    config.fix_jitter_px = 0.0;
    const SynthResult result = generate(config);

    double peak = 0.0;
    bool saw_saccade = false;
    for (std::size_t i = 1; i < result.series.size(); ++i) {
        if (result.labels[i] != Label::Saccade && result.labels[i - 1] != Label::Saccade) {
            continue;
        }
        saw_saccade = true;
        const double dx = result.series[i].x - result.series[i - 1].x;
        const double dy = result.series[i].y - result.series[i - 1].y;
        peak = std::max(peak, std::hypot(dx, dy));
    }
    ASSERT_TRUE(saw_saccade);
    EXPECT_NEAR(peak, 2.0 * 300.0 / 101.0, 0.05 * (2.0 * 300.0 / 101.0));
}

TEST(SynthTest, SaccadesLandOnTheirAmplitude) {
    // With zero jitter the positions bracketing a saccade are the anchors;
    // their distance must equal the pinned amplitude.
    SynthConfig config;
    config.duration_ms = 5000.0;
    config.fix_duration_ms = {100.0, 100.0};
    config.sac_duration_ms = {40.0, 40.0};
    config.sac_amplitude_px = {250.0, 250.0};
    config.fix_jitter_px = 0.0;
    const SynthResult result = generate(config);
    for (std::size_t i = 1; i + 1 < result.series.size(); ++i) {
        const bool entering = result.labels[i] == Label::Saccade &&
                              result.labels[i - 1] == Label::Fixation;
        if (!entering) continue;
        // Find the saccade's end (first fixation sample after it).
        std::size_t j = i;
        while (j < result.series.size() && result.labels[j] == Label::Saccade) ++j;
        if (j == result.series.size()) break;  // truncated by total duration
        const double dist = std::hypot(result.series[j].x - result.series[i - 1].x,
                                       result.series[j].y - result.series[i - 1].y);
        EXPECT_NEAR(dist, 250.0, 1e-9);
    }
}

TEST(SynthTest, FixationProportionNearConfiguredRatio) {
    const SynthResult result = generate(SynthConfig{});
    std::size_t fixations = 0;
    for (Label label : result.labels) {
        if (label == Label::Fixation) ++fixations;
    }
    const double proportion =
        static_cast<double>(fixations) / static_cast<double>(result.labels.size());
    // Mean episode durations 300 ms vs 50 ms -> expected share ~0.857.
    EXPECT_GT(proportion, 0.75);
    EXPECT_LT(proportion, 0.95);
}

TEST(SynthTest, StaysInsideArena) {
    SynthConfig config;
    config.duration_ms = 20000.0;
    config.fix_jitter_px = 30.0;  // large jitter exercises the clamp
    const SynthResult result = generate(config);
    for (std::size_t i = 0; i < result.series.size(); ++i) {
        EXPECT_GE(result.series[i].x, 0.0);
        EXPECT_LE(result.series[i].x, config.arena_width_px);
        EXPECT_GE(result.series[i].y, 0.0);
        EXPECT_LE(result.series[i].y, config.arena_height_px);
    }
}

TEST(SynthTest, DeterministicInSeed) {
    SynthConfig config;
    config.duration_ms = 3000.0;
    const SynthResult a = generate(config);
    const SynthResult b = generate(config);
    ASSERT_EQ(a.series.size(), b.series.size());
    EXPECT_EQ(a.labels, b.labels);
    for (std::size_t i = 0; i < a.series.size(); ++i) {
        EXPECT_EQ(a.series[i].x, b.series[i].x);
        EXPECT_EQ(a.series[i].y, b.series[i].y);
    }

    config.seed = 2;
    const SynthResult c = generate(config);
    bool any_difference = c.labels != a.labels;
    for (std::size_t i = 0; !any_difference && i < a.series.size(); ++i) {
        any_difference = c.series[i].x != a.series[i].x || c.series[i].y != a.series[i].y;
    }
    EXPECT_TRUE(any_difference) << "different seeds must give different trajectories";
}

TEST(SynthTest, RejectsInvalidConfigs) {
    const auto expect_invalid = [](SynthConfig config) {
        try {
            generate(config);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidConfig);
        }
    };
    SynthConfig config;
    config.duration_ms = 0.0;
    expect_invalid(config);

    config = SynthConfig{};
    config.rate_hz = 0.0;
    expect_invalid(config);

    config = SynthConfig{};
    config.fix_duration_ms = {0.0, 100.0};
    expect_invalid(config);

    config = SynthConfig{};
    config.sac_duration_ms = {80.0, 20.0};
    expect_invalid(config);

    config = SynthConfig{};
    config.fix_jitter_px = -1.0;
    expect_invalid(config);

    config = SynthConfig{};
    config.arena_width_px = 0.0;
    expect_invalid(config);
}

TEST(SynthTest, OversizedAmplitudeIsInfeasible) {
    SynthConfig config;
    config.arena_width_px = 100.0;
    config.arena_height_px = 100.0;
    config.sac_amplitude_px = {50.0, 200.0};  // diagonal is ~141.4
    try {
        generate(config);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InfeasibleAmplitude);
    }
}

TEST(SynthTest, UnreachableAmplitudeExhaustsRejection) {
    // 141.4 px fits the 141.42 px diagonal, but no direction works unless
    // the anchor sits in a corner, so target search must give up cleanly.
    SynthConfig config;
    config.duration_ms = 2000.0;
    config.arena_width_px = 100.0;
    config.arena_height_px = 100.0;
    config.sac_amplitude_px = {141.4, 141.4};
    config.fix_duration_ms = {50.0, 50.0};
    config.sac_duration_ms = {20.0, 20.0};
    try {
        generate(config);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InfeasibleAmplitude);
    }
}

}  // namespace
