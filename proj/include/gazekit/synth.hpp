#ifndef GAZEKIT_SYNTH_HPP
#define GAZEKIT_SYNTH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "gazekit/error.hpp"
#include "gazekit/rng.hpp"
#include "gazekit/types.hpp"

namespace gazekit {

/// Closed interval for a uniformly drawn episode parameter.
struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

/// Parameters of the synthetic trajectory generator. Defaults model a
/// desktop recording: 1 kHz sampling on a 1920x1080 arena, 200-400 ms
/// fixations with 0.5 px isotropic jitter, 20-80 ms saccades of 50-500 px.
struct SynthConfig {
    double duration_ms = 60000.0;
    double rate_hz = 1000.0;
    Range fix_duration_ms{200.0, 400.0};
    Range sac_duration_ms{20.0, 80.0};
    Range sac_amplitude_px{50.0, 500.0};
    double fix_jitter_px = 0.5;
    double arena_width_px = 1920.0;
    double arena_height_px = 1080.0;
    std::uint64_t seed = 1;
};

/// A generated trajectory together with its construction ground truth.
struct SynthResult {
    GazeSeries series;
    LabelSeries labels;
};

namespace detail {

inline void require_range(const Range& r, const char* name) {
    if (!(r.lo > 0.0) || !(r.hi >= r.lo)) {
        throw Error(ErrorCode::InvalidConfig,
                    std::string(name) + " needs 0 < lo <= hi, got [" +
                        std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]");
    }
}

/// Raised-cosine position fraction: integrates the speed profile
/// (1 - cos(2*pi*tau)) so the endpoints move at zero speed and the peak
/// speed is exactly twice the mean.
inline double raised_cosine_fraction(double tau) {
    return tau - std::sin(2.0 * std::numbers::pi * tau) / (2.0 * std::numbers::pi);
}

}  // namespace detail

/// Builds an alternating fixation/saccade trajectory with known labels.
///
/// Episodes alternate starting with a fixation. Fixation samples are the
/// anchor plus isotropic Gaussian jitter, clamped to the arena. Saccades
/// travel in a straight line to the next anchor with a raised-cosine speed
/// profile; the next anchor is found by drawing a uniform direction (and,
/// if the arena keeps rejecting directions, redrawing the amplitude) until
/// the target lands inside the arena. Episode durations and amplitudes are
/// uniform in their configured ranges. The construction labels are the
/// ground truth. Deterministic in the seed.
///
/// @throws Error{InvalidConfig} for non-positive durations/rates/arena or
///         invalid ranges.
/// @throws Error{InfeasibleAmplitude} when the amplitude range exceeds the
///         arena diagonal (no direction could ever work).
inline SynthResult generate(const SynthConfig& config) {
    if (!(config.duration_ms > 0.0) || !(config.rate_hz > 0.0)) {
        throw Error(ErrorCode::InvalidConfig,
                    "duration_ms and rate_hz must be > 0, got duration_ms=" +
                        std::to_string(config.duration_ms) +
                        " rate_hz=" + std::to_string(config.rate_hz));
    }
    detail::require_range(config.fix_duration_ms, "fix_duration_ms");
    detail::require_range(config.sac_duration_ms, "sac_duration_ms");
    detail::require_range(config.sac_amplitude_px, "sac_amplitude_px");
    if (config.fix_jitter_px < 0.0) {
        throw Error(ErrorCode::InvalidConfig, "fix_jitter_px must be >= 0");
    }
    if (!(config.arena_width_px > 0.0) || !(config.arena_height_px > 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "arena dimensions must be > 0");
    }
    const double w = config.arena_width_px;
    const double h = config.arena_height_px;
    const double diagonal = std::hypot(w, h);
    if (config.sac_amplitude_px.hi > diagonal) {
        throw Error(ErrorCode::InfeasibleAmplitude,
                    "amplitude up to " + std::to_string(config.sac_amplitude_px.hi) +
                        " px cannot fit an arena with diagonal " +
                        std::to_string(diagonal) + " px");
    }

    const std::size_t n =
        static_cast<std::size_t>(std::llround(config.duration_ms * config.rate_hz / 1000.0));
    if (n == 0) {
        throw Error(ErrorCode::InvalidConfig, "duration too short for one sample");
    }
    const double dt = 1000.0 / config.rate_hz;

    Rng rng(config.seed);
    const auto episode_samples = [&](const Range& dur_ms) {
        const double dur = rng.uniform(dur_ms.lo, dur_ms.hi);
        const auto count = std::llround(dur * config.rate_hz / 1000.0);
        return static_cast<std::size_t>(std::max<long long>(1, count));
    };
    // Draws a point at the given distance from `from` that stays inside the
    // arena: rejection-sample the direction, and every 100 misses redraw the
    // amplitude too (a mid-arena anchor cannot reach arena-diagonal-sized
    // amplitudes in any direction, so direction alone may never succeed).
    const auto pick_target = [&](double from_x, double from_y, double amplitude) {
        for (int attempt = 0; attempt < 10000; ++attempt) {
            if (attempt > 0 && attempt % 100 == 0) {
                amplitude = rng.uniform(config.sac_amplitude_px.lo, config.sac_amplitude_px.hi);
            }
            const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
            const double tx = from_x + amplitude * std::cos(phi);
            const double ty = from_y + amplitude * std::sin(phi);
            if (tx >= 0.0 && tx <= w && ty >= 0.0 && ty <= h) {
                return std::pair<double, double>{tx, ty};
            }
        }
        throw Error(ErrorCode::InfeasibleAmplitude,
                    "no in-arena saccade target found after 10000 attempts");
    };

    std::vector<GazeSample> samples;
    samples.reserve(n);
    LabelSeries labels;
    labels.reserve(n);

    double anchor_x = rng.uniform(0.0, w);
    double anchor_y = rng.uniform(0.0, h);
    bool in_fixation = true;
    std::size_t pos = 0;
    while (pos < n) {
        if (in_fixation) {
            const std::size_t count = episode_samples(config.fix_duration_ms);
            for (std::size_t j = 0; j < count && pos < n; ++j, ++pos) {
                const double x = anchor_x + config.fix_jitter_px * rng.next_gaussian();
                const double y = anchor_y + config.fix_jitter_px * rng.next_gaussian();
                samples.push_back({static_cast<double>(pos) * dt,
                                   std::clamp(x, 0.0, w), std::clamp(y, 0.0, h)});
                labels.push_back(Label::Fixation);
            }
        } else {
            const std::size_t count = episode_samples(config.sac_duration_ms);
            const double amplitude =
                rng.uniform(config.sac_amplitude_px.lo, config.sac_amplitude_px.hi);
            const auto [target_x, target_y] = pick_target(anchor_x, anchor_y, amplitude);
            // The profile spans anchor (last fixation sample) to target
            // (first sample of the next fixation), so the count interior
            // samples sit at fractions j/(count+1) of the flight time.
            for (std::size_t j = 0; j < count && pos < n; ++j, ++pos) {
                const double tau =
                    static_cast<double>(j + 1) / static_cast<double>(count + 1);
                const double p = detail::raised_cosine_fraction(tau);
                samples.push_back({static_cast<double>(pos) * dt,
                                   anchor_x + (target_x - anchor_x) * p,
                                   anchor_y + (target_y - anchor_y) * p});
                labels.push_back(Label::Saccade);
            }
            anchor_x = target_x;
            anchor_y = target_y;
        }
        in_fixation = !in_fixation;
    }

    return SynthResult{GazeSeries(std::move(samples), config.rate_hz), std::move(labels)};
}

}  // namespace gazekit

#endif  // GAZEKIT_SYNTH_HPP
