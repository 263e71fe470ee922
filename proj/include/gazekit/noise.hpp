#ifndef GAZEKIT_NOISE_HPP
#define GAZEKIT_NOISE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gazekit/error.hpp"
#include "gazekit/rng.hpp"
#include "gazekit/types.hpp"

namespace gazekit {

/// Gaussian spatial noise: standard deviation in px plus the seed that
/// makes the draw reproducible.
struct NoiseSpec {
    double sigma = 0.0;
    std::uint64_t seed = 0;
};

/// Returns a copy of the series with N(0, sigma^2) offsets added
/// independently to each coordinate of each sample (x drawn before y);
/// timestamps are untouched. Fully determined by (series, sigma, seed).
/// sigma = 0 short-circuits to an exact copy — not a degenerate draw — so
/// the zero level of a noise sweep is bit-identical to its input.
///
/// @throws Error{EmptySeries} on empty input.
/// @throws Error{InvalidConfig} when sigma < 0.
inline GazeSeries add_noise(const GazeSeries& series, const NoiseSpec& spec) {
    if (series.empty()) {
        throw Error(ErrorCode::EmptySeries, "cannot add noise to an empty series");
    }
    if (spec.sigma < 0.0) {
        throw Error(ErrorCode::InvalidConfig,
                    "sigma must be >= 0, got " + std::to_string(spec.sigma));
    }
    if (spec.sigma == 0.0) return series;

    Rng rng(spec.seed);
    std::vector<GazeSample> samples = series.samples();
    for (GazeSample& s : samples) {
        s.x += spec.sigma * rng.next_gaussian();
        s.y += spec.sigma * rng.next_gaussian();
    }
    return GazeSeries(std::move(samples), series.sample_rate_hz());
}

}  // namespace gazekit

#endif  // GAZEKIT_NOISE_HPP
