#ifndef GAZEKIT_KRATIO_HPP
#define GAZEKIT_KRATIO_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gazekit/classify.hpp"
#include "gazekit/error.hpp"
#include "gazekit/types.hpp"

namespace gazekit {

/// K-ratio of a labeling, or empty when the labeling is single-class (the
/// independence denominator n_S * (1 - n_S) vanishes and no transition rate
/// is defined).
using KRatioValue = std::optional<double>;

enum class SweepScale { Linear, Logarithmic };

/// Threshold grid for a sweep: `count` points from lo to hi inclusive,
/// spaced linearly or geometrically.
struct SweepGrid {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
    SweepScale scale = SweepScale::Logarithmic;
};

/// Library-default sweep grids: 200 logarithmic points over [1e-2, 1e2]
/// px per unit time for the velocity classifiers and [1, 200] px of
/// dispersion for IDT. (The bundled noise-robustness experiment widens the
/// IDT grid; see the CLI.)
inline SweepGrid default_grid(ClassifierKind kind) {
    if (kind == ClassifierKind::IDT) {
        return SweepGrid{1.0, 200.0, 200, SweepScale::Logarithmic};
    }
    return SweepGrid{1e-2, 1e2, 200, SweepScale::Logarithmic};
}

/// Materializes the grid's threshold values (strictly increasing, endpoints
/// included).
/// @throws Error{InvalidGrid} unless 0 < lo < hi and count >= 2.
inline std::vector<double> grid_points(const SweepGrid& grid) {
    if (!(grid.lo > 0.0) || !(grid.hi > grid.lo) || grid.count < 2 ||
        !std::isfinite(grid.lo) || !std::isfinite(grid.hi)) {
        throw Error(ErrorCode::InvalidGrid,
                    "need 0 < lo < hi and count >= 2, got lo=" + std::to_string(grid.lo) +
                        " hi=" + std::to_string(grid.hi) +
                        " count=" + std::to_string(grid.count));
    }
    std::vector<double> points(grid.count);
    const double steps = static_cast<double>(grid.count - 1);
    if (grid.scale == SweepScale::Linear) {
        const double step = (grid.hi - grid.lo) / steps;
        for (std::size_t i = 0; i < grid.count; ++i) {
            points[i] = grid.lo + step * static_cast<double>(i);
        }
    } else {
        const double ratio = std::log(grid.hi / grid.lo) / steps;
        for (std::size_t i = 0; i < grid.count; ++i) {
            points[i] = grid.lo * std::exp(ratio * static_cast<double>(i));
        }
    }
    points.front() = grid.lo;
    points.back() = grid.hi;
    return points;
}

/// One (threshold, K-ratio) curve, in grid order. Undefined K values are
/// kept in place so the curve stays plottable.
struct SweepCurve {
    ClassifierKind algorithm = ClassifierKind::IVT;
    std::vector<std::pair<double, KRatioValue>> points;
};

/// Transition statistic of a labeling: the empirical fixation-to-saccade
/// transition rate n_FS = (#adjacent F,S pairs)/N divided by the rate
/// n_S * (1 - n_S) expected if labels were independent draws. Values below
/// 1 mean the labels agglomerate into runs; minimizing K over thresholds
/// picks the labeling that agglomerates most.
///
/// The pair count is divided by N, not N-1 — the convention is fixed so
/// results are reproducible to the last bit.
///
/// @throws Error{SeriesTooShort} for fewer than 2 labels.
inline KRatioValue k_ratio(const LabelSeries& labels) {
    if (labels.size() < 2) {
        throw Error(ErrorCode::SeriesTooShort,
                    "k_ratio needs at least 2 labels, got " + std::to_string(labels.size()));
    }
    const double n = static_cast<double>(labels.size());
    std::size_t saccades = 0;
    std::size_t fs_pairs = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == Label::Saccade) ++saccades;
        if (i > 0 && labels[i - 1] == Label::Fixation && labels[i] == Label::Saccade) {
            ++fs_pairs;
        }
    }
    const double n_s = static_cast<double>(saccades) / n;
    const double denom = n_s * (1.0 - n_s);
    if (denom == 0.0) return std::nullopt;
    return (static_cast<double>(fs_pairs) / n) / denom;
}

/// Classifies the series at every grid threshold and records the K-ratio of
/// each labeling. For IDT the swept parameter is d_max and t_min_ms stays
/// fixed. Grid points are independent, so evaluation order is free; results
/// are assembled in grid order.
/// @throws Error{InvalidGrid} plus anything the classifier throws.
inline SweepCurve sweep(const GazeSeries& series, ClassifierKind algorithm,
                        const SweepGrid& grid, double t_min_ms = kDefaultTMinMs,
                        TimeUnit unit = TimeUnit::PerMillisecond) {
    SweepCurve curve;
    curve.algorithm = algorithm;
    const std::vector<double> thresholds = grid_points(grid);
    curve.points.reserve(thresholds.size());
    if (algorithm == ClassifierKind::IDT) {
        for (double threshold : thresholds) {
            curve.points.emplace_back(threshold,
                                      k_ratio(idt_classify(series, threshold, t_min_ms)));
        }
        return curve;
    }
    // The velocity classifiers only re-threshold a per-sample signal, so the
    // kinematics pass is hoisted out of the grid loop.
    const KinematicsSeries kin = kinematics(series, unit);
    const std::vector<double>& values =
        algorithm == ClassifierKind::IVT ? kin.v : kin.v_eff;
    for (double threshold : thresholds) {
        curve.points.emplace_back(threshold, k_ratio(detail::threshold_by(values, threshold)));
    }
    return curve;
}

/// The sweep winner: grid threshold with the smallest defined K-ratio.
struct OptimalThreshold {
    double value = 0.0;
    double k = 0.0;
};

/// Selects the minimal defined K-ratio on the curve; exact ties break
/// toward the smallest threshold (favoring sensitivity to saccades, the
/// minority class). Undefined points never win.
/// @throws Error{AllUndefined} when no grid point produced a two-class
///         labeling.
inline OptimalThreshold optimal_threshold(const SweepCurve& curve) {
    const std::pair<double, KRatioValue>* best = nullptr;
    for (const auto& point : curve.points) {
        if (!point.second.has_value()) continue;
        if (best == nullptr || *point.second < *best->second) best = &point;
    }
    if (best == nullptr) {
        throw Error(ErrorCode::AllUndefined,
                    "every grid threshold produced a single-class labeling");
    }
    return OptimalThreshold{best->first, *best->second};
}

/// Labels plus the threshold that produced them, for reporting.
struct AdaptiveResult {
    LabelSeries labels;
    double threshold = 0.0;
    double k = 0.0;
};

/// Sweep, pick the K-minimizing threshold, classify with it.
/// @throws Error{AllUndefined} propagated from optimal_threshold.
inline AdaptiveResult adaptive_classify(const GazeSeries& series, ClassifierKind algorithm,
                                        const SweepGrid& grid,
                                        double t_min_ms = kDefaultTMinMs,
                                        TimeUnit unit = TimeUnit::PerMillisecond) {
    const SweepCurve curve = sweep(series, algorithm, grid, t_min_ms, unit);
    const OptimalThreshold best = optimal_threshold(curve);
    LabelSeries labels =
        classify(series, ThresholdConfig{algorithm, best.value, t_min_ms}, unit);
    return AdaptiveResult{std::move(labels), best.value, best.k};
}

}  // namespace gazekit

#endif  // GAZEKIT_KRATIO_HPP
