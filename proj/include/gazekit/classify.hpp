#ifndef GAZEKIT_CLASSIFY_HPP
#define GAZEKIT_CLASSIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "gazekit/error.hpp"
#include "gazekit/types.hpp"

namespace gazekit {

/// Pixels per degree of visual angle for the default desktop geometry
/// (1920x1080 on a 24.5-inch 16:9 panel viewed at 60 cm): panel width
/// 54.23 cm -> 0.2824 mm/px; 1 degree at 60 cm subtends 1.047 cm -> 37.07,
/// rounded to 37.0.
inline constexpr double kDefaultPxPerDeg = 37.0;

inline constexpr double kDefaultVThreshDegS = 30.0;
inline constexpr double kDefaultAThreshDegS2 = 8000.0;
inline constexpr double kDefaultTMinMs = 50.0;

/// Interval kinematics for a series of N samples; every list has N-1
/// entries, one per interval (i, i+1).
struct KinematicsSeries {
    std::vector<double> v;      ///< instantaneous speed, px per time unit
    std::vector<double> theta;  ///< displacement angle, radians in (-pi, pi]
    std::vector<double> v_eff;  ///< speed scaled by directional persistence
};

namespace detail {

inline void require_length(const GazeSeries& series, std::size_t min_len) {
    if (series.size() < min_len) {
        throw Error(ErrorCode::SeriesTooShort,
                    "need at least " + std::to_string(min_len) + " samples, got " +
                        std::to_string(series.size()));
    }
}

inline void require_positive_threshold(double value, const char* name) {
    if (!(value > 0.0)) {
        throw Error(ErrorCode::NonPositiveThreshold,
                    std::string(name) + " must be > 0, got " + std::to_string(value));
    }
}

}  // namespace detail

/// Computes speed, displacement angle, and effective (direction-weighted)
/// speed for every sample interval.
///
/// v_i = sqrt(dx^2 + dy^2) / dt. The angle uses the two-argument
/// arctangent so the quadrant survives (the plain dy/dx ratio would not);
/// zero-displacement intervals carry the previous angle forward (angle 0
/// when there is no previous one) so the direction term stays continuous.
/// v_eff_i = v_i * cos(theta_i - theta_{i-1}); the first interval has no
/// predecessor angle and uses v_eff_0 = v_0 (cos 0 convention).
///
/// @throws Error{SeriesTooShort} for fewer than 2 samples.
inline KinematicsSeries kinematics(const GazeSeries& series, TimeUnit unit) {
    detail::require_length(series, 2);
    const std::size_t n = series.size();
    KinematicsSeries out;
    out.v.reserve(n - 1);
    out.theta.reserve(n - 1);
    out.v_eff.reserve(n - 1);

    double prev_angle = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double dx = series[i + 1].x - series[i].x;
        const double dy = series[i + 1].y - series[i].y;
        const double dt = to_unit(series[i + 1].t - series[i].t, unit);
        const double speed = std::sqrt(dx * dx + dy * dy) / dt;

        double angle = prev_angle;
        if (dx != 0.0 || dy != 0.0) {
            angle = std::atan2(dy, dx);
            if (angle <= -std::numbers::pi) angle = std::numbers::pi;
        }

        const double eff = (i == 0) ? speed : speed * std::cos(angle - prev_angle);
        out.v.push_back(speed);
        out.theta.push_back(angle);
        out.v_eff.push_back(eff);
        prev_angle = angle;
    }
    return out;
}

namespace detail {

/// Shared body of the two velocity classifiers: sample i takes the label of
/// interval (i, i+1); the last sample has no outgoing interval and inherits
/// its predecessor's label.
inline LabelSeries threshold_by(const std::vector<double>& values, double threshold) {
    LabelSeries labels;
    labels.reserve(values.size() + 1);
    for (double value : values) {
        labels.push_back(value >= threshold ? Label::Saccade : Label::Fixation);
    }
    labels.push_back(labels.back());
    return labels;
}

}  // namespace detail

/// Velocity-threshold classifier: sample i is a Saccade iff v_i >= threshold.
/// @throws Error{SeriesTooShort, NonPositiveThreshold}
inline LabelSeries ivt_classify(const GazeSeries& series, double threshold,
                                TimeUnit unit = TimeUnit::PerMillisecond) {
    detail::require_positive_threshold(threshold, "threshold");
    return detail::threshold_by(kinematics(series, unit).v, threshold);
}

/// Angular-velocity-threshold classifier: compares the signed effective
/// speed v_eff_i >= threshold. v_eff is negative on direction reversals
/// (cos < 0), so reversal samples always classify as Fixation under a
/// positive threshold — the signed comparison is deliberate.
/// @throws Error{SeriesTooShort, NonPositiveThreshold}
inline LabelSeries iavt_classify(const GazeSeries& series, double threshold,
                                 TimeUnit unit = TimeUnit::PerMillisecond) {
    detail::require_positive_threshold(threshold, "threshold");
    return detail::threshold_by(kinematics(series, unit).v_eff, threshold);
}

/// Dispersion of the sample window [i, k] (inclusive): the width plus the
/// height of the smallest axis-aligned rectangle covering the positions.
/// @throws Error{IndexOutOfRange}
inline double dispersion(const GazeSeries& series, std::size_t i, std::size_t k) {
    if (i > k || k >= series.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "window [" + std::to_string(i) + ", " + std::to_string(k) +
                        "] invalid for series of length " + std::to_string(series.size()));
    }
    double min_x = series[i].x, max_x = series[i].x;
    double min_y = series[i].y, max_y = series[i].y;
    for (std::size_t j = i + 1; j <= k; ++j) {
        min_x = std::min(min_x, series[j].x);
        max_x = std::max(max_x, series[j].x);
        min_y = std::min(min_y, series[j].y);
        max_y = std::max(max_y, series[j].y);
    }
    return (max_x - min_x) + (max_y - min_y);
}

/// Fixation windows found by the dispersion-threshold scan, as inclusive
/// [first, last] index pairs. Exposed separately from idt_classify so the
/// window conditions can be re-checked post hoc.
///
/// Scan: from start index i, grow the window while its dispersion stays
/// below d_max. Dispersion is nondecreasing in the window end (max/min over
/// a superset), and the time span grows with it, so the largest end
/// satisfying both conditions is simply the last one reached before the
/// dispersion bound broke. If that window spans more than t_min_ms the
/// window is a fixation and the scan resumes just past it; otherwise the
/// start advances one sample.
///
/// @throws Error{SeriesTooShort, NonPositiveThreshold}
inline std::vector<std::pair<std::size_t, std::size_t>> idt_windows(
    const GazeSeries& series, double d_max, double t_min_ms = kDefaultTMinMs) {
    detail::require_positive_threshold(d_max, "d_max");
    detail::require_positive_threshold(t_min_ms, "t_min_ms");
    detail::require_length(series, 2);

    std::vector<std::pair<std::size_t, std::size_t>> windows;
    const std::size_t n = series.size();
    std::size_t i = 0;
    while (i < n) {
        double min_x = series[i].x, max_x = series[i].x;
        double min_y = series[i].y, max_y = series[i].y;
        std::size_t k = i;
        while (k + 1 < n) {
            const GazeSample& p = series[k + 1];
            const double nmin_x = std::min(min_x, p.x), nmax_x = std::max(max_x, p.x);
            const double nmin_y = std::min(min_y, p.y), nmax_y = std::max(max_y, p.y);
            if ((nmax_x - nmin_x) + (nmax_y - nmin_y) >= d_max) break;
            min_x = nmin_x; max_x = nmax_x;
            min_y = nmin_y; max_y = nmax_y;
            ++k;
        }
        if (series[k].t - series[i].t > t_min_ms) {
            windows.emplace_back(i, k);
            i = k + 1;
        } else {
            ++i;
        }
    }
    return windows;
}

/// Dispersion-threshold classifier: samples inside some fixation window are
/// Fixation, samples never absorbed into any window are Saccade.
/// @throws Error{SeriesTooShort, NonPositiveThreshold}
inline LabelSeries idt_classify(const GazeSeries& series, double d_max,
                                double t_min_ms = kDefaultTMinMs) {
    LabelSeries labels(series.size(), Label::Saccade);
    for (const auto& [first, last] : idt_windows(series, d_max, t_min_ms)) {
        std::fill(labels.begin() + static_cast<std::ptrdiff_t>(first),
                  labels.begin() + static_cast<std::ptrdiff_t>(last) + 1,
                  Label::Fixation);
    }
    return labels;
}

/// Velocity+acceleration reference labeler in the style of commercial
/// tracker event parsers; used as an alternative ground-truth source.
///
/// Velocity per interval is converted to deg/s through px_per_deg;
/// acceleration at interval i is the forward difference
/// (vel_{i+1} - vel_i) / dt_i with dt in seconds. Sample i (for i up to
/// N-3, the last interval with a defined acceleration) is a Saccade iff
/// velocity >= v_thresh_deg_s or |acceleration| >= a_thresh_deg_s2; the
/// final two samples inherit the label of the last interior sample.
/// The acceleration test uses the absolute value because the deceleration
/// at a saccade's end is just as diagnostic as the launch.
///
/// @throws Error{SeriesTooShort} for fewer than 3 samples.
/// @throws Error{NonPositiveConversion} unless px_per_deg > 0.
inline LabelSeries reference_parse(const GazeSeries& series,
                                   double v_thresh_deg_s = kDefaultVThreshDegS,
                                   double a_thresh_deg_s2 = kDefaultAThreshDegS2,
                                   double px_per_deg = kDefaultPxPerDeg) {
    if (!(px_per_deg > 0.0)) {
        throw Error(ErrorCode::NonPositiveConversion,
                    "px_per_deg must be > 0, got " + std::to_string(px_per_deg));
    }
    detail::require_length(series, 3);
    const std::size_t n = series.size();

    const KinematicsSeries kin = kinematics(series, TimeUnit::PerSecond);
    std::vector<double> vel_deg(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) vel_deg[i] = kin.v[i] / px_per_deg;

    LabelSeries labels(n, Label::Fixation);
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const double dt_s = (series[i + 1].t - series[i].t) / 1000.0;
        const double accel = (vel_deg[i + 1] - vel_deg[i]) / dt_s;
        labels[i] = (vel_deg[i] >= v_thresh_deg_s || std::abs(accel) >= a_thresh_deg_s2)
                        ? Label::Saccade
                        : Label::Fixation;
    }
    labels[n - 2] = labels[n - 3];
    labels[n - 1] = labels[n - 3];
    return labels;
}

/// Dispatches to the classifier selected by `config.algorithm` using
/// `config.value` as its threshold (and `config.t_min_ms` for IDT).
inline LabelSeries classify(const GazeSeries& series, const ThresholdConfig& config,
                            TimeUnit unit = TimeUnit::PerMillisecond) {
    validate(config);
    switch (config.algorithm) {
        case ClassifierKind::IVT: return ivt_classify(series, config.value, unit);
        case ClassifierKind::IAVT: return iavt_classify(series, config.value, unit);
        case ClassifierKind::IDT: return idt_classify(series, config.value, config.t_min_ms);
    }
    throw Error(ErrorCode::InvalidConfig, "unknown classifier kind");
}

}  // namespace gazekit

#endif  // GAZEKIT_CLASSIFY_HPP
