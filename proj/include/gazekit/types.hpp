#ifndef GAZEKIT_TYPES_HPP
#define GAZEKIT_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gazekit/error.hpp"

namespace gazekit {

/// One timestamped 2-D gaze position. Time is always milliseconds;
/// positions are screen pixels.
struct GazeSample {
    double t = 0.0;  ///< timestamp in ms (strictly increasing within a series)
    double x = 0.0;  ///< horizontal gaze in px
    double y = 0.0;  ///< vertical gaze in px
};

/// Per-sample event class. Exactly two states; anything else (blinks,
/// dropouts) is resolved at ingestion, never represented here.
enum class Label : std::uint8_t { Fixation, Saccade };

using LabelSeries = std::vector<Label>;

/// Unit for the denominator of instantaneous velocity. Timestamps are ms,
/// so PerMillisecond makes velocities px/ms (= px/sample at 1 kHz) and
/// PerSecond makes them px/s. Fixed per run and recorded in output files.
enum class TimeUnit { PerMillisecond, PerSecond };

/// The three classifiers this toolkit implements.
enum class ClassifierKind { IVT, IAVT, IDT };

inline const char* to_string(TimeUnit unit) {
    return unit == TimeUnit::PerMillisecond ? "ms" : "s";
}

inline const char* to_string(ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::IVT: return "ivt";
        case ClassifierKind::IAVT: return "iavt";
        case ClassifierKind::IDT: return "idt";
    }
    return "?";
}

inline std::optional<ClassifierKind> classifier_from_string(std::string_view s) {
    if (s == "ivt" || s == "IVT") return ClassifierKind::IVT;
    if (s == "iavt" || s == "IAVT") return ClassifierKind::IAVT;
    if (s == "idt" || s == "IDT") return ClassifierKind::IDT;
    return std::nullopt;
}

inline std::optional<TimeUnit> time_unit_from_string(std::string_view s) {
    if (s == "ms") return TimeUnit::PerMillisecond;
    if (s == "s") return TimeUnit::PerSecond;
    return std::nullopt;
}

/// Converts a timestamp difference (ms) into the configured velocity
/// time unit.
inline double to_unit(double dt_ms, TimeUnit unit) {
    return unit == TimeUnit::PerMillisecond ? dt_ms : dt_ms / 1000.0;
}

/// Ordered gaze recording. Construction enforces the two invariants every
/// algorithm relies on: strictly increasing timestamps and finite positions.
/// Immutable after construction, so instances can be shared across threads.
class GazeSeries {
public:
    GazeSeries() = default;

    /// @throws Error{NonMonotonicTimestamp} when timestamps are unsorted or
    ///         duplicated (message carries the 1-based sample index).
    /// @throws Error{NonFiniteValue} when any coordinate or timestamp is
    ///         NaN/inf.
    explicit GazeSeries(std::vector<GazeSample> samples,
                        double sample_rate_hz = 1000.0)
        : samples_(std::move(samples)), sample_rate_hz_(sample_rate_hz) {
        for (std::size_t i = 0; i < samples_.size(); ++i) {
            const GazeSample& s = samples_[i];
            if (!std::isfinite(s.t) || !std::isfinite(s.x) || !std::isfinite(s.y)) {
                throw Error(ErrorCode::NonFiniteValue,
                            "non-finite sample at index " + std::to_string(i));
            }
            if (i > 0 && !(s.t > samples_[i - 1].t)) {
                throw Error(ErrorCode::NonMonotonicTimestamp,
                            "timestamps must be strictly increasing (sample " +
                                std::to_string(i) + ": " + std::to_string(s.t) +
                                " after " + std::to_string(samples_[i - 1].t) + ")");
            }
        }
    }

    const std::vector<GazeSample>& samples() const noexcept { return samples_; }
    double sample_rate_hz() const noexcept { return sample_rate_hz_; }
    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }
    const GazeSample& operator[](std::size_t i) const { return samples_[i]; }

private:
    std::vector<GazeSample> samples_;
    double sample_rate_hz_ = 1000.0;
};

/// Per-algorithm threshold bundle. `value` is px per time unit for the
/// velocity classifiers and the dispersion bound D_max in px for IDT;
/// `t_min_ms` is the minimum IDT window span and is ignored by IVT/IAVT.
struct ThresholdConfig {
    ClassifierKind algorithm = ClassifierKind::IVT;
    double value = 1.0;
    double t_min_ms = 50.0;
};

/// @throws Error{NonPositiveThreshold} unless value > 0 and t_min_ms > 0.
inline void validate(const ThresholdConfig& config) {
    if (!(config.value > 0.0)) {
        throw Error(ErrorCode::NonPositiveThreshold,
                    "threshold value must be > 0, got " + std::to_string(config.value));
    }
    if (!(config.t_min_ms > 0.0)) {
        throw Error(ErrorCode::NonPositiveThreshold,
                    "t_min_ms must be > 0, got " + std::to_string(config.t_min_ms));
    }
}

}  // namespace gazekit

#endif  // GAZEKIT_TYPES_HPP
