#ifndef GAZEKIT_METRICS_HPP
#define GAZEKIT_METRICS_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gazekit/error.hpp"
#include "gazekit/types.hpp"

namespace gazekit {

/// A metric that can be undefined (zero denominator). Reported as empty /
/// JSON null rather than silently coerced to 0, because a fake 0 would
/// corrupt precision-recall comparisons.
using MetricValue = std::optional<double>;

/// Frame-wise confusion counts with Fixation as the positive class;
/// saccade-side metrics come from swapping the roles.
struct ConfusionMatrix {
    std::size_t tp_f = 0;  ///< predicted F, truth F
    std::size_t fn_f = 0;  ///< predicted S, truth F
    std::size_t fp_f = 0;  ///< predicted F, truth S
    std::size_t tn_f = 0;  ///< predicted S, truth S

    std::size_t total() const noexcept { return tp_f + fn_f + fp_f + tn_f; }
};

/// Everything the evaluation commands report for one (pred, truth) pair.
struct MetricsReport {
    ConfusionMatrix confusion;
    double accuracy = 0.0;
    MetricValue precision_f, recall_f, f1_f;
    MetricValue precision_s, recall_s, f1_s;
    double fixation_proportion_pred = 0.0;
    double fixation_proportion_truth = 0.0;
};

namespace detail {

inline MetricValue ratio(std::size_t num, std::size_t denom) {
    if (denom == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(denom);
}

/// Harmonic mean; undefined when either component is undefined or when
/// precision + recall == 0 (both zero).
inline MetricValue f1(MetricValue precision, MetricValue recall) {
    if (!precision.has_value() || !recall.has_value()) return std::nullopt;
    const double sum = *precision + *recall;
    if (sum == 0.0) return std::nullopt;
    return 2.0 * (*precision) * (*recall) / sum;
}

}  // namespace detail

/// Frame-wise evaluation of a predicted labeling against ground truth.
/// @throws Error{LengthMismatch} when lengths differ.
/// @throws Error{EmptySeries} when both are empty.
inline MetricsReport evaluate(const LabelSeries& pred, const LabelSeries& truth) {
    if (pred.size() != truth.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "pred has " + std::to_string(pred.size()) + " labels, truth has " +
                        std::to_string(truth.size()));
    }
    if (pred.empty()) {
        throw Error(ErrorCode::EmptySeries, "nothing to evaluate");
    }

    MetricsReport report;
    ConfusionMatrix& cm = report.confusion;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const bool pred_f = pred[i] == Label::Fixation;
        const bool truth_f = truth[i] == Label::Fixation;
        if (pred_f && truth_f) ++cm.tp_f;
        else if (!pred_f && truth_f) ++cm.fn_f;
        else if (pred_f && !truth_f) ++cm.fp_f;
        else ++cm.tn_f;
    }

    const double n = static_cast<double>(pred.size());
    report.accuracy = static_cast<double>(cm.tp_f + cm.tn_f) / n;
    report.precision_f = detail::ratio(cm.tp_f, cm.tp_f + cm.fp_f);
    report.recall_f = detail::ratio(cm.tp_f, cm.tp_f + cm.fn_f);
    report.f1_f = detail::f1(report.precision_f, report.recall_f);
    report.precision_s = detail::ratio(cm.tn_f, cm.tn_f + cm.fn_f);
    report.recall_s = detail::ratio(cm.tn_f, cm.tn_f + cm.fp_f);
    report.f1_s = detail::f1(report.precision_s, report.recall_s);
    report.fixation_proportion_pred = static_cast<double>(cm.tp_f + cm.fp_f) / n;
    report.fixation_proportion_truth = static_cast<double>(cm.tp_f + cm.fn_f) / n;
    return report;
}

/// Percentage of frames on which two labelings agree.
/// @throws Error{LengthMismatch, EmptySeries}
inline double agreement(const LabelSeries& a, const LabelSeries& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "labelings have lengths " + std::to_string(a.size()) + " and " +
                        std::to_string(b.size()));
    }
    if (a.empty()) {
        throw Error(ErrorCode::EmptySeries, "nothing to compare");
    }
    std::size_t matches = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) ++matches;
    }
    return 100.0 * static_cast<double>(matches) / static_cast<double>(a.size());
}

/// Product-moment correlation of two equal-length samples.
/// @throws Error{LengthMismatch} when lengths differ.
/// @throws Error{SeriesTooShort} for fewer than 2 points.
/// @throws Error{ZeroVariance} when either input is constant.
inline double pearson_r(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "inputs have lengths " + std::to_string(a.size()) + " and " +
                        std::to_string(b.size()));
    }
    if (a.size() < 2) {
        throw Error(ErrorCode::SeriesTooShort, "pearson_r needs at least 2 points");
    }
    const double n = static_cast<double>(a.size());
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= n;
    mean_b /= n;
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0) {
        throw Error(ErrorCode::ZeroVariance, "correlation undefined for constant input");
    }
    return cov / std::sqrt(var_a * var_b);
}

}  // namespace gazekit

#endif  // GAZEKIT_METRICS_HPP
