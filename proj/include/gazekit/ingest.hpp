#ifndef GAZEKIT_INGEST_HPP
#define GAZEKIT_INGEST_HPP

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "gazekit/error.hpp"
#include "gazekit/types.hpp"

namespace gazekit {

/// Where to find the fields in each CSV row (0-based). The defaults match
/// the canonical format `t_ms,x_px,y_px[,label]`; raw multi-column exports
/// are consumed by remapping the indices.
struct ColumnMap {
    std::size_t t_col = 0;
    std::size_t x_col = 1;
    std::size_t y_col = 2;
    std::optional<std::size_t> label_col;  ///< set to read/expect a label column
    bool has_header = true;
};

/// What to do with rows whose x/y is missing or non-finite.
enum class MissingPolicy { Drop, LinearInterpolate, Fail };

struct IngestPolicy {
    MissingPolicy on_missing = MissingPolicy::Drop;
    double max_gap_ms = 50.0;  ///< LinearInterpolate only bridges gaps <= this
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

inline std::optional<double> parse_double(std::string_view field) {
    field = trim(field);
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) return std::nullopt;
    return value;
}

/// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

/// Writes the whole file through a temporary sibling and renames it into
/// place, so readers never observe a half-written file.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::IoError, "cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw Error(ErrorCode::IoError,
                    "cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

/// Yields (1-based line number, data line) pairs: comments (#...) and blank
/// lines are skipped, and the first surviving line is dropped when the file
/// has a header.
template <typename RowFn>
inline void for_each_data_line(const std::filesystem::path& path, bool has_header, RowFn&& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::FileNotFound, "cannot open " + path.string());
    }
    std::string line;
    std::size_t line_no = 0;
    bool header_pending = has_header;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        if (view.empty() || view.front() == '#') continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        fn(line_no, view);
    }
}

}  // namespace detail

/// Parses a gaze recording. Timestamp fields must parse as finite numbers
/// and be strictly increasing across data rows; x/y fields that fail to
/// parse or are non-finite count as missing and are dropped, linearly
/// interpolated (only across gaps <= max_gap_ms with valid samples on both
/// sides), or rejected, per policy. Rows narrower than the column map are
/// malformed regardless of policy. `#`-prefixed lines are comments.
///
/// @throws Error{FileNotFound, MalformedRow, NonMonotonicTimestamp,
///         EmptySeries, InvalidConfig}
inline GazeSeries parse_csv(const std::filesystem::path& path, const ColumnMap& map = {},
                            const IngestPolicy& policy = {}) {
    if (policy.on_missing == MissingPolicy::LinearInterpolate && !(policy.max_gap_ms > 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "max_gap_ms must be > 0 for interpolation");
    }

    struct RawRow {
        double t;
        double x, y;
        bool missing;
        std::size_t line;
    };
    std::vector<RawRow> rows;
    const std::size_t width =
        std::max({map.t_col, map.x_col, map.y_col, map.label_col.value_or(0)}) + 1;

    detail::for_each_data_line(path, map.has_header, [&](std::size_t line_no,
                                                         std::string_view line) {
        const std::vector<std::string_view> fields = detail::split_fields(line);
        if (fields.size() < width) {
            throw Error(ErrorCode::MalformedRow,
                        "expected at least " + std::to_string(width) + " columns, got " +
                            std::to_string(fields.size()),
                        line_no);
        }
        const std::optional<double> t = detail::parse_double(fields[map.t_col]);
        if (!t.has_value() || !std::isfinite(*t)) {
            throw Error(ErrorCode::MalformedRow, "bad timestamp field", line_no);
        }
        const std::optional<double> x = detail::parse_double(fields[map.x_col]);
        const std::optional<double> y = detail::parse_double(fields[map.y_col]);
        const bool missing = !x.has_value() || !std::isfinite(*x) ||
                             !y.has_value() || !std::isfinite(*y);
        if (missing && policy.on_missing == MissingPolicy::Fail) {
            throw Error(ErrorCode::MalformedRow, "missing or non-finite x/y", line_no);
        }
        if (!rows.empty() && !(*t > rows.back().t)) {
            throw Error(ErrorCode::NonMonotonicTimestamp,
                        "timestamp " + detail::format_double(*t) + " follows " +
                            detail::format_double(rows.back().t),
                        line_no);
        }
        rows.push_back({*t, missing ? 0.0 : *x, missing ? 0.0 : *y, missing, line_no});
    });

    if (rows.empty()) {
        throw Error(ErrorCode::EmptySeries, "no data rows in " + path.string());
    }

    std::vector<GazeSample> samples;
    samples.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const RawRow& row = rows[i];
        if (!row.missing) {
            samples.push_back({row.t, row.x, row.y});
            continue;
        }
        if (policy.on_missing != MissingPolicy::LinearInterpolate) continue;
        // Interpolate between the nearest valid neighbors when the time gap
        // between them is small enough; otherwise the row is dropped.
        std::size_t prev = i;
        while (prev > 0 && rows[prev].missing) --prev;
        std::size_t next = i;
        while (next + 1 < rows.size() && rows[next].missing) ++next;
        if (rows[prev].missing || rows[next].missing) continue;
        if (rows[next].t - rows[prev].t > policy.max_gap_ms) continue;
        const double f = (row.t - rows[prev].t) / (rows[next].t - rows[prev].t);
        samples.push_back({row.t, rows[prev].x + (rows[next].x - rows[prev].x) * f,
                           rows[prev].y + (rows[next].y - rows[prev].y) * f});
    }

    if (samples.empty()) {
        throw Error(ErrorCode::EmptySeries, "every row of " + path.string() + " was dropped");
    }
    double rate_hz = 1000.0;
    if (samples.size() >= 2) {
        const double span_ms = samples.back().t - samples.front().t;
        rate_hz = 1000.0 * static_cast<double>(samples.size() - 1) / span_ms;
    }
    return GazeSeries(std::move(samples), rate_hz);
}

/// Reads the label column of a CSV into a LabelSeries, one label per data
/// row in file order. Tokens are matched exactly after whitespace trim.
///
/// @throws Error{FileNotFound, MissingLabelColumn, MalformedRow,
///         UnknownLabelToken, EmptySeries}
inline LabelSeries parse_ground_truth(const std::filesystem::path& path,
                                      const ColumnMap& map,
                                      std::string_view fixation_token = "F",
                                      std::string_view saccade_token = "S") {
    if (!map.label_col.has_value()) {
        throw Error(ErrorCode::MissingLabelColumn,
                    "column map has no label column for " + path.string());
    }
    const std::size_t label_col = *map.label_col;
    LabelSeries labels;
    detail::for_each_data_line(path, map.has_header, [&](std::size_t line_no,
                                                         std::string_view line) {
        const std::vector<std::string_view> fields = detail::split_fields(line);
        if (fields.size() <= label_col) {
            throw Error(ErrorCode::MalformedRow,
                        "expected at least " + std::to_string(label_col + 1) +
                            " columns, got " + std::to_string(fields.size()),
                        line_no);
        }
        const std::string_view token = detail::trim(fields[label_col]);
        if (token == fixation_token) {
            labels.push_back(Label::Fixation);
        } else if (token == saccade_token) {
            labels.push_back(Label::Saccade);
        } else {
            throw Error(ErrorCode::UnknownLabelToken,
                        "unknown label token \"" + std::string(token) + "\"", line_no);
        }
    });
    if (labels.empty()) {
        throw Error(ErrorCode::EmptySeries, "no data rows in " + path.string());
    }
    return labels;
}

/// Writes the canonical CSV `t_ms,x_px,y_px[,label]` (UTF-8, LF endings,
/// shortest round-trip floats) behind a schema comment line. The write is
/// atomic. With labels, their length must match the series.
///
/// @throws Error{LengthMismatch, IoError}
inline void write_series_csv(const std::filesystem::path& path, const GazeSeries& series,
                             const LabelSeries* labels = nullptr,
                             std::string_view fixation_token = "F",
                             std::string_view saccade_token = "S") {
    if (labels != nullptr && labels->size() != series.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "series has " + std::to_string(series.size()) + " samples, labels " +
                        std::to_string(labels->size()));
    }
    std::string out = "# gazekit-schema=1\n";
    out += labels != nullptr ? "t_ms,x_px,y_px,label\n" : "t_ms,x_px,y_px\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += detail::format_double(series[i].t);
        out += ',';
        out += detail::format_double(series[i].x);
        out += ',';
        out += detail::format_double(series[i].y);
        if (labels != nullptr) {
            out += ',';
            out += (*labels)[i] == Label::Fixation ? fixation_token : saccade_token;
        }
        out += '\n';
    }
    detail::write_file_atomic(path, out);
}

}  // namespace gazekit

#endif  // GAZEKIT_INGEST_HPP
