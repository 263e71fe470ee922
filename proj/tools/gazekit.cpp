// Command-line front end for the gazekit library.
//
// Subcommands: generate | classify | optimize | noise-sweep | evaluate.
// Exit codes: 0 success, 2 usage or input validation failure, 1 runtime
// failure (I/O, or no grid threshold produced a usable labeling).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gazekit/gazekit.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gazekit;

// ---------------------------------------------------------------------------
// shared plumbing

int exit_code_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::AllUndefined:
        case ErrorCode::IoError:
        case ErrorCode::ZeroVariance:
        case ErrorCode::IndexOutOfRange:
            return 1;
        default:
            return 2;  // bad flags or bad input data
    }
}

struct GlobalOpts {
    std::uint64_t seed = 1;
    std::string time_unit = "ms";
    std::string out_dir;  // empty -> $GAZEKIT_OUT_DIR -> .
};

TimeUnit unit_of(const GlobalOpts& g) {
    return *time_unit_from_string(g.time_unit);
}

fs::path out_dir_of(const GlobalOpts& g) {
    if (!g.out_dir.empty()) return g.out_dir;
    if (const char* env = std::getenv("GAZEKIT_OUT_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return ".";
}

/// Output file names resolve inside the output directory unless absolute.
fs::path resolve_out(const GlobalOpts& g, const std::string& name) {
    const fs::path p(name);
    return p.is_absolute() ? p : out_dir_of(g) / p;
}

std::string fmt(double value) { return detail::format_double(value); }

std::string fmt(const std::optional<double>& value) {
    return value.has_value() ? fmt(*value) : std::string();
}

json to_json(const std::optional<double>& value) {
    return value.has_value() ? json(*value) : json(nullptr);
}

const char* scale_name(SweepScale scale) {
    return scale == SweepScale::Logarithmic ? "log" : "linear";
}

json grid_json(const SweepGrid& grid) {
    return json{{"lo", grid.lo},
                {"hi", grid.hi},
                {"count", grid.count},
                {"scale", scale_name(grid.scale)}};
}

json metrics_json(const MetricsReport& r) {
    return json{{"accuracy", r.accuracy},
                {"precision_f", to_json(r.precision_f)},
                {"recall_f", to_json(r.recall_f)},
                {"f1_f", to_json(r.f1_f)},
                {"precision_s", to_json(r.precision_s)},
                {"recall_s", to_json(r.recall_s)},
                {"f1_s", to_json(r.f1_s)},
                {"fixation_prop_pred", r.fixation_proportion_pred},
                {"fixation_prop_truth", r.fixation_proportion_truth},
                {"confusion",
                 json{{"tp_f", r.confusion.tp_f},
                      {"fn_f", r.confusion.fn_f},
                      {"fp_f", r.confusion.fp_f},
                      {"tn_f", r.confusion.tn_f}}}};
}

/// Metric columns shared by the evaluate and noise-sweep CSVs, in order.
const char* kMetricHeader =
    "accuracy,precision_f,recall_f,f1_f,precision_s,recall_s,f1_s,"
    "fixation_prop_pred,fixation_prop_truth";

std::string metric_fields(const MetricsReport& r) {
    std::string out = fmt(r.accuracy);
    for (const auto& v : {r.precision_f, r.recall_f, r.f1_f,
                          r.precision_s, r.recall_s, r.f1_s}) {
        out += ',';
        out += fmt(v);
    }
    out += ',';
    out += fmt(r.fixation_proportion_pred);
    out += ',';
    out += fmt(r.fixation_proportion_truth);
    return out;
}

void write_json_atomic(const fs::path& path, const json& j) {
    detail::write_file_atomic(path, j.dump(2) + "\n");
}

double fixation_share(const LabelSeries& labels) {
    std::size_t fixations = 0;
    for (Label label : labels) {
        if (label == Label::Fixation) ++fixations;
    }
    return static_cast<double>(fixations) / static_cast<double>(labels.size());
}

// ---------------------------------------------------------------------------
// flag bundles reused by several subcommands

struct ColumnFlags {
    std::size_t t_col = 0, x_col = 1, y_col = 2;
    bool no_header = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--t-col", t_col, "0-based timestamp column")->capture_default_str();
        cmd->add_option("--x-col", x_col, "0-based x column")->capture_default_str();
        cmd->add_option("--y-col", y_col, "0-based y column")->capture_default_str();
        cmd->add_flag("--no-header", no_header, "input has no header row");
    }

    ColumnMap to_map() const {
        ColumnMap map;
        map.t_col = t_col;
        map.x_col = x_col;
        map.y_col = y_col;
        map.has_header = !no_header;
        return map;
    }
};

struct SynthFlags {
    double duration_ms = 60000.0, rate_hz = 1000.0;
    double fix_min = 200.0, fix_max = 400.0;
    double sac_min = 20.0, sac_max = 80.0;
    double amp_min = 50.0, amp_max = 500.0;
    double jitter = 0.5, arena_w = 1920.0, arena_h = 1080.0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--duration-ms", duration_ms)->capture_default_str();
        cmd->add_option("--rate-hz", rate_hz)->capture_default_str();
        cmd->add_option("--fix-min-ms", fix_min, "shortest fixation")->capture_default_str();
        cmd->add_option("--fix-max-ms", fix_max, "longest fixation")->capture_default_str();
        cmd->add_option("--sac-min-ms", sac_min, "shortest saccade")->capture_default_str();
        cmd->add_option("--sac-max-ms", sac_max, "longest saccade")->capture_default_str();
        cmd->add_option("--amp-min-px", amp_min, "smallest saccade amplitude")
            ->capture_default_str();
        cmd->add_option("--amp-max-px", amp_max, "largest saccade amplitude")
            ->capture_default_str();
        cmd->add_option("--jitter-px", jitter, "fixation jitter sigma")->capture_default_str();
        cmd->add_option("--arena-width-px", arena_w)->capture_default_str();
        cmd->add_option("--arena-height-px", arena_h)->capture_default_str();
    }

    SynthConfig to_config(std::uint64_t seed) const {
        SynthConfig config;
        config.duration_ms = duration_ms;
        config.rate_hz = rate_hz;
        config.fix_duration_ms = {fix_min, fix_max};
        config.sac_duration_ms = {sac_min, sac_max};
        config.sac_amplitude_px = {amp_min, amp_max};
        config.fix_jitter_px = jitter;
        config.arena_width_px = arena_w;
        config.arena_height_px = arena_h;
        config.seed = seed;
        return config;
    }

    json to_json(std::uint64_t seed) const {
        return json{{"kind", "synthetic"},
                    {"duration_ms", duration_ms},
                    {"rate_hz", rate_hz},
                    {"fix_duration_ms", {fix_min, fix_max}},
                    {"sac_duration_ms", {sac_min, sac_max}},
                    {"sac_amplitude_px", {amp_min, amp_max}},
                    {"fix_jitter_px", jitter},
                    {"arena_px", {arena_w, arena_h}},
                    {"seed", seed}};
    }
};

/// Sweep-grid flags; unset bounds fall back to the per-algorithm default.
struct GridFlags {
    double lo = 0.0, hi = 0.0;
    std::size_t count = 0;
    std::string scale = "log";
    CLI::Option* lo_opt = nullptr;
    CLI::Option* hi_opt = nullptr;
    CLI::Option* count_opt = nullptr;

    void add_to(CLI::App* cmd) {
        lo_opt = cmd->add_option("--grid-lo", lo, "lowest swept threshold");
        hi_opt = cmd->add_option("--grid-hi", hi, "highest swept threshold");
        count_opt = cmd->add_option("--grid-count", count, "number of grid points");
        cmd->add_option("--grid-scale", scale, "grid spacing")
            ->check(CLI::IsMember({"linear", "log"}))
            ->capture_default_str();
    }

    SweepGrid resolve(ClassifierKind kind) const {
        SweepGrid grid = default_grid(kind);
        if (lo_opt->count() > 0) grid.lo = lo;
        if (hi_opt->count() > 0) grid.hi = hi;
        if (count_opt->count() > 0) grid.count = count;
        grid.scale = scale == "linear" ? SweepScale::Linear : SweepScale::Logarithmic;
        return grid;
    }
};

std::vector<ClassifierKind> parse_kinds(const std::vector<std::string>& names) {
    std::vector<ClassifierKind> kinds;
    if (names.empty()) {
        return {ClassifierKind::IVT, ClassifierKind::IAVT, ClassifierKind::IDT};
    }
    for (const std::string& name : names) {
        const auto kind = classifier_from_string(name);
        if (kind.has_value() &&
            std::find(kinds.begin(), kinds.end(), *kind) == kinds.end()) {
            kinds.push_back(*kind);
        }
    }
    return kinds;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOpts {
    SynthFlags synth;
    std::string output = "synthetic.csv";
    std::string truth_output = "synthetic_truth.csv";
};

int run_generate(const GlobalOpts& g, const GenerateOpts& o) {
    const SynthResult result = generate(o.synth.to_config(g.seed));
    const fs::path traj_path = resolve_out(g, o.output);
    const fs::path truth_path = resolve_out(g, o.truth_output);
    write_series_csv(traj_path, result.series);
    write_series_csv(truth_path, result.series, &result.labels);

    std::cout << "samples: " << result.series.size() << "\n"
              << "fixation proportion: " << fmt(fixation_share(result.labels)) << "\n"
              << "wrote " << traj_path.string() << "\n"
              << "wrote " << truth_path.string() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyOpts {
    std::string input;
    std::string algorithm = "ivt";
    double threshold = 0.0;
    CLI::Option* threshold_opt = nullptr;
    bool adaptive = false;
    double t_min_ms = kDefaultTMinMs;
    ColumnFlags columns;
    GridFlags grid;
    std::string output = "labels.csv";
    std::string plot_data;
    CLI::Option* plot_opt = nullptr;
};

int run_classify(const GlobalOpts& g, const ClassifyOpts& o) {
    if (o.adaptive == (o.threshold_opt->count() > 0)) {
        std::cerr << "error: pass exactly one of --threshold and --adaptive\n";
        return 2;
    }
    const ClassifierKind kind = *classifier_from_string(o.algorithm);
    const TimeUnit unit = unit_of(g);
    const GazeSeries series = parse_csv(o.input, o.columns.to_map());
    const fs::path out_path = resolve_out(g, o.output);

    LabelSeries labels;
    if (o.adaptive) {
        const SweepGrid grid = o.grid.resolve(kind);
        AdaptiveResult result = adaptive_classify(series, kind, grid, o.t_min_ms, unit);
        labels = std::move(result.labels);
        const fs::path meta_path = out_path.string() + ".meta.json";
        write_json_atomic(meta_path, json{{"algorithm", to_string(kind)},
                                          {"threshold", result.threshold},
                                          {"k_ratio", result.k},
                                          {"t_min_ms", o.t_min_ms},
                                          {"time_unit", g.time_unit},
                                          {"grid", grid_json(grid)}});
        std::cout << "chosen threshold: " << fmt(result.threshold)
                  << " (k_ratio " << fmt(result.k) << ")\n"
                  << "wrote " << meta_path.string() << "\n";
    } else {
        labels = classify(series, ThresholdConfig{kind, o.threshold, o.t_min_ms}, unit);
    }

    write_series_csv(out_path, series, &labels);
    if (o.plot_opt->count() > 0) {
        std::string plot = "x_px,y_px,label\n";
        for (std::size_t i = 0; i < series.size(); ++i) {
            plot += fmt(series[i].x);
            plot += ',';
            plot += fmt(series[i].y);
            plot += ',';
            plot += labels[i] == Label::Fixation ? 'F' : 'S';
            plot += '\n';
        }
        const fs::path plot_path = resolve_out(g, o.plot_data);
        detail::write_file_atomic(plot_path, plot);
        std::cout << "wrote " << plot_path.string() << "\n";
    }

    std::cout << "classified " << labels.size() << " samples with " << to_string(kind)
              << " (fixation share " << fmt(fixation_share(labels)) << ")\n"
              << "wrote " << out_path.string() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// optimize

struct OptimizeOpts {
    std::string input;
    std::vector<std::string> algorithms;
    double t_min_ms = kDefaultTMinMs;
    ColumnFlags columns;
    GridFlags grid;
    std::string summary_output = "optimal_thresholds.csv";
};

int run_optimize(const GlobalOpts& g, const OptimizeOpts& o) {
    const TimeUnit unit = unit_of(g);
    const GazeSeries series = parse_csv(o.input, o.columns.to_map());

    std::string summary = "# gazekit-schema=1\nalgorithm,threshold,k_ratio\n";
    std::vector<std::string> failures;
    for (ClassifierKind kind : parse_kinds(o.algorithms)) {
        const SweepGrid grid = o.grid.resolve(kind);
        const SweepCurve curve = sweep(series, kind, grid, o.t_min_ms, unit);

        std::string rows = "# gazekit-schema=1\nthreshold,k_ratio\n";
        for (const auto& [threshold, k] : curve.points) {
            rows += fmt(threshold);
            rows += ',';
            rows += fmt(k);
            rows += '\n';
        }
        const fs::path curve_path =
            resolve_out(g, std::string("curve_") + to_string(kind) + ".csv");
        detail::write_file_atomic(curve_path, rows);
        std::cout << "wrote " << curve_path.string() << "\n";

        try {
            const OptimalThreshold best = optimal_threshold(curve);
            summary += std::string(to_string(kind)) + "," + fmt(best.value) + "," +
                       fmt(best.k) + "\n";
            std::cout << to_string(kind) << ": threshold " << fmt(best.value)
                      << ", k_ratio " << fmt(best.k) << "\n";
        } catch (const Error& e) {
            if (e.code() != ErrorCode::AllUndefined) throw;
            failures.push_back(to_string(kind));
        }
    }

    const fs::path summary_path = resolve_out(g, o.summary_output);
    detail::write_file_atomic(summary_path, summary);
    std::cout << "wrote " << summary_path.string() << "\n";

    if (!failures.empty()) {
        std::cerr << "error: every grid threshold produced a single-class labeling for:";
        for (const std::string& name : failures) std::cerr << ' ' << name;
        std::cerr << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// noise-sweep

struct NoiseSweepOpts {
    std::string input;
    CLI::Option* input_opt = nullptr;
    std::string truth_file;
    CLI::Option* truth_opt = nullptr;
    bool reference_truth = false;
    std::size_t label_col = 3;
    std::string fix_token = "F";
    std::string sac_token = "S";
    ColumnFlags columns;
    SynthFlags synth;
    std::vector<double> sigmas;
    std::vector<std::string> algorithms;
    double t_min_ms = kDefaultTMinMs;
    std::size_t grid_count = 200;
    double vel_grid_lo = 1e-2, vel_grid_hi = 1e2;
    double idt_grid_lo = 1.0, idt_grid_hi = 1000.0;
    std::string output = "sweep.csv";
    std::string report = "sweep_report.json";
};

int run_noise_sweep(const GlobalOpts& g, const NoiseSweepOpts& o) {
    const TimeUnit unit = unit_of(g);

    // Clean series + ground truth.
    GazeSeries clean;
    LabelSeries truth;
    json source_json;
    std::string truth_kind;
    if (o.input_opt->count() > 0) {
        clean = parse_csv(o.input, o.columns.to_map());
        source_json = json{{"kind", "file"}, {"path", o.input}};
        if (o.truth_opt->count() > 0) {
            ColumnMap truth_map;
            truth_map.label_col = o.label_col;
            truth = parse_ground_truth(o.truth_file, truth_map, o.fix_token, o.sac_token);
            truth_kind = "file";
        } else if (o.reference_truth) {
            truth = reference_parse(clean);
            truth_kind = "reference";
        } else {
            std::cerr << "error: --input needs --truth-file or --reference-truth\n";
            return 2;
        }
    } else {
        SynthResult synth = generate(o.synth.to_config(g.seed));
        clean = std::move(synth.series);
        source_json = o.synth.to_json(g.seed);
        if (o.reference_truth) {
            truth = reference_parse(clean);
            truth_kind = "reference";
        } else {
            truth = std::move(synth.labels);
            truth_kind = "construction";
        }
    }
    if (truth.size() != clean.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "series has " + std::to_string(clean.size()) + " samples, truth " +
                        std::to_string(truth.size()));
    }

    const std::vector<double> sigmas =
        o.sigmas.empty() ? std::vector<double>{0, 1, 2, 5, 10, 30, 40, 50} : o.sigmas;
    const std::vector<ClassifierKind> kinds = parse_kinds(o.algorithms);

    // Fixed condition: threshold optimized once on the clean series. Its
    // clean-series labeling is also the baseline for agreement columns.
    struct AlgoState {
        ClassifierKind kind;
        SweepGrid grid;
        OptimalThreshold fixed;
        LabelSeries baseline;
        json levels = json::array();
    };
    std::vector<AlgoState> algos;
    for (ClassifierKind kind : kinds) {
        AlgoState state;
        state.kind = kind;
        state.grid = kind == ClassifierKind::IDT
                         ? SweepGrid{o.idt_grid_lo, o.idt_grid_hi, o.grid_count,
                                     SweepScale::Logarithmic}
                         : SweepGrid{o.vel_grid_lo, o.vel_grid_hi, o.grid_count,
                                     SweepScale::Logarithmic};
        state.fixed = optimal_threshold(sweep(clean, kind, state.grid, o.t_min_ms, unit));
        state.baseline = classify(
            clean, ThresholdConfig{kind, state.fixed.value, o.t_min_ms}, unit);
        algos.push_back(std::move(state));
        std::cout << to_string(kind) << ": fixed threshold " << fmt(algos.back().fixed.value)
                  << " (clean-data k_ratio " << fmt(algos.back().fixed.k) << ")\n";
    }

    // Long-format CSV, appended and flushed after every sigma level so
    // partial results survive interruption.
    const fs::path csv_path = resolve_out(g, o.output);
    std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
    if (!csv) {
        throw Error(ErrorCode::IoError, "cannot open " + csv_path.string() + " for writing");
    }
    csv << "# gazekit-schema=1\n"
        << "# time-unit=" << g.time_unit << "\n"
        << "# seed=" << g.seed << "\n"
        << "algorithm,sigma,condition,threshold,k_ratio," << kMetricHeader
        << ",agreement_with_clean\n";

    const auto emit = [&](const AlgoState& state, double sigma, const char* condition,
                          double threshold, const KRatioValue& k, const LabelSeries& labels) {
        const MetricsReport report = evaluate(labels, truth);
        const double agree = agreement(labels, state.baseline);
        csv << to_string(state.kind) << ',' << fmt(sigma) << ',' << condition << ','
            << fmt(threshold) << ',' << fmt(k) << ',' << metric_fields(report) << ','
            << fmt(agree) << '\n';
        json j = metrics_json(report);
        j["threshold"] = threshold;
        j["k_ratio"] = to_json(k);
        j["agreement_with_clean"] = agree;
        return j;
    };

    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        const double sigma = sigmas[i];
        const std::uint64_t noise_seed = g.seed + 1 + i;
        const GazeSeries noisy = add_noise(clean, NoiseSpec{sigma, noise_seed});
        for (AlgoState& state : algos) {
            const LabelSeries fixed_labels = classify(
                noisy, ThresholdConfig{state.kind, state.fixed.value, o.t_min_ms}, unit);
            const AdaptiveResult adaptive =
                adaptive_classify(noisy, state.kind, state.grid, o.t_min_ms, unit);

            json level;
            level["sigma"] = sigma;
            level["noise_seed"] = noise_seed;
            level["fixed"] = emit(state, sigma, "fixed", state.fixed.value,
                                  k_ratio(fixed_labels), fixed_labels);
            level["adaptive"] = emit(state, sigma, "adaptive", adaptive.threshold,
                                     adaptive.k, adaptive.labels);
            state.levels.push_back(std::move(level));
        }
        csv.flush();
        std::cout << "sigma " << fmt(sigma) << " done\n";
    }
    csv.close();
    if (!csv) {
        throw Error(ErrorCode::IoError, "write failed for " + csv_path.string());
    }

    json report;
    report["schema"] = 1;
    report["seed"] = g.seed;
    report["time_unit"] = g.time_unit;
    report["t_min_ms"] = o.t_min_ms;
    report["sigmas"] = sigmas;
    report["source"] = source_json;
    report["truth"] = truth_kind;
    json by_algo;
    for (const AlgoState& state : algos) {
        by_algo[to_string(state.kind)] =
            json{{"grid", grid_json(state.grid)},
                 {"fixed", json{{"threshold", state.fixed.value}, {"k_ratio", state.fixed.k}}},
                 {"levels", state.levels}};
    }
    report["algorithms"] = std::move(by_algo);

    const fs::path report_path = resolve_out(g, o.report);
    write_json_atomic(report_path, report);
    std::cout << "wrote " << csv_path.string() << "\n"
              << "wrote " << report_path.string() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateOpts {
    std::string pred;
    std::string truth;
    std::size_t pred_label_col = 3;
    std::size_t truth_label_col = 3;
    bool no_header = false;
    std::string fix_token = "F";
    std::string sac_token = "S";
    std::string json_output = "metrics.json";
    std::string csv_output = "metrics.csv";
};

int run_evaluate(const GlobalOpts& g, const EvaluateOpts& o) {
    ColumnMap pred_map;
    pred_map.label_col = o.pred_label_col;
    pred_map.has_header = !o.no_header;
    ColumnMap truth_map;
    truth_map.label_col = o.truth_label_col;
    truth_map.has_header = !o.no_header;

    const LabelSeries pred = parse_ground_truth(o.pred, pred_map, o.fix_token, o.sac_token);
    const LabelSeries truth = parse_ground_truth(o.truth, truth_map, o.fix_token, o.sac_token);
    const MetricsReport report = evaluate(pred, truth);

    const fs::path json_path = resolve_out(g, o.json_output);
    write_json_atomic(json_path, metrics_json(report));

    const ConfusionMatrix& cm = report.confusion;
    std::string csv = "# gazekit-schema=1\ntp_f,fn_f,fp_f,tn_f,";
    csv += kMetricHeader;
    csv += '\n';
    csv += std::to_string(cm.tp_f) + ',' + std::to_string(cm.fn_f) + ',' +
           std::to_string(cm.fp_f) + ',' + std::to_string(cm.tn_f) + ',' +
           metric_fields(report) + '\n';
    const fs::path csv_path = resolve_out(g, o.csv_output);
    detail::write_file_atomic(csv_path, csv);

    std::cout << "frames: " << cm.total() << "\n"
              << "accuracy: " << fmt(report.accuracy) << "\n"
              << "f1_fixation: " << fmt(report.f1_f) << "\n"
              << "f1_saccade: " << fmt(report.f1_s) << "\n"
              << "wrote " << json_path.string() << "\n"
              << "wrote " << csv_path.string() << "\n";
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"eye-gaze sample classification toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for every randomized step")->capture_default_str();
    app.add_option("--time-unit", g.time_unit, "velocity time unit")
        ->check(CLI::IsMember({"ms", "s"}))
        ->capture_default_str();
    app.add_option("--out-dir", g.out_dir,
                   "output directory (default: $GAZEKIT_OUT_DIR, then .)");

    GenerateOpts gen;
    CLI::App* gen_cmd =
        app.add_subcommand("generate", "write a synthetic labeled recording");
    gen_cmd->fallthrough();
    gen.synth.add_to(gen_cmd);
    gen_cmd->add_option("--output", gen.output, "trajectory CSV name")->capture_default_str();
    gen_cmd->add_option("--truth-output", gen.truth_output, "labeled CSV name")
        ->capture_default_str();

    ClassifyOpts cls;
    CLI::App* cls_cmd = app.add_subcommand("classify", "label a recording");
    cls_cmd->fallthrough();
    cls_cmd->add_option("--input", cls.input, "gaze CSV to classify")->required();
    cls_cmd->add_option("--algorithm", cls.algorithm, "classifier")
        ->check(CLI::IsMember({"ivt", "iavt", "idt"}))
        ->capture_default_str();
    cls.threshold_opt = cls_cmd->add_option("--threshold", cls.threshold,
                                            "fixed threshold (px/unit, or px for idt)");
    cls_cmd->add_flag("--adaptive", cls.adaptive,
                      "pick the threshold by k-ratio minimization");
    cls_cmd->add_option("--t-min-ms", cls.t_min_ms, "idt minimum window span")
        ->capture_default_str();
    cls.columns.add_to(cls_cmd);
    cls.grid.add_to(cls_cmd);
    cls_cmd->add_option("--output", cls.output, "labeled CSV name")->capture_default_str();
    cls.plot_opt = cls_cmd->add_option("--plot-data", cls.plot_data,
                                       "also write an x,y,label file for plotting");

    OptimizeOpts opt;
    CLI::App* opt_cmd =
        app.add_subcommand("optimize", "sweep thresholds and report the k-ratio minima");
    opt_cmd->fallthrough();
    opt_cmd->add_option("--input", opt.input, "gaze CSV to sweep")->required();
    opt_cmd->add_option("--algorithm", opt.algorithms, "classifiers (default: all)")
        ->check(CLI::IsMember({"ivt", "iavt", "idt"}));
    opt_cmd->add_option("--t-min-ms", opt.t_min_ms)->capture_default_str();
    opt.columns.add_to(opt_cmd);
    opt.grid.add_to(opt_cmd);
    opt_cmd->add_option("--summary-output", opt.summary_output)->capture_default_str();

    NoiseSweepOpts sweep_opts;
    CLI::App* sweep_cmd = app.add_subcommand(
        "noise-sweep", "fixed vs adaptive thresholds across noise levels");
    sweep_cmd->fallthrough();
    sweep_opts.input_opt = sweep_cmd->add_option(
        "--input", sweep_opts.input, "gaze CSV (default: synthetic trajectory)");
    sweep_opts.truth_opt = sweep_cmd->add_option(
        "--truth-file", sweep_opts.truth_file, "labeled CSV holding ground truth");
    sweep_cmd->add_flag("--reference-truth", sweep_opts.reference_truth,
                        "use the velocity+acceleration reference parser as truth");
    sweep_cmd->add_option("--label-col", sweep_opts.label_col, "truth label column")
        ->capture_default_str();
    sweep_cmd->add_option("--fix-token", sweep_opts.fix_token)->capture_default_str();
    sweep_cmd->add_option("--sac-token", sweep_opts.sac_token)->capture_default_str();
    sweep_opts.columns.add_to(sweep_cmd);
    sweep_opts.synth.add_to(sweep_cmd);
    sweep_cmd->add_option("--sigma", sweep_opts.sigmas,
                          "noise levels in px (default: 0 1 2 5 10 30 40 50); "
                          "level i uses noise seed = seed + 1 + i");
    sweep_cmd->add_option("--algorithm", sweep_opts.algorithms, "classifiers (default: all)")
        ->check(CLI::IsMember({"ivt", "iavt", "idt"}));
    sweep_cmd->add_option("--t-min-ms", sweep_opts.t_min_ms)->capture_default_str();
    sweep_cmd->add_option("--grid-count", sweep_opts.grid_count)->capture_default_str();
    sweep_cmd->add_option("--vel-grid-lo", sweep_opts.vel_grid_lo)->capture_default_str();
    sweep_cmd->add_option("--vel-grid-hi", sweep_opts.vel_grid_hi)->capture_default_str();
    sweep_cmd->add_option("--idt-grid-lo", sweep_opts.idt_grid_lo)->capture_default_str();
    sweep_cmd->add_option("--idt-grid-hi", sweep_opts.idt_grid_hi)->capture_default_str();
    sweep_cmd->add_option("--output", sweep_opts.output, "long-format results CSV")
        ->capture_default_str();
    sweep_cmd->add_option("--report", sweep_opts.report, "JSON report")
        ->capture_default_str();

    EvaluateOpts ev;
    CLI::App* ev_cmd =
        app.add_subcommand("evaluate", "score a label CSV against a truth CSV");
    ev_cmd->fallthrough();
    ev_cmd->add_option("--pred", ev.pred, "predicted labels CSV")->required();
    ev_cmd->add_option("--truth", ev.truth, "ground-truth labels CSV")->required();
    ev_cmd->add_option("--pred-label-col", ev.pred_label_col)->capture_default_str();
    ev_cmd->add_option("--truth-label-col", ev.truth_label_col)->capture_default_str();
    ev_cmd->add_flag("--no-header", ev.no_header, "both files lack header rows");
    ev_cmd->add_option("--fix-token", ev.fix_token)->capture_default_str();
    ev_cmd->add_option("--sac-token", ev.sac_token)->capture_default_str();
    ev_cmd->add_option("--json-output", ev.json_output)->capture_default_str();
    ev_cmd->add_option("--csv-output", ev.csv_output)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen_cmd->parsed()) return run_generate(g, gen);
        if (cls_cmd->parsed()) return run_classify(g, cls);
        if (opt_cmd->parsed()) return run_optimize(g, opt);
        if (sweep_cmd->parsed()) return run_noise_sweep(g, sweep_opts);
        if (ev_cmd->parsed()) return run_evaluate(g, ev);
    } catch (const gazekit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_of(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
