// Benchmark suites behind the `lsc benchmark` subcommands. Each suite expands
// into independent (config, seed) cells, runs them on a worker pool, writes
// one labels/report pair per cell plus per-run and aggregate CSVs, and returns
// everything in memory so callers can assert on it.
#ifndef LSC_TOOLS_SUITES_HPP
#define LSC_TOOLS_SUITES_HPP

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "lsc/lsc.hpp"

namespace lsc::bench {

namespace fs = std::filesystem;

struct SuiteOptions {
    fs::path out_dir;
    std::size_t n = 500;
    std::size_t d = 32;
    std::size_t k = 5;
    std::size_t seeds = 10;
    std::vector<double> noises{1.0, 2.0, 3.0, 5.0, 10.0};
    double noise = 10.0;  // single-noise suites (ablation)
    std::vector<double> alphas;
    double alpha = 0.25;
    double center_spread = 3.0;  // sweep geometry: tight enough that noise bites
    double base_std = 1.0;
    bool smoothing = true;
    SavGolSpec savgol{5, 2};
    InitMethod init = InitMethod::plus_plus;
    std::string dtw_mode = "auto";  // auto | exact | fast
    FastDtwSpec fast{1, 4};
    bool dtw_normalize = false;
    ScaleMode scale_mode = ScaleMode::raw;
    std::size_t workers = 0;  // 0 = hardware; LSC_THREADS caps it
    fs::path data_dir = "data";
    fs::path dataset;  // optional CSV for the alpha sweep
    std::string label_column = "label";
    std::vector<std::size_t> timing_sizes{250, 500, 1000};
    std::size_t timing_reps = 3;
};

struct RunRow {
    std::string suite;
    std::string dataset;
    std::string algorithm;
    double noise = 0.0;
    double alpha = 0.0;
    bool smoothing = false;
    std::uint64_t seed = 0;
    MetricReport metrics;
    double fit_seconds = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    bool failed = false;
    std::string error;
    std::string cell_name;
    nlohmann::json config;
};

struct SuiteResult {
    std::string suite;
    std::vector<RunRow> rows;
    nlohmann::json summary;
    bool any_failed = false;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Pulls cell indices from an atomic counter; results land in caller-owned
/// slots, so the outcome is independent of the worker count.
inline void run_cells(std::size_t count, std::size_t workers,
                      const std::function<void(std::size_t)>& run_one) {
    const std::size_t pool = std::min(resolve_threads(workers), std::max<std::size_t>(count, 1));
    if (pool <= 1) {
        for (std::size_t i = 0; i < count; ++i) run_one(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (std::size_t w = 0; w < pool; ++w)
        threads.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) run_one(i);
        });
    for (auto& t : threads) t.join();
}

/// Largest odd window that fits d; 0 disables smoothing entirely.
inline std::size_t clamp_window(std::size_t window, std::size_t d) {
    std::size_t w = std::min(window, d);
    if (w % 2 == 0) --w;
    return w >= 3 ? w : 0;
}

inline DtwOptions resolve_dtw(const SuiteOptions& opt, std::size_t pairs_per_step) {
    DtwOptions dtw;
    dtw.fast = opt.fast;
    dtw.normalize_by_path_length = opt.dtw_normalize;
    if (opt.dtw_mode == "exact")
        dtw.mode = DtwMode::exact;
    else if (opt.dtw_mode == "fast")
        dtw.mode = DtwMode::fast;
    else
        dtw.mode = pairs_per_step <= 1000 ? DtwMode::exact : DtwMode::fast;
    return dtw;
}

inline nlohmann::json lsc_config_echo(const LscConfig& cfg, std::size_t window_used) {
    return {
        {"algorithm", "lsc"},
        {"k", cfg.k},
        {"alpha", cfg.metric.alpha},
        {"dtw_mode", cfg.metric.dtw.mode == DtwMode::exact ? "exact" : "fast"},
        {"fast_radius", cfg.metric.dtw.fast.radius},
        {"fast_min_size", cfg.metric.dtw.fast.min_size},
        {"dtw_normalize", cfg.metric.dtw.normalize_by_path_length},
        {"scale_mode", cfg.metric.scale_mode == ScaleMode::raw ? "raw" : "normalized"},
        {"smoothing", cfg.smoothing},
        {"savgol_window", window_used},
        {"savgol_order", cfg.savgol.poly_order},
        {"init", cfg.init == InitMethod::random_lines ? "random" : "plusplus"},
        {"standardize", cfg.standardize},
        {"max_iter", cfg.max_iter},
        {"tol", cfg.tol},
        {"seed", cfg.seed},
    };
}

inline nlohmann::json synthetic_echo(const SyntheticSpec& spec) {
    return {
        {"kind", "synthetic"},
        {"n_samples", spec.n_samples},
        {"n_features", spec.n_features},
        {"n_clusters", spec.n_clusters},
        {"noise_std", spec.noise_std},
        {"base_std", spec.base_std},
        {"center_spread", spec.center_spread},
        {"seed", spec.seed},
        {"prng", Rng::kAlgorithm},
    };
}

inline void write_cell(const fs::path& out_dir, const RunRow& row, const LabelVector& labels) {
    const fs::path cell_dir = out_dir / "cells" / row.cell_name;
    fs::create_directories(cell_dir);
    write_labels_csv(cell_dir / "labels.csv", labels);
    RunReport report;
    report.config = row.config;
    report.metrics = {{row.algorithm, to_json(row.metrics)}};
    report.iterations = row.iterations;
    report.converged = row.converged;
    atomic_write_file(cell_dir / "report.json", report.to_json().dump(2) + "\n");
}

/// Configures and runs one LSC fit, returning the model plus the resolved
/// config echo. The smoothing window is clamped to the feature count; all
/// resolved values land in the echo so a re-run reproduces the labels.
inline std::pair<ClusterModel, nlohmann::json> run_lsc(const DataMatrix& data,
                                                       const SuiteOptions& opt, double alpha,
                                                       bool smoothing, std::uint64_t seed) {
    LscConfig cfg;
    cfg.k = opt.k;
    cfg.metric.alpha = alpha;
    cfg.metric.dtw = resolve_dtw(opt, data.n_samples() * opt.k);
    cfg.metric.scale_mode = opt.scale_mode;
    cfg.seed = seed;
    cfg.init = opt.init;
    cfg.threads = 1;  // cells are the unit of parallelism
    const std::size_t window = clamp_window(opt.savgol.window_length, data.n_features());
    cfg.smoothing = smoothing && window != 0;
    if (cfg.smoothing)
        cfg.savgol = {window, std::min(opt.savgol.poly_order, window - 1)};
    auto model = lsc_fit(data, cfg);
    auto echo = lsc_config_echo(cfg, cfg.smoothing ? window : 0);
    return {std::move(model), std::move(echo)};
}

inline MetricReport score(const LabelVector& truth, const LabelVector& pred,
                          const DataMatrix& standardized) {
    MetricReport metrics;
    if (!truth.empty()) metrics = evaluate_external(truth, pred);
    metrics.silhouette = silhouette(standardized, pred);
    metrics.silhouette_distance = "euclidean";
    return metrics;
}

inline const std::vector<std::string>& metric_names() {
    static const std::vector<std::string> names{"ari",          "ami",      "homogeneity",
                                                "completeness", "v_measure", "silhouette"};
    return names;
}

inline double metric_value(const MetricReport& m, const std::string& name) {
    if (name == "ari") return m.ari;
    if (name == "ami") return m.ami;
    if (name == "homogeneity") return m.homogeneity;
    if (name == "completeness") return m.completeness;
    if (name == "v_measure") return m.v_measure;
    return m.silhouette;
}

struct MeanStd {
    double mean = 0.0, stdev = 0.0;
    std::size_t count = 0;
};

inline MeanStd mean_std(const std::vector<double>& v) {
    MeanStd ms;
    ms.count = v.size();
    if (v.empty()) return ms;
    for (double x : v) ms.mean += x;
    ms.mean /= static_cast<double>(v.size());
    for (double x : v) ms.stdev += (x - ms.mean) * (x - ms.mean);
    ms.stdev = std::sqrt(ms.stdev / static_cast<double>(v.size()));
    return ms;
}

inline void write_runs_csv(const fs::path& out_dir, const std::vector<RunRow>& rows) {
    std::string csv =
        "suite,dataset,algorithm,noise,alpha,smoothing,seed,ari,ami,homogeneity,completeness,"
        "v_measure,silhouette,fit_seconds,iterations,converged,error\n";
    for (const auto& r : rows) {
        csv += r.suite + "," + r.dataset + "," + r.algorithm + "," + fmt(r.noise) + "," +
               fmt(r.alpha) + "," + (r.smoothing ? "on" : "off") + "," + std::to_string(r.seed);
        for (const auto& name : metric_names()) csv += "," + fmt(metric_value(r.metrics, name));
        csv += "," + fmt(r.fit_seconds) + "," + std::to_string(r.iterations) + "," +
               (r.converged ? "true" : "false") + "," + r.error + "\n";
    }
    atomic_write_file(out_dir / "runs.csv", csv);
}

}  // namespace detail

/// Mirrors the noise-level table: LSC and the k-means baseline on the same
/// synthetic datasets, one cell per (noise, algorithm, seed).
inline SuiteResult run_noise_sweep(const SuiteOptions& opt) {
    SuiteResult result;
    result.suite = "noise-sweep";
    fs::create_directories(opt.out_dir);

    struct Cell {
        double noise;
        std::string algorithm;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (double noise : opt.noises)
        for (const char* alg : {"lsc", "kmeans"})
            for (std::uint64_t seed = 0; seed < opt.seeds; ++seed)
                cells.push_back({noise, alg, seed});
    result.rows.resize(cells.size());

    detail::run_cells(cells.size(), opt.workers, [&](std::size_t idx) {
        const auto& cell = cells[idx];
        RunRow& row = result.rows[idx];
        row.suite = result.suite;
        row.algorithm = cell.algorithm;
        row.noise = cell.noise;
        row.seed = cell.seed;
        std::ostringstream name;
        name << "noise" << cell.noise << "-" << cell.algorithm << "-seed" << cell.seed;
        row.cell_name = name.str();
        try {
            SyntheticSpec spec;
            spec.n_samples = opt.n;
            spec.n_features = opt.d;
            spec.n_clusters = opt.k;
            spec.noise_std = cell.noise;
            spec.center_spread = opt.center_spread;
            spec.base_std = opt.base_std;
            spec.seed = cell.seed;
            const auto ds = generate_synthetic(spec);
            row.dataset = ds.name;
            const auto standardized = apply_standardizer(ds.matrix, fit_standardizer(ds.matrix));

            LabelVector labels;
            if (cell.algorithm == std::string("lsc")) {
                row.alpha = opt.alpha;
                row.smoothing = opt.smoothing;
                auto [model, echo] = detail::run_lsc(ds.matrix, opt, opt.alpha, opt.smoothing,
                                                     cell.seed);
                labels = model.labels;
                row.fit_seconds = model.timings.total_seconds;
                row.iterations = model.iterations_run;
                row.converged = model.converged;
                row.config = {{"dataset", detail::synthetic_echo(spec)}, {"fit", echo}};
            } else {
                const auto model = kmeans_fit(standardized, opt.k, cell.seed);
                labels = model.labels;
                row.fit_seconds = model.timings.total_seconds;
                row.iterations = model.iterations_run;
                row.converged = model.converged;
                row.config = {{"dataset", detail::synthetic_echo(spec)},
                              {"fit",
                               {{"algorithm", "kmeans"},
                                {"k", opt.k},
                                {"standardize", true},
                                {"seed", cell.seed}}}};
            }
            row.metrics = detail::score(ds.truth, labels, standardized);
            detail::write_cell(opt.out_dir, row, labels);
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
        }
    });

    // Aggregate shaped like the paper's table: noise x metric rows, one
    // mean/std column pair per algorithm.
    std::string csv = "noise,metric,lsc_mean,lsc_std,km_mean,km_std\n";
    nlohmann::json summary = nlohmann::json::array();
    for (double noise : opt.noises) {
        nlohmann::json per_noise{{"noise", noise}};
        for (const auto& metric : detail::metric_names()) {
            std::map<std::string, std::vector<double>> values;
            for (const auto& row : result.rows) {
                if (row.failed || row.noise != noise) continue;
                values[row.algorithm].push_back(detail::metric_value(row.metrics, metric));
            }
            const auto lsc_ms = detail::mean_std(values["lsc"]);
            const auto km_ms = detail::mean_std(values["kmeans"]);
            csv += detail::fmt(noise) + "," + metric + "," + detail::fmt(lsc_ms.mean) + "," +
                   detail::fmt(lsc_ms.stdev) + "," + detail::fmt(km_ms.mean) + "," +
                   detail::fmt(km_ms.stdev) + "\n";
            per_noise[metric] = {{"lsc_mean", lsc_ms.mean},
                                 {"lsc_std", lsc_ms.stdev},
                                 {"km_mean", km_ms.mean},
                                 {"km_std", km_ms.stdev}};
        }
        summary.push_back(per_noise);
    }
    detail::write_runs_csv(opt.out_dir, result.rows);
    atomic_write_file(opt.out_dir / "aggregate.csv", csv);
    result.summary = {{"per_noise", summary}};
    atomic_write_file(opt.out_dir / "summary.json", result.summary.dump(2) + "\n");
    for (const auto& row : result.rows) result.any_failed |= row.failed;
    return result;
}

/// LSC across an alpha grid on one dataset (synthetic unless a CSV is given).
inline SuiteResult run_alpha_sweep(const SuiteOptions& opt) {
    SuiteResult result;
    result.suite = "alpha-sweep";
    fs::create_directories(opt.out_dir);

    std::vector<double> alphas = opt.alphas;
    if (alphas.empty())
        for (int i = 1; i <= 9; ++i) alphas.push_back(0.1 * i);

    struct Cell {
        double alpha;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (double alpha : alphas)
        for (std::uint64_t seed = 0; seed < opt.seeds; ++seed) cells.push_back({alpha, seed});
    result.rows.resize(cells.size());

    detail::run_cells(cells.size(), opt.workers, [&](std::size_t idx) {
        const auto& cell = cells[idx];
        RunRow& row = result.rows[idx];
        row.suite = result.suite;
        row.algorithm = "lsc";
        row.alpha = cell.alpha;
        row.seed = cell.seed;
        row.smoothing = opt.smoothing;
        std::ostringstream name;
        name << "alpha" << cell.alpha << "-seed" << cell.seed;
        row.cell_name = name.str();
        try {
            nlohmann::json dataset_echo;
            LabeledDataset ds{DataMatrix(1, 1, {0.0}), {}, ""};
            if (!opt.dataset.empty()) {
                CsvSchema schema;
                if (opt.label_column != "none") schema.label_column = opt.label_column;
                ds = load_csv(opt.dataset, schema);
                dataset_echo = {{"kind", "csv"},
                                {"path", opt.dataset.string()},
                                {"label_column", opt.label_column}};
            } else {
                SyntheticSpec spec;
                spec.n_samples = opt.n;
                spec.n_features = opt.d;
                spec.n_clusters = opt.k;
                spec.noise_std = opt.noise;
                spec.center_spread = opt.center_spread;
                spec.base_std = opt.base_std;
                spec.seed = cell.seed;
                ds = generate_synthetic(spec);
                dataset_echo = detail::synthetic_echo(spec);
            }
            row.dataset = ds.name;
            row.noise = opt.dataset.empty() ? opt.noise : 0.0;
            const auto standardized = apply_standardizer(ds.matrix, fit_standardizer(ds.matrix));
            auto [model, echo] =
                detail::run_lsc(ds.matrix, opt, cell.alpha, opt.smoothing, cell.seed);
            row.fit_seconds = model.timings.total_seconds;
            row.iterations = model.iterations_run;
            row.converged = model.converged;
            row.config = {{"dataset", dataset_echo}, {"fit", echo}};
            row.metrics = detail::score(ds.truth, model.labels, standardized);
            detail::write_cell(opt.out_dir, row, model.labels);
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
        }
    });

    std::string csv = "alpha,metric,mean,std\n";
    nlohmann::json summary = nlohmann::json::array();
    for (double alpha : alphas) {
        nlohmann::json per_alpha{{"alpha", alpha}};
        for (const auto& metric : detail::metric_names()) {
            std::vector<double> values;
            for (const auto& row : result.rows)
                if (!row.failed && row.alpha == alpha)
                    values.push_back(detail::metric_value(row.metrics, metric));
            const auto ms = detail::mean_std(values);
            csv += detail::fmt(alpha) + "," + metric + "," + detail::fmt(ms.mean) + "," +
                   detail::fmt(ms.stdev) + "\n";
            per_alpha[metric] = {{"mean", ms.mean}, {"std", ms.stdev}};
        }
        summary.push_back(per_alpha);
    }
    detail::write_runs_csv(opt.out_dir, result.rows);
    atomic_write_file(opt.out_dir / "aggregate.csv", csv);
    result.summary = {{"per_alpha", summary}};
    atomic_write_file(opt.out_dir / "summary.json", result.summary.dump(2) + "\n");
    for (const auto& row : result.rows) result.any_failed |= row.failed;
    return result;
}

/// Iris and Wine: LSC over an alpha x smoothing grid plus the k-means
/// baseline, all on standardized data.
inline SuiteResult run_realworld(const SuiteOptions& opt) {
    SuiteResult result;
    result.suite = "realworld";
    fs::create_directories(opt.out_dir);

    const std::vector<double> alphas = opt.alphas.empty()
                                           ? std::vector<double>{0.25, 0.5}
                                           : opt.alphas;
    struct Cell {
        std::string dataset;
        std::string algorithm;
        double alpha;
        bool smoothing;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (const char* dataset : {"iris", "wine"}) {
        for (std::uint64_t seed = 0; seed < opt.seeds; ++seed) {
            for (double alpha : alphas)
                for (bool smoothing : {true, false})
                    cells.push_back({dataset, "lsc", alpha, smoothing, seed});
            cells.push_back({dataset, "kmeans", 0.0, false, seed});
        }
    }
    result.rows.resize(cells.size());

    detail::run_cells(cells.size(), opt.workers, [&](std::size_t idx) {
        const auto& cell = cells[idx];
        RunRow& row = result.rows[idx];
        row.suite = result.suite;
        row.dataset = cell.dataset;
        row.algorithm = cell.algorithm;
        row.alpha = cell.alpha;
        row.smoothing = cell.smoothing;
        row.seed = cell.seed;
        std::ostringstream name;
        name << cell.dataset << "-" << cell.algorithm;
        if (cell.algorithm == "lsc")
            name << "-alpha" << cell.alpha << "-smooth" << (cell.smoothing ? "on" : "off");
        name << "-seed" << cell.seed;
        row.cell_name = name.str();
        try {
            CsvSchema schema;
            schema.label_column = std::string("label");
            const auto ds = load_csv(opt.data_dir / (cell.dataset + std::string(".csv")), schema);
            const std::size_t k = 3;
            const auto standardized = apply_standardizer(ds.matrix, fit_standardizer(ds.matrix));
            const nlohmann::json dataset_echo{{"kind", "csv"},
                                              {"path", (opt.data_dir / (cell.dataset + std::string(".csv"))).string()},
                                              {"label_column", "label"}};
            LabelVector labels;
            if (cell.algorithm == "lsc") {
                SuiteOptions local = opt;
                local.k = k;
                auto [model, echo] =
                    detail::run_lsc(ds.matrix, local, cell.alpha, cell.smoothing, cell.seed);
                labels = model.labels;
                row.fit_seconds = model.timings.total_seconds;
                row.iterations = model.iterations_run;
                row.converged = model.converged;
                row.config = {{"dataset", dataset_echo}, {"fit", echo}};
            } else {
                const auto model = kmeans_fit(standardized, k, cell.seed);
                labels = model.labels;
                row.fit_seconds = model.timings.total_seconds;
                row.iterations = model.iterations_run;
                row.converged = model.converged;
                row.config = {{"dataset", dataset_echo},
                              {"fit",
                               {{"algorithm", "kmeans"},
                                {"k", k},
                                {"standardize", true},
                                {"seed", cell.seed}}}};
            }
            row.metrics = detail::score(ds.truth, labels, standardized);
            detail::write_cell(opt.out_dir, row, labels);
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
        }
    });

    // Table-style aggregate over the best LSC configuration per dataset
    // (by mean ARI) next to the k-means baseline.
    std::string csv = "dataset,metric,lsc_mean,lsc_std,km_mean,km_std\n";
    nlohmann::json summary;
    for (const char* dataset : {"iris", "wine"}) {
        // Pick the LSC config with the best mean ARI.
        double best_mean = -2.0;
        std::pair<double, bool> best_cfg{0.0, false};
        for (double alpha : alphas) {
            for (bool smoothing : {true, false}) {
                std::vector<double> aris;
                for (const auto& row : result.rows)
                    if (!row.failed && row.dataset == dataset && row.algorithm == "lsc" &&
                        row.alpha == alpha && row.smoothing == smoothing)
                        aris.push_back(row.metrics.ari);
                const auto ms = detail::mean_std(aris);
                if (ms.count != 0 && ms.mean > best_mean) {
                    best_mean = ms.mean;
                    best_cfg = {alpha, smoothing};
                }
            }
        }
        double best_ari = -2.0;
        for (const auto& row : result.rows)
            if (!row.failed && row.dataset == dataset && row.algorithm == "lsc")
                best_ari = std::max(best_ari, row.metrics.ari);
        for (const auto& metric : detail::metric_names()) {
            std::vector<double> lsc_values, km_values;
            for (const auto& row : result.rows) {
                if (row.failed || row.dataset != dataset) continue;
                if (row.algorithm == "lsc" && row.alpha == best_cfg.first &&
                    row.smoothing == best_cfg.second)
                    lsc_values.push_back(detail::metric_value(row.metrics, metric));
                if (row.algorithm == "kmeans")
                    km_values.push_back(detail::metric_value(row.metrics, metric));
            }
            const auto lsc_ms = detail::mean_std(lsc_values);
            const auto km_ms = detail::mean_std(km_values);
            csv += std::string(dataset) + "," + metric + "," + detail::fmt(lsc_ms.mean) + "," +
                   detail::fmt(lsc_ms.stdev) + "," + detail::fmt(km_ms.mean) + "," +
                   detail::fmt(km_ms.stdev) + "\n";
        }
        summary[dataset] = {{"lsc_best_ari", best_ari},
                            {"lsc_best_alpha", best_cfg.first},
                            {"lsc_best_smoothing", best_cfg.second},
                            {"lsc_best_mean_ari", best_mean}};
    }
    detail::write_runs_csv(opt.out_dir, result.rows);
    atomic_write_file(opt.out_dir / "aggregate.csv", csv);
    result.summary = summary;
    atomic_write_file(opt.out_dir / "summary.json", result.summary.dump(2) + "\n");
    for (const auto& row : result.rows) result.any_failed |= row.failed;
    return result;
}

/// LSC with and without smoothing on one noise-heavy synthetic setting.
inline SuiteResult run_smoothing_ablation(const SuiteOptions& opt) {
    SuiteResult result;
    result.suite = "smoothing-ablation";
    fs::create_directories(opt.out_dir);

    struct Cell {
        bool smoothing;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (bool smoothing : {true, false})
        for (std::uint64_t seed = 0; seed < opt.seeds; ++seed) cells.push_back({smoothing, seed});
    result.rows.resize(cells.size());

    detail::run_cells(cells.size(), opt.workers, [&](std::size_t idx) {
        const auto& cell = cells[idx];
        RunRow& row = result.rows[idx];
        row.suite = result.suite;
        row.algorithm = "lsc";
        row.noise = opt.noise;
        row.alpha = opt.alpha;
        row.smoothing = cell.smoothing;
        row.seed = cell.seed;
        std::ostringstream name;
        name << "smooth" << (cell.smoothing ? "on" : "off") << "-seed" << cell.seed;
        row.cell_name = name.str();
        try {
            SyntheticSpec spec;
            spec.n_samples = opt.n;
            spec.n_features = opt.d;
            spec.n_clusters = opt.k;
            spec.noise_std = opt.noise;
            spec.center_spread = opt.center_spread;
            spec.base_std = opt.base_std;
            spec.seed = cell.seed;
            const auto ds = generate_synthetic(spec);
            row.dataset = ds.name;
            const auto standardized = apply_standardizer(ds.matrix, fit_standardizer(ds.matrix));
            auto [model, echo] =
                detail::run_lsc(ds.matrix, opt, opt.alpha, cell.smoothing, cell.seed);
            row.fit_seconds = model.timings.total_seconds;
            row.iterations = model.iterations_run;
            row.converged = model.converged;
            row.config = {{"dataset", detail::synthetic_echo(spec)}, {"fit", echo}};
            row.metrics = detail::score(ds.truth, model.labels, standardized);
            detail::write_cell(opt.out_dir, row, model.labels);
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
        }
    });

    detail::MeanStd with_ms, without_ms;
    {
        std::vector<double> with_values, without_values;
        for (const auto& row : result.rows) {
            if (row.failed) continue;
            (row.smoothing ? with_values : without_values).push_back(row.metrics.ari);
        }
        with_ms = detail::mean_std(with_values);
        without_ms = detail::mean_std(without_values);
    }
    std::string csv = "smoothing,ari_mean,ari_std\n";
    csv += "on," + detail::fmt(with_ms.mean) + "," + detail::fmt(with_ms.stdev) + "\n";
    csv += "off," + detail::fmt(without_ms.mean) + "," + detail::fmt(without_ms.stdev) + "\n";
    detail::write_runs_csv(opt.out_dir, result.rows);
    atomic_write_file(opt.out_dir / "aggregate.csv", csv);
    result.summary = {{"noise", opt.noise},
                      {"ari_with_smoothing", with_ms.mean},
                      {"ari_without_smoothing", without_ms.mean}};
    atomic_write_file(opt.out_dir / "summary.json", result.summary.dump(2) + "\n");
    for (const auto& row : result.rows) result.any_failed |= row.failed;
    return result;
}

/// Wall-clock of lsc_fit (FastDTW) against the sample count, with a fitted
/// line, an R^2 and an SVG scaling plot.
inline SuiteResult run_timing(const SuiteOptions& opt) {
    SuiteResult result;
    result.suite = "timing";
    fs::create_directories(opt.out_dir);

    struct Cell {
        std::size_t n;
        std::size_t rep;
    };
    std::vector<Cell> cells;
    for (std::size_t n : opt.timing_sizes)
        for (std::size_t rep = 0; rep < opt.timing_reps; ++rep) cells.push_back({n, rep});
    result.rows.resize(cells.size());

    // Timing cells run sequentially no matter what the pool setting says;
    // concurrent fits would contend for cores and skew the measurements.
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        const auto& cell = cells[idx];
        RunRow& row = result.rows[idx];
        row.suite = result.suite;
        row.algorithm = "lsc";
        row.seed = cell.rep;
        std::ostringstream name;
        name << "n" << cell.n << "-rep" << cell.rep;
        row.cell_name = name.str();
        try {
            SyntheticSpec spec;
            spec.n_samples = cell.n;
            spec.n_features = opt.d;
            spec.n_clusters = opt.k;
            spec.noise_std = opt.noise;
            spec.center_spread = opt.center_spread;
            spec.base_std = opt.base_std;
            spec.seed = cell.rep;
            const auto ds = generate_synthetic(spec);
            row.dataset = ds.name;
            SuiteOptions forced = opt;
            forced.dtw_mode = "fast";
            auto [model, echo] = detail::run_lsc(ds.matrix, forced, opt.alpha, opt.smoothing,
                                                 cell.rep);
            row.fit_seconds = model.timings.total_seconds;
            row.iterations = model.iterations_run;
            row.converged = model.converged;
            row.noise = opt.noise;
            row.alpha = opt.alpha;
            row.smoothing = opt.smoothing;
            row.config = {{"dataset", detail::synthetic_echo(spec)}, {"fit", echo}};
            if (!ds.truth.empty()) row.metrics = evaluate_external(ds.truth, model.labels);
            detail::write_cell(opt.out_dir, row, model.labels);
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
        }
    }

    // Median seconds per size, then a straight-line fit.
    std::vector<std::pair<double, double>> points;
    std::string csv = "n,median_seconds\n";
    for (std::size_t n : opt.timing_sizes) {
        std::vector<double> secs;
        for (const auto& row : result.rows)
            if (!row.failed && row.cell_name.rfind("n" + std::to_string(n) + "-", 0) == 0)
                secs.push_back(row.fit_seconds);
        if (secs.empty()) continue;
        std::sort(secs.begin(), secs.end());
        const double median = secs[secs.size() / 2];
        points.emplace_back(static_cast<double>(n), median);
        csv += std::to_string(n) + "," + detail::fmt(median) + "\n";
    }

    double slope = 0.0, intercept = 0.0, r2 = 0.0;
    if (points.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double count = static_cast<double>(points.size());
        for (const auto& [x, y] : points) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        intercept = (sy - slope * sx) / count;
        double ss_res = 0, ss_tot = 0;
        for (const auto& [x, y] : points) {
            ss_res += (y - slope * x - intercept) * (y - slope * x - intercept);
            ss_tot += (y - sy / count) * (y - sy / count);
        }
        r2 = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    }

    SvgOptions svg_opt;
    svg_opt.title = "lsc_fit wall-clock vs sample count (FastDTW)";
    svg_opt.x_label = "samples";
    svg_opt.y_label = "seconds";
    atomic_write_file(opt.out_dir / "scaling.svg",
                      scaling_plot_svg(points, slope, intercept, svg_opt));
    detail::write_runs_csv(opt.out_dir, result.rows);
    atomic_write_file(opt.out_dir / "aggregate.csv", csv);
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& [x, y] : points) pts.push_back({{"n", x}, {"median_seconds", y}});
    result.summary = {{"slope", slope}, {"intercept", intercept}, {"r_squared", r2},
                      {"points", pts}};
    atomic_write_file(opt.out_dir / "summary.json", result.summary.dump(2) + "\n");
    for (const auto& row : result.rows) result.any_failed |= row.failed;
    return result;
}

}  // namespace lsc::bench

#endif  // LSC_TOOLS_SUITES_HPP
