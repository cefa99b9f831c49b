// Command-line front end: generate synthetic datasets, run LSC or the
// k-means baseline, evaluate label files, reproduce the benchmark tables at
// desk scale, and plot line-space views as SVG.
//
// Exit codes: 0 success, 64 usage error, 65 data error, 70 runtime failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lsc/lsc.hpp"
#include "suites.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitRuntime = 70;

std::vector<double> parse_double_list(const std::string& text) {
    // Either "a,b,c" or "lo:hi:step".
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double lo, hi, step;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0)
            throw CLI::ValidationError("expected lo:hi:step in '" + text + "'");
        for (double v = lo; v <= hi + 1e-12; v += step) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw CLI::ValidationError("empty list '" + text + "'");
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (double v : parse_double_list(text)) out.push_back(static_cast<std::size_t>(v));
    return out;
}

lsc::CsvSchema schema_for(const std::string& label_column) {
    lsc::CsvSchema schema;
    if (label_column == "none") return schema;
    try {
        std::size_t pos = 0;
        const unsigned long idx = std::stoul(label_column, &pos);
        if (pos == label_column.size()) {
            schema.label_column = static_cast<std::size_t>(idx);
            return schema;
        }
    } catch (const std::exception&) {
    }
    schema.label_column = label_column;
    return schema;
}

struct GenerateArgs {
    lsc::SyntheticSpec spec;
    std::string out;
};

int cmd_generate(const GenerateArgs& args) {
    const auto ds = lsc::generate_synthetic(args.spec);
    const fs::path out(args.out);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    lsc::write_csv(ds, out);
    fs::path meta = out;
    meta.replace_extension("");
    meta += ".meta.json";
    lsc::atomic_write_file(meta, lsc::dataset_metadata(args.spec).dump(2) + "\n");
    std::cout << "wrote " << out.string() << " (" << ds.matrix.n_samples() << " rows, "
              << ds.matrix.n_features() << " features) and " << meta.string() << "\n";
    return 0;
}

struct ClusterArgs {
    std::string dataset;
    std::string algorithm = "lsc";
    std::size_t k = 0;
    double alpha = 0.5;
    std::string dtw_mode = "auto";
    std::size_t radius = 1;
    std::size_t min_size = 4;
    bool dtw_normalize = false;
    std::string scale_mode = "raw";
    std::string smooth = "on";
    std::size_t window = 5;
    std::size_t order = 2;
    std::uint64_t seed = 0;
    std::size_t max_iter = 100;
    double tol = 1e-6;
    std::string init = "random";
    std::string standardize = "on";
    std::string label_column = "label";
    std::string out_dir = ".";
    std::string silhouette_distance = "euclidean";
};

int cmd_cluster(const ClusterArgs& args) {
    const auto ds = lsc::load_csv(args.dataset, schema_for(args.label_column));
    const fs::path out_dir(args.out_dir);
    fs::create_directories(out_dir);

    const bool standardize = args.standardize == "on";
    const auto standardized =
        lsc::apply_standardizer(ds.matrix, lsc::fit_standardizer(ds.matrix));
    lsc::CombinedMetricSpec silhouette_metric;  // resolved below for combined mode

    lsc::LabelVector labels;
    lsc::PhaseTimings timings;
    std::size_t iterations = 0;
    bool converged = false;
    double final_shift = 0.0;
    std::vector<lsc::LineSeries> centers;
    json fit_echo;

    if (args.algorithm == "lsc") {
        lsc::LscConfig cfg;
        cfg.k = args.k;
        cfg.metric.alpha = args.alpha;
        cfg.metric.dtw.fast = {args.radius, args.min_size};
        cfg.metric.dtw.normalize_by_path_length = args.dtw_normalize;
        if (args.dtw_mode == "exact")
            cfg.metric.dtw.mode = lsc::DtwMode::exact;
        else if (args.dtw_mode == "fast")
            cfg.metric.dtw.mode = lsc::DtwMode::fast;
        else
            cfg.metric.dtw.mode = ds.matrix.n_samples() * args.k <= 1000 ? lsc::DtwMode::exact
                                                                         : lsc::DtwMode::fast;
        cfg.metric.scale_mode =
            args.scale_mode == "normalized" ? lsc::ScaleMode::normalized : lsc::ScaleMode::raw;
        cfg.seed = args.seed;
        cfg.max_iter = args.max_iter;
        cfg.tol = args.tol;
        cfg.init = args.init == "plusplus" ? lsc::InitMethod::plus_plus
                                           : lsc::InitMethod::random_lines;
        cfg.standardize = standardize;
        cfg.threads = lsc::resolve_threads(0);

        // A window wider than the line cannot be fitted; shrink it to the
        // largest odd width that fits and say so.
        std::size_t window = args.window;
        cfg.smoothing = args.smooth == "on";
        if (cfg.smoothing) {
            const std::size_t clamped =
                lsc::bench::detail::clamp_window(window, ds.matrix.n_features());
            if (clamped == 0) {
                std::cerr << "note: " << ds.matrix.n_features()
                          << " features are too few for any smoothing window; smoothing off\n";
                cfg.smoothing = false;
            } else if (clamped != window) {
                std::cerr << "note: smoothing window shrunk from " << window << " to " << clamped
                          << " to fit " << ds.matrix.n_features() << " features\n";
                window = clamped;
            }
            if (cfg.smoothing) cfg.savgol = {window, std::min(args.order, window - 1)};
        }

        const auto model = lsc::lsc_fit(ds.matrix, cfg);
        labels = model.labels;
        timings = model.timings;
        iterations = model.iterations_run;
        converged = model.converged;
        centers = model.centers;
        if (!model.trace.empty()) final_shift = model.trace.back().max_center_shift;
        fit_echo = lsc::bench::detail::lsc_config_echo(cfg, cfg.smoothing ? window : 0);
        silhouette_metric = cfg.metric;
    } else if (args.algorithm == "kmeans") {
        const auto& input = standardize ? standardized : ds.matrix;
        const auto model = lsc::kmeans_fit(input, args.k, args.seed, args.max_iter, args.tol,
                                           lsc::resolve_threads(0));
        labels = model.labels;
        timings = model.timings;
        iterations = model.iterations_run;
        converged = model.converged;
        centers = model.centers;
        if (!model.trace.empty()) final_shift = model.trace.back().max_center_shift;
        fit_echo = {{"algorithm", "kmeans"}, {"k", args.k},
                    {"standardize", standardize}, {"max_iter", args.max_iter},
                    {"tol", args.tol},           {"seed", args.seed}};
    } else {
        throw CLI::ValidationError("unknown algorithm '" + args.algorithm + "'");
    }

    lsc::MetricReport metrics;
    if (!ds.truth.empty()) metrics = lsc::evaluate_external(ds.truth, labels);
    if (args.silhouette_distance == "combined") {
        silhouette_metric.alpha = args.alpha;
        const auto dists = lsc::pairwise_combined(lsc::to_line_space(standardized),
                                                  silhouette_metric, lsc::resolve_threads(0));
        metrics.silhouette = lsc::silhouette(dists, labels);
        metrics.silhouette_distance = "combined";
    } else {
        metrics.silhouette = lsc::silhouette(standardized, labels, lsc::resolve_threads(0));
    }

    lsc::write_labels_csv(out_dir / "labels.csv", labels);
    lsc::atomic_write_file(out_dir / "centers.csv", lsc::centers_to_csv(centers));

    lsc::RunReport report;
    report.config = {{"dataset",
                      {{"kind", "csv"}, {"path", args.dataset}, {"label_column", args.label_column}}},
                     {"fit", fit_echo}};
    report.metrics = {{args.algorithm, lsc::to_json(metrics)}};
    report.timings = timings;
    report.iterations = iterations;
    report.converged = converged;
    report.final_center_shift = final_shift;
    lsc::atomic_write_file(out_dir / "report.json", report.to_json().dump(2) + "\n");

    std::cout << "algorithm " << args.algorithm << ", " << labels.size() << " samples, "
              << iterations << " iterations, " << (converged ? "converged" : "max_iter reached")
              << "\n";
    if (!ds.truth.empty())
        std::cout << "ari " << metrics.ari << "\nami " << metrics.ami << "\nv_measure "
                  << metrics.v_measure << "\n";
    std::cout << "silhouette " << metrics.silhouette << "\n";
    std::cout << "wrote " << (out_dir / "labels.csv").string() << ", "
              << (out_dir / "centers.csv").string() << ", "
              << (out_dir / "report.json").string() << "\n";
    return 0;
}

struct EvaluateArgs {
    std::string labels;
    std::string truth;
    std::string dataset;
    std::string label_column = "label";
    std::string out;
    std::string silhouette_distance = "euclidean";
    double alpha = 0.5;
};

int cmd_evaluate(const EvaluateArgs& args) {
    const auto pred = lsc::read_labels_csv(args.labels);
    std::optional<lsc::LabelVector> truth;
    std::optional<lsc::DataMatrix> data;
    if (!args.truth.empty()) truth = lsc::read_labels_csv(args.truth);
    if (!args.dataset.empty()) {
        const auto ds = lsc::load_csv(args.dataset, schema_for(args.label_column));
        data = lsc::apply_standardizer(ds.matrix, lsc::fit_standardizer(ds.matrix));
        if (!truth && !ds.truth.empty()) truth = ds.truth;
    }
    if (truth && truth->size() != pred.size())
        throw std::invalid_argument("evaluate: label vectors of unequal length");

    lsc::MetricReport metrics;
    json out;
    out["schema_version"] = lsc::kReportSchemaVersion;
    if (truth) {
        metrics = lsc::evaluate_external(*truth, pred);
        std::cout << "ari " << metrics.ari << "\n"
                  << "ami " << metrics.ami << "\n"
                  << "homogeneity " << metrics.homogeneity << "\n"
                  << "completeness " << metrics.completeness << "\n"
                  << "v_measure " << metrics.v_measure << "\n";
    } else {
        std::cout << "no ground truth: external metrics omitted\n";
    }
    if (data) {
        if (args.silhouette_distance == "combined") {
            lsc::CombinedMetricSpec spec;
            spec.alpha = args.alpha;
            const auto dists = lsc::pairwise_combined(lsc::to_line_space(*data), spec,
                                                      lsc::resolve_threads(0));
            metrics.silhouette = lsc::silhouette(dists, pred);
            metrics.silhouette_distance = "combined";
        } else {
            metrics.silhouette = lsc::silhouette(*data, pred, lsc::resolve_threads(0));
        }
        std::cout << "silhouette " << metrics.silhouette << "\n";
    }
    out["metrics"] = lsc::to_json(metrics);
    out["external_metrics_present"] = truth.has_value();
    if (!args.out.empty()) lsc::atomic_write_file(args.out, out.dump(2) + "\n");
    return 0;
}

struct PlotArgs {
    std::string dataset;
    std::string labels;
    std::string out = "lines.svg";
    std::string label_column = "label";
    std::string title;
};

int cmd_plot(const PlotArgs& args) {
    const auto ds = lsc::load_csv(args.dataset, schema_for(args.label_column));
    const auto lines = lsc::to_line_space(ds.matrix);
    std::optional<lsc::LabelVector> labels;
    if (!args.labels.empty())
        labels = lsc::read_labels_csv(args.labels);
    else if (!ds.truth.empty())
        labels = ds.truth;
    if (labels && labels->size() != lines.size())
        throw std::invalid_argument("plot: labels do not match the dataset row count");
    lsc::SvgOptions opt;
    opt.title = args.title.empty() ? ds.name : args.title;
    lsc::atomic_write_file(args.out, lsc::line_space_svg(lines, labels ? &*labels : nullptr, opt));
    std::cout << "wrote " << args.out << " (" << lines.size() << " lines)\n";
    return 0;
}

void add_suite_common(CLI::App* sub, lsc::bench::SuiteOptions& opt, std::string& out_dir) {
    sub->add_option("--out-dir,-o", out_dir, "Output directory")->required();
    sub->add_option("--seeds", opt.seeds, "Seeds per configuration (0..seeds-1)");
    sub->add_option("--workers", opt.workers, "Worker pool size (0 = hardware, LSC_THREADS caps)");
    sub->add_option("--n", opt.n, "Samples per synthetic dataset");
    sub->add_option("--d", opt.d, "Features per synthetic dataset");
    sub->add_option("--k", opt.k, "Cluster count");
    sub->add_option("--alpha", opt.alpha, "LSC blend weight");
    sub->add_option("--spread", opt.center_spread, "Cluster-mean box half-width");
    sub->add_option("--base-std", opt.base_std, "Within-cluster std before noise");
    sub->add_option("--dtw", opt.dtw_mode, "exact, fast or auto")
        ->check(CLI::IsMember({"exact", "fast", "auto"}));
    sub->add_option("--radius", opt.fast.radius, "FastDTW band radius");
    sub->add_option("--init", opt.init, "LSC center seeding")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, lsc::InitMethod>{
                {"random", lsc::InitMethod::random_lines},
                {"plusplus", lsc::InitMethod::plus_plus}},
            CLI::ignore_case));
    sub->add_option("--smooth", opt.smoothing, "Smoothing on/off")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, bool>{{"on", true}, {"off", false}}, CLI::ignore_case));
    sub->add_option("--window", opt.savgol.window_length, "Savitzky-Golay window");
    sub->add_option("--order", opt.savgol.poly_order, "Savitzky-Golay order");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Line Space Clustering toolkit"};
    app.set_config("--config", "",
                   "Config file: one key=value per line, subcommand.dotted prefixes "
                   "(e.g. cluster.alpha=0.4); flags override the file");
    app.require_subcommand(1);

    GenerateArgs gen_args;
    auto* gen = app.add_subcommand("generate", "Write a synthetic Gaussian-blob dataset");
    gen->add_option("--n", gen_args.spec.n_samples, "Samples");
    gen->add_option("--d", gen_args.spec.n_features, "Features");
    gen->add_option("--k", gen_args.spec.n_clusters, "Clusters");
    gen->add_option("--noise", gen_args.spec.noise_std, "Noise std added on top of base std");
    gen->add_option("--base-std", gen_args.spec.base_std, "Within-cluster std");
    gen->add_option("--center-spread", gen_args.spec.center_spread,
                    "Cluster-mean box half-width");
    gen->add_option("--seed", gen_args.spec.seed, "Generator seed");
    gen->add_option("--out,-o", gen_args.out, "Output CSV path")->required();

    ClusterArgs cl_args;
    auto* cl = app.add_subcommand("cluster", "Cluster a CSV dataset");
    cl->add_option("dataset", cl_args.dataset, "Dataset CSV")->required();
    cl->add_option("--alg", cl_args.algorithm, "lsc or kmeans")
        ->check(CLI::IsMember({"lsc", "kmeans"}));
    cl->add_option("--k", cl_args.k, "Cluster count")->required();
    cl->add_option("--alpha", cl_args.alpha, "DTW weight in the combined distance");
    cl->add_option("--dtw", cl_args.dtw_mode, "exact, fast or auto")
        ->check(CLI::IsMember({"exact", "fast", "auto"}));
    cl->add_option("--radius", cl_args.radius, "FastDTW band radius");
    cl->add_option("--min-size", cl_args.min_size, "FastDTW exact-DP cutoff");
    cl->add_flag("--dtw-normalize", cl_args.dtw_normalize, "Divide DTW by warping-path length");
    cl->add_option("--scale-mode", cl_args.scale_mode, "raw or normalized term scaling")
        ->check(CLI::IsMember({"raw", "normalized"}));
    cl->add_option("--smooth", cl_args.smooth, "Savitzky-Golay smoothing on/off")
        ->check(CLI::IsMember({"on", "off"}));
    cl->add_option("--window", cl_args.window, "Smoothing window length");
    cl->add_option("--order", cl_args.order, "Smoothing polynomial order");
    cl->add_option("--seed", cl_args.seed, "Seed for center initialization");
    cl->add_option("--max-iter", cl_args.max_iter, "Iteration cap");
    cl->add_option("--tol", cl_args.tol, "Center-shift convergence threshold");
    cl->add_option("--init", cl_args.init, "random or plusplus seeding")
        ->check(CLI::IsMember({"random", "plusplus"}));
    cl->add_option("--standardize", cl_args.standardize, "Standardize features on/off")
        ->check(CLI::IsMember({"on", "off"}));
    cl->add_option("--label-column", cl_args.label_column,
                   "Label column name or index, or 'none'");
    cl->add_option("--out-dir", cl_args.out_dir, "Directory for labels/centers/report");
    cl->add_option("--silhouette-distance", cl_args.silhouette_distance,
                   "Distance behind the silhouette score")
        ->check(CLI::IsMember({"euclidean", "combined"}));

    EvaluateArgs ev_args;
    auto* ev = app.add_subcommand("evaluate", "Score predicted labels");
    ev->add_option("--labels", ev_args.labels, "Predicted labels CSV")->required();
    ev->add_option("--truth", ev_args.truth, "Ground-truth labels CSV");
    ev->add_option("--dataset", ev_args.dataset,
                   "Dataset CSV (supplies truth labels and silhouette data)");
    ev->add_option("--label-column", ev_args.label_column,
                   "Label column in --dataset, or 'none'");
    ev->add_option("--out", ev_args.out, "Write the metric report JSON here");
    ev->add_option("--silhouette-distance", ev_args.silhouette_distance,
                   "Distance behind the silhouette score")
        ->check(CLI::IsMember({"euclidean", "combined"}));
    ev->add_option("--alpha", ev_args.alpha, "Blend weight for the combined silhouette");

    PlotArgs pl_args;
    auto* pl = app.add_subcommand("plot", "Render the line-space view as SVG");
    pl->add_option("dataset", pl_args.dataset, "Dataset CSV")->required();
    pl->add_option("--labels", pl_args.labels, "Cluster labels CSV for coloring");
    pl->add_option("--label-column", pl_args.label_column,
                   "Label column in the dataset, or 'none'");
    pl->add_option("--out,-o", pl_args.out, "Output SVG path");
    pl->add_option("--title", pl_args.title, "Plot title");

    auto* bench = app.add_subcommand("benchmark", "Desk-scale experiment suites");
    bench->require_subcommand(1);

    lsc::bench::SuiteOptions noise_opt;
    std::string noise_out, noise_list;
    auto* noise_sub = bench->add_subcommand("noise-sweep", "LSC vs k-means across noise levels");
    add_suite_common(noise_sub, noise_opt, noise_out);
    noise_sub->add_option("--noise", noise_list, "Comma list of noise stds (default 1,2,3,5,10)");

    lsc::bench::SuiteOptions alpha_opt;
    std::string alpha_out, alpha_list;
    auto* alpha_sub = bench->add_subcommand("alpha-sweep", "LSC across the alpha grid");
    add_suite_common(alpha_sub, alpha_opt, alpha_out);
    alpha_sub->add_option("--alphas", alpha_list, "Comma list or lo:hi:step (default 0.1:0.9:0.1)");
    alpha_sub->add_option("--noise", alpha_opt.noise, "Synthetic noise std")->default_val(2.0);
    alpha_sub->add_option("--dataset", alpha_opt.dataset, "Optional CSV dataset instead");
    alpha_sub->add_option("--label-column", alpha_opt.label_column, "Label column for --dataset");

    lsc::bench::SuiteOptions real_opt;
    std::string real_out, real_alphas;
    auto* real_sub = bench->add_subcommand("realworld", "Iris and Wine, LSC grid vs k-means");
    add_suite_common(real_sub, real_opt, real_out);
    real_sub->add_option("--data-dir", real_opt.data_dir, "Directory holding iris.csv/wine.csv");
    real_sub->add_option("--alphas", real_alphas, "LSC alpha grid (default 0.25,0.5)");

    lsc::bench::SuiteOptions abl_opt;
    std::string abl_out;
    auto* abl_sub = bench->add_subcommand("smoothing-ablation",
                                          "LSC with vs without smoothing at one noise level");
    add_suite_common(abl_sub, abl_opt, abl_out);
    abl_sub->add_option("--noise", abl_opt.noise, "Synthetic noise std")->default_val(10.0);

    lsc::bench::SuiteOptions tim_opt;
    std::string tim_out, tim_sizes;
    auto* tim_sub = bench->add_subcommand("timing", "lsc_fit wall-clock against sample count");
    add_suite_common(tim_sub, tim_opt, tim_out);
    tim_sub->add_option("--sizes", tim_sizes, "Comma list of sample counts (default 250,500,1000)");
    tim_sub->add_option("--reps", tim_opt.timing_reps, "Repetitions per size");
    tim_sub->add_option("--noise", tim_opt.noise, "Synthetic noise std")->default_val(5.0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_args);
        if (cl->parsed()) return cmd_cluster(cl_args);
        if (ev->parsed()) return cmd_evaluate(ev_args);
        if (pl->parsed()) return cmd_plot(pl_args);
        if (bench->parsed()) {
            lsc::bench::SuiteResult result;
            if (noise_sub->parsed()) {
                noise_opt.out_dir = noise_out;
                if (!noise_list.empty()) noise_opt.noises = parse_double_list(noise_list);
                result = lsc::bench::run_noise_sweep(noise_opt);
            } else if (alpha_sub->parsed()) {
                alpha_opt.out_dir = alpha_out;
                if (!alpha_list.empty()) alpha_opt.alphas = parse_double_list(alpha_list);
                result = lsc::bench::run_alpha_sweep(alpha_opt);
            } else if (real_sub->parsed()) {
                real_opt.out_dir = real_out;
                if (!real_alphas.empty()) real_opt.alphas = parse_double_list(real_alphas);
                result = lsc::bench::run_realworld(real_opt);
            } else if (abl_sub->parsed()) {
                abl_opt.out_dir = abl_out;
                result = lsc::bench::run_smoothing_ablation(abl_opt);
            } else if (tim_sub->parsed()) {
                tim_opt.out_dir = tim_out;
                if (!tim_sizes.empty()) tim_opt.timing_sizes = parse_size_list(tim_sizes);
                result = lsc::bench::run_timing(tim_opt);
            }
            std::size_t failed = 0;
            for (const auto& row : result.rows)
                if (row.failed) {
                    ++failed;
                    std::cerr << "cell " << row.cell_name << " failed: " << row.error << "\n";
                }
            std::cout << result.suite << ": " << result.rows.size() - failed << "/"
                      << result.rows.size() << " cells ok, outputs in "
                      << (noise_sub->parsed()   ? noise_out
                          : alpha_sub->parsed() ? alpha_out
                          : real_sub->parsed()  ? real_out
                          : abl_sub->parsed()   ? abl_out
                                                : tim_out)
                      << "\n";
            if (!result.summary.empty()) std::cout << result.summary.dump(2) << "\n";
            return result.any_failed ? kExitRuntime : 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lsc::CsvError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        // Missing or malformed input files are data errors.
        const std::string what = e.what();
        if (what.find("load_csv") != std::string::npos ||
            what.find("read_labels_csv") != std::string::npos) {
            std::cerr << "data error: " << what << "\n";
            return kExitData;
        }
        std::cerr << "error: " << what << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
