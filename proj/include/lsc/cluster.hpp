#ifndef LSC_CLUSTER_HPP
#define LSC_CLUSTER_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lsc/core.hpp"
#include "lsc/metric.hpp"
#include "lsc/parallel.hpp"
#include "lsc/preprocess.hpp"
#include "lsc/random.hpp"

namespace lsc {

/// Center seeding: uniform sampling of k distinct data lines (the default),
/// or a distance-squared weighted pick in the style of k-means++.
enum class InitMethod { random_lines, plus_plus };

struct LscConfig {
    std::size_t k = 2;
    CombinedMetricSpec metric{};
    std::size_t max_iter = 100;
    bool smoothing = true;
    SavGolSpec savgol{};
    std::uint64_t seed = 0;
    double tol = 1e-6;
    InitMethod init = InitMethod::random_lines;
    bool standardize = true;
    std::size_t threads = 1;

    void validate(std::size_t n_samples) const {
        if (k < 1 || k > n_samples)
            throw std::invalid_argument("LscConfig: k must lie in [1, n_samples]");
        if (max_iter < 1)
            throw std::invalid_argument("LscConfig: max_iter must be at least 1");
        if (tol < 0.0)
            throw std::invalid_argument("LscConfig: tol must be non-negative");
        metric.validate();
        if (smoothing) savgol.validate();
    }
};

namespace detail {

inline std::vector<double> column_medians(const std::vector<const double*>& rows, std::size_t d) {
    std::vector<double> center(d, 0.0);
    std::vector<double> column(rows.size());
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t r = 0; r < rows.size(); ++r) column[r] = rows[r][j];
        std::sort(column.begin(), column.end());
        const std::size_t mid = column.size() / 2;
        center[j] = column.size() % 2 == 1 ? column[mid] : 0.5 * (column[mid - 1] + column[mid]);
    }
    return center;
}

inline std::vector<double> column_means(const std::vector<const double*>& rows, std::size_t d) {
    std::vector<double> center(d, 0.0);
    for (const double* r : rows)
        for (std::size_t j = 0; j < d; ++j) center[j] += r[j];
    for (std::size_t j = 0; j < d; ++j) center[j] /= static_cast<double>(rows.size());
    return center;
}

/// Greedy k-means++ seeding under `dist`: each step draws 2 + ln(k)
/// candidates with probability proportional to the squared distance to the
/// nearest chosen center and keeps the one that lowers the total potential
/// the most.
template <class DistFn>
std::vector<std::size_t> plus_plus_indices(std::size_t n, std::size_t k, Rng& rng, DistFn&& dist) {
    std::vector<std::size_t> chosen;
    chosen.reserve(k);
    chosen.push_back(rng.below(n));
    if (k == 1) return chosen;

    const std::size_t trials = 2 + static_cast<std::size_t>(std::log(static_cast<double>(k)));
    std::vector<double> best(n, 0.0);
    double potential = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = dist(i, chosen[0]);
        best[i] = d * d;
        potential += best[i];
    }

    std::vector<double> cand_d2(n), winner_d2(n);
    while (chosen.size() < k) {
        std::size_t pick;
        if (potential > 0.0) {
            double winner_pot = std::numeric_limits<double>::infinity();
            std::size_t winner = 0;
            for (std::size_t t = 0; t < trials; ++t) {
                const double u = rng.uniform01() * potential;
                std::size_t candidate = n - 1;
                double acc = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    acc += best[i];
                    if (acc > u) {
                        candidate = i;
                        break;
                    }
                }
                double pot = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double d = dist(i, candidate);
                    cand_d2[i] = std::min(best[i], d * d);
                    pot += cand_d2[i];
                }
                if (pot < winner_pot) {
                    winner_pot = pot;
                    winner = candidate;
                    std::swap(cand_d2, winner_d2);
                }
            }
            pick = winner;
            potential = winner_pot;
            std::swap(best, winner_d2);
        } else {
            pick = rng.below(n);  // all points coincide with a chosen center
        }
        chosen.push_back(pick);
    }
    return chosen;
}

struct LloydOutcome {
    std::vector<std::vector<double>> centers;
    LabelVector labels;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<IterationStats> trace;
    double distance_seconds = 0.0;
};

/// The shared assignment/update loop. `dist` measures point-to-center
/// distance, `cost` is the recorded objective contribution, and
/// `update_center` turns a member group into the next center.
template <class DistFn, class CostFn, class UpdateFn>
LloydOutcome lloyd_loop(const std::vector<const double*>& rows,
                        std::vector<std::vector<double>> centers, std::size_t max_iter, double tol,
                        std::size_t threads, DistFn&& dist, CostFn&& cost,
                        UpdateFn&& update_center) {
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    const std::size_t n = rows.size();
    const std::size_t k = centers.size();

    LloydOutcome out;
    out.labels.assign(n, -1);
    LabelVector labels(n, -1);
    std::vector<double> point_dist(n, 0.0);

    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        // Assignment: nearest center, ties to the lowest index.
        const auto assign_started = clock::now();
        parallel_for(0, n, threads, [&](std::size_t i) {
            double best = std::numeric_limits<double>::infinity();
            int best_j = 0;
            for (std::size_t j = 0; j < k; ++j) {
                const double dd = dist(rows[i], centers[j]);
                if (dd < best) {
                    best = dd;
                    best_j = static_cast<int>(j);
                }
            }
            labels[i] = best_j;
            point_dist[i] = best;
        });
        out.distance_seconds += std::chrono::duration<double>(clock::now() - assign_started).count();

        // Empty clusters: reseed each from the member farthest from its own
        // assigned center, never emptying another cluster in the process.
        std::vector<std::size_t> sizes(k, 0);
        for (int l : labels) ++sizes[static_cast<std::size_t>(l)];
        for (std::size_t j = 0; j < k; ++j) {
            if (sizes[j] != 0) continue;
            double far_d = -1.0;
            std::size_t far_i = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t owner = static_cast<std::size_t>(labels[i]);
                if (sizes[owner] <= 1) continue;
                if (point_dist[i] > far_d) {
                    far_d = point_dist[i];
                    far_i = i;
                }
            }
            --sizes[static_cast<std::size_t>(labels[far_i])];
            labels[far_i] = static_cast<int>(j);
            ++sizes[j];
        }

        std::size_t changed = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (labels[i] != out.labels[i]) ++changed;

        std::vector<std::vector<const double*>> groups(k);
        for (std::size_t i = 0; i < n; ++i)
            groups[static_cast<std::size_t>(labels[i])].push_back(rows[i]);

        double max_shift = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<double> next = update_center(groups[j]);
            max_shift = std::max(max_shift, dist(next.data(), centers[j]));
            centers[j] = std::move(next);
        }

        double total_cost = 0.0;
        for (std::size_t i = 0; i < n; ++i) total_cost += cost(point_dist[i]);

        out.labels = labels;
        out.iterations = iter;
        out.trace.push_back({iter, max_shift, changed, total_cost,
                             std::chrono::duration<double>(clock::now() - started).count()});
        if (changed == 0 || max_shift < tol) {
            out.converged = true;
            break;
        }
    }
    out.centers = std::move(centers);
    return out;
}

inline std::vector<const double*> row_pointers(const std::vector<LineSeries>& lines) {
    std::vector<const double*> rows(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) rows[i] = lines[i].values().data();
    return rows;
}

}  // namespace detail

/// Coordinate-wise median center per group; even-sized groups take the
/// midpoint of the two middle values.
inline std::vector<LineSeries> update_centers(const std::vector<std::vector<LineSeries>>& groups) {
    std::vector<LineSeries> centers;
    centers.reserve(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty())
            throw std::invalid_argument("update_centers: empty group; reseed before updating");
        const std::size_t d = groups[g].front().size();
        std::vector<const double*> rows;
        rows.reserve(groups[g].size());
        for (const auto& line : groups[g]) {
            if (line.size() != d)
                throw std::invalid_argument("update_centers: lines of unequal length");
            rows.push_back(line.values().data());
        }
        centers.emplace_back(g, detail::column_medians(rows, d));
    }
    return centers;
}

/// Line Space Clustering: standardize, optionally smooth, seed k data lines,
/// then alternate combined-distance assignment with median center updates
/// until labels stabilize, the largest center shift drops below tol, or
/// max_iter is reached. Deterministic for a fixed (data, config, seed).
inline ClusterModel lsc_fit(const DataMatrix& m, const LscConfig& cfg) {
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    cfg.validate(m.n_samples());

    ClusterModel model;

    auto t0 = clock::now();
    const DataMatrix* data = &m;
    DataMatrix standardized(1, 1, {0.0});
    if (cfg.standardize) {
        standardized = apply_standardizer(m, fit_standardizer(m));
        data = &standardized;
    }
    model.timings.standardize_seconds = std::chrono::duration<double>(clock::now() - t0).count();

    t0 = clock::now();
    std::vector<LineSeries> lines = to_line_space(*data);
    if (cfg.smoothing) {
        const SavGolKernel kernel = savgol_kernel(cfg.savgol);
        lines = smooth_lines(lines, kernel, cfg.threads);
    }
    model.timings.smooth_seconds = std::chrono::duration<double>(clock::now() - t0).count();

    CombinedMetricSpec metric = cfg.metric;
    if (metric.scale_mode == ScaleMode::normalized) calibrate_scales(metric, lines);

    const std::size_t n = lines.size();
    const std::size_t d = lines.front().size();
    const auto rows = detail::row_pointers(lines);
    const auto line_dist = [&](const double* a, const std::vector<double>& b) {
        return combined_distance({a, d}, {b.data(), d}, metric);
    };

    Rng rng(cfg.seed);
    std::vector<std::size_t> seeds;
    if (cfg.init == InitMethod::random_lines) {
        seeds = rng.sample_distinct(cfg.k, n);
    } else {
        seeds = detail::plus_plus_indices(n, cfg.k, rng, [&](std::size_t i, std::size_t j) {
            return combined_distance({rows[i], d}, {rows[j], d}, metric);
        });
    }
    std::vector<std::vector<double>> centers;
    centers.reserve(cfg.k);
    for (std::size_t idx : seeds)
        centers.emplace_back(rows[idx], rows[idx] + d);

    auto outcome = detail::lloyd_loop(
        rows, std::move(centers), cfg.max_iter, cfg.tol, cfg.threads, line_dist,
        [](double dist) { return dist; },
        [&](const std::vector<const double*>& group) { return detail::column_medians(group, d); });

    model.labels = std::move(outcome.labels);
    model.iterations_run = outcome.iterations;
    model.converged = outcome.converged;
    model.trace = std::move(outcome.trace);
    model.centers.reserve(cfg.k);
    for (std::size_t j = 0; j < cfg.k; ++j)
        model.centers.emplace_back(j, std::move(outcome.centers[j]));
    model.timings.distance_seconds = outcome.distance_seconds;
    model.timings.total_seconds = std::chrono::duration<double>(clock::now() - started).count();
    return model;
}

/// Lloyd's k-means baseline: k-means++ seeding, Euclidean assignment, mean
/// center update, and the same convergence rules as lsc_fit. Operates on the
/// matrix as given (standardize beforehand if desired).
inline ClusterModel kmeans_fit(const DataMatrix& m, std::size_t k, std::uint64_t seed,
                               std::size_t max_iter = 100, double tol = 1e-6,
                               std::size_t threads = 1) {
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    if (k < 1 || k > m.n_samples())
        throw std::invalid_argument("kmeans_fit: k must lie in [1, n_samples]");
    if (max_iter < 1)
        throw std::invalid_argument("kmeans_fit: max_iter must be at least 1");

    const std::vector<LineSeries> lines = to_line_space(m);
    const std::size_t n = lines.size();
    const std::size_t d = m.n_features();
    const auto rows = detail::row_pointers(lines);

    Rng rng(seed);
    const auto seeds = detail::plus_plus_indices(n, k, rng, [&](std::size_t i, std::size_t j) {
        return euclidean({rows[i], d}, {rows[j], d});
    });
    std::vector<std::vector<double>> centers;
    centers.reserve(k);
    for (std::size_t idx : seeds)
        centers.emplace_back(rows[idx], rows[idx] + d);

    auto outcome = detail::lloyd_loop(
        rows, std::move(centers), max_iter, tol, threads,
        [d](const double* a, const std::vector<double>& b) {
            return euclidean({a, d}, {b.data(), d});
        },
        [](double dist) { return dist * dist; },
        [&](const std::vector<const double*>& group) { return detail::column_means(group, d); });

    ClusterModel model;
    model.labels = std::move(outcome.labels);
    model.iterations_run = outcome.iterations;
    model.converged = outcome.converged;
    model.trace = std::move(outcome.trace);
    model.centers.reserve(k);
    for (std::size_t j = 0; j < k; ++j)
        model.centers.emplace_back(j, std::move(outcome.centers[j]));
    model.timings.distance_seconds = outcome.distance_seconds;
    model.timings.total_seconds = std::chrono::duration<double>(clock::now() - started).count();
    return model;
}

}  // namespace lsc

#endif  // LSC_CLUSTER_HPP
