#ifndef LSC_METRIC_HPP
#define LSC_METRIC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lsc/core.hpp"
#include "lsc/dtw.hpp"
#include "lsc/parallel.hpp"
#include "lsc/random.hpp"

namespace lsc {

/// raw uses both distance terms as-is; normalized divides each term by its
/// dataset-level median (see calibrate_scales) so alpha weighs comparable
/// magnitudes.
enum class ScaleMode { raw, normalized };

struct CombinedMetricSpec {
    double alpha = 0.5;
    DtwOptions dtw{};
    ScaleMode scale_mode = ScaleMode::raw;
    // Dataset-level medians; only consulted in normalized mode.
    double dtw_scale = 1.0;
    double euc_scale = 1.0;

    void validate() const {
        if (!(alpha >= 0.0 && alpha <= 1.0))
            throw std::invalid_argument("CombinedMetricSpec: alpha must lie in [0, 1]");
        dtw.fast.validate();
    }
};

inline double euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("euclidean: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

/// alpha * DTW + (1 - alpha) * Euclidean. The endpoints are computed exactly:
/// alpha 0 is pure Euclidean, alpha 1 is pure DTW.
inline double combined_distance(std::span<const double> a, std::span<const double> b,
                                const CombinedMetricSpec& spec) {
    if (a.size() != b.size())
        throw std::invalid_argument("combined_distance: length mismatch");
    const double sd = spec.scale_mode == ScaleMode::normalized ? spec.dtw_scale : 1.0;
    const double se = spec.scale_mode == ScaleMode::normalized ? spec.euc_scale : 1.0;
    if (spec.alpha == 0.0) return euclidean(a, b) / se;
    if (spec.alpha == 1.0) return dtw_term(a, b, spec.dtw) / sd;
    return spec.alpha * (dtw_term(a, b, spec.dtw) / sd) +
           (1.0 - spec.alpha) * (euclidean(a, b) / se);
}

inline double combined_distance(const LineSeries& a, const LineSeries& b,
                                const CombinedMetricSpec& spec) {
    return combined_distance(a.values(), b.values(), spec);
}

/// Symmetric all-pairs combined distances over equal-length lines.
inline DistanceMatrix pairwise_combined(const std::vector<LineSeries>& lines,
                                        const CombinedMetricSpec& spec,
                                        std::size_t threads = 1) {
    spec.validate();
    const std::size_t n = lines.size();
    for (const auto& line : lines)
        if (line.size() != lines.front().size())
            throw std::invalid_argument("pairwise_combined: lines of unequal length");
    DistanceMatrix out(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    detail::parallel_for(0, pairs.size(), threads, [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        out.set_symmetric(i, j, combined_distance(lines[i], lines[j], spec));
    });
    return out;
}

namespace detail {

inline double median_inplace(std::vector<double>& v) {
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double hi = v[mid];
    if (n % 2 == 1) return hi;
    std::nth_element(v.begin(), v.begin() + mid - 1, v.begin() + mid);
    return 0.5 * (v[mid - 1] + hi);
}

}  // namespace detail

/// Fills dtw_scale / euc_scale with the dataset-level median of each term.
/// All pairs are used for small datasets; larger ones are subsampled with a
/// fixed seed so calibration stays deterministic. A zero median falls back
/// to 1 (identical lines carry no scale information).
inline void calibrate_scales(CombinedMetricSpec& spec, const std::vector<LineSeries>& lines) {
    const std::size_t n = lines.size();
    if (n < 2) return;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    constexpr std::size_t kExhaustiveLimit = 256;
    constexpr std::size_t kSampledPairs = 20000;
    if (n <= kExhaustiveLimit) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    } else {
        Rng rng(0x5ca1ab1eULL);
        pairs.reserve(kSampledPairs);
        while (pairs.size() < kSampledPairs) {
            const std::size_t i = rng.below(n), j = rng.below(n);
            if (i != j) pairs.emplace_back(i, j);
        }
    }
    std::vector<double> dtws, eucs;
    dtws.reserve(pairs.size());
    eucs.reserve(pairs.size());
    for (const auto& [i, j] : pairs) {
        dtws.push_back(dtw_term(lines[i].values(), lines[j].values(), spec.dtw));
        eucs.push_back(euclidean(lines[i].values(), lines[j].values()));
    }
    const double md = detail::median_inplace(dtws);
    const double me = detail::median_inplace(eucs);
    spec.dtw_scale = md > 0.0 ? md : 1.0;
    spec.euc_scale = me > 0.0 ? me : 1.0;
}

}  // namespace lsc

#endif  // LSC_METRIC_HPP
