#ifndef LSC_DTW_HPP
#define LSC_DTW_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lsc/core.hpp"
#include "lsc/parallel.hpp"

namespace lsc {

/// Monotone, continuous alignment from (1,1) to (T,T'), 1-based index pairs.
using WarpingPath = std::vector<std::pair<std::size_t, std::size_t>>;

struct DtwResult {
    double distance = 0.0;
    WarpingPath path;
};

namespace detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline void require_nonempty(std::span<const double> s, std::span<const double> t) {
    if (s.empty() || t.empty())
        throw std::invalid_argument("dtw: sequences must be non-empty");
}

/// Per-row inclusive column ranges (1-based rows and columns) restricting the
/// DP. Row i uses cols[i - 1].
struct DtwBand {
    std::vector<std::pair<std::size_t, std::size_t>> cols;
};

inline DtwBand full_band(std::size_t n, std::size_t m) {
    DtwBand band;
    band.cols.assign(n, {1, m});
    return band;
}

/// Cumulative-cost DP with |.| local cost, restricted to the band, followed
/// by backtracking. Ties prefer the diagonal, then the vertical step, then
/// the horizontal one, so the path is deterministic.
inline DtwResult dtw_banded(std::span<const double> s, std::span<const double> t,
                            const DtwBand& band) {
    const std::size_t n = s.size(), m = t.size();
    std::vector<double> d((n + 1) * (m + 1), kInf);
    const auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
    d[at(0, 0)] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const auto [lo, hi] = band.cols[i - 1];
        for (std::size_t j = lo; j <= hi; ++j) {
            const double best =
                std::min({d[at(i - 1, j)], d[at(i, j - 1)], d[at(i - 1, j - 1)]});
            if (best == kInf) continue;
            d[at(i, j)] = std::abs(s[i - 1] - t[j - 1]) + best;
        }
    }

    DtwResult result;
    result.distance = d[at(n, m)];
    std::size_t i = n, j = m;
    result.path.emplace_back(i, j);
    while (i > 1 || j > 1) {
        const double diag = (i > 1 && j > 1) ? d[at(i - 1, j - 1)] : kInf;
        const double vert = i > 1 ? d[at(i - 1, j)] : kInf;
        const double horz = j > 1 ? d[at(i, j - 1)] : kInf;
        if (diag <= vert && diag <= horz) {
            --i;
            --j;
        } else if (vert <= horz) {
            --i;
        } else {
            --j;
        }
        result.path.emplace_back(i, j);
    }
    std::reverse(result.path.begin(), result.path.end());
    return result;
}

}  // namespace detail

/// DTW distance only: two-row rolling DP, O(min memory) for the hot path.
inline double dtw_distance(std::span<const double> s, std::span<const double> t) {
    detail::require_nonempty(s, t);
    const std::size_t n = s.size(), m = t.size();
    std::vector<double> prev(m + 1, detail::kInf), cur(m + 1, detail::kInf);
    prev[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = detail::kInf;
        for (std::size_t j = 1; j <= m; ++j) {
            const double best = std::min({prev[j], cur[j - 1], prev[j - 1]});
            cur[j] = std::abs(s[i - 1] - t[j - 1]) + best;
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

/// Exact DTW with an optimal warping path.
inline DtwResult dtw_exact(std::span<const double> s, std::span<const double> t) {
    detail::require_nonempty(s, t);
    return detail::dtw_banded(s, t, detail::full_band(s.size(), t.size()));
}

/// FastDTW parameters: refinement band half-width and the length at which the
/// multiresolution recursion falls back to the exact DP.
struct FastDtwSpec {
    std::size_t radius = 1;
    std::size_t min_size = 4;

    void validate() const {
        if (min_size < 2)
            throw std::invalid_argument("FastDtwSpec: min_size must be at least 2");
    }
};

namespace detail {

/// Coarsens by averaging adjacent pairs; an odd trailing element stands alone.
inline std::vector<double> halve(std::span<const double> x) {
    std::vector<double> out;
    out.reserve((x.size() + 1) / 2);
    std::size_t i = 0;
    for (; i + 1 < x.size(); i += 2) out.push_back(0.5 * (x[i] + x[i + 1]));
    if (i < x.size()) out.push_back(x[i]);
    return out;
}

/// Projects a coarse path onto the fine grid (each coarse cell covers a 2x2
/// block) and widens it by `radius` cells in every direction.
inline DtwBand expand_band(const WarpingPath& coarse, std::size_t n, std::size_t m,
                           std::size_t radius) {
    std::vector<std::size_t> lo(n + 1, m + 1), hi(n + 1, 0);
    const auto cover = [&](std::size_t fi, std::size_t cj) {
        if (fi < 1 || fi > n) return;
        lo[fi] = std::min(lo[fi], 2 * cj - 1);
        hi[fi] = std::max(hi[fi], std::min(2 * cj, m));
    };
    for (const auto& [ci, cj] : coarse) {
        cover(2 * ci - 1, cj);
        cover(2 * ci, cj);
    }
    DtwBand band;
    band.cols.resize(n);
    const long r = static_cast<long>(radius);
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t blo = m + 1, bhi = 0;
        const long from = std::max<long>(1, static_cast<long>(i) - r);
        const long to = std::min<long>(static_cast<long>(n), static_cast<long>(i) + r);
        for (long ii = from; ii <= to; ++ii) {
            blo = std::min(blo, lo[static_cast<std::size_t>(ii)]);
            bhi = std::max(bhi, hi[static_cast<std::size_t>(ii)]);
        }
        const std::size_t jlo = blo > radius ? blo - radius : 1;
        const std::size_t jhi = std::min(m, bhi + radius);
        band.cols[i - 1] = {std::max<std::size_t>(1, jlo), jhi};
    }
    return band;
}

inline DtwResult fastdtw_recursive(std::span<const double> s, std::span<const double> t,
                                   const FastDtwSpec& spec) {
    const std::size_t n = s.size(), m = t.size();
    if (n <= spec.min_size || m <= spec.min_size)
        return dtw_banded(s, t, full_band(n, m));
    const std::vector<double> cs = halve(s);
    const std::vector<double> ct = halve(t);
    const DtwResult coarse = fastdtw_recursive(cs, ct, spec);
    return dtw_banded(s, t, expand_band(coarse.path, n, m, spec.radius));
}

}  // namespace detail

/// Multiresolution DTW approximation. The result is the cost of a valid
/// warping path, so it never underestimates dtw_exact, and equals it once the
/// radius covers the whole matrix.
inline DtwResult dtw_fast_with_path(std::span<const double> s, std::span<const double> t,
                                    const FastDtwSpec& spec = {}) {
    detail::require_nonempty(s, t);
    spec.validate();
    return detail::fastdtw_recursive(s, t, spec);
}

inline double dtw_fast(std::span<const double> s, std::span<const double> t,
                       const FastDtwSpec& spec = {}) {
    return dtw_fast_with_path(s, t, spec).distance;
}

enum class DtwMode { exact, fast };

/// How the DTW term of the combined metric is computed. Path-length
/// normalization is off by default (Eq. 10 style raw DTW).
struct DtwOptions {
    DtwMode mode = DtwMode::exact;
    FastDtwSpec fast{};
    bool normalize_by_path_length = false;
};

inline double dtw_term(std::span<const double> s, std::span<const double> t,
                       const DtwOptions& opts) {
    if (!opts.normalize_by_path_length)
        return opts.mode == DtwMode::exact ? dtw_distance(s, t) : dtw_fast(s, t, opts.fast);
    const DtwResult r =
        opts.mode == DtwMode::exact ? dtw_exact(s, t) : dtw_fast_with_path(s, t, opts.fast);
    return r.distance / static_cast<double>(r.path.size());
}

/// Symmetric all-pairs DTW over equal-length lines. Entries match the
/// single-pair calls exactly and may be computed in parallel.
inline DistanceMatrix pairwise_dtw(const std::vector<LineSeries>& lines, const DtwOptions& opts,
                                   std::size_t threads = 1) {
    const std::size_t n = lines.size();
    for (const auto& line : lines)
        if (line.size() != lines.front().size())
            throw std::invalid_argument("pairwise_dtw: lines of unequal length");
    DistanceMatrix out(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    detail::parallel_for(0, pairs.size(), threads, [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        out.set_symmetric(i, j, dtw_term(lines[i].values(), lines[j].values(), opts));
    });
    return out;
}

}  // namespace lsc

#endif  // LSC_DTW_HPP
