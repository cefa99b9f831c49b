#ifndef LSC_EVAL_HPP
#define LSC_EVAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsc/core.hpp"
#include "lsc/metric.hpp"
#include "lsc/parallel.hpp"

namespace lsc {

/// Counts n_ij of samples with true class i and predicted cluster j, with
/// marginals. Label values are remapped densely in first-appearance order.
struct ContingencyTable {
    std::vector<std::vector<std::size_t>> counts;
    std::vector<std::size_t> row_sums;
    std::vector<std::size_t> col_sums;
    std::size_t total = 0;

    static ContingencyTable from_labels(const LabelVector& truth, const LabelVector& pred) {
        if (truth.size() != pred.size())
            throw std::invalid_argument("ContingencyTable: label vectors of unequal length");
        if (truth.empty())
            throw std::invalid_argument("ContingencyTable: empty label vectors");
        const auto remap = [](const LabelVector& v) {
            std::map<int, std::size_t> ids;
            std::vector<std::size_t> dense(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] < 0)
                    throw std::invalid_argument("ContingencyTable: negative label");
                auto [it, _] = ids.try_emplace(v[i], ids.size());
                dense[i] = it->second;
            }
            return std::pair{dense, ids.size()};
        };
        const auto [rows, r] = remap(truth);
        const auto [cols, c] = remap(pred);
        ContingencyTable t;
        t.counts.assign(r, std::vector<std::size_t>(c, 0));
        t.row_sums.assign(r, 0);
        t.col_sums.assign(c, 0);
        t.total = truth.size();
        for (std::size_t i = 0; i < truth.size(); ++i) {
            ++t.counts[rows[i]][cols[i]];
            ++t.row_sums[rows[i]];
            ++t.col_sums[cols[i]];
        }
        return t;
    }
};

namespace detail {

inline void require_pairable(const LabelVector& truth, const LabelVector& pred) {
    if (truth.size() != pred.size())
        throw std::invalid_argument("labels: length mismatch");
    if (truth.size() < 2)
        throw std::invalid_argument("labels: need at least two samples");
}

inline double comb2(double x) { return x * (x - 1.0) / 2.0; }

inline double entropy(const std::vector<std::size_t>& sums, std::size_t n) {
    double h = 0.0;
    for (std::size_t s : sums) {
        if (s == 0) continue;
        const double p = static_cast<double>(s) / static_cast<double>(n);
        h -= p * std::log(p);
    }
    return h;
}

inline double mutual_information(const ContingencyTable& t) {
    const double n = static_cast<double>(t.total);
    double mi = 0.0;
    for (std::size_t i = 0; i < t.row_sums.size(); ++i)
        for (std::size_t j = 0; j < t.col_sums.size(); ++j) {
            const std::size_t nij = t.counts[i][j];
            if (nij == 0) continue;
            const double pij = static_cast<double>(nij) / n;
            mi += pij * std::log(n * static_cast<double>(nij) /
                                 (static_cast<double>(t.row_sums[i]) *
                                  static_cast<double>(t.col_sums[j])));
        }
    return std::max(0.0, mi);
}

/// Expected mutual information under the hypergeometric permutation model.
inline double expected_mutual_information(const ContingencyTable& t) {
    const std::size_t n = t.total;
    const double nd = static_cast<double>(n);
    const auto lf = [](std::size_t x) { return std::lgamma(static_cast<double>(x) + 1.0); };
    double emi = 0.0;
    for (std::size_t a : t.row_sums) {
        for (std::size_t b : t.col_sums) {
            const std::size_t lo = a + b > n ? a + b - n : 1;
            const std::size_t hi = std::min(a, b);
            for (std::size_t nij = std::max<std::size_t>(lo, 1); nij <= hi; ++nij) {
                const double term = static_cast<double>(nij) / nd *
                                    std::log(nd * static_cast<double>(nij) /
                                             (static_cast<double>(a) * static_cast<double>(b)));
                const double log_p = lf(a) + lf(b) + lf(n - a) + lf(n - b) - lf(n) - lf(nij) -
                                     lf(a - nij) - lf(b - nij) - lf(n - a - b + nij);
                emi += term * std::exp(log_p);
            }
        }
    }
    return emi;
}

}  // namespace detail

/// Chance-adjusted pair-counting agreement; 1 for identical partitions,
/// around 0 for independent ones. Uses the comb-based contingency formula.
inline double adjusted_rand_index(const LabelVector& truth, const LabelVector& pred) {
    detail::require_pairable(truth, pred);
    const auto t = ContingencyTable::from_labels(truth, pred);
    double index = 0.0, a_comb = 0.0, b_comb = 0.0;
    for (const auto& row : t.counts)
        for (std::size_t nij : row) index += detail::comb2(static_cast<double>(nij));
    for (std::size_t a : t.row_sums) a_comb += detail::comb2(static_cast<double>(a));
    for (std::size_t b : t.col_sums) b_comb += detail::comb2(static_cast<double>(b));
    const double pairs = detail::comb2(static_cast<double>(t.total));
    const double expected = a_comb * b_comb / pairs;
    const double max_index = 0.5 * (a_comb + b_comb);
    if (std::abs(max_index - expected) < 1e-12)
        return 1.0;  // both partitions trivial and identical in pair structure
    return (index - expected) / (max_index - expected);
}

/// AMI with the arithmetic-mean entropy normalizer (Vinh 2010 convention).
/// When the denominator vanishes (both partitions trivial) the score is 1 if
/// MI equals its expectation and 0 otherwise.
inline double adjusted_mutual_information(const LabelVector& truth, const LabelVector& pred) {
    detail::require_pairable(truth, pred);
    const auto t = ContingencyTable::from_labels(truth, pred);
    const double mi = detail::mutual_information(t);
    const double emi = detail::expected_mutual_information(t);
    const double hu = detail::entropy(t.row_sums, t.total);
    const double hv = detail::entropy(t.col_sums, t.total);
    const double denom = 0.5 * (hu + hv) - emi;
    const double num = mi - emi;
    if (std::abs(denom) < 1e-15) return std::abs(num) < 1e-15 ? 1.0 : 0.0;
    return num / denom;
}

struct HomogeneityCompletenessV {
    double homogeneity = 0.0;
    double completeness = 0.0;
    double v_measure = 0.0;
};

/// Entropy-based class purity (h), class capture (c) and their harmonic mean.
/// Degenerate entropies follow the V-measure paper's limits: h = 1 when the
/// class entropy is zero, likewise c; v = 0 when h + c = 0.
inline HomogeneityCompletenessV homogeneity_completeness_v(const LabelVector& truth,
                                                           const LabelVector& pred) {
    detail::require_pairable(truth, pred);
    const auto t = ContingencyTable::from_labels(truth, pred);
    const double n = static_cast<double>(t.total);
    const double h_true = detail::entropy(t.row_sums, t.total);
    const double h_pred = detail::entropy(t.col_sums, t.total);

    double h_true_given_pred = 0.0, h_pred_given_true = 0.0;
    for (std::size_t i = 0; i < t.row_sums.size(); ++i)
        for (std::size_t j = 0; j < t.col_sums.size(); ++j) {
            const std::size_t nij = t.counts[i][j];
            if (nij == 0) continue;
            const double pij = static_cast<double>(nij) / n;
            h_true_given_pred -=
                pij * std::log(static_cast<double>(nij) / static_cast<double>(t.col_sums[j]));
            h_pred_given_true -=
                pij * std::log(static_cast<double>(nij) / static_cast<double>(t.row_sums[i]));
        }

    HomogeneityCompletenessV out;
    out.homogeneity = h_true == 0.0 ? 1.0 : 1.0 - h_true_given_pred / h_true;
    out.completeness = h_pred == 0.0 ? 1.0 : 1.0 - h_pred_given_true / h_pred;
    const double sum = out.homogeneity + out.completeness;
    out.v_measure = sum == 0.0 ? 0.0 : 2.0 * out.homogeneity * out.completeness / sum;
    return out;
}

/// Mean silhouette over precomputed pairwise distances. Points in singleton
/// clusters score 0; fewer than two clusters is an error.
inline double silhouette(const DistanceMatrix& dists, const LabelVector& labels) {
    const std::size_t n = dists.size();
    if (labels.size() != n)
        throw std::invalid_argument("silhouette: labels do not match the distance matrix");
    if (n < 2)
        throw std::invalid_argument("silhouette: need at least two samples");

    std::map<int, std::size_t> ids;
    std::vector<std::size_t> dense(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] < 0)
            throw std::invalid_argument("silhouette: negative label");
        auto [it, _] = ids.try_emplace(labels[i], ids.size());
        dense[i] = it->second;
    }
    const std::size_t k = ids.size();
    if (k < 2)
        throw std::invalid_argument("silhouette: undefined for a single cluster");

    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t c : dense) ++sizes[c];

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t own = dense[i];
        if (sizes[own] <= 1) continue;  // singleton scores 0
        std::vector<double> sum_to(k, 0.0);
        for (std::size_t j = 0; j < n; ++j) sum_to[dense[j]] += dists.at(i, j);
        const double a = sum_to[own] / static_cast<double>(sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            if (c == own) continue;
            b = std::min(b, sum_to[c] / static_cast<double>(sizes[c]));
        }
        const double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    return total / static_cast<double>(n);
}

/// Euclidean pairwise distances for a data matrix.
inline DistanceMatrix pairwise_euclidean(const DataMatrix& data, std::size_t threads = 1) {
    const std::size_t n = data.n_samples();
    DistanceMatrix out(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    detail::parallel_for(0, pairs.size(), threads, [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        out.set_symmetric(i, j, euclidean(data.row(i), data.row(j)));
    });
    return out;
}

inline double silhouette(const DataMatrix& data, const LabelVector& labels,
                         std::size_t threads = 1) {
    return silhouette(pairwise_euclidean(data, threads), labels);
}

/// All six quality scores in one carrier, as reported by the CLI.
struct MetricReport {
    double ari = 0.0;
    double ami = 0.0;
    double homogeneity = 0.0;
    double completeness = 0.0;
    double v_measure = 0.0;
    double silhouette = std::numeric_limits<double>::quiet_NaN();
    std::string silhouette_distance = "euclidean";
};

/// External metrics of pred against truth; silhouette is left NaN for the
/// caller to fill when data is available.
inline MetricReport evaluate_external(const LabelVector& truth, const LabelVector& pred) {
    MetricReport r;
    r.ari = adjusted_rand_index(truth, pred);
    r.ami = adjusted_mutual_information(truth, pred);
    const auto hcv = homogeneity_completeness_v(truth, pred);
    r.homogeneity = hcv.homogeneity;
    r.completeness = hcv.completeness;
    r.v_measure = hcv.v_measure;
    return r;
}

}  // namespace lsc

#endif  // LSC_EVAL_HPP
