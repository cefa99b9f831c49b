#ifndef LSC_CORE_HPP
#define LSC_CORE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lsc {

/// Dense n_samples x n_features table, row-major. Immutable after
/// construction; every value is validated to be finite.
class DataMatrix {
public:
    DataMatrix(std::size_t n_samples, std::size_t n_features, std::vector<double> values)
        : n_samples_(n_samples), n_features_(n_features), values_(std::move(values)) {
        if (n_samples_ == 0 || n_features_ == 0)
            throw std::invalid_argument("DataMatrix: need at least one sample and one feature");
        if (values_.size() != n_samples_ * n_features_)
            throw std::invalid_argument("DataMatrix: value count does not match shape");
        for (double v : values_)
            if (!std::isfinite(v))
                throw std::invalid_argument("DataMatrix: non-finite value");
    }

    static DataMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty())
            throw std::invalid_argument("DataMatrix: no rows");
        std::vector<double> flat;
        flat.reserve(rows.size() * rows.front().size());
        for (const auto& r : rows) {
            if (r.size() != rows.front().size())
                throw std::invalid_argument("DataMatrix: ragged rows");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return DataMatrix(rows.size(), rows.front().size(), std::move(flat));
    }

    std::size_t n_samples() const noexcept { return n_samples_; }
    std::size_t n_features() const noexcept { return n_features_; }

    double operator()(std::size_t i, std::size_t j) const { return values_[i * n_features_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * n_features_, n_features_};
    }

    const std::vector<double>& values() const noexcept { return values_; }

    bool operator==(const DataMatrix&) const = default;

private:
    std::size_t n_samples_;
    std::size_t n_features_;
    std::vector<double> values_;
};

/// One sample viewed as the ordered sequence (feature index, value).
/// Feature indices are 1-based in the domain model and implicit here:
/// position p carries feature index p + 1. Immutable.
class LineSeries {
public:
    LineSeries(std::size_t sample_index, std::vector<double> values)
        : sample_index_(sample_index), values_(std::move(values)) {
        if (values_.empty())
            throw std::invalid_argument("LineSeries: empty value sequence");
    }

    std::size_t sample_index() const noexcept { return sample_index_; }
    std::size_t size() const noexcept { return values_.size(); }

    double value(std::size_t pos) const { return values_[pos]; }
    std::size_t feature_index(std::size_t pos) const noexcept { return pos + 1; }
    std::pair<std::size_t, double> point(std::size_t pos) const { return {pos + 1, values_[pos]}; }

    std::span<const double> values() const noexcept { return {values_.data(), values_.size()}; }

    bool operator==(const LineSeries&) const = default;

private:
    std::size_t sample_index_;
    std::vector<double> values_;
};

/// Cluster (or class) assignment per sample.
using LabelVector = std::vector<int>;

/// Eq-style line space view: row i becomes the line {(j, m[i][j])}.
inline std::vector<LineSeries> to_line_space(const DataMatrix& m) {
    std::vector<LineSeries> lines;
    lines.reserve(m.n_samples());
    for (std::size_t i = 0; i < m.n_samples(); ++i) {
        auto r = m.row(i);
        lines.emplace_back(i, std::vector<double>(r.begin(), r.end()));
    }
    return lines;
}

/// Inverse of to_line_space; exact (bitwise) reconstruction.
inline DataMatrix to_matrix(const std::vector<LineSeries>& lines) {
    if (lines.empty())
        throw std::invalid_argument("to_matrix: no lines");
    const std::size_t d = lines.front().size();
    std::vector<double> flat;
    flat.reserve(lines.size() * d);
    for (const auto& line : lines) {
        if (line.size() != d)
            throw std::invalid_argument("to_matrix: lines of unequal length");
        flat.insert(flat.end(), line.values().begin(), line.values().end());
    }
    return DataMatrix(lines.size(), d, std::move(flat));
}

/// Per-iteration observability of a clustering loop.
struct IterationStats {
    std::size_t iteration = 0;        // 1-based
    double max_center_shift = 0.0;    // in the fit's distance units
    std::size_t labels_changed = 0;
    double total_cost = 0.0;          // sum of point-to-center distances (squared for k-means)
    double elapsed_seconds = 0.0;     // since fit start
};

struct PhaseTimings {
    double standardize_seconds = 0.0;
    double smooth_seconds = 0.0;
    double distance_seconds = 0.0;    // cumulative assignment-step time
    double total_seconds = 0.0;
};

/// Result of a clustering fit: k center lines, labels, and the loop trace.
struct ClusterModel {
    std::vector<LineSeries> centers;
    LabelVector labels;
    std::size_t iterations_run = 0;
    bool converged = false;
    std::vector<IterationStats> trace;
    PhaseTimings timings;
};

/// Symmetric pairwise-distance matrix with full storage.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }

    void set_symmetric(std::size_t i, std::size_t j, double v) {
        values_[i * n_ + j] = v;
        values_[j * n_ + i] = v;
    }

    const std::vector<double>& values() const noexcept { return values_; }

private:
    std::size_t n_;
    std::vector<double> values_;
};

}  // namespace lsc

#endif  // LSC_CORE_HPP
