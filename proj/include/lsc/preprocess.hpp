#ifndef LSC_PREPROCESS_HPP
#define LSC_PREPROCESS_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lsc/core.hpp"
#include "lsc/parallel.hpp"

namespace lsc {

/// Per-feature mean and standard deviation, fitted on one matrix and
/// applicable to any matrix with the same feature count.
struct StandardizationParams {
    std::vector<double> means;
    std::vector<double> stds;
};

/// Column means and population standard deviations (divide by n).
/// Zero-variance columns get std 1 so the standardized column is all-zero.
inline StandardizationParams fit_standardizer(const DataMatrix& m) {
    const std::size_t n = m.n_samples(), d = m.n_features();
    StandardizationParams p;
    p.means.assign(d, 0.0);
    p.stds.assign(d, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) p.means[j] += m(i, j);
    for (std::size_t j = 0; j < d; ++j) p.means[j] /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double c = m(i, j) - p.means[j];
            p.stds[j] += c * c;
        }
    for (std::size_t j = 0; j < d; ++j) {
        p.stds[j] = std::sqrt(p.stds[j] / static_cast<double>(n));
        if (p.stds[j] == 0.0) p.stds[j] = 1.0;
    }
    return p;
}

inline DataMatrix apply_standardizer(const DataMatrix& m, const StandardizationParams& p) {
    if (p.means.size() != m.n_features() || p.stds.size() != m.n_features())
        throw std::invalid_argument("apply_standardizer: params fitted for a different feature count");
    std::vector<double> out(m.values().size());
    const std::size_t d = m.n_features();
    for (std::size_t i = 0; i < m.n_samples(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            out[i * d + j] = (m(i, j) - p.means[j]) / p.stds[j];
    return DataMatrix(m.n_samples(), d, std::move(out));
}

/// Savitzky-Golay window: 2m+1 points, least-squares polynomial of the given
/// order fitted inside it.
struct SavGolSpec {
    std::size_t window_length = 5;
    std::size_t poly_order = 2;

    void validate() const {
        if (window_length < 3 || window_length % 2 == 0)
            throw std::invalid_argument("SavGolSpec: window_length must be odd and >= 3");
        if (poly_order >= window_length)
            throw std::invalid_argument("SavGolSpec: poly_order must be below window_length");
    }
};

namespace detail {

/// Solves G X = B in place by Gaussian elimination with partial pivoting.
/// G is r x r, B is r x c, both row-major.
inline void solve_dense(std::vector<std::vector<double>>& g, std::vector<std::vector<double>>& b) {
    const std::size_t r = g.size();
    const std::size_t c = b.front().size();
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < r; ++row)
            if (std::abs(g[row][col]) > std::abs(g[pivot][col])) pivot = row;
        std::swap(g[col], g[pivot]);
        std::swap(b[col], b[pivot]);
        if (g[col][col] == 0.0)
            throw std::runtime_error("solve_dense: singular system");
        for (std::size_t row = 0; row < r; ++row) {
            if (row == col) continue;
            const double f = g[row][col] / g[col][col];
            if (f == 0.0) continue;
            for (std::size_t kk = col; kk < r; ++kk) g[row][kk] -= f * g[col][kk];
            for (std::size_t kk = 0; kk < c; ++kk) b[row][kk] -= f * b[col][kk];
        }
    }
    for (std::size_t row = 0; row < r; ++row) {
        const double piv = g[row][row];
        for (std::size_t kk = 0; kk < c; ++kk) b[row][kk] /= piv;
    }
}

}  // namespace detail

/// Precomputed convolution weights for one window spec. `coefficients()` are
/// the central-point weights; `edge_weights(r)` evaluates the head-window fit
/// at offset r from the start (mirrored for the tail).
class SavGolKernel {
public:
    explicit SavGolKernel(SavGolSpec spec) : spec_(spec) {
        spec_.validate();
        const std::size_t w = spec_.window_length;
        const std::size_t m = w / 2;
        const std::size_t terms = spec_.poly_order + 1;

        // Vandermonde over window positions -m..m.
        std::vector<std::vector<double>> a(w, std::vector<double>(terms, 0.0));
        for (std::size_t r = 0; r < w; ++r) {
            const double k = static_cast<double>(r) - static_cast<double>(m);
            double pk = 1.0;
            for (std::size_t c = 0; c < terms; ++c) {
                a[r][c] = pk;
                pk *= k;
            }
        }
        // Solve (A^T A) M = A^T; row i of A * M is then the weight vector
        // whose dot with the window evaluates the fit at position i.
        std::vector<std::vector<double>> gram(terms, std::vector<double>(terms, 0.0));
        std::vector<std::vector<double>> rhs(terms, std::vector<double>(w, 0.0));
        for (std::size_t i = 0; i < terms; ++i)
            for (std::size_t j = 0; j < terms; ++j)
                for (std::size_t r = 0; r < w; ++r) gram[i][j] += a[r][i] * a[r][j];
        for (std::size_t i = 0; i < terms; ++i)
            for (std::size_t r = 0; r < w; ++r) rhs[i][r] = a[r][i];
        detail::solve_dense(gram, rhs);

        auto fit_row = [&](std::size_t pos) {
            std::vector<double> weights(w, 0.0);
            for (std::size_t r = 0; r < w; ++r)
                for (std::size_t c = 0; c < terms; ++c) weights[r] += a[pos][c] * rhs[c][r];
            return weights;
        };
        center_ = fit_row(m);
        edge_.reserve(m);
        for (std::size_t r = 0; r < m; ++r) edge_.push_back(fit_row(r));
    }

    const SavGolSpec& spec() const noexcept { return spec_; }
    std::size_t window_length() const noexcept { return spec_.window_length; }
    std::size_t half_width() const noexcept { return spec_.window_length / 2; }

    const std::vector<double>& coefficients() const noexcept { return center_; }
    const std::vector<double>& edge_weights(std::size_t r) const { return edge_.at(r); }

private:
    SavGolSpec spec_;
    std::vector<double> center_;
    std::vector<std::vector<double>> edge_;
};

inline SavGolKernel savgol_kernel(const SavGolSpec& spec) { return SavGolKernel(spec); }

namespace detail {

inline std::vector<double> smooth_values(std::span<const double> v, const SavGolKernel& k) {
    const std::size_t len = v.size();
    const std::size_t w = k.window_length();
    const std::size_t m = k.half_width();
    if (len < w)
        throw std::invalid_argument(
            "smooth_line: line shorter than the filter window; disable smoothing or shrink the window");
    std::vector<double> out(len, 0.0);
    // Head and tail: evaluate the first/last window's fit at the off-center
    // positions. The tail reuses the head weights reversed (window symmetry).
    for (std::size_t r = 0; r < m; ++r) {
        const auto& e = k.edge_weights(r);
        double head = 0.0, tail = 0.0;
        for (std::size_t j = 0; j < w; ++j) {
            head += e[j] * v[j];
            tail += e[j] * v[len - 1 - j];
        }
        out[r] = head;
        out[len - 1 - r] = tail;
    }
    const auto& c = k.coefficients();
    for (std::size_t i = m; i + m < len; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < w; ++j) acc += c[j] * v[i - m + j];
        out[i] = acc;
    }
    return out;
}

}  // namespace detail

/// Applies the filter to one line. Interior points are the central-weight
/// convolution; the first and last m points come from evaluating the edge
/// window's polynomial fit at their positions, which keeps signals of degree
/// <= poly_order exactly reproduced everywhere.
inline LineSeries smooth_line(const LineSeries& line, const SavGolKernel& kernel) {
    return LineSeries(line.sample_index(), detail::smooth_values(line.values(), kernel));
}

/// Row-parallel smoothing; output is independent of the thread count.
inline std::vector<LineSeries> smooth_lines(const std::vector<LineSeries>& lines,
                                            const SavGolKernel& kernel, std::size_t threads = 1) {
    std::vector<LineSeries> out(lines.begin(), lines.end());
    detail::parallel_for(0, lines.size(), threads, [&](std::size_t i) {
        out[i] = smooth_line(lines[i], kernel);
    });
    return out;
}

}  // namespace lsc

#endif  // LSC_PREPROCESS_HPP
