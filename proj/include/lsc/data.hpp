#ifndef LSC_DATA_HPP
#define LSC_DATA_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lsc/core.hpp"
#include "lsc/random.hpp"

namespace lsc {

/// Gaussian blob generator parameters. Cluster means are drawn uniformly from
/// [-center_spread, center_spread]^d; each sample adds N(0, base_std^2) and
/// N(0, noise_std^2) per coordinate.
struct SyntheticSpec {
    std::size_t n_samples = 500;
    std::size_t n_features = 32;
    std::size_t n_clusters = 5;
    double noise_std = 1.0;
    std::uint64_t seed = 0;
    double center_spread = 10.0;
    double base_std = 1.0;

    void validate() const {
        if (n_samples == 0 || n_features == 0 || n_clusters == 0)
            throw std::invalid_argument("SyntheticSpec: counts must be positive");
        if (n_clusters > n_samples)
            throw std::invalid_argument("SyntheticSpec: more clusters than samples");
        if (noise_std < 0.0 || base_std < 0.0 || center_spread < 0.0)
            throw std::invalid_argument("SyntheticSpec: spreads must be non-negative");
    }
};

/// A matrix plus ground-truth labels. truth is empty for unlabeled data.
struct LabeledDataset {
    DataMatrix matrix;
    LabelVector truth;
    std::string name;
};

/// Deterministic blob sampler: one seed, one dataset, bit for bit. Samples
/// are laid out cluster-major (sizes as even as possible), then rows and
/// labels are shuffled with the same seed stream.
inline LabeledDataset generate_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const std::size_t n = spec.n_samples, d = spec.n_features, k = spec.n_clusters;

    std::vector<double> means(k * d);
    for (double& m : means) m = rng.uniform(-spec.center_spread, spec.center_spread);

    std::vector<std::size_t> sizes(k, n / k);
    for (std::size_t c = 0; c < n % k; ++c) ++sizes[c];

    std::vector<double> values;
    values.reserve(n * d);
    LabelVector truth;
    truth.reserve(n);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t s = 0; s < sizes[c]; ++s) {
            for (std::size_t j = 0; j < d; ++j)
                values.push_back(means[c * d + j] + spec.base_std * rng.normal() +
                                 spec.noise_std * rng.normal());
            truth.push_back(static_cast<int>(c));
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);

    std::vector<double> shuffled(n * d);
    LabelVector labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = order[i];
        std::copy(values.begin() + src * d, values.begin() + (src + 1) * d,
                  shuffled.begin() + i * d);
        labels[i] = truth[src];
    }

    std::ostringstream name;
    name << "blobs-n" << n << "-d" << d << "-k" << k << "-noise" << spec.noise_std << "-seed"
         << spec.seed;
    return {DataMatrix(n, d, std::move(shuffled)), std::move(labels), name.str()};
}

/// Sidecar describing how a synthetic dataset was produced.
inline nlohmann::json dataset_metadata(const SyntheticSpec& spec) {
    return {
        {"schema_version", 1},
        {"prng", Rng::kAlgorithm},
        {"seed", spec.seed},
        {"n_samples", spec.n_samples},
        {"n_features", spec.n_features},
        {"n_clusters", spec.n_clusters},
        {"noise_std", spec.noise_std},
        {"base_std", spec.base_std},
        {"center_spread", spec.center_spread},
    };
}

/// CSV parse failure with a 1-based position.
struct CsvError : std::runtime_error {
    std::size_t row = 0;
    std::size_t column = 0;
    CsvError(const std::string& msg, std::size_t r, std::size_t c)
        : std::runtime_error(msg + " (row " + std::to_string(r) + ", column " +
                             std::to_string(c) + ")"),
          row(r),
          column(c) {}
};

enum class HeaderMode { automatic, yes, no };

/// Label column selection: absent, by 0-based index, or by header name.
using LabelColumn = std::variant<std::monostate, std::size_t, std::string>;

struct CsvSchema {
    LabelColumn label_column{};
    char delimiter = ',';
    HeaderMode header = HeaderMode::automatic;
    std::optional<std::size_t> expect_rows;
    std::optional<std::size_t> expect_cols;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line, char delim) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += ch;
            }
        } else if (ch == '"' && cell.empty()) {
            quoted = true;
        } else if (ch == delim) {
            cells.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += ch;
        }
    }
    cells.push_back(std::move(cell));
    if (!cells.empty() && !cells.back().empty() && cells.back().back() == '\r')
        cells.back().pop_back();
    return cells;
}

inline bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

}  // namespace detail

/// Loads an RFC-4180-style CSV. The label column, when named or indexed, is
/// mapped to dense integers in first-appearance order; every other cell must
/// parse as a finite number.
inline LabeledDataset load_csv(const std::filesystem::path& path, const CsvSchema& schema = {}) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_csv: cannot open " + path.string());

    std::vector<std::string> raw_lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) raw_lines.push_back(std::move(line));
    }
    if (raw_lines.empty())
        throw std::runtime_error("load_csv: " + path.string() + " is empty");

    auto first = detail::split_csv_line(raw_lines.front(), schema.delimiter);
    bool has_header = false;
    switch (schema.header) {
        case HeaderMode::yes: has_header = true; break;
        case HeaderMode::no: has_header = false; break;
        case HeaderMode::automatic: {
            // A header is assumed when any first-row cell is non-numeric.
            double v;
            for (const auto& cell : first)
                if (!detail::parse_double(cell, v)) has_header = true;
            break;
        }
    }

    const std::size_t n_cols = first.size();
    std::optional<std::size_t> label_idx;
    if (std::holds_alternative<std::size_t>(schema.label_column)) {
        label_idx = std::get<std::size_t>(schema.label_column);
        if (*label_idx >= n_cols)
            throw std::invalid_argument("load_csv: label column index out of range");
    } else if (std::holds_alternative<std::string>(schema.label_column)) {
        if (!has_header)
            throw std::invalid_argument("load_csv: label column by name needs a header row");
        const auto& want = std::get<std::string>(schema.label_column);
        for (std::size_t c = 0; c < n_cols; ++c)
            if (first[c] == want) label_idx = c;
        if (!label_idx)
            throw std::invalid_argument("load_csv: no column named '" + want + "'");
    }

    std::vector<double> values;
    LabelVector labels;
    std::map<std::string, int> label_ids;
    std::size_t n_rows = 0;

    for (std::size_t r = has_header ? 1 : 0; r < raw_lines.size(); ++r) {
        const auto cells = detail::split_csv_line(raw_lines[r], schema.delimiter);
        if (cells.size() != n_cols)
            throw CsvError("load_csv: expected " + std::to_string(n_cols) + " cells, found " +
                               std::to_string(cells.size()),
                           r + 1, 1);
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (label_idx && c == *label_idx) {
                auto [it, _] = label_ids.try_emplace(cells[c], static_cast<int>(label_ids.size()));
                labels.push_back(it->second);
                continue;
            }
            double v;
            if (!detail::parse_double(cells[c], v))
                throw CsvError("load_csv: cannot parse '" + cells[c] + "' as a number", r + 1,
                               c + 1);
            if (!std::isfinite(v))
                throw CsvError("load_csv: non-finite value", r + 1, c + 1);
            values.push_back(v);
        }
        ++n_rows;
    }
    if (n_rows == 0)
        throw std::runtime_error("load_csv: " + path.string() + " has no data rows");

    const std::size_t n_features = label_idx ? n_cols - 1 : n_cols;
    if (schema.expect_rows && *schema.expect_rows != n_rows)
        throw std::runtime_error("load_csv: expected " + std::to_string(*schema.expect_rows) +
                                 " rows, found " + std::to_string(n_rows));
    if (schema.expect_cols && *schema.expect_cols != n_features)
        throw std::runtime_error("load_csv: expected " + std::to_string(*schema.expect_cols) +
                                 " feature columns, found " + std::to_string(n_features));

    return {DataMatrix(n_rows, n_features, std::move(values)), std::move(labels),
            path.stem().string()};
}

namespace detail {

/// Shortest-round-trip formatting: doubles written this way reload bit-exact.
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

/// Writes features (and the truth column when present and requested) with a
/// f1..fd[,label] header. Values round-trip exactly through load_csv.
inline void write_csv(const LabeledDataset& ds, const std::filesystem::path& path,
                      bool include_label = true) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_csv: cannot open " + path.string() + " for writing");
    const bool with_label = include_label && !ds.truth.empty();
    const std::size_t d = ds.matrix.n_features();
    for (std::size_t j = 0; j < d; ++j) out << (j ? "," : "") << 'f' << (j + 1);
    if (with_label) out << ",label";
    out << '\n';
    for (std::size_t i = 0; i < ds.matrix.n_samples(); ++i) {
        for (std::size_t j = 0; j < d; ++j)
            out << (j ? "," : "") << detail::format_double(ds.matrix(i, j));
        if (with_label) out << ',' << ds.truth[i];
        out << '\n';
    }
    if (!out)
        throw std::runtime_error("write_csv: write failed for " + path.string());
}

}  // namespace lsc

#endif  // LSC_DATA_HPP
