#ifndef LSC_REPORT_HPP
#define LSC_REPORT_HPP

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lsc/core.hpp"
#include "lsc/eval.hpp"

namespace lsc {

inline constexpr int kReportSchemaVersion = 1;

inline nlohmann::json to_json(const MetricReport& r) {
    nlohmann::json j{
        {"ari", r.ari},
        {"ami", r.ami},
        {"homogeneity", r.homogeneity},
        {"completeness", r.completeness},
        {"v_measure", r.v_measure},
        {"silhouette_distance", r.silhouette_distance},
    };
    if (std::isfinite(r.silhouette))
        j["silhouette"] = r.silhouette;
    else
        j["silhouette"] = nullptr;
    return j;
}

inline nlohmann::json to_json(const PhaseTimings& t) {
    return {
        {"standardize_seconds", t.standardize_seconds},
        {"smooth_seconds", t.smooth_seconds},
        {"distance_seconds", t.distance_seconds},
        {"total_seconds", t.total_seconds},
    };
}

/// One run's record: resolved configuration, metrics per algorithm, phase
/// timings and a loop-trace summary. Re-running the echoed config must
/// reproduce the labels exactly.
struct RunReport {
    nlohmann::json config;
    nlohmann::json metrics;
    PhaseTimings timings;
    std::size_t iterations = 0;
    bool converged = false;
    double final_center_shift = 0.0;

    nlohmann::json to_json() const {
        return {
            {"schema_version", kReportSchemaVersion},
            {"config", config},
            {"metrics", metrics},
            {"timings", lsc::to_json(timings)},
            {"trace", {{"iterations", iterations},
                       {"converged", converged},
                       {"final_max_center_shift", final_center_shift}}},
        };
    }
};

/// Writes via a sibling temp file and rename, so readers never observe a
/// partial file.
inline void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw std::runtime_error("atomic_write_file: cannot open " + tmp.string());
        out << content;
        if (!out)
            throw std::runtime_error("atomic_write_file: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline std::string labels_to_csv(const LabelVector& labels) {
    std::string out = "index,label\n";
    for (std::size_t i = 0; i < labels.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(labels[i]) + "\n";
    return out;
}

inline void write_labels_csv(const std::filesystem::path& path, const LabelVector& labels) {
    atomic_write_file(path, labels_to_csv(labels));
}

/// Accepts both the two-column index,label layout and a bare one-label-per-
/// line file; a non-numeric first line is treated as a header.
inline LabelVector read_labels_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("read_labels_csv: cannot open " + path.string());
    LabelVector labels;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        const std::string cell = comma == std::string::npos ? line : line.substr(comma + 1);
        char* end = nullptr;
        const long v = std::strtol(cell.c_str(), &end, 10);
        if (end != cell.c_str() + cell.size()) {
            if (first) {
                first = false;
                continue;  // header
            }
            throw std::runtime_error("read_labels_csv: bad label '" + cell + "' in " +
                                     path.string());
        }
        first = false;
        labels.push_back(static_cast<int>(v));
    }
    if (labels.empty())
        throw std::runtime_error("read_labels_csv: no labels in " + path.string());
    return labels;
}

/// Centers in wide form: center id, then f1..fd (1-based feature naming).
inline std::string centers_to_csv(const std::vector<LineSeries>& centers) {
    std::string out = "center";
    if (!centers.empty())
        for (std::size_t j = 0; j < centers.front().size(); ++j)
            out += ",f" + std::to_string(j + 1);
    out += "\n";
    for (std::size_t c = 0; c < centers.size(); ++c) {
        out += std::to_string(c);
        for (std::size_t p = 0; p < centers[c].size(); ++p) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", centers[c].value(p));
            out += ",";
            out += buf;
        }
        out += "\n";
    }
    return out;
}

}  // namespace lsc

#endif  // LSC_REPORT_HPP
