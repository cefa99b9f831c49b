#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

#include "lsc/report.hpp"
#include "lsc/svg.hpp"

using namespace lsc;
namespace fs = std::filesystem;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

std::vector<LineSeries> toy_lines() {
    std::vector<LineSeries> lines;
    lines.emplace_back(0, std::vector<double>{0.0, 1.0, 0.5, 2.0});
    lines.emplace_back(1, std::vector<double>{1.0, 1.5, 1.0, 2.5});
    lines.emplace_back(2, std::vector<double>{-1.0, 0.0, -0.5, 0.5});
    lines.emplace_back(3, std::vector<double>{3.0, 2.0, 2.5, 1.0});
    lines.emplace_back(4, std::vector<double>{0.5, 0.5, 0.5, 0.5});
    return lines;
}

}  // namespace

TEST_CASE("line-space SVG has one polyline per sample and labeled axes", "[svg]") {
    const auto svg = line_space_svg(toy_lines(), nullptr);
    REQUIRE(count_occurrences(svg, "<polyline") == 5);
    REQUIRE(svg.find("feature index") != std::string::npos);
    REQUIRE(svg.find("value") != std::string::npos);
}

TEST_CASE("labels color polylines by cluster", "[svg]") {
    const LabelVector labels{0, 1, 2, 0, 1};
    const auto svg = line_space_svg(toy_lines(), &labels);
    std::set<std::string> strokes;
    std::size_t pos = 0;
    while ((pos = svg.find("stroke='#", pos)) != std::string::npos) {
        strokes.insert(svg.substr(pos + 8, 8));
        pos += 8;
    }
    // Three cluster colors; axis strokes are plain black.
    REQUIRE(strokes.size() == 3);
}

TEST_CASE("SVG output is byte-identical across calls", "[svg]") {
    const LabelVector labels{0, 1, 2, 0, 1};
    REQUIRE(line_space_svg(toy_lines(), &labels) == line_space_svg(toy_lines(), &labels));
    const std::vector<std::pair<double, double>> pts{{250, 0.5}, {500, 1.1}, {1000, 2.0}};
    REQUIRE(scaling_plot_svg(pts, 0.002, 0.0) == scaling_plot_svg(pts, 0.002, 0.0));
    REQUIRE(count_occurrences(scaling_plot_svg(pts, 0.002, 0.0), "<circle") == 3);
}

TEST_CASE("labels CSV round-trips and tolerates bare label files", "[report]") {
    const fs::path tmp = fs::temp_directory_path() /
                         ("lsc-report-" + std::to_string(::getpid()) + ".csv");
    const LabelVector labels{0, 2, 1, 1, 0};
    write_labels_csv(tmp, labels);
    REQUIRE(read_labels_csv(tmp) == labels);

    std::ofstream(tmp) << "1\n0\n2\n";
    REQUIRE(read_labels_csv(tmp) == LabelVector{1, 0, 2});
    fs::remove(tmp);
}

TEST_CASE("atomic writes leave no temp file behind", "[report]") {
    const fs::path tmp = fs::temp_directory_path() /
                         ("lsc-atomic-" + std::to_string(::getpid()) + ".txt");
    atomic_write_file(tmp, "payload");
    std::ifstream in(tmp);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    REQUIRE(content == "payload");
    REQUIRE_FALSE(fs::exists(tmp.string() + ".tmp"));
    fs::remove(tmp);
}

TEST_CASE("run reports serialize with a schema version and config echo", "[report]") {
    RunReport report;
    report.config = {{"algorithm", "lsc"}, {"seed", 7}};
    MetricReport metrics;
    metrics.ari = 0.5;
    report.metrics = {{"lsc", to_json(metrics)}};
    report.iterations = 4;
    report.converged = true;
    const auto j = report.to_json();
    REQUIRE(j.at("schema_version") == kReportSchemaVersion);
    REQUIRE(j.at("config").at("seed") == 7);
    REQUIRE(j.at("metrics").at("lsc").at("ari") == 0.5);
    REQUIRE(j.at("metrics").at("lsc").at("silhouette").is_null());
    REQUIRE(j.at("trace").at("iterations") == 4);
}

TEST_CASE("centers CSV uses 1-based feature headers", "[report]") {
    std::vector<LineSeries> centers;
    centers.emplace_back(0, std::vector<double>{1.5, -2.0});
    centers.emplace_back(1, std::vector<double>{0.0, 3.25});
    const auto csv = centers_to_csv(centers);
    REQUIRE(csv.rfind("center,f1,f2\n", 0) == 0);
    REQUIRE(csv.find("\n0,1.5,-2\n") != std::string::npos);
    REQUIRE(csv.find("\n1,0,3.25\n") != std::string::npos);
}
