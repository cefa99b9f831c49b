#include <catch2/catch_amalgamated.hpp>

#include "lsc/metric.hpp"
#include "lsc/random.hpp"

using namespace lsc;

TEST_CASE("euclidean distance basics", "[metric]") {
    const std::vector<double> a{0, 0}, b{3, 4};
    REQUIRE(euclidean(a, b) == Catch::Approx(5.0));
    REQUIRE(euclidean(a, a) == 0.0);
    REQUIRE_THROWS_AS(euclidean(a, std::vector<double>{1.0}), std::invalid_argument);

    Rng rng(2);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> u(6), v(6);
        for (std::size_t i = 0; i < 6; ++i) {
            u[i] = rng.uniform(-10, 10);
            v[i] = rng.uniform(-10, 10);
        }
        double acc = 0.0;
        for (std::size_t i = 0; i < 6; ++i) acc += (u[i] - v[i]) * (u[i] - v[i]);
        REQUIRE(euclidean(u, v) == Catch::Approx(std::sqrt(acc)).margin(1e-12));
    }
}

TEST_CASE("alpha endpoints recover the pure distances exactly", "[metric]") {
    const std::vector<double> a{0, 1, 2}, b{0, 2, 2};
    CombinedMetricSpec spec;
    spec.alpha = 0.0;
    REQUIRE(combined_distance(a, b, spec) == euclidean(a, b));
    spec.alpha = 1.0;
    REQUIRE(combined_distance(a, b, spec) == dtw_distance(a, b));
}

TEST_CASE("the blend composes the two module distances", "[metric]") {
    const std::vector<double> a{0, 1, 2}, b{0, 2, 2};
    CombinedMetricSpec spec;
    spec.alpha = 0.5;
    const double expected = 0.5 * dtw_exact(a, b).distance + 0.5 * euclidean(a, b);
    REQUIRE(combined_distance(a, b, spec) == Catch::Approx(expected).margin(1e-12));
}

TEST_CASE("combined distance is affine in alpha and bounded by its endpoints", "[metric]") {
    Rng rng(4);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> a(7), b(7);
        for (std::size_t i = 0; i < 7; ++i) {
            a[i] = rng.uniform(-3, 3);
            b[i] = rng.uniform(-3, 3);
        }
        CombinedMetricSpec spec;
        spec.alpha = 0.0;
        const double at0 = combined_distance(a, b, spec);
        spec.alpha = 1.0;
        const double at1 = combined_distance(a, b, spec);
        for (double alpha : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            spec.alpha = alpha;
            const double v = combined_distance(a, b, spec);
            REQUIRE(v == Catch::Approx(at0 + alpha * (at1 - at0)).margin(1e-9));
            REQUIRE(v >= std::min(at0, at1) - 1e-12);
            REQUIRE(v <= std::max(at0, at1) + 1e-12);
        }
    }
}

TEST_CASE("combined distance is symmetric, non-negative and zero on self", "[metric]") {
    Rng rng(5);
    LineSeries a(0, {1.0, -2.0, 0.5, 4.0});
    LineSeries b(1, {0.0, 1.0, 2.5, -1.0});
    for (double alpha : {0.0, 0.3, 0.7, 1.0}) {
        CombinedMetricSpec spec;
        spec.alpha = alpha;
        REQUIRE(combined_distance(a, b, spec) ==
                Catch::Approx(combined_distance(b, a, spec)).margin(1e-12));
        REQUIRE(combined_distance(a, b, spec) >= 0.0);
        REQUIRE(combined_distance(a, a, spec) == 0.0);
    }
}

TEST_CASE("alpha outside [0,1] is rejected", "[metric]") {
    CombinedMetricSpec spec;
    spec.alpha = 1.5;
    REQUIRE_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.alpha = -0.1;
    REQUIRE_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("combined distance rejects length mismatches", "[metric]") {
    CombinedMetricSpec spec;
    REQUIRE_THROWS_AS(
        combined_distance(std::vector<double>{1, 2}, std::vector<double>{1}, spec),
        std::invalid_argument);
}

TEST_CASE("normalized mode divides each term by its dataset median", "[metric]") {
    std::vector<LineSeries> lines;
    lines.emplace_back(0, std::vector<double>{0.0, 0.0, 0.0});
    lines.emplace_back(1, std::vector<double>{1.0, 1.0, 1.0});
    lines.emplace_back(2, std::vector<double>{2.0, 2.0, 2.0});
    CombinedMetricSpec spec;
    spec.scale_mode = ScaleMode::normalized;
    calibrate_scales(spec, lines);
    // Pairwise DTW sums: 3, 6, 3 -> median 3; Euclidean: sqrt(3)*(1, 2, 1).
    REQUIRE(spec.dtw_scale == Catch::Approx(3.0));
    REQUIRE(spec.euc_scale == Catch::Approx(std::sqrt(3.0)));

    spec.alpha = 0.5;
    const double v = combined_distance(lines[0], lines[1], spec);
    REQUIRE(v == Catch::Approx(0.5 * (3.0 / 3.0) + 0.5 * (std::sqrt(3.0) / std::sqrt(3.0))));
}

TEST_CASE("pairwise_combined matches single-pair calls", "[metric]") {
    Rng rng(6);
    std::vector<LineSeries> lines;
    for (std::size_t i = 0; i < 6; ++i) {
        std::vector<double> v(5);
        for (double& x : v) x = rng.uniform(-2, 2);
        lines.emplace_back(i, std::move(v));
    }
    CombinedMetricSpec spec;
    spec.alpha = 0.4;
    const auto m = pairwise_combined(lines, spec, 2);
    for (std::size_t i = 0; i < 6; ++i) {
        REQUIRE(m.at(i, i) == 0.0);
        for (std::size_t j = i + 1; j < 6; ++j) {
            REQUIRE(m.at(i, j) == m.at(j, i));
            REQUIRE(m.at(i, j) == Catch::Approx(combined_distance(lines[i], lines[j], spec)));
        }
    }
}

TEST_CASE("calibration on identical lines falls back to unit scales", "[metric]") {
    std::vector<LineSeries> lines;
    lines.emplace_back(0, std::vector<double>{1.0, 1.0});
    lines.emplace_back(1, std::vector<double>{1.0, 1.0});
    CombinedMetricSpec spec;
    spec.scale_mode = ScaleMode::normalized;
    calibrate_scales(spec, lines);
    REQUIRE(spec.dtw_scale == 1.0);
    REQUIRE(spec.euc_scale == 1.0);
}
