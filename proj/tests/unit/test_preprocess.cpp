#include <catch2/catch_amalgamated.hpp>

#include "lsc/preprocess.hpp"
#include "lsc/random.hpp"
#include "../oracles.hpp"

using namespace lsc;

namespace {

LineSeries make_line(std::vector<double> v) { return LineSeries(0, std::move(v)); }

}  // namespace

TEST_CASE("fit_standardizer uses the population standard deviation", "[preprocess]") {
    const DataMatrix m(3, 1, {1.0, 2.0, 3.0});
    const auto p = fit_standardizer(m);
    REQUIRE(p.means[0] == Catch::Approx(2.0));
    REQUIRE(p.stds[0] == Catch::Approx(std::sqrt(2.0 / 3.0)));
}

TEST_CASE("constant columns standardize to zero", "[preprocess]") {
    const DataMatrix m(3, 1, {5.0, 5.0, 5.0});
    const auto p = fit_standardizer(m);
    REQUIRE(p.means[0] == 5.0);
    REQUIRE(p.stds[0] == 1.0);
    const auto out = apply_standardizer(m, p);
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(out(i, 0) == 0.0);
}

TEST_CASE("standardized output has mean 0 and population std 1", "[preprocess]") {
    Rng rng(3);
    std::vector<double> v(40 * 3);
    for (double& x : v) x = rng.uniform(-5.0, 9.0);
    const DataMatrix m(40, 3, v);
    const auto out = apply_standardizer(m, fit_standardizer(m));
    const auto refit = fit_standardizer(out);
    for (std::size_t j = 0; j < 3; ++j) {
        REQUIRE(refit.means[j] == Catch::Approx(0.0).margin(1e-9));
        REQUIRE(refit.stds[j] == Catch::Approx(1.0).margin(1e-9));
    }
}

TEST_CASE("apply_standardizer matches Eq-style direct formula and identity params", "[preprocess]") {
    const DataMatrix m(3, 1, {1.0, 2.0, 3.0});
    const auto out = apply_standardizer(m, {{2.0}, {std::sqrt(2.0 / 3.0)}});
    REQUIRE(out(0, 0) == Catch::Approx(-1.2247448713915890));
    REQUIRE(out(1, 0) == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(out(2, 0) == Catch::Approx(1.2247448713915890));

    const auto unchanged = apply_standardizer(m, {{0.0}, {1.0}});
    REQUIRE(unchanged == m);

    REQUIRE_THROWS_AS(apply_standardizer(m, {{0.0, 0.0}, {1.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("window-5 order-2 kernel matches the least-squares closed form", "[preprocess][savgol]") {
    const auto k = savgol_kernel({5, 2});
    const std::vector<double> expected{-3.0 / 35, 12.0 / 35, 17.0 / 35, 12.0 / 35, -3.0 / 35};
    const auto closed = oracles::savgol_center_closed_form(5, 2);
    for (std::size_t i = 0; i < 5; ++i) {
        REQUIRE(k.coefficients()[i] == Catch::Approx(expected[i]).margin(1e-12));
        REQUIRE(k.coefficients()[i] == Catch::Approx(closed[i]).margin(1e-12));
    }
}

TEST_CASE("window-3 order-1 kernel is the moving average", "[preprocess][savgol]") {
    const auto k = savgol_kernel({3, 1});
    for (double c : k.coefficients()) REQUIRE(c == Catch::Approx(1.0 / 3.0).margin(1e-12));
}

TEST_CASE("kernels sum to one and are symmetric", "[preprocess][savgol]") {
    for (std::size_t window : {3u, 5u, 7u, 9u, 11u}) {
        for (std::size_t order = 0; order < std::min<std::size_t>(window, 6); ++order) {
            const auto k = savgol_kernel({window, order});
            double sum = 0.0;
            for (double c : k.coefficients()) sum += c;
            REQUIRE(sum == Catch::Approx(1.0).margin(1e-12));
            for (std::size_t i = 0; i < window; ++i)
                REQUIRE(k.coefficients()[i] ==
                        Catch::Approx(k.coefficients()[window - 1 - i]).margin(1e-12));
        }
    }
    REQUIRE_THROWS_AS(savgol_kernel({4, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(savgol_kernel({5, 5}), std::invalid_argument);
}

TEST_CASE("polynomials up to the fit degree pass through unchanged", "[preprocess][savgol]") {
    const auto k = savgol_kernel({5, 2});
    std::vector<double> v(9);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double x = static_cast<double>(i);
        v[i] = 0.5 * x * x - 3.0 * x + 2.0;
    }
    const auto out = smooth_line(make_line(v), k);
    for (std::size_t i = 0; i < v.size(); ++i)
        REQUIRE(out.value(i) == Catch::Approx(v[i]).margin(1e-9));
}

TEST_CASE("an interior impulse spreads with the central weights", "[preprocess][savgol]") {
    const auto k = savgol_kernel({5, 2});
    const auto out = smooth_line(make_line({0, 0, 1, 0, 0}), k);
    REQUIRE(out.value(2) == Catch::Approx(17.0 / 35.0).margin(1e-12));
}

TEST_CASE("constant lines are preserved", "[preprocess][savgol]") {
    const auto k = savgol_kernel({5, 2});
    const auto out = smooth_line(make_line({4.25, 4.25, 4.25, 4.25, 4.25, 4.25}), k);
    for (std::size_t i = 0; i < out.size(); ++i)
        REQUIRE(out.value(i) == Catch::Approx(4.25).margin(1e-12));
}

TEST_CASE("smoothing is linear in its input", "[preprocess][savgol]") {
    const auto k = savgol_kernel({5, 2});
    Rng rng(9);
    std::vector<double> u(12), w(12);
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = rng.uniform(-1, 1);
        w[i] = rng.uniform(-1, 1);
    }
    const double a = 2.5, b = -0.75;
    std::vector<double> mix(12);
    for (std::size_t i = 0; i < u.size(); ++i) mix[i] = a * u[i] + b * w[i];
    const auto su = smooth_line(make_line(u), k);
    const auto sw = smooth_line(make_line(w), k);
    const auto smix = smooth_line(make_line(mix), k);
    for (std::size_t i = 0; i < u.size(); ++i)
        REQUIRE(smix.value(i) == Catch::Approx(a * su.value(i) + b * sw.value(i)).margin(1e-9));
}

TEST_CASE("lines shorter than the window are rejected", "[preprocess][savgol]") {
    const auto k = savgol_kernel({5, 2});
    REQUIRE_THROWS_AS(smooth_line(make_line({1, 2, 3, 4}), k), std::invalid_argument);
}

TEST_CASE("smooth_lines is independent of the thread count", "[preprocess][savgol]") {
    const auto k = savgol_kernel({5, 2});
    Rng rng(21);
    std::vector<LineSeries> lines;
    for (std::size_t i = 0; i < 16; ++i) {
        std::vector<double> v(10);
        for (double& x : v) x = rng.uniform(-3, 3);
        lines.emplace_back(i, std::move(v));
    }
    const auto one = smooth_lines(lines, k, 1);
    const auto four = smooth_lines(lines, k, 4);
    REQUIRE(one == four);
}
