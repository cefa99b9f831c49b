#include <catch2/catch_amalgamated.hpp>

#include "lsc/eval.hpp"
#include "lsc/random.hpp"
#include "../oracles.hpp"

using namespace lsc;

namespace {

LabelVector random_labels(Rng& rng, std::size_t n, std::size_t max_clusters) {
    LabelVector v(n);
    for (auto& x : v) x = static_cast<int>(rng.below(max_clusters));
    return v;
}

LabelVector permuted(const LabelVector& v, Rng& rng) {
    std::vector<int> ids(v.begin(), v.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<int> target = ids;
    rng.shuffle(target);
    std::map<int, int> remap;
    for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = target[i];
    LabelVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = remap[v[i]];
    return out;
}

}  // namespace

TEST_CASE("ARI worked examples", "[eval][ari]") {
    REQUIRE(adjusted_rand_index({0, 1, 0, 2, 1}, {0, 1, 0, 2, 1}) == 1.0);
    REQUIRE(adjusted_rand_index({0, 0, 1, 1}, {1, 1, 0, 0}) == 1.0);
    REQUIRE(adjusted_rand_index({0, 0, 1, 1}, {0, 1, 0, 1}) == Catch::Approx(-0.5));
    REQUIRE_THROWS_AS(adjusted_rand_index({0, 1}, {0}), std::invalid_argument);
    REQUIRE_THROWS_AS(adjusted_rand_index({0}, {0}), std::invalid_argument);
}

TEST_CASE("ARI matches brute-force pair counting", "[eval][ari][oracle]") {
    Rng rng(31);
    for (int rep = 0; rep < 400; ++rep) {
        const std::size_t n = 2 + rng.below(11);
        const auto truth = random_labels(rng, n, 3);
        const auto pred = random_labels(rng, n, 3);
        REQUIRE(adjusted_rand_index(truth, pred) ==
                Catch::Approx(oracles::ari_pair_counting(truth, pred)).margin(1e-9));
    }
}

TEST_CASE("ARI is symmetric and permutation-invariant", "[eval][ari]") {
    Rng rng(32);
    for (int rep = 0; rep < 50; ++rep) {
        const auto truth = random_labels(rng, 14, 3);
        const auto pred = random_labels(rng, 14, 4);
        const double base = adjusted_rand_index(truth, pred);
        REQUIRE(adjusted_rand_index(pred, truth) == Catch::Approx(base).margin(1e-12));
        REQUIRE(adjusted_rand_index(permuted(truth, rng), permuted(pred, rng)) ==
                Catch::Approx(base).margin(1e-12));
    }
}

TEST_CASE("AMI worked examples", "[eval][ami]") {
    REQUIRE(adjusted_mutual_information({0, 1, 2, 0}, {0, 1, 2, 0}) == Catch::Approx(1.0));
    // A single predicted cluster carries no information.
    REQUIRE(adjusted_mutual_information({0, 0, 1, 1}, {0, 0, 0, 0}) ==
            Catch::Approx(0.0).margin(1e-12));
    // Both partitions trivial: identical by convention.
    REQUIRE(adjusted_mutual_information({0, 0, 0}, {1, 1, 1}) == 1.0);
}

TEST_CASE("AMI matches the exact hypergeometric oracle", "[eval][ami][oracle]") {
    const LabelVector truth{0, 0, 1, 1};
    const LabelVector pred{0, 1, 0, 1};
    REQUIRE(adjusted_mutual_information(truth, pred) ==
            Catch::Approx(oracles::ami_oracle(truth, pred)).margin(1e-9));

    Rng rng(33);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 3 + rng.below(14);
        const auto a = random_labels(rng, n, 4);
        const auto b = random_labels(rng, n, 4);
        REQUIRE(adjusted_mutual_information(a, b) ==
                Catch::Approx(oracles::ami_oracle(a, b)).margin(1e-9));
    }
}

TEST_CASE("homogeneity, completeness and V-measure worked examples", "[eval][hcv]") {
    const auto perfect = homogeneity_completeness_v({0, 1, 0, 1}, {0, 1, 0, 1});
    REQUIRE(perfect.homogeneity == Catch::Approx(1.0));
    REQUIRE(perfect.completeness == Catch::Approx(1.0));
    REQUIRE(perfect.v_measure == Catch::Approx(1.0));

    const auto merged = homogeneity_completeness_v({0, 0, 1, 1}, {0, 0, 0, 0});
    REQUIRE(merged.homogeneity == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(merged.completeness == Catch::Approx(1.0));
    REQUIRE(merged.v_measure == Catch::Approx(0.0).margin(1e-12));

    const auto split = homogeneity_completeness_v({0, 0, 1, 1}, {0, 1, 2, 3});
    REQUIRE(split.homogeneity == Catch::Approx(1.0));
    REQUIRE(split.completeness == Catch::Approx(0.5));
    REQUIRE(split.v_measure == Catch::Approx(2.0 / 3.0));
}

TEST_CASE("hcv matches direct entropy computation", "[eval][hcv][oracle]") {
    Rng rng(34);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = 2 + rng.below(12);
        const auto truth = random_labels(rng, n, 3);
        const auto pred = random_labels(rng, n, 3);
        const auto got = homogeneity_completeness_v(truth, pred);
        const auto want = oracles::hcv_direct(truth, pred);
        REQUIRE(got.homogeneity == Catch::Approx(want.h).margin(1e-9));
        REQUIRE(got.completeness == Catch::Approx(want.c).margin(1e-9));
        REQUIRE(got.v_measure == Catch::Approx(want.v).margin(1e-9));
        REQUIRE(got.homogeneity ==
                Catch::Approx(homogeneity_completeness_v(pred, truth).completeness)
                    .margin(1e-12));
    }
}

TEST_CASE("silhouette worked example", "[eval][silhouette]") {
    const DataMatrix data(4, 1, {0.0, 0.1, 10.0, 10.1});
    const LabelVector labels{0, 0, 1, 1};
    const double got = silhouette(data, labels);
    const double p0 = (10.05 - 0.1) / 10.05;
    const double p1 = (9.95 - 0.1) / 9.95;
    REQUIRE(got == Catch::Approx(0.5 * (p0 + p1)).margin(1e-12));
}

TEST_CASE("coincident points per cluster score 1 when clusters are separated", "[eval][silhouette]") {
    const DataMatrix data(4, 1, {1.0, 1.0, 50.0, 50.0});
    REQUIRE(silhouette(data, {0, 0, 1, 1}) == Catch::Approx(1.0));
}

TEST_CASE("splitting one tight blob scores near zero or below", "[eval][silhouette]") {
    Rng rng(35);
    std::vector<double> v(24);
    for (double& x : v) x = rng.uniform(-0.5, 0.5);
    const DataMatrix data(24, 1, v);
    LabelVector labels(24, 0);
    for (std::size_t i = 12; i < 24; ++i) labels[i] = 1;
    REQUIRE(silhouette(data, labels) < 0.15);
}

TEST_CASE("silhouette rejects degenerate inputs and scores singletons zero", "[eval][silhouette]") {
    const DataMatrix data(3, 1, {0.0, 1.0, 2.0});
    REQUIRE_THROWS_AS(silhouette(data, {0, 0, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(silhouette(data, {0, 0}), std::invalid_argument);

    // Two-point clusters plus a singleton: the singleton contributes 0.
    const DataMatrix d2(3, 1, {0.0, 0.2, 9.0});
    const double got = silhouette(d2, {0, 0, 1});
    const double s0 = ((9.0 - 0.0) - 0.2) / 9.0;
    const double s1 = ((8.8 - 0.2)) / 8.8;
    REQUIRE(got == Catch::Approx((s0 + s1 + 0.0) / 3.0).margin(1e-12));
}

TEST_CASE("silhouette matches the two-loop oracle", "[eval][silhouette][oracle]") {
    Rng rng(36);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 6 + rng.below(18);
        std::vector<double> v(n * 3);
        for (double& x : v) x = rng.uniform(-5, 5);
        const DataMatrix data(n, 3, v);
        LabelVector labels = random_labels(rng, n, 3);
        labels[0] = 0;
        labels[1] = 1;  // guarantee two clusters
        const auto dists = pairwise_euclidean(data);
        const double want = oracles::silhouette_two_loop(
            n, labels, [&](std::size_t i, std::size_t j) { return dists.at(i, j); });
        REQUIRE(silhouette(data, labels) == Catch::Approx(want).margin(1e-9));
        REQUIRE(silhouette(data, labels) >= -1.0);
        REQUIRE(silhouette(data, labels) <= 1.0);
    }
}

TEST_CASE("external metrics are invariant under relabeling", "[eval]") {
    Rng rng(37);
    for (int rep = 0; rep < 30; ++rep) {
        const auto truth = random_labels(rng, 16, 3);
        auto pred = random_labels(rng, 16, 3);
        const auto base = evaluate_external(truth, pred);
        const auto same = evaluate_external(permuted(truth, rng), permuted(pred, rng));
        REQUIRE(base.ari == Catch::Approx(same.ari).margin(1e-12));
        REQUIRE(base.ami == Catch::Approx(same.ami).margin(1e-9));
        REQUIRE(base.homogeneity == Catch::Approx(same.homogeneity).margin(1e-12));
        REQUIRE(base.completeness == Catch::Approx(same.completeness).margin(1e-12));
        REQUIRE(base.v_measure == Catch::Approx(same.v_measure).margin(1e-12));
    }
}

TEST_CASE("contingency table marginals add up", "[eval]") {
    const auto t = ContingencyTable::from_labels({0, 0, 1, 1, 2}, {1, 1, 0, 0, 0});
    REQUIRE(t.total == 5);
    std::size_t sum = 0;
    for (const auto& row : t.counts)
        for (auto c : row) sum += c;
    REQUIRE(sum == t.total);
    REQUIRE(t.row_sums == std::vector<std::size_t>{2, 2, 1});
    REQUIRE(t.col_sums == std::vector<std::size_t>{2, 3});
}
