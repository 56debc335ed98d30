#include <cmath>

#include "doctest.h"
#include "jamesgeo/error.hpp"
#include "jamesgeo/moduli.hpp"
#include "jamesgeo/samples.hpp"

using namespace jamesgeo;

namespace {
double absdiff(double a, double b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("identity map on points of a line") {
    const std::vector<double> points{0, 1, 3, 7};
    const auto sample = MapSample::from(points, absdiff, points, absdiff);
    CHECK(sample.size() == 4);
    CHECK(sample.pairs().size() == 6);
    for (double t : sample.realized_distances()) {
        CHECK(rho_hat(sample, t) >= t);
        CHECK(omega_hat(sample, t) <= t);
    }
    CHECK(rho_hat(sample, 100.0) == kNoPairs);
    CHECK(omega_hat(sample, 0.5) == 0.0);
}

TEST_CASE("sample construction errors") {
    const std::vector<double> one{0};
    CHECK_THROWS_AS(MapSample::from(one, absdiff, one, absdiff), InvalidInput);
    const std::vector<double> two{0, 1};
    CHECK_THROWS_AS(MapSample::from(two, absdiff, one, absdiff), InvalidInput);
}

TEST_CASE("constant map") {
    const auto sample = constant_sample(2, integer_range(1, 6));
    const auto report = compute_moduli(sample);
    for (std::size_t i = 0; i < report.thresholds.size(); ++i) {
        CHECK(report.rho_hat[i] == 0.0);
        CHECK(report.omega_hat[i] == 0.0);
    }
    CHECK(lipschitz_constant(sample).omega_one == 0.0);
}

TEST_CASE("summing embedding of [1..8]^3") {
    const auto sample = summing_sample(3, integer_range(1, 8));
    const auto report = compute_moduli(sample, {1, 2, 3});
    REQUIRE(report.thresholds == std::vector<double>{1, 2, 3});
    for (std::size_t i = 0; i < 3; ++i) {
        const double t = report.thresholds[i];
        CHECK(report.rho_hat[i] >= t / 2.0);
        CHECK(report.omega_hat[i] <= t);
    }
    CHECK(lipschitz_constant(sample).omega_one == 1.0);
    CHECK_THROWS_AS(compute_moduli(sample, {-1.0}), InvalidInput);
}

TEST_CASE("g embeddings are 1-Lipschitz on samples") {
    const Branch sigma("01101001");
    for (std::size_t k : {1, 2, 4}) {
        const auto sample = g_sample(sigma, k, integer_range(1, 7));
        CHECK(lipschitz_constant(sample).omega_one <= 1.0 + 1e-12);
    }
}

TEST_CASE("concentration probe") {
    const auto universe = integer_range(1, 8);
    const auto zero = [](const InterlacedTuple&, const InterlacedTuple&) { return 0.0; };
    const auto flat = concentration_probe(universe, 2, zero, 0.0);
    CHECK(flat.diameter == 0.0);
    CHECK(flat.concentrated);

    const auto u10 = integer_range(1, 10);
    for (std::size_t k : {3, 4}) {
        const auto greedy = concentration_probe(u10, k, summing_distance, 1.0);
        CHECK_FALSE(greedy.concentrated);
        CHECK(greedy.subset.size() >= 2 * k);
    }
    const auto exhaustive = concentration_probe(u10, 3, summing_distance, 1.0, ProbeMode::Exhaustive);
    CHECK_FALSE(exhaustive.concentrated);
    CHECK(exhaustive.subset.size() == 6);

    // Identity on single points with one far outlier at 6.
    const auto outlier = [](const InterlacedTuple& a, const InterlacedTuple& b) {
        auto image = [](int v) { return v == 6 ? 100.0 : static_cast<double>(v); };
        return std::abs(image(a[0]) - image(b[0]));
    };
    const auto probe = concentration_probe(integer_range(1, 6), 1, outlier, 10.0);
    REQUIRE_FALSE(probe.removed.empty());
    CHECK(probe.removed.front() == 6);

    CHECK_THROWS_AS(concentration_probe(integer_range(1, 5), 3, zero, 1.0), InvalidInput);
    CHECK_THROWS_AS(concentration_probe(integer_range(1, 13), 2, zero, 1.0, ProbeMode::Exhaustive), ResourceError);
}

TEST_CASE("equicoarse report") {
    const std::vector<std::size_t> ks{1, 2, 3, 4};
    const auto summing = equicoarse_report(ks, [](std::size_t k) {
        return summing_sample(k, integer_range(1, static_cast<int>(2 * k) + 2));
    });
    REQUIRE(summing.size() == 4);
    for (const auto& row : summing) CHECK(row.ratio >= static_cast<double>(row.k) / 2.0);

    const auto constant = equicoarse_report(ks, [](std::size_t k) {
        return constant_sample(k, integer_range(1, static_cast<int>(2 * k) + 1));
    });
    for (const auto& row : constant) CHECK(row.ratio == 0.0);

    const Branch sigma("01101001");
    const std::vector<std::size_t> gks{1, 2, 4};
    const auto g = equicoarse_report(gks, [&](std::size_t k) { return g_sample(sigma, k, integer_range(1, 8)); });
    for (const auto& row : g) CHECK(row.omega_hat_1 <= 1.0 + 1e-12);
}
