#include <cmath>
#include <random>

#include "doctest.h"
#include "jamesgeo/error.hpp"
#include "jamesgeo/sequence.hpp"

using namespace jamesgeo;

namespace {
InterlacedTuple t(std::vector<int> v) { return InterlacedTuple(std::move(v)); }
}  // namespace

TEST_CASE("sup norm") {
    CHECK(sup_norm(FinSeq{0.0, 0.0}) == 0.0);
    CHECK(sup_norm(FinSeq{2, 1, 1}) == 2.0);
    CHECK(sup_norm(FinSeq{0, -1, 0, 1}) == 1.0);
    CHECK_THROWS_AS(sup_norm(FinSeq({1.0}, 0.5)), InvalidInput);
}

TEST_CASE("summing image") {
    CHECK(summing_image(t({1, 3})) == FinSeq{2, 1, 1});
    CHECK(summing_image(t({1})) == FinSeq{1});
    CHECK(summing_image(t({2, 4})) == FinSeq{2, 2, 1, 1});
    CHECK(summing_counts(t({2, 4})) == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("summing distortion") {
    const auto a = summing_distortion_check(t({1, 3}), t({2, 4}));
    REQUIRE(a);
    CHECK(a->sup_norm == 1);
    CHECK(a->distance == 1);
    CHECK(a->ratio == 1.0);
    const auto b = summing_distortion_check(t({1, 2}), t({3, 4}));
    REQUIRE(b);
    CHECK(b->sup_norm == 2);
    CHECK(b->distance == 2);
    CHECK(b->within_bounds());
    CHECK(b->profile_identity());
    CHECK_FALSE(summing_distortion_check(t({1, 2}), t({1, 2})));
}

TEST_CASE("M_k points") {
    CHECK(m_k_point(t({1, 3}), std::vector<int>{1, 2, 3}) == FinSeq{2, 1, 1});
    CHECK(sup_norm(m_k_point(t({1, 3}), std::vector<int>{})) == 0.0);
    CHECK(m_k_point(t({1, 3}), std::vector<int>{2}) == FinSeq{0, 1, 0});
}

TEST_CASE("James norm fixed values") {
    for (double p : {1.5, 2.0, 3.0}) {
        for (std::size_t n = 1; n <= 20; ++n) CHECK(james_norm(FinSeq::summing(n), p) == 1.0);
    }
    CHECK(james_norm(FinSeq{1, 0, 1}, 2.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(james_norm_bruteforce(FinSeq{1, 0, 1}, 2.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(james_norm(FinSeq{0.0, 0.0}, 2.0) == 0.0);
    CHECK(james_norm_bruteforce(FinSeq::summing(3), 2.0) == 1.0);
    CHECK(james_norm(FinSeq{3, -1, 2}, 2.0) == doctest::Approx(5.3851648071345).epsilon(1e-13));

    // Brute-force reference values from tests/oracles/oracles.py.
    const FinSeq x{0.5, -1, 2, 0, -0.25};
    CHECK(james_norm(x, 1.5) == doctest::Approx(4.80517051633855).epsilon(1e-13));
    CHECK(james_norm(x, 2.0) == doctest::Approx(4.04660351405966).epsilon(1e-13));
    CHECK(james_norm(x, 3.0) == doctest::Approx(3.46998136895599).epsilon(1e-13));
}

TEST_CASE("James norm with a nonzero tail is a seminorm on constants") {
    CHECK(james_norm(FinSeq({1.0, 1.0}, 1.0), 2.0) == 0.0);
    CHECK(james_norm(FinSeq({0.0}, 1.0), 2.0) == 1.0);
}

TEST_CASE("James norm preconditions") {
    CHECK_THROWS_AS(james_norm(FinSeq{1}, 1.0), InvalidInput);
    CHECK_THROWS_AS(james_norm(FinSeq{1}, INFINITY), InvalidInput);
    CHECK_THROWS_AS(james_norm_bruteforce(FinSeq(std::vector<double>(16, 1.0)), 2.0), ResourceError);
    CHECK_NOTHROW(james_norm_bruteforce(FinSeq(std::vector<double>(15, 1.0)), 2.0));
}

TEST_CASE("James dynamic program matches enumeration on random sequences of length 8") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        std::vector<double> v(8);
        for (double& c : v) c = coeff(rng);
        const FinSeq x(v);
        for (double p : {1.5, 2.0, 3.0}) {
            CHECK(james_norm(x, p) == doctest::Approx(james_norm_bruteforce(x, p)).epsilon(1e-12));
        }
    }
}

TEST_CASE("successive block ratio") {
    CHECK(successive_block_ratio(std::vector{FinSeq{1, -2}}, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
    // s_1 and e_3: ||s_1 + e_3|| = sqrt(1 + 1 + 1) and ||s_1||^2 = 1, ||e_3||^2 = 2.
    const std::vector<FinSeq> blocks{FinSeq{1}, FinSeq{0, 0, 1}};
    CHECK(successive_block_ratio(blocks, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(successive_block_ratio(std::vector{FinSeq{0, 1}, FinSeq{1}}, 2.0), InvalidInput);
    CHECK_THROWS_AS(successive_block_ratio(std::vector{FinSeq{0.0}}, 2.0), InvalidInput);
}
