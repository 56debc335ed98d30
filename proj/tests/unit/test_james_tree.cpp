#include <cmath>
#include <random>

#include "doctest.h"
#include "jamesgeo/error.hpp"
#include "jamesgeo/james_tree.hpp"

using namespace jamesgeo;

namespace {
InterlacedTuple t(std::vector<int> v) { return InterlacedTuple(std::move(v)); }

TreeVec vec(std::initializer_list<std::pair<const char*, double>> entries) {
    TreeVec x;
    for (const auto& [bits, v] : entries) x.add(Node(bits), v);
    return x;
}
}  // namespace

TEST_CASE("nodes and segments") {
    CHECK(Node("01").is_prefix_of(Node("011")));
    CHECK_FALSE(Node("01").is_prefix_of(Node("00")));
    CHECK(common_prefix(Node("0110"), Node("0101")) == Node("01"));
    CHECK_THROWS_AS(Node("012"), InvalidInput);
    CHECK_THROWS_AS(Segment(Node("1"), Node("01")), InvalidInput);

    CHECK(segment_nodes(Segment(Node(), Node())) == std::vector{Node()});
    CHECK(segment_nodes(Segment(Node("0"), Node("00"))) == std::vector{Node("0"), Node("00")});
    CHECK(segment_nodes(Segment(Node(), Node("101"))).size() == 4);

    CHECK(segments_disjoint(Segment(Node("0"), Node("00")), Segment(Node("01"), Node("011"))));
    CHECK_FALSE(segments_disjoint(Segment(Node(), Node("00")), Segment(Node("0"), Node("01"))));
    CHECK(segments_disjoint(Segment(Node(), Node()), Segment(Node("0"), Node("01"))));
}

TEST_CASE("tree vectors respect the depth cap") {
    TreeVec x(2);
    CHECK_NOTHROW(x.set(Node("01"), 1.0));
    CHECK_THROWS_AS(x.set(Node("010"), 1.0), InvalidInput);
}

TEST_CASE("JT norm fixed values") {
    const auto root = jt_norm_exact(TreeVec::unit(Node()));
    CHECK(root.norm == 1.0);
    REQUIRE(root.witness.size() == 1);
    CHECK(root.witness[0] == Segment(Node(), Node()));

    CHECK(jt_norm_exact(vec({{"0", 1}, {"1", 1}})).norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(jt_norm_exact(vec({{"0", 0.5}, {"00", 0.5}})).norm == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(jt_norm_exact(TreeVec()).norm == 0.0);

    // Exhaustive references from tests/oracles/oracles.py.
    const auto mixed = vec({{"", 1}, {"0", -2}, {"00", 1.5}, {"1", 0.5}, {"10", -1}});
    const auto y = vec({{"0", 1}, {"01", 1}, {"1", -1}, {"11", 2}, {"", 0.5}});
    const auto z = vec({{"0", 1}, {"1", 1}, {"00", 1}, {"01", 1}, {"10", 1}, {"11", 1}});
    CHECK(jt_norm_exact(mixed, JtMode::Exhaustive).norm == doctest::Approx(3.08220700148449).epsilon(1e-13));
    CHECK(jt_norm_exact(y, JtMode::Exhaustive).norm == doctest::Approx(3.35410196624968).epsilon(1e-13));
    CHECK(jt_norm_exact(z).norm == doctest::Approx(std::sqrt(10.0)).epsilon(1e-13));
    for (const auto* x : {&mixed, &y, &z}) {
        const auto r = jt_norm_exact(*x);
        CHECK(jt_family_value(*x, r.witness) == doctest::Approx(r.norm).epsilon(1e-14));
    }
}

TEST_CASE("JT solver modes") {
    const auto two_legs = vec({{"", 1}, {"0", -2}, {"00", 1.5}, {"1", 0.5}, {"10", -1}});
    CHECK(jt_norm_exact(two_legs).mode == JtMode::Spider);

    TreeVec deep_three;
    deep_three.add(Node("0000"), 1.0);
    deep_three.add(Node("0100"), 1.0);
    deep_three.add(Node("1000"), 1.0);
    CHECK_THROWS_AS(jt_norm_exact(deep_three), UnsupportedInstance);
    CHECK_THROWS_AS(jt_norm_exact(deep_three, JtMode::Spider), UnsupportedInstance);

    const auto shallow_three = vec({{"00", 1}, {"01", 1}, {"10", 1}});
    CHECK(jt_norm_exact(shallow_three).mode == JtMode::Exhaustive);
    CHECK(jt_norm_exact(shallow_three).norm == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("spider and exhaustive solvers agree on random two-branch vectors") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        TreeVec x;
        for (int leg = 0; leg < 2; ++leg) {
            std::string bits;
            for (int d = 0; d <= 3; ++d) {
                x.set(Node(bits), coeff(rng));
                bits += bit(rng) ? '1' : '0';
            }
        }
        const double spider = jt_norm_exact(x, JtMode::Spider).norm;
        const double brute = jt_norm_exact(x, JtMode::Exhaustive).norm;
        CHECK(spider == doctest::Approx(brute).epsilon(1e-12));
    }
}

TEST_CASE("family value and pairing") {
    const auto x = vec({{"0", 1}, {"01", 2}});
    CHECK(jt_family_value(x, {}) == 0.0);
    CHECK(jt_family_value(x, {Segment(Node("0"), Node("01"))}) == 3.0);
    CHECK_THROWS_AS(jt_family_value(x, {Segment(Node(), Node("0")), Segment(Node("0"), Node("01"))}), InvalidInput);

    CHECK(pair(TreeVec::unit(Node("1")), TreeVec::unit(Node("1"))) == 1.0);
    CHECK(pair(TreeVec::unit(Node("1")), TreeVec::unit(Node("0"))) == 0.0);
    CHECK(pair(TreeVec::indicator(Segment(Node(), Node("01"))), x) == 3.0);
}

TEST_CASE("path optimum") {
    const auto best = path_segments_optimum({1, -2, 3});
    CHECK(best.value == 14.0);
    CHECK(best.intervals.size() == 3);
    CHECK(path_segments_optimum({1, 1, 1}).value == 9.0);
    CHECK(path_segments_optimum({}).value == 0.0);
}

TEST_CASE("g embedding") {
    const Branch zeros = Branch::constant('0', 8);
    const auto g = g_embed(zeros, 2, t({1, 2}));
    CHECK(g(Node("0")) == 0.5);
    CHECK(g(Node("00")) == 0.5);
    CHECK(jt_norm_exact(g).norm == doctest::Approx(1.0).epsilon(1e-15));

    const auto single = g_embed(zeros, 1, t({3}));
    CHECK(single(Node("000")) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(jt_norm_exact(single).norm == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    const Branch sigma("01101001");
    const double diff = jt_norm_exact(g_embed(sigma, 2, t({1, 3})) - g_embed(sigma, 2, t({2, 4}))).norm;
    CHECK(diff <= 1.0 + 1e-12);
    CHECK_THROWS_AS(g_embed(sigma, 3, t({1, 2})), InvalidInput);
}

TEST_CASE("f embedding includes the root") {
    const Branch zeros = Branch::constant('0', 8);
    const auto f1 = f_embed(zeros, 1, t({1}));
    CHECK(f1(Node()) == 1.0);
    CHECK(f1(Node("0")) == 1.0);

    const auto f2 = f_embed(zeros, 2, t({1, 2}));
    CHECK(f2(Node()) == doctest::Approx(2.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(f2(Node("0")) == doctest::Approx(2.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(f2(Node("00")) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("f differences split into disjoint segments") {
    const Branch sigma("0110100110");
    const auto n = t({1, 4, 6});
    const auto m = t({2, 5, 7});
    const auto d = f_difference_segments(sigma, n, m);
    CHECK(d.segments.size() == 3);
    CHECK(d.scale == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(verify_f_decomposition(sigma, n, m, d));
    CHECK_THROWS_AS(f_difference_segments(sigma, t({1, 2}), t({5, 6})), PreconditionError);
}

TEST_CASE("separations") {
    const Branch zeros = Branch::constant('0', 8);
    const Branch ones = Branch::constant('1', 8);
    CHECK(f_separation(zeros, ones, 1, t({1})) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f_separation(zeros, ones, 4, t({1, 2, 3, 4})) >= 2.0 - 1e-12);
    CHECK(f_separation(zeros, zeros, 2, t({1, 2})) == 0.0);
    CHECK_THROWS_AS(f_separation(zeros, Branch("00011111"), 2, t({1, 2})), PreconditionError);

    const auto g2 = g_separation(zeros, ones, 2, t({1, 2}));
    CHECK(g2.pairing == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g2.jt_norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    const auto g8 = g_separation(zeros, ones, 8, t({1, 2, 3, 4, 5, 6, 7, 8}));
    CHECK(g8.pairing == doctest::Approx(2.0).epsilon(1e-15));

    const auto same = g_separation(zeros, zeros, 2, t({1, 2}));
    CHECK(same.pairing == 0.0);
    CHECK(same.jt_norm == 0.0);
}

TEST_CASE("branches") {
    CHECK(first_disagreement(Branch("0110"), Branch("0100")) == 3u);
    CHECK_FALSE(first_disagreement(Branch("01"), Branch("01")));
    CHECK(Branch("0110").restrict_to(2) == Node("01"));
    CHECK_THROWS_AS(Branch("01").restrict_to(3), InvalidInput);
}
