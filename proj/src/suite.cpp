#include "jamesgeo/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "jamesgeo/error.hpp"
#include "jamesgeo/interlaced.hpp"
#include "jamesgeo/james_tree.hpp"
#include "jamesgeo/moduli.hpp"
#include "jamesgeo/orlicz.hpp"
#include "jamesgeo/samples.hpp"
#include "jamesgeo/sequence.hpp"

namespace jamesgeo::suite {

namespace {

using Rng = std::mt19937_64;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void fail_once(const std::string& what) {
        if (passed) detail << "first failure: " << what << "; ";
        passed = false;
    }
};

bool relative_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

std::string fmt(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.6g", v);
    return buffer;
}

double pick_value(Rng& rng) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: return std::uniform_int_distribution<int>(-3, 3)(rng);
        case 1: return std::uniform_int_distribution<int>(-16, 16)(rng) / 8.0;
        default: return std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    }
}

FinSeq random_sequence(Rng& rng, std::size_t max_length) {
    const auto length = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
    std::vector<double> coeffs(length);
    for (double& c : coeffs) c = pick_value(rng);
    return FinSeq(std::move(coeffs));
}

std::vector<double> random_vector(Rng& rng, std::size_t max_length, double scale) {
    const auto length = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
    std::vector<double> out(length);
    std::uniform_real_distribution<double> coordinate(-scale, scale);
    for (double& c : out) c = std::uniform_int_distribution<int>(0, 4)(rng) == 0 ? 0.0 : coordinate(rng);
    return out;
}

Node random_node(Rng& rng, std::size_t max_depth) {
    const auto depth = std::uniform_int_distribution<std::size_t>(0, max_depth)(rng);
    std::string bits;
    for (std::size_t i = 0; i < depth; ++i) bits += std::uniform_int_distribution<int>(0, 1)(rng) ? '1' : '0';
    return Node(bits);
}

TreeVec random_two_branch_vector(Rng& rng, std::size_t max_depth) {
    TreeVec x;
    for (int leg = 0; leg < 2; ++leg) {
        const Node leaf = random_node(rng, max_depth);
        for (std::size_t len = 0; len <= leaf.depth(); ++len) {
            const bool zero = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
            x.set(leaf.prefix(len), zero ? 0.0 : pick_value(rng));
        }
    }
    return x;
}

std::vector<std::pair<InterlacedTuple, InterlacedTuple>> adjacent_pairs(std::size_t k, int max_entry) {
    const auto universe = integer_range(1, max_entry);
    const auto tuples = enumerate_tuples(universe, k);
    std::vector<std::pair<InterlacedTuple, InterlacedTuple>> out;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        for (std::size_t j = i + 1; j < tuples.size(); ++j) {
            if (is_adjacent(tuples[i], tuples[j])) out.emplace_back(tuples[i], tuples[j]);
        }
    }
    return out;
}

Branch flip(const Branch& sigma, std::size_t r) {
    std::string bits = sigma.bits();
    bits[r - 1] = bits[r - 1] == '0' ? '1' : '0';
    return Branch(bits);
}

// 1. Distance formula against breadth-first search.
void distance_oracle(Outcome& out, const Options&) {
    std::size_t pairs = 0;
    const auto universe = integer_range(1, 8);
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto tuples = enumerate_tuples(universe, k);
        for (const auto& n : tuples) {
            for (const auto& m : tuples) {
                ++pairs;
                const int formula = dist(n, m);
                const int oracle = dist_oracle_bfs(n, m);
                if (formula != oracle) {
                    out.fail_once("dist(" + n.to_string() + " ; " + m.to_string() + ") = " +
                                  std::to_string(formula) + ", bfs " + std::to_string(oracle));
                }
            }
        }
    }
    out.detail << pairs << " ordered pairs, k in {1,2,3}, entries <= 8";
}

// 2. Geodesic paths: length equals dist and every step is an edge.
void geodesic_soundness(Outcome& out, const Options&) {
    std::size_t pairs = 0;
    const auto universe = integer_range(1, 8);
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto tuples = enumerate_tuples(universe, k);
        for (const auto& n : tuples) {
            for (const auto& m : tuples) {
                ++pairs;
                const auto path = geodesic_path(n, m);
                bool ok = path.front() == n && path.back() == m &&
                          static_cast<int>(path.size()) - 1 == dist(n, m);
                for (std::size_t i = 1; ok && i < path.size(); ++i) ok = is_adjacent(path[i - 1], path[i]);
                if (!ok) out.fail_once("geodesic " + n.to_string() + " -> " + m.to_string());
            }
        }
    }
    out.detail << pairs << " ordered pairs, k in {1,2,3}, entries <= 8";
}

// 3. diam([{1..2k}]^k) = k.
void diameter(Outcome& out, const Options&) {
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto tuples = enumerate_tuples(integer_range(1, static_cast<int>(2 * k)), k);
        int diam = 0;
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            for (std::size_t j = i + 1; j < tuples.size(); ++j) diam = std::max(diam, dist(tuples[i], tuples[j]));
        }
        out.detail << "k=" << k << ":" << diam << " ";
        if (diam != static_cast<int>(k)) out.fail_once("diameter for k=" + std::to_string(k));
    }
}

// 4. d/2 <= ||f_k(n) - f_k(m)||_inf <= d, exact integers.
void c0_distortion(Outcome& out, const Options&) {
    std::size_t pairs = 0;
    const auto universe = integer_range(1, 10);
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto tuples = enumerate_tuples(universe, k);
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            for (std::size_t j = i + 1; j < tuples.size(); ++j) {
                ++pairs;
                const auto check = summing_distortion_check(tuples[i], tuples[j]);
                if (!check || !check->within_bounds() || !check->profile_identity()) {
                    out.fail_once("pair " + tuples[i].to_string() + " ; " + tuples[j].to_string());
                }
            }
        }
    }
    out.detail << pairs << " pairs, k <= 4, entries <= 10";
}

// 5. James norm: dynamic program against exhaustive enumeration.
void james_oracle(Outcome& out, const Options& options) {
    Rng rng(options.seed + 5);
    double worst = 0.0;
    const double exponents[] = {1.5, 2.0, 3.0};
    for (int i = 0; i < 500; ++i) {
        const FinSeq x = random_sequence(rng, 10);
        for (double p : exponents) {
            const double dp = james_norm(x, p);
            const double brute = james_norm_bruteforce(x, p);
            const double scale = std::max(std::abs(dp), std::abs(brute));
            if (scale > 0) worst = std::max(worst, std::abs(dp - brute) / scale);
            if (!relative_close(dp, brute, 1e-12)) {
                out.fail_once("p=" + fmt(p) + " dp " + fmt(dp) + " brute " + fmt(brute));
            }
        }
    }
    out.detail << "500 sequences x 3 exponents; worst relative gap " << fmt(worst);
}

// 6. James norm axioms and ||s_n|| = 1.
void james_axioms(Outcome& out, const Options& options) {
    Rng rng(options.seed + 6);
    const double exponents[] = {1.5, 2.0, 3.0};
    for (int i = 0; i < 1000; ++i) {
        const double p = exponents[i % 3];
        const FinSeq x = random_sequence(rng, 10);
        const FinSeq y = random_sequence(rng, 10);
        const double lambda = std::uniform_real_distribution<double>(-4.0, 4.0)(rng);
        const double nx = james_norm(x, p);
        if (james_norm(x + y, p) > nx + james_norm(y, p) + 1e-9) out.fail_once("triangle inequality");
        const double scaled = james_norm(lambda * x, p);
        if (std::abs(scaled - std::abs(lambda) * nx) > 1e-9 * std::max(1.0, scaled)) {
            out.fail_once("homogeneity, lambda=" + fmt(lambda));
        }
    }
    for (std::size_t n = 1; n <= 20; ++n) {
        for (double p : exponents) {
            if (james_norm(FinSeq::summing(n), p) != 1.0) out.fail_once("||s_" + std::to_string(n) + "|| != 1");
        }
    }
    out.detail << "1000 triples, ||s_n|| = 1 for n <= 20";
}

// 7. Orlicz norm with phi = t^p is the l_p norm.
void orlicz_lp(Outcome& out, const Options& options) {
    Rng rng(options.seed + 7);
    const double exponents[] = {1.0, 1.5, 2.0, 3.0};
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double p = exponents[i % 4];
        const auto x = random_vector(rng, 20, 10.0);
        const double gap = std::abs(orlicz_norm(x, builtin_orlicz("power", p)) - lp_norm(x, p));
        worst = std::max(worst, gap);
        if (gap > 1e-8) out.fail_once("p=" + fmt(p) + " gap " + fmt(gap));
    }
    out.detail << "200 vectors, worst gap " << fmt(worst);
}

// 8. (1/2)||s||_phi <= N_n(s) <= e ||s||_phi for phi in {t, log(1+t)}.
void n_norm_sandwich(Outcome& out, const Options& options) {
    Rng rng(options.seed + 8);
    const double e = std::exp(1.0);
    const double tol = kOrliczDefaultTolerance;
    for (const char* key : {"identity", "log1p"}) {
        const OrliczSpec spec = builtin_orlicz(key);
        std::size_t violations = 0;
        double low = INFINITY;
        double high = 0.0;
        for (int i = 0; i < 500; ++i) {
            const auto s = random_vector(rng, 20, 5.0);
            const double orlicz = orlicz_norm(s, spec, tol);
            // log(1+t) is outside the hypotheses of n_norm (not convex, slope
            // limit 0), so the recursion is evaluated unchecked.
            const double value = spec.admissible_for_n_norm() ? n_norm(s, spec) : n_norm_unchecked(s, spec.fn);
            if (orlicz > 0) {
                low = std::min(low, value / orlicz);
                high = std::max(high, value / orlicz);
            }
            if (value < 0.5 * (orlicz - tol) || value > e * (orlicz + tol)) ++violations;
        }
        out.detail << key << ": ratio range [" << fmt(low) << ", " << fmt(high) << "], " << violations
                   << " violations; ";
        if (violations) out.fail_once(std::string(key) + " leaves the [1/2, e] band");
    }
    // Informational: a convex function with slope limit 1, for contrast.
    const OrliczSpec convex = builtin_orlicz("t_minus_log1p");
    double low = INFINITY;
    double high = 0.0;
    for (int i = 0; i < 500; ++i) {
        const auto s = random_vector(rng, 20, 5.0);
        const double orlicz = orlicz_norm(s, convex, tol);
        if (orlicz > 0) {
            low = std::min(low, n_norm(s, convex) / orlicz);
            high = std::max(high, n_norm(s, convex) / orlicz);
        }
    }
    out.detail << "info t_minus_log1p: ratio range [" << fmt(low) << ", " << fmt(high) << "]";
}

// 9. N-norms are lattice norms.
void n_norm_lattice(Outcome& out, const Options& options) {
    Rng rng(options.seed + 9);
    const char* keys[] = {"identity", "t_minus_log1p", "soft_abs"};
    for (int i = 0; i < 500; ++i) {
        const OrliczSpec spec = builtin_orlicz(keys[i % 3]);
        const auto t = random_vector(rng, 20, 5.0);
        std::vector<double> s(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) {
            const double shrink = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            const double sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1.0 : -1.0;
            s[j] = sign * shrink * std::abs(t[j]);
        }
        const double small = n_norm(s, spec);
        const double large = n_norm(t, spec);
        if (small > large + 1e-12 * std::max(1.0, large)) {
            out.fail_once(std::string(keys[i % 3]) + ": " + fmt(small) + " > " + fmt(large));
        }
    }
    out.detail << "500 dominated pairs over identity, t_minus_log1p, soft_abs";
}

// 10. delta(t) between mod(t/2) and mod(t), 1% quadrature slack.
void delta_sandwich(Outcome& out, const Options&) {
    for (const char* key : {"identity", "rational"}) {
        const ModulusSpec mod = builtin_modulus(key);
        for (double t : {0.1, 0.5, 1.0, 2.0}) {
            const double delta = delta_transform(mod, t);
            const double lower = mod(t / 2.0);
            const double upper = mod(t);
            if (delta < 0.99 * lower || delta > 1.01 * upper) {
                out.fail_once(std::string(key) + " at t=" + fmt(t) + ": " + fmt(delta) + " not in [" +
                              fmt(lower) + ", " + fmt(upper) + "]");
            }
        }
    }
    out.detail << "moduli identity, rational at t in {0.1, 0.5, 1, 2}";
}

// 11. Spider dynamic program against exhaustive enumeration.
void jt_solvers(Outcome& out, const Options& options) {
    Rng rng(options.seed + 11);
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        const TreeVec x = random_two_branch_vector(rng, kExhaustiveMaxDepth);
        const auto spider = jt_norm_exact(x, JtMode::Spider);
        const auto brute = jt_norm_exact(x, JtMode::Exhaustive);
        const double scale = std::max(spider.norm, brute.norm);
        if (scale > 0) worst = std::max(worst, std::abs(spider.norm - brute.norm) / scale);
        if (!relative_close(spider.norm, brute.norm, 1e-12)) {
            out.fail_once("spider " + fmt(spider.norm) + " vs exhaustive " + fmt(brute.norm));
        }
        for (const auto* r : {&spider, &brute}) {
            if (!relative_close(jt_family_value(x, r->witness), r->norm, 1e-12)) {
                out.fail_once("witness value differs from norm");
            }
        }
    }
    out.detail << "300 two-branch vectors within depth 3; worst relative gap " << fmt(worst);
}

// 12. g_sigma^k: 1-Lipschitz and separated by sqrt(k/2).
void g_certificates(Outcome& out, const Options&) {
    const Branch sigma("01101001");
    double worst_lipschitz = 0.0;
    std::size_t pairs = 0;
    std::size_t separations = 0;
    for (std::size_t k : {1, 2, 4, 6}) {
        for (const auto& [n, m] : adjacent_pairs(k, 8)) {
            ++pairs;
            const double norm = jt_norm_exact(g_embed(sigma, k, n) - g_embed(sigma, k, m), JtMode::Spider).norm;
            worst_lipschitz = std::max(worst_lipschitz, norm);
            if (norm > 1.0 + 1e-9) out.fail_once("||g(n) - g(m)|| = " + fmt(norm));
        }
        const double expected = std::sqrt(static_cast<double>(k) / 2.0);
        for (const auto& n : enumerate_tuples(integer_range(1, 8), k)) {
            for (std::size_t r : {std::size_t{1}, static_cast<std::size_t>(n.front())}) {
                ++separations;
                const auto sep = g_separation(sigma, flip(sigma, r), k, n);
                if (std::abs(sep.pairing - expected) > 1e-12) out.fail_once("pairing " + fmt(sep.pairing));
                if (sep.jt_norm < sep.pairing - 1e-12) out.fail_once("norm below witness pairing");
            }
        }
    }
    out.detail << pairs << " adjacent pairs (max norm " << fmt(worst_lipschitz) << "), " << separations
               << " separations";
}

// 13. f_sigma^k: difference structure and sqrt(k) separation.
void f_certificates(Outcome& out, const Options&) {
    const Branch sigma("011010011001");
    std::size_t pairs = 0;
    std::size_t separations = 0;
    double worst = INFINITY;
    for (std::size_t k = 1; k <= 9; ++k) {
        const int max_entry = std::max(8, static_cast<int>(k) + 3);
        for (const auto& [n, m] : adjacent_pairs(k, max_entry)) {
            ++pairs;
            const auto d = f_difference_segments(sigma, n, m);
            if (!verify_f_decomposition(sigma, n, m, d)) {
                out.fail_once("decomposition " + n.to_string() + " ; " + m.to_string());
            }
        }
        const double expected = std::sqrt(static_cast<double>(k));
        for (const auto& n : enumerate_tuples(integer_range(1, max_entry), k)) {
            for (std::size_t r : {std::size_t{1}, static_cast<std::size_t>(n.front())}) {
                ++separations;
                const double sep = f_separation(sigma, flip(sigma, r), k, n);
                worst = std::min(worst, sep - expected);
                if (sep < expected - 1e-9) out.fail_once("f separation " + fmt(sep));
            }
        }
    }
    out.detail << pairs << " adjacent pairs decomposed, " << separations
               << " separations (min excess " << fmt(worst) << ")";
}

// 14. rho_hat(d) <= image distance <= omega_hat(d) on every pair.
void moduli_sandwich(Outcome& out, const Options&) {
    const auto u8 = integer_range(1, 8);
    const auto u6 = integer_range(1, 6);
    const Branch sigma("01101001");
    std::vector<std::pair<std::string, MapSample>> samples;
    for (std::size_t k = 1; k <= 3; ++k) samples.emplace_back("summing k=" + std::to_string(k), summing_sample(k, u8));
    for (std::size_t k = 1; k <= 3; ++k) samples.emplace_back("g k=" + std::to_string(k), g_sample(sigma, k, u6));
    samples.emplace_back("constant k=2", constant_sample(2, u6));

    std::size_t checked = 0;
    for (const auto& [name, sample] : samples) {
        const auto report = compute_moduli(sample);
        std::map<double, std::size_t> at;
        for (std::size_t i = 0; i < report.thresholds.size(); ++i) at[report.thresholds[i]] = i;
        for (std::size_t i = 1; i < report.thresholds.size(); ++i) {
            if (report.rho_hat[i] < report.rho_hat[i - 1] || report.omega_hat[i] < report.omega_hat[i - 1]) {
                out.fail_once(name + ": moduli not monotone");
            }
        }
        for (const auto& p : sample.pairs()) {
            ++checked;
            const std::size_t i = at.at(p.source);
            if (!(report.rho_hat[i] <= p.target && p.target <= report.omega_hat[i])) {
                out.fail_once(name + ": pair outside [rho, omega]");
            }
        }
    }
    out.detail << samples.size() << " samples, " << checked << " pairs";
}

// 15. rho_hat(k) / omega_hat(1) >= k/2 for the summing family.
void non_concentration(Outcome& out, const Options&) {
    const std::vector<std::size_t> ks{1, 2, 3, 4};
    const auto rows = equicoarse_report(ks, [](std::size_t k) {
        return summing_sample(k, integer_range(1, static_cast<int>(2 * k) + 2));
    });
    for (const auto& row : rows) {
        out.detail << "k=" << row.k << ":" << fmt(row.ratio) << " ";
        if (row.ratio < static_cast<double>(row.k) / 2.0) out.fail_once("ratio below k/2 at k=" + std::to_string(row.k));
    }
}

struct Criterion {
    const char* name;
    double time_limit;
    void (*run)(Outcome&, const Options&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"distance formula equals BFS oracle", 30.0, distance_oracle},
    {"geodesic paths are sound", 30.0, geodesic_soundness},
    {"diam([2k]^k) = k for k <= 5", 0.0, diameter},
    {"c0 summing embedding has distortion <= 2", 60.0, c0_distortion},
    {"James norm DP equals brute force", 60.0, james_oracle},
    {"James norm axioms and ||s_n|| = 1", 0.0, james_axioms},
    {"Orlicz norm of t^p is the l_p norm", 0.0, orlicz_lp},
    {"N-norm sandwich [1/2, e] for t and log(1+t)", 0.0, n_norm_sandwich},
    {"N-norm lattice monotonicity", 0.0, n_norm_lattice},
    {"delta transform sandwich", 0.0, delta_sandwich},
    {"JT spider DP equals exhaustive solver", 120.0, jt_solvers},
    {"g-embedding Lipschitz and separation", 0.0, g_certificates},
    {"f-embedding structure and separation", 0.0, f_certificates},
    {"empirical moduli bracket pair distances", 0.0, moduli_sandwich},
    {"summing family non-concentration signature", 0.0, non_concentration},
};

}  // namespace

CriterionResult run_criterion(int id, const Options& options) {
    if (id < 1 || id > kCriterionCount) throw InvalidInput("no acceptance criterion " + std::to_string(id));
    const Criterion& c = kCriteria[id - 1];
    CriterionResult result;
    result.id = id;
    result.name = c.name;
    result.time_limit = c.time_limit;

    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        c.run(outcome, options);
    } catch (const std::exception& e) {
        outcome.fail_once(std::string("exception: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.passed = outcome.passed;
    if (c.time_limit > 0.0 && result.seconds > c.time_limit) {
        result.passed = false;
        outcome.detail << "; exceeded time limit " << fmt(c.time_limit) << " s";
    }
    result.detail = outcome.detail.str();
    return result;
}

std::vector<CriterionResult> run_all(const Options& options) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
    return out;
}

std::string format_line(const CriterionResult& r) {
    char head[160];
    std::snprintf(head, sizeof head, "[%s] %02d %s (%.2f s): ", r.passed ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.seconds);
    return head + r.detail;
}

}  // namespace jamesgeo::suite
