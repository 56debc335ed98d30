#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jamesgeo/error.hpp"
#include "jamesgeo/interlaced.hpp"
#include "jamesgeo/io.hpp"
#include "jamesgeo/james_tree.hpp"
#include "jamesgeo/moduli.hpp"
#include "jamesgeo/orlicz.hpp"
#include "jamesgeo/samples.hpp"
#include "jamesgeo/sequence.hpp"
#include "jamesgeo/suite.hpp"

namespace jamesgeo::cli {

namespace {

using io::json;
using io::number;

constexpr std::size_t kMaxPairs = 2'000'000;
constexpr std::size_t kMaxSamplePoints = 2'000;

struct Settings {
    std::string out_dir;
    std::uint64_t seed = 20190611;

    // dist
    std::string n, m;
    bool oracle = false;

    // embed-c0
    int k = 2;
    int max_entry = 6;

    // james-norm
    std::string x;
    std::string input;
    double p = 2.0;
    bool bruteforce = false;
    int block_samples = 0;

    // orlicz
    std::string phi = "identity";
    double power = 2.0;
    bool with_n_norm = false;
    bool unchecked = false;
    bool validate = false;
    std::string modulus;
    std::string t_values;
    int steps = 4096;
    double tol = kOrliczDefaultTolerance;

    // jt-norm
    std::string mode = "auto";
    int depth_cap = static_cast<int>(kDefaultDepthCap);

    // jt-embed
    std::string sigma = "01101001";
    std::string tau;

    // moduli
    std::string family = "summing";
    std::string thresholds;
    std::optional<double> probe_c;
    std::string probe_mode = "greedy";
    std::string equicoarse;

    // suite
    bool strict = false;
};

std::string resolved_out_dir(const Settings& s) {
    if (!s.out_dir.empty()) return s.out_dir;
    if (const char* env = std::getenv("JAMESGEO_OUT_DIR"); env && *env) return env;
    return {};
}

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
    std::filesystem::create_directories(dir);
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream file(path);
    if (!file) throw InvalidInput("cannot write '" + path.string() + "'");
    file << content;
}

void write_json(const std::string& dir, const std::string& name, const json& doc) {
    write_file(dir, name, doc.dump(2) + "\n");
}

void write_csv(const std::string& dir, const std::string& name, const io::CsvTable& table, const json& config) {
    std::ostringstream buffer;
    table.write(buffer, config);
    write_file(dir, name, buffer.str());
}

json tuple_list(const std::vector<InterlacedTuple>& tuples) {
    json out = json::array();
    for (const auto& t : tuples) out.push_back(io::to_json(t));
    return out;
}

json segment_list(const std::vector<Segment>& segments) {
    json out = json::array();
    for (const auto& s : segments) out.push_back(io::to_json(s));
    return out;
}

std::vector<int> universe_for(int max_entry) {
    if (max_entry < 1) throw InvalidInput("--max-entry must be at least 1");
    return integer_range(1, max_entry);
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    double out = 1.0;
    for (std::size_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    return static_cast<std::size_t>(std::llround(out));
}

void require_points(int k, int max_entry, std::size_t cap, const char* what) {
    if (k < 1) throw InvalidInput("--k must be at least 1");
    const std::size_t points = binomial(static_cast<std::size_t>(std::max(max_entry, 0)), static_cast<std::size_t>(k));
    if (points > cap) {
        throw ResourceError(std::string(what) + ": [" + std::to_string(max_entry) + "]^" + std::to_string(k) +
                            " has " + std::to_string(points) + " points, cap is " + std::to_string(cap) +
                            "; lower --max-entry or --k");
    }
}

JtMode parse_mode(const std::string& mode) {
    if (mode == "auto") return JtMode::Auto;
    if (mode == "exhaustive") return JtMode::Exhaustive;
    if (mode == "spider") return JtMode::Spider;
    throw InvalidInput("unknown JT mode '" + mode + "' (auto, exhaustive, spider)");
}

// ---------------------------------------------------------------------------

json cmd_dist(const Settings& s) {
    const auto n = io::parse_tuple(s.n);
    const auto m = io::parse_tuple(s.m);
    json config = {{"command", "dist"}, {"n", s.n}, {"m", s.m}, {"oracle", s.oracle}};
    json out = {{"config", config},
                {"distance", dist(n, m)},
                {"adjacent", is_adjacent(n, m)},
                {"profile", walk_profile(n, m).values},
                {"path", tuple_list(geodesic_path(n, m))}};
    if (s.oracle) out["distance_bfs"] = dist_oracle_bfs(n, m);
    return out;
}

json cmd_embed_c0(const Settings& s) {
    json config = {{"command", "embed-c0"}, {"k", s.k}, {"max_entry", s.max_entry}};
    if (!s.n.empty() || !s.m.empty()) {
        const auto n = io::parse_tuple(s.n);
        const auto m = io::parse_tuple(s.m);
        config["n"] = s.n;
        config["m"] = s.m;
        json out = {{"config", config}, {"image_n", io::to_json(summing_image(n))},
                    {"image_m", io::to_json(summing_image(m))}};
        if (const auto check = summing_distortion_check(n, m)) {
            out["distance"] = check->distance;
            out["sup_norm"] = check->sup_norm;
            out["ratio"] = number(check->ratio);
            out["within_bounds"] = check->within_bounds();
            out["profile_identity"] = check->profile_identity();
        } else {
            out["distance"] = 0;
            out["sup_norm"] = 0;
        }
        return out;
    }

    require_points(s.k, s.max_entry, 2 * static_cast<std::size_t>(std::sqrt(static_cast<double>(kMaxPairs))),
                   "embed-c0");
    const auto tuples = enumerate_tuples(universe_for(s.max_entry), static_cast<std::size_t>(s.k));
    io::CsvTable table({"n", "m", "distance", "sup_norm", "ratio", "profile_span"});
    std::size_t pairs = 0;
    std::size_t violations = 0;
    double min_ratio = INFINITY;
    double max_ratio = 0.0;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        for (std::size_t j = i + 1; j < tuples.size(); ++j) {
            const auto check = summing_distortion_check(tuples[i], tuples[j]);
            ++pairs;
            if (!check->within_bounds() || !check->profile_identity()) ++violations;
            min_ratio = std::min(min_ratio, check->ratio);
            max_ratio = std::max(max_ratio, check->ratio);
            table.add_row({tuples[i].to_string(), tuples[j].to_string(), std::to_string(check->distance),
                           std::to_string(check->sup_norm), io::format_number(check->ratio),
                           std::to_string(check->profile_span)});
        }
    }
    json out = {{"config", config},          {"pairs", pairs},
                {"min_ratio", number(pairs ? min_ratio : 0.0)}, {"max_ratio", number(max_ratio)},
                {"violations", violations}};
    if (const auto dir = resolved_out_dir(s); !dir.empty()) {
        write_csv(dir, "embed-c0.csv", table, config);
        out["files"] = {(std::filesystem::path(dir) / "embed-c0.csv").string()};
    }
    return out;
}

json cmd_james_norm(const Settings& s) {
    json config = {{"command", "james-norm"}, {"p", number(s.p)}};
    json out = json::object();
    if (!s.x.empty() || !s.input.empty()) {
        FinSeq x = !s.input.empty() ? io::fin_seq_from_json(io::read_json_file(s.input))
                                    : FinSeq(io::parse_double_list(s.x));
        config[!s.input.empty() ? "input" : "x"] = !s.input.empty() ? s.input : s.x;
        out["x"] = io::to_json(x);
        out["norm"] = number(james_norm(x, s.p));
        if (s.bruteforce) {
            config["bruteforce"] = true;
            out["norm_bruteforce"] = number(james_norm_bruteforce(x, s.p));
        }
    }
    if (s.block_samples > 0) {
        // Random families of 2..4 successive blocks of length 1..4.
        config["block_samples"] = s.block_samples;
        config["seed"] = s.seed;
        std::mt19937_64 rng(s.seed);
        std::uniform_int_distribution<int> count(2, 4);
        std::uniform_int_distribution<int> length(1, 4);
        std::uniform_real_distribution<double> coeff(-1.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < s.block_samples; ++i) {
            std::vector<FinSeq> blocks;
            std::size_t offset = 0;
            const int n_blocks = count(rng);
            for (int b = 0; b < n_blocks; ++b) {
                const auto len = static_cast<std::size_t>(length(rng));
                std::vector<double> coeffs(offset + len, 0.0);
                for (std::size_t j = offset; j < offset + len; ++j) {
                    do coeffs[j] = coeff(rng);
                    while (coeffs[j] == 0.0);
                }
                offset += len;
                blocks.emplace_back(std::move(coeffs));
            }
            worst = std::max(worst, successive_block_ratio(blocks, s.p));
        }
        out["max_block_ratio"] = number(worst);
    }
    if (out.empty()) throw InvalidInput("james-norm needs --x, --input or --block-samples");
    out["config"] = config;
    return out;
}

json cmd_orlicz(const Settings& s) {
    json config = {{"command", "orlicz"}, {"phi", s.phi}, {"power", number(s.power)}, {"tol", number(s.tol)}};
    const OrliczSpec spec = builtin_orlicz(s.phi, s.power);
    json out = {{"phi", spec.name},
                {"one_lipschitz", spec.is_one_lipschitz},
                {"slope_limit_one", spec.slope_limit_one}};

    if (!s.x.empty()) {
        config["x"] = s.x;
        const auto x = io::parse_double_list(s.x);
        out["norm"] = number(orlicz_norm(x, spec, s.tol));
        if (s.with_n_norm) {
            config["n_norm"] = true;
            config["unchecked"] = s.unchecked;
            out["n_norm"] = number(s.unchecked ? n_norm_unchecked(x, spec.fn) : n_norm(x, spec));
        }
    }
    if (s.validate) {
        config["validate"] = true;
        const auto grid = default_validation_grid();
        const auto v = validate_orlicz(spec, grid);
        out["validation"] = {{"zero_at_origin", v.zero_at_origin}, {"monotone", v.monotone},
                             {"convex", v.convex},                 {"unbounded", v.unbounded},
                             {"one_lipschitz", v.one_lipschitz},   {"slope_limit_one", v.slope_limit_one},
                             {"is_orlicz", v.is_orlicz()},         {"violations", v.violations}};
    }
    if (!s.modulus.empty()) {
        config["modulus"] = s.modulus;
        config["steps"] = s.steps;
        config["t"] = s.t_values;
        const ModulusSpec mod = builtin_modulus(s.modulus);
        json rows = json::array();
        for (double t : io::parse_double_list(s.t_values.empty() ? "0.1,0.5,1,2" : s.t_values)) {
            rows.push_back({{"t", number(t)},
                            {"delta", number(delta_transform(mod, t, s.steps))},
                            {"modulus_half", number(mod(t / 2.0))},
                            {"modulus", number(mod(t))}});
        }
        out["delta"] = rows;
    }
    out["config"] = config;
    return out;
}

json cmd_jt_norm(const Settings& s) {
    json config = {{"command", "jt-norm"}, {"mode", s.mode}, {"depth_cap", s.depth_cap}};
    json raw;
    if (!s.input.empty()) {
        config["input"] = s.input;
        raw = io::read_json_file(s.input);
    } else if (!s.x.empty()) {
        config["x"] = s.x;
        try {
            raw = json::parse(s.x);
        } catch (const json::parse_error& e) {
            throw InvalidInput(std::string("malformed JSON in --x: ") + e.what());
        }
    } else {
        throw InvalidInput("jt-norm needs --input or --x");
    }
    if (s.depth_cap < 0) throw InvalidInput("--depth-cap must be non-negative");
    const TreeVec x = io::tree_vec_from_json(raw, static_cast<std::size_t>(s.depth_cap));
    const auto result = jt_norm_exact(x, parse_mode(s.mode));
    return {{"config", config},
            {"norm", number(result.norm)},
            {"witness", segment_list(result.witness)},
            {"solver", to_string(result.mode)}};
}

json cmd_jt_embed(const Settings& s) {
    const Branch sigma(s.sigma);
    const auto k = static_cast<std::size_t>(s.k);
    const auto n = io::parse_tuple(s.n);
    if (n.arity() != k) throw InvalidInput("--n must have --k entries");
    json config = {{"command", "jt-embed"}, {"sigma", s.sigma}, {"k", s.k}, {"n", s.n}};
    json out = {{"g", io::to_json(g_embed(sigma, k, n))}, {"f", io::to_json(f_embed(sigma, k, n))}};
    if (!s.m.empty()) {
        config["m"] = s.m;
        const auto m = io::parse_tuple(s.m);
        out["distance"] = dist(n, m);
        const auto g_diff = jt_norm_exact(g_embed(sigma, k, n) - g_embed(sigma, k, m), JtMode::Spider);
        out["g_difference_norm"] = number(g_diff.norm);
        out["g_difference_witness"] = segment_list(g_diff.witness);
        if (is_adjacent(n, m)) {
            const auto d = f_difference_segments(sigma, n, m);
            out["f_difference"] = {{"sign", d.sign},
                                   {"scale", number(d.scale)},
                                   {"segments", segment_list(d.segments)},
                                   {"verified", verify_f_decomposition(sigma, n, m, d)}};
        }
    }
    if (!s.tau.empty()) {
        config["tau"] = s.tau;
        const Branch tau(s.tau);
        const auto g = g_separation(sigma, tau, k, n);
        out["g_separation"] = {{"pairing", number(g.pairing)}, {"jt_norm", number(g.jt_norm)}};
        out["f_separation"] = number(f_separation(sigma, tau, k, n));
        if (const auto r = first_disagreement(sigma, tau)) out["first_disagreement"] = *r;
    }
    out["config"] = config;
    return out;
}

MapSample family_sample(const std::string& family, const Branch& sigma, std::size_t k, std::span<const int> universe) {
    if (family == "summing") return summing_sample(k, universe);
    if (family == "g") return g_sample(sigma, k, universe);
    if (family == "constant") return constant_sample(k, universe);
    throw InvalidInput("unknown family '" + family + "' (summing, g, constant)");
}

std::function<double(const InterlacedTuple&, const InterlacedTuple&)> family_distance(const std::string& family,
                                                                                      const Branch& sigma,
                                                                                      std::size_t k) {
    if (family == "summing") return summing_distance;
    if (family == "g") {
        return [sigma, k](const InterlacedTuple& a, const InterlacedTuple& b) {
            return jt_norm_exact(g_embed(sigma, k, a) - g_embed(sigma, k, b), JtMode::Spider).norm;
        };
    }
    if (family == "constant") return [](const InterlacedTuple&, const InterlacedTuple&) { return 0.0; };
    throw InvalidInput("unknown family '" + family + "' (summing, g, constant)");
}

json cmd_moduli(const Settings& s) {
    json config = {{"command", "moduli"}, {"family", s.family}, {"k", s.k}, {"max_entry", s.max_entry}};
    if (s.family == "g") config["sigma"] = s.sigma;
    const Branch sigma(s.sigma);
    const auto k = static_cast<std::size_t>(s.k);
    const auto universe = universe_for(s.max_entry);
    require_points(s.k, s.max_entry, kMaxSamplePoints, "moduli");

    const MapSample sample = family_sample(s.family, sigma, k, universe);
    std::vector<double> thresholds;
    if (!s.thresholds.empty()) {
        config["thresholds"] = s.thresholds;
        thresholds = io::parse_double_list(s.thresholds);
    }
    const auto report = compute_moduli(sample, thresholds);
    io::CsvTable table({"t", "rho_hat", "omega_hat"});
    json rows = json::array();
    for (std::size_t i = 0; i < report.thresholds.size(); ++i) {
        rows.push_back({{"t", number(report.thresholds[i])},
                        {"rho_hat", number(report.rho_hat[i])},
                        {"omega_hat", number(report.omega_hat[i])}});
        table.add_row({io::format_number(report.thresholds[i]), io::format_number(report.rho_hat[i]),
                       io::format_number(report.omega_hat[i])});
    }
    json out = {{"points", sample.size()}, {"pairs", sample.pairs().size()}, {"moduli", rows}};
    const auto lip = lipschitz_constant(sample);
    out["lipschitz"] = {{"omega_one", number(lip.omega_one)}, {"max_ratio", number(lip.max_ratio)}};

    if (s.probe_c) {
        config["probe_c"] = number(*s.probe_c);
        config["probe_mode"] = s.probe_mode;
        ProbeMode mode;
        if (s.probe_mode == "greedy") mode = ProbeMode::Greedy;
        else if (s.probe_mode == "exhaustive") mode = ProbeMode::Exhaustive;
        else throw InvalidInput("unknown probe mode '" + s.probe_mode + "' (greedy, exhaustive)");
        const auto probe = concentration_probe(universe, k, family_distance(s.family, sigma, k), *s.probe_c, mode);
        out["probe"] = {{"subset", probe.subset},
                        {"removed", probe.removed},
                        {"diameter", number(probe.diameter)},
                        {"omega_one", number(probe.omega_one)},
                        {"concentrated", probe.concentrated}};
    }

    io::CsvTable eq_table({"k", "rho_hat_k", "omega_hat_1", "ratio"});
    if (!s.equicoarse.empty()) {
        config["equicoarse"] = s.equicoarse;
        std::vector<std::size_t> ks;
        for (int v : io::parse_int_list(s.equicoarse)) {
            if (v < 1) throw InvalidInput("--equicoarse entries must be positive");
            require_points(v, s.max_entry, kMaxSamplePoints, "moduli --equicoarse");
            ks.push_back(static_cast<std::size_t>(v));
        }
        const auto eq = equicoarse_report(
            ks, [&](std::size_t kk) { return family_sample(s.family, sigma, kk, universe); });
        json eq_rows = json::array();
        for (const auto& row : eq) {
            eq_rows.push_back({{"k", row.k},
                               {"rho_hat_k", number(row.rho_hat_k)},
                               {"omega_hat_1", number(row.omega_hat_1)},
                               {"ratio", number(row.ratio)}});
            eq_table.add_row({std::to_string(row.k), io::format_number(row.rho_hat_k),
                              io::format_number(row.omega_hat_1), io::format_number(row.ratio)});
        }
        out["equicoarse"] = eq_rows;
    }

    if (const auto dir = resolved_out_dir(s); !dir.empty()) {
        write_csv(dir, "moduli.csv", table, config);
        json files = {(std::filesystem::path(dir) / "moduli.csv").string()};
        if (eq_table.rows() > 0) {
            write_csv(dir, "equicoarse.csv", eq_table, config);
            files.push_back((std::filesystem::path(dir) / "equicoarse.csv").string());
        }
        out["files"] = files;
    }
    out["config"] = config;
    return out;
}

json cmd_suite(const Settings& s, bool& any_failed) {
    json config = {{"command", "suite"}, {"seed", s.seed}};
    suite::Options options;
    options.seed = s.seed;
    const auto results = suite::run_all(options);

    io::CsvTable table({"id", "name", "passed", "detail"});
    json criteria = json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.passed) ++passed;
        // Timings are left out of the files so reports are byte-identical across runs.
        criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        table.add_row({std::to_string(r.id), r.name, r.passed ? "pass" : "fail", r.detail});
    }
    any_failed = passed != results.size();
    json report = {{"config", config}, {"passed", passed}, {"total", results.size()}, {"criteria", criteria}};
    if (const auto dir = resolved_out_dir(s); !dir.empty()) {
        write_json(dir, "suite.json", report);
        write_csv(dir, "suite.csv", table, config);
        report["files"] = {(std::filesystem::path(dir) / "suite.json").string(),
                           (std::filesystem::path(dir) / "suite.csv").string()};
    }
    return report;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return kInvalidInput;
        case ErrorKind::Precondition: return kPrecondition;
        case ErrorKind::Resource: return kResource;
        case ErrorKind::UnsupportedInstance: return kUnsupported;
    }
    return kInternal;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Interlaced graphs, James-type norms and their embeddings", "jamesgeo"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", s.out_dir, "Output directory for report files (default: $JAMESGEO_OUT_DIR)");
    app.add_option("--seed", s.seed, "Seed for every randomized computation");

    auto* dist_cmd = app.add_subcommand("dist", "Graph distance, walk profile and a geodesic");
    dist_cmd->add_option("--n", s.n, "First tuple, e.g. 1,2")->required();
    dist_cmd->add_option("--m", s.m, "Second tuple, e.g. 3,4")->required();
    dist_cmd->add_flag("--oracle", s.oracle, "Also compute the distance by breadth-first search");

    auto* c0_cmd = app.add_subcommand("embed-c0", "Summing-basis embedding into c0 and its distortion");
    c0_cmd->add_option("--k", s.k, "Arity")->check(CLI::PositiveNumber);
    c0_cmd->add_option("--max-entry", s.max_entry, "Tuples drawn from [1, max-entry]");
    c0_cmd->add_option("--n", s.n, "Single pair mode: first tuple");
    c0_cmd->add_option("--m", s.m, "Single pair mode: second tuple");

    auto* james_cmd = app.add_subcommand("james-norm", "James p-variation norm");
    james_cmd->add_option("--x", s.x, "Coefficients, comma separated");
    james_cmd->add_option("--input", s.input, "FinSeq JSON file");
    james_cmd->add_option("--p", s.p, "Exponent in (1, inf)");
    james_cmd->add_flag("--bruteforce", s.bruteforce, "Also evaluate by exhaustive enumeration");
    james_cmd->add_option("--block-samples", s.block_samples, "Sample successive block families (uses --seed)");

    auto* orlicz_cmd = app.add_subcommand("orlicz", "Orlicz norms, N-norms and the delta transform");
    orlicz_cmd->add_option("--phi", s.phi, "Orlicz function key")
        ->check(CLI::IsMember(builtin_orlicz_keys()));
    orlicz_cmd->add_option("--power", s.power, "Exponent for --phi power");
    orlicz_cmd->add_option("--x", s.x, "Vector, comma separated");
    orlicz_cmd->add_option("--tol", s.tol, "Bisection tolerance");
    orlicz_cmd->add_flag("--n-norm", s.with_n_norm, "Also compute the N-norm");
    orlicz_cmd->add_flag("--unchecked", s.unchecked, "Skip the admissibility check for the N-norm");
    orlicz_cmd->add_flag("--validate", s.validate, "Check the Orlicz axioms on a grid");
    orlicz_cmd->add_option("--modulus", s.modulus, "Modulus key for the delta transform")
        ->check(CLI::IsMember(builtin_modulus_keys()));
    orlicz_cmd->add_option("--t", s.t_values, "Points for the delta transform");
    orlicz_cmd->add_option("--steps", s.steps, "Quadrature steps");

    auto* jt_cmd = app.add_subcommand("jt-norm", "Exact James tree norm with a maximizing family");
    jt_cmd->add_option("--input", s.input, "TreeVec JSON file");
    jt_cmd->add_option("--x", s.x, "TreeVec JSON text");
    jt_cmd->add_option("--mode", s.mode, "auto, exhaustive or spider");
    jt_cmd->add_option("--depth-cap", s.depth_cap, "Maximum node depth accepted");

    auto* embed_cmd = app.add_subcommand("jt-embed", "Branch embeddings into JT and its predual");
    embed_cmd->add_option("--sigma", s.sigma, "Branch as a bit string");
    embed_cmd->add_option("--k", s.k, "Arity")->check(CLI::PositiveNumber);
    embed_cmd->add_option("--n", s.n, "Tuple")->required();
    embed_cmd->add_option("--m", s.m, "Second tuple for difference certificates");
    embed_cmd->add_option("--tau", s.tau, "Second branch for separation certificates");

    auto* moduli_cmd = app.add_subcommand("moduli", "Empirical moduli of an embedding family");
    moduli_cmd->add_option("--family", s.family, "summing, g or constant");
    moduli_cmd->add_option("--k", s.k, "Arity")->check(CLI::PositiveNumber);
    moduli_cmd->add_option("--max-entry", s.max_entry, "Universe [1, max-entry]");
    moduli_cmd->add_option("--sigma", s.sigma, "Branch for the g family");
    moduli_cmd->add_option("--thresholds", s.thresholds, "Source distances (default: all realized)");
    moduli_cmd->add_option("--probe-c", s.probe_c, "Run the concentration probe with this constant");
    moduli_cmd->add_option("--probe-mode", s.probe_mode, "greedy or exhaustive");
    moduli_cmd->add_option("--equicoarse", s.equicoarse, "Arities for the equi-coarse table");

    auto* suite_cmd = app.add_subcommand("suite", "Run every acceptance check");
    suite_cmd->add_flag("--strict", s.strict, "Exit with status 1 when a check fails");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << io::error_object("usage", e.what()).dump() << '\n';
        return kUsage;
    }

    try {
        json result;
        bool any_failed = false;
        if (dist_cmd->parsed()) result = cmd_dist(s);
        else if (c0_cmd->parsed()) result = cmd_embed_c0(s);
        else if (james_cmd->parsed()) result = cmd_james_norm(s);
        else if (orlicz_cmd->parsed()) result = cmd_orlicz(s);
        else if (jt_cmd->parsed()) result = cmd_jt_norm(s);
        else if (embed_cmd->parsed()) result = cmd_jt_embed(s);
        else if (moduli_cmd->parsed()) result = cmd_moduli(s);
        else if (suite_cmd->parsed()) result = cmd_suite(s, any_failed);
        out << result.dump(2) << '\n';
        return s.strict && any_failed ? kChecksFailed : kOk;
    } catch (const Error& e) {
        err << io::error_object(to_string(e.kind()), e.what()).dump() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << io::error_object("internal", e.what()).dump() << '\n';
        return kInternal;
    }
}

}  // namespace jamesgeo::cli
