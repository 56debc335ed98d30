#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jamesgeo/error.hpp"
#include "jamesgeo/interlaced.hpp"
#include "jamesgeo/james_tree.hpp"
#include "jamesgeo/moduli.hpp"
#include "jamesgeo/orlicz.hpp"
#include "jamesgeo/samples.hpp"
#include "jamesgeo/sequence.hpp"
#include "jamesgeo/suite.hpp"

namespace py = pybind11;
using namespace jamesgeo;

namespace {

using Tuple = std::vector<int>;
using TreeDict = std::map<std::string, double>;
using SegmentPair = std::pair<std::string, std::string>;

InterlacedTuple tup(const Tuple& v) { return InterlacedTuple(v); }

Tuple untup(const InterlacedTuple& t) { return Tuple(t.entries().begin(), t.entries().end()); }

TreeVec tree(const TreeDict& d, std::size_t depth_cap) {
    TreeVec out(depth_cap);
    for (const auto& [bits, value] : d) out.add(Node(bits), value);
    return out;
}

TreeDict untree(const TreeVec& x) {
    TreeDict out;
    for (const auto& [s, v] : x.entries()) {
        if (v != 0.0) out[s.bits()] = v;
    }
    return out;
}

std::vector<SegmentPair> segments(const std::vector<Segment>& family) {
    std::vector<SegmentPair> out;
    for (const auto& s : family) out.emplace_back(s.lo().bits(), s.hi().bits());
    return out;
}

JtMode jt_mode(const std::string& mode) {
    if (mode == "auto") return JtMode::Auto;
    if (mode == "exhaustive") return JtMode::Exhaustive;
    if (mode == "spider") return JtMode::Spider;
    throw InvalidInput("unknown JT mode '" + mode + "'");
}

MapSample family_sample(const std::string& family, std::size_t k, int max_entry, const std::string& sigma) {
    const auto universe = integer_range(1, max_entry);
    if (family == "summing") return summing_sample(k, universe);
    if (family == "g") return g_sample(Branch(sigma), k, universe);
    if (family == "constant") return constant_sample(k, universe);
    throw InvalidInput("unknown family '" + family + "'");
}

py::dict criterion_dict(const suite::CriterionResult& r) {
    py::dict d;
    d["id"] = r.id;
    d["name"] = r.name;
    d["passed"] = r.passed;
    d["detail"] = r.detail;
    d["seconds"] = r.seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_jamesgeo, m) {
    m.doc() = "Interlaced graphs, James-type norms and branch embeddings";

    // Later registrations are tried first, so subclasses map before the base.
    auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
    py::register_exception<UnsupportedInstance>(m, "UnsupportedInstance", base.ptr());

    // Interlaced graphs.
    m.def("dist", [](const Tuple& n, const Tuple& mm) { return dist(tup(n), tup(mm)); }, py::arg("n"), py::arg("m"));
    m.def("dist_oracle_bfs", [](const Tuple& n, const Tuple& mm) { return dist_oracle_bfs(tup(n), tup(mm)); },
          py::arg("n"), py::arg("m"));
    m.def("is_adjacent", [](const Tuple& n, const Tuple& mm) { return is_adjacent(tup(n), tup(mm)); },
          py::arg("n"), py::arg("m"));
    m.def("walk_profile", [](const Tuple& n, const Tuple& mm) { return walk_profile(tup(n), tup(mm)).values; },
          py::arg("n"), py::arg("m"));
    m.def("geodesic_step", [](const Tuple& n, const Tuple& mm) { return untup(geodesic_step(tup(n), tup(mm))); },
          py::arg("n"), py::arg("m"));
    m.def(
        "geodesic_path",
        [](const Tuple& n, const Tuple& mm) {
            std::vector<Tuple> out;
            for (const auto& t : geodesic_path(tup(n), tup(mm))) out.push_back(untup(t));
            return out;
        },
        py::arg("n"), py::arg("m"));
    m.def(
        "enumerate_tuples",
        [](const std::vector<int>& universe, std::size_t k) {
            std::vector<Tuple> out;
            for (const auto& t : enumerate_tuples(universe, k)) out.push_back(untup(t));
            return out;
        },
        py::arg("universe"), py::arg("k"));

    // Sequence spaces.
    m.def("summing_counts", [](const Tuple& n) { return summing_counts(tup(n)); }, py::arg("n"));
    m.def(
        "summing_distortion",
        [](const Tuple& n, const Tuple& mm) -> std::optional<py::dict> {
            const auto c = summing_distortion_check(tup(n), tup(mm));
            if (!c) return std::nullopt;
            py::dict d;
            d["sup_norm"] = c->sup_norm;
            d["distance"] = c->distance;
            d["profile_span"] = c->profile_span;
            d["ratio"] = c->ratio;
            d["within_bounds"] = c->within_bounds();
            return d;
        },
        py::arg("n"), py::arg("m"));
    m.def("james_norm", [](const std::vector<double>& x, double p, double tail) { return james_norm(FinSeq(x, tail), p); },
          py::arg("x"), py::arg("p") = 2.0, py::arg("tail") = 0.0);
    m.def(
        "james_norm_bruteforce",
        [](const std::vector<double>& x, double p, double tail) { return james_norm_bruteforce(FinSeq(x, tail), p); },
        py::arg("x"), py::arg("p") = 2.0, py::arg("tail") = 0.0);

    // Orlicz functions.
    m.def("orlicz_keys", &builtin_orlicz_keys);
    m.def("modulus_keys", &builtin_modulus_keys);
    m.def(
        "orlicz_norm",
        [](const std::vector<double>& x, const std::string& phi, double power, double tol) {
            return orlicz_norm(x, builtin_orlicz(phi, power), tol);
        },
        py::arg("x"), py::arg("phi") = "identity", py::arg("power") = 2.0, py::arg("tol") = kOrliczDefaultTolerance);
    m.def(
        "n_norm",
        [](const std::vector<double>& s, const std::string& phi, double power, bool unchecked) {
            const auto spec = builtin_orlicz(phi, power);
            return unchecked ? n_norm_unchecked(s, spec.fn) : n_norm(s, spec);
        },
        py::arg("s"), py::arg("phi") = "identity", py::arg("power") = 2.0, py::arg("unchecked") = false);
    m.def(
        "delta_transform",
        [](const std::string& modulus, double t, int steps) { return delta_transform(builtin_modulus(modulus), t, steps); },
        py::arg("modulus"), py::arg("t"), py::arg("steps") = 4096);
    m.def("lp_norm", [](const std::vector<double>& x, double p) { return lp_norm(x, p); }, py::arg("x"), py::arg("p"));

    // James tree.
    m.def(
        "jt_norm",
        [](const TreeDict& x, const std::string& mode, std::size_t depth_cap) {
            const auto r = jt_norm_exact(tree(x, depth_cap), jt_mode(mode));
            return std::make_tuple(r.norm, segments(r.witness), std::string(to_string(r.mode)));
        },
        py::arg("x"), py::arg("mode") = "auto", py::arg("depth_cap") = kDefaultDepthCap);
    m.def(
        "jt_family_value",
        [](const TreeDict& x, const std::vector<SegmentPair>& family) {
            std::vector<Segment> segs;
            for (const auto& [lo, hi] : family) segs.emplace_back(Node(lo), Node(hi));
            std::size_t cap = kDefaultDepthCap;
            for (const auto& [bits, v] : x) cap = std::max(cap, bits.size());
            return jt_family_value(tree(x, cap), segs);
        },
        py::arg("x"), py::arg("family"));
    m.def("g_embed", [](const std::string& sigma, std::size_t k, const Tuple& n) {
        return untree(g_embed(Branch(sigma), k, tup(n)));
    }, py::arg("sigma"), py::arg("k"), py::arg("n"));
    m.def("f_embed", [](const std::string& sigma, std::size_t k, const Tuple& n) {
        return untree(f_embed(Branch(sigma), k, tup(n)));
    }, py::arg("sigma"), py::arg("k"), py::arg("n"));
    m.def(
        "f_separation",
        [](const std::string& sigma, const std::string& tau, std::size_t k, const Tuple& n) {
            return f_separation(Branch(sigma), Branch(tau), k, tup(n));
        },
        py::arg("sigma"), py::arg("tau"), py::arg("k"), py::arg("n"));
    m.def(
        "g_separation",
        [](const std::string& sigma, const std::string& tau, std::size_t k, const Tuple& n) {
            const auto g = g_separation(Branch(sigma), Branch(tau), k, tup(n));
            return std::make_pair(g.pairing, g.jt_norm);
        },
        py::arg("sigma"), py::arg("tau"), py::arg("k"), py::arg("n"));

    // Moduli.
    m.def(
        "moduli",
        [](const std::string& family, std::size_t k, int max_entry, const std::string& sigma) {
            const auto sample = family_sample(family, k, max_entry, sigma);
            const auto r = compute_moduli(sample);
            py::dict d;
            d["thresholds"] = r.thresholds;
            d["rho_hat"] = r.rho_hat;
            d["omega_hat"] = r.omega_hat;
            d["pairs"] = sample.pairs().size();
            return d;
        },
        py::arg("family"), py::arg("k"), py::arg("max_entry"), py::arg("sigma") = "01101001");
    m.def(
        "equicoarse",
        [](const std::string& family, const std::vector<std::size_t>& ks, int max_entry, const std::string& sigma) {
            std::vector<std::tuple<std::size_t, double, double, double>> out;
            const auto rows = equicoarse_report(
                ks, [&](std::size_t k) { return family_sample(family, k, max_entry, sigma); });
            for (const auto& r : rows) out.emplace_back(r.k, r.rho_hat_k, r.omega_hat_1, r.ratio);
            return out;
        },
        py::arg("family"), py::arg("ks"), py::arg("max_entry"), py::arg("sigma") = "01101001");

    // Acceptance suite.
    m.attr("criterion_count") = suite::kCriterionCount;
    m.def(
        "run_criterion",
        [](int id, std::uint64_t seed) {
            suite::Options options;
            options.seed = seed;
            py::gil_scoped_release release;
            auto r = suite::run_criterion(id, options);
            py::gil_scoped_acquire acquire;
            return criterion_dict(r);
        },
        py::arg("id"), py::arg("seed") = suite::Options{}.seed);
}
