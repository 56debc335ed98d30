#include "jamesgeo/samples.hpp"

#include "jamesgeo/sequence.hpp"

namespace jamesgeo {

namespace {

int graph_distance(const InterlacedTuple& a, const InterlacedTuple& b) { return dist(a, b); }

}  // namespace

double summing_distance(const InterlacedTuple& n, const InterlacedTuple& m) {
    return sup_norm(summing_image(n) - summing_image(m));
}

MapSample summing_sample(std::size_t k, std::span<const int> universe) {
    const auto points = enumerate_tuples(universe, k);
    return MapSample::of_map(points, summing_image, graph_distance,
                             [](const FinSeq& a, const FinSeq& b) { return sup_norm(a - b); });
}

MapSample g_sample(const Branch& sigma, std::size_t k, std::span<const int> universe) {
    const auto points = enumerate_tuples(universe, k);
    return MapSample::of_map(
        points, [&](const InterlacedTuple& n) { return g_embed(sigma, k, n); }, graph_distance,
        [](const TreeVec& a, const TreeVec& b) { return jt_norm_exact(a - b, JtMode::Spider).norm; });
}

MapSample constant_sample(std::size_t k, std::span<const int> universe) {
    const auto points = enumerate_tuples(universe, k);
    return MapSample::of_map(
        points, [](const InterlacedTuple&) { return 0.0; }, graph_distance,
        [](double a, double b) { return a - b < 0 ? b - a : a - b; });
}

}  // namespace jamesgeo
