#include "jamesgeo/moduli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace jamesgeo {

namespace {

constexpr std::size_t kProbeMaxUniverse = 24;
constexpr std::size_t kProbeMaxTuples = 5000;

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

std::vector<double> MapSample::realized_distances() const {
    std::vector<double> out;
    out.reserve(pairs_.size());
    for (const auto& p : pairs_) out.push_back(p.source);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double rho_hat(const MapSample& sample, double t) {
    double out = kNoPairs;
    for (const auto& p : sample.pairs()) {
        if (p.source >= t) out = std::min(out, p.target);
    }
    return out;
}

double omega_hat(const MapSample& sample, double t) {
    double out = 0.0;
    for (const auto& p : sample.pairs()) {
        if (p.source <= t) out = std::max(out, p.target);
    }
    return out;
}

ModuliReport compute_moduli(const MapSample& sample, std::vector<double> thresholds) {
    if (thresholds.empty()) thresholds = sample.realized_distances();
    for (double t : thresholds) {
        if (!(t >= 0.0)) throw InvalidInput("moduli thresholds must be non-negative");
    }
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    ModuliReport report;
    report.thresholds = thresholds;
    report.rho_hat.reserve(thresholds.size());
    report.omega_hat.reserve(thresholds.size());
    for (double t : thresholds) {
        report.rho_hat.push_back(rho_hat(sample, t));
        report.omega_hat.push_back(omega_hat(sample, t));
    }
    return report;
}

LipschitzReport lipschitz_constant(const MapSample& sample) {
    LipschitzReport out;
    for (const auto& p : sample.pairs()) {
        if (p.source != std::floor(p.source)) {
            throw PreconditionError("lipschitz_constant expects integer (graph) source distances");
        }
        if (p.source > 0.0) out.max_ratio = std::max(out.max_ratio, p.target / p.source);
    }
    out.omega_one = omega_hat(sample, 1.0);
    if (!nearly_equal(out.omega_one, out.max_ratio)) {
        throw PreconditionError("omega(1) = " + std::to_string(out.omega_one) +
                                " differs from the largest distance ratio " +
                                std::to_string(out.max_ratio) +
                                "; the sample does not contain its geodesics");
    }
    return out;
}

ProbeResult concentration_probe(
    std::span<const int> universe, std::size_t k,
    const std::function<double(const InterlacedTuple&, const InterlacedTuple&)>& image_distance,
    double c, ProbeMode mode) {
    std::vector<int> elements(universe.begin(), universe.end());
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (k == 0 || elements.size() < 2 * k) {
        throw InvalidInput("concentration_probe needs a universe of at least 2k = " +
                           std::to_string(2 * k) + " elements");
    }
    if (elements.size() > kProbeMaxUniverse) {
        throw ResourceError("concentration_probe is capped at a universe of " +
                            std::to_string(kProbeMaxUniverse) + " elements");
    }
    if (mode == ProbeMode::Exhaustive && elements.size() > kExhaustiveProbeMaxUniverse) {
        throw ResourceError("exhaustive concentration_probe is capped at a universe of " +
                            std::to_string(kExhaustiveProbeMaxUniverse) + " elements");
    }

    const auto tuples = enumerate_tuples(elements, k);
    if (tuples.size() > kProbeMaxTuples) {
        throw ResourceError("concentration_probe is capped at " + std::to_string(kProbeMaxTuples) +
                            " tuples, got " + std::to_string(tuples.size()));
    }
    const std::size_t count = tuples.size();

    // Position masks over the universe and the full image distance matrix.
    std::vector<std::uint32_t> masks(count, 0);
    for (std::size_t t = 0; t < count; ++t) {
        for (int v : tuples[t].entries()) {
            const auto pos = std::lower_bound(elements.begin(), elements.end(), v) - elements.begin();
            masks[t] |= std::uint32_t{1} << pos;
        }
    }
    std::vector<double> distance(count * count, 0.0);
    ProbeResult result;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const double d = image_distance(tuples[i], tuples[j]);
            distance[i * count + j] = d;
            distance[j * count + i] = d;
            if (is_adjacent(tuples[i], tuples[j])) result.omega_one = std::max(result.omega_one, d);
        }
    }

    auto diameter = [&](std::uint32_t subset) {
        std::vector<std::size_t> inside;
        for (std::size_t t = 0; t < count; ++t) {
            if ((masks[t] & ~subset) == 0) inside.push_back(t);
        }
        double out = 0.0;
        for (std::size_t a = 0; a < inside.size(); ++a) {
            for (std::size_t b = a + 1; b < inside.size(); ++b) {
                out = std::max(out, distance[inside[a] * count + inside[b]]);
            }
        }
        return out;
    };

    const std::size_t floor_size = 2 * k;
    const std::uint32_t full = (elements.size() == 32) ? ~std::uint32_t{0}
                                                        : (std::uint32_t{1} << elements.size()) - 1;
    std::uint32_t best_subset = full;
    double best = diameter(full);

    if (mode == ProbeMode::Greedy) {
        while (static_cast<std::size_t>(std::popcount(best_subset)) > floor_size) {
            double candidate = best;
            std::size_t drop = elements.size();
            for (std::size_t pos = 0; pos < elements.size(); ++pos) {
                if (!(best_subset & (std::uint32_t{1} << pos))) continue;
                const double d = diameter(best_subset & ~(std::uint32_t{1} << pos));
                if (d < candidate) {
                    candidate = d;
                    drop = pos;
                }
            }
            if (drop == elements.size()) break;
            best_subset &= ~(std::uint32_t{1} << drop);
            best = candidate;
            result.removed.push_back(elements[drop]);
        }
    } else {
        // Diameter only shrinks with the subset, so minimal subsets suffice;
        // ties keep the first subset in mask order.
        best = std::numeric_limits<double>::infinity();
        for (std::uint32_t subset = 0; subset <= full; ++subset) {
            if (static_cast<std::size_t>(std::popcount(subset)) != floor_size) continue;
            const double d = diameter(subset);
            if (d < best) {
                best = d;
                best_subset = subset;
            }
            if (subset == full) break;
        }
    }

    for (std::size_t pos = 0; pos < elements.size(); ++pos) {
        if (best_subset & (std::uint32_t{1} << pos)) result.subset.push_back(elements[pos]);
    }
    result.diameter = best;
    result.concentrated = best <= c * result.omega_one;
    return result;
}

std::vector<EquicoarseRow> equicoarse_report(std::span<const std::size_t> ks,
                                             const std::function<MapSample(std::size_t)>& family) {
    std::vector<EquicoarseRow> rows;
    rows.reserve(ks.size());
    for (std::size_t k : ks) {
        const MapSample sample = family(k);
        EquicoarseRow row;
        row.k = k;
        row.rho_hat_k = rho_hat(sample, static_cast<double>(k));
        row.omega_hat_1 = omega_hat(sample, 1.0);
        if (row.rho_hat_k == 0.0) {
            row.ratio = 0.0;
        } else if (row.omega_hat_1 == 0.0) {
            row.ratio = kNoPairs;
        } else {
            row.ratio = row.rho_hat_k / row.omega_hat_1;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace jamesgeo
