#pragma once

// Empirical compression and expansion moduli of a map on a finite sample.
//
// For a finite sample these are only bounds on the true moduli: the empirical
// rho is an infimum over fewer pairs (so it can only be larger than rho_f
// restricted to the sample's scale) and the empirical omega a supremum over
// fewer pairs. Read reports accordingly.

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "jamesgeo/error.hpp"
#include "jamesgeo/interlaced.hpp"

namespace jamesgeo {

/// inf over an empty set.
inline constexpr double kNoPairs = std::numeric_limits<double>::infinity();

struct PairDistances {
    std::size_t first = 0;
    std::size_t second = 0;
    double source = 0.0;
    double target = 0.0;
};

/// A map sampled at finitely many points, stored as all unordered pairwise
/// distances (source metric, target metric). Pairs are listed in (i, j), i < j
/// order, so every derived report is deterministic.
class MapSample {
public:
    template <class Point, class Image, class SourceMetric, class TargetMetric>
    static MapSample from(const std::vector<Point>& points, SourceMetric&& d_source,
                          const std::vector<Image>& images, TargetMetric&& d_target) {
        if (points.size() != images.size()) {
            throw InvalidInput("sample needs one image per point");
        }
        if (points.size() < 2) throw InvalidInput("sample needs at least two points");
        MapSample out;
        out.size_ = points.size();
        out.pairs_.reserve(points.size() * (points.size() - 1) / 2);
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                out.pairs_.push_back({i, j, static_cast<double>(d_source(points[i], points[j])),
                                      static_cast<double>(d_target(images[i], images[j]))});
            }
        }
        return out;
    }

    /// Map given by a callable; images are computed once per point.
    template <class Point, class Map, class SourceMetric, class TargetMetric>
    static MapSample of_map(const std::vector<Point>& points, Map&& f, SourceMetric&& d_source,
                            TargetMetric&& d_target) {
        using Image = std::decay_t<decltype(f(points.front()))>;
        std::vector<Image> images;
        images.reserve(points.size());
        for (const auto& p : points) images.push_back(f(p));
        return from(points, d_source, images, d_target);
    }

    std::size_t size() const noexcept { return size_; }
    std::span<const PairDistances> pairs() const noexcept { return pairs_; }

    /// Sorted distinct source distances.
    std::vector<double> realized_distances() const;

private:
    std::size_t size_ = 0;
    std::vector<PairDistances> pairs_;
};

/// inf { d_target : d_source >= t }, or kNoPairs.
double rho_hat(const MapSample& sample, double t);
/// sup { d_target : d_source <= t }, or 0.
double omega_hat(const MapSample& sample, double t);

struct ModuliReport {
    std::vector<double> thresholds;
    std::vector<double> rho_hat;
    std::vector<double> omega_hat;
};

/// Thresholds are sorted and deduplicated; an empty list means every realized
/// source distance. Throws InvalidInput on negative thresholds.
ModuliReport compute_moduli(const MapSample& sample, std::vector<double> thresholds = {});

struct LipschitzReport {
    double omega_one = 0.0;   // omega_hat(1)
    double max_ratio = 0.0;   // max d_target / d_source over pairs
};

/// For a graph-metric source both quantities coincide when every geodesic
/// between sample points stays in the sample; throws PreconditionError when
/// source distances are not integers or the two values differ.
LipschitzReport lipschitz_constant(const MapSample& sample);

enum class ProbeMode { Greedy, Exhaustive };

struct ProbeResult {
    std::vector<int> subset;   // M
    std::vector<int> removed;  // greedy removal order (empty in exhaustive mode)
    double diameter = 0.0;     // diam f([M]^k)
    double omega_one = 0.0;    // omega_f(1) on [U]^k
    bool concentrated = false; // diameter <= c * omega_one
};

inline constexpr std::size_t kExhaustiveProbeMaxUniverse = 12;

/// Finite search for a subset M of the universe on which f([M]^k) is small.
/// Subsets are never shrunk below 2k elements, the smallest size for which
/// [M]^k has graph diameter k. Greedy: repeatedly drop the element whose
/// removal most reduces the image diameter (smallest element on ties) while the
/// diameter strictly decreases. Exhaustive (|U| <= 12): minimum over all
/// 2k-subsets. The flag is an observation about this finite search only.
ProbeResult concentration_probe(std::span<const int> universe, std::size_t k,
                                const std::function<double(const InterlacedTuple&, const InterlacedTuple&)>& image_distance,
                                double c, ProbeMode mode = ProbeMode::Greedy);

struct EquicoarseRow {
    std::size_t k = 0;
    double rho_hat_k = 0.0;    // rho_hat(k)
    double omega_hat_1 = 0.0;  // omega_hat(1)
    double ratio = 0.0;        // rho_hat_k / omega_hat_1; 0 when rho_hat_k == 0
};

/// One row per k; family(k) returns the sample for the arity-k member.
std::vector<EquicoarseRow> equicoarse_report(std::span<const std::size_t> ks,
                                             const std::function<MapSample(std::size_t)>& family);

}  // namespace jamesgeo
