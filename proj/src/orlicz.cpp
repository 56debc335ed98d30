#include "jamesgeo/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jamesgeo/error.hpp"

namespace jamesgeo {

namespace {

constexpr int kMaxBracketSteps = 64;
constexpr double kGridLow = 1e-6;
constexpr double kGridHigh = 1e3;
constexpr std::size_t kGridSize = 512;
constexpr double kSlopeLimitSlack = 0.05;
constexpr double kSlopeLimitMinPoint = 100.0;
constexpr double kHypothesisUpperCap = 1e3;
constexpr double kHypothesisLowerFloor = 1e-3;

std::vector<double> geometric_grid(double low, double high, std::size_t count) {
    std::vector<double> out(count);
    const double ratio = std::log(high / low) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = low * std::exp(ratio * static_cast<double>(i));
    out.back() = high;
    return out;
}

bool close_or_below(double lhs, double rhs) {
    return lhs <= rhs + 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

std::string at(double t) { return " at t=" + std::to_string(t); }

}  // namespace

OrliczSpec builtin_orlicz(std::string_view key, double power) {
    if (key == "identity") return {"identity", [](double t) { return t; }, true, true};
    if (key == "square") return {"square", [](double t) { return t * t; }, false, false};
    if (key == "power") {
        if (!(power >= 1.0)) throw InvalidInput("power Orlicz function needs p >= 1");
        const bool linear = power == 1.0;
        return {"power:" + std::to_string(power), [power](double t) { return std::pow(t, power); },
                linear, linear};
    }
    if (key == "sqrt") return {"sqrt", [](double t) { return std::sqrt(t); }, false, false};
    if (key == "log1p") return {"log1p", [](double t) { return std::log1p(t); }, true, false};
    if (key == "t_minus_log1p") {
        return {"t_minus_log1p", [](double t) { return t - std::log1p(t); }, true, true};
    }
    if (key == "soft_abs") {
        // sqrt(1 + t^2) - 1 written to avoid cancellation for small t.
        return {"soft_abs", [](double t) { return t * t / (std::sqrt(1.0 + t * t) + 1.0); }, true,
                true};
    }
    throw InvalidInput("unknown Orlicz function '" + std::string(key) + "'");
}

std::vector<std::string> builtin_orlicz_keys() {
    return {"identity", "square", "power", "sqrt", "log1p", "t_minus_log1p", "soft_abs"};
}

ModulusSpec builtin_modulus(std::string_view key) {
    if (key == "identity") return {"identity", [](double s) { return s; }};
    if (key == "rational") return {"rational", [](double s) { return s * s / (1.0 + s); }};
    if (key == "soft_abs") {
        return {"soft_abs", [](double s) { return s * s / (std::sqrt(1.0 + s * s) + 1.0); }};
    }
    throw InvalidInput("unknown modulus '" + std::string(key) + "'");
}

std::vector<std::string> builtin_modulus_keys() { return {"identity", "rational", "soft_abs"}; }

std::vector<double> default_validation_grid() {
    return geometric_grid(kGridLow, kGridHigh, kGridSize);
}

OrliczValidation validate_orlicz(const OrliczSpec& spec, std::span<const double> grid) {
    OrliczValidation report;
    auto& v = report.violations;
    if (grid.empty()) {
        v.push_back("empty validation grid");
        return report;
    }

    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = spec(grid[i]);
    const double at_zero = spec(0.0);

    report.zero_at_origin = at_zero == 0.0;
    if (!report.zero_at_origin) v.push_back("phi(0) = " + std::to_string(at_zero) + " != 0");

    report.monotone = close_or_below(at_zero, values.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!close_or_below(values[i - 1], values[i])) {
            report.monotone = false;
            v.push_back("decreasing" + at(grid[i]));
            break;
        }
    }

    report.convex = true;
    for (std::size_t i = 0; i < grid.size() && report.convex; ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            const double mid = spec(0.5 * (grid[i] + grid[j]));
            if (!close_or_below(mid, 0.5 * (values[i] + values[j]))) {
                report.convex = false;
                v.push_back("midpoint convexity fails between t=" + std::to_string(grid[i]) +
                            " and t=" + std::to_string(grid[j]));
                break;
            }
        }
    }

    report.unbounded = values.back() >= 1.0;
    if (!report.unbounded) v.push_back("phi stays below 1 on the grid");

    report.one_lipschitz = true;
    double previous_t = 0.0;
    double previous_v = at_zero;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!close_or_below(std::abs(values[i] - previous_v), grid[i] - previous_t)) {
            report.one_lipschitz = false;
            break;
        }
        previous_t = grid[i];
        previous_v = values[i];
    }

    const double top = grid.back();
    report.slope_limit_one =
        top >= kSlopeLimitMinPoint && std::abs(values.back() / top - 1.0) <= kSlopeLimitSlack;

    if (spec.is_one_lipschitz && !report.one_lipschitz) {
        v.push_back("declared 1-Lipschitz but the grid shows a steeper increment");
    }
    if (spec.slope_limit_one && !report.slope_limit_one) {
        v.push_back("declared slope limit 1 but phi(t)/t = " + std::to_string(values.back() / top) +
                    at(top));
    }
    return report;
}

ModulusValidation validate_modulus(const ModulusSpec& mod, std::span<const double> grid) {
    ModulusValidation report;
    auto& v = report.violations;
    if (grid.empty()) {
        v.push_back("empty validation grid");
        return report;
    }
    report.positive = true;
    report.ratio_nondecreasing = true;
    report.ratio_at_most_one = true;
    double previous_ratio = 0.0;
    for (double t : grid) {
        const double value = mod(t);
        const double ratio = value / t;
        if (!(value > 0.0) && report.positive) {
            report.positive = false;
            v.push_back("not positive" + at(t));
        }
        if (!close_or_below(previous_ratio, ratio) && report.ratio_nondecreasing) {
            report.ratio_nondecreasing = false;
            v.push_back("mod(t)/t decreases" + at(t));
        }
        if (!close_or_below(ratio, 1.0) && report.ratio_at_most_one) {
            report.ratio_at_most_one = false;
            v.push_back("mod(t)/t exceeds 1" + at(t));
        }
        previous_ratio = ratio;
    }
    const double top = grid.back();
    report.ratio_tends_to_one =
        top >= kSlopeLimitMinPoint && std::abs(mod(top) / top - 1.0) <= kSlopeLimitSlack;
    if (!report.ratio_tends_to_one) v.push_back("mod(t)/t does not approach 1" + at(top));
    return report;
}

double orlicz_norm(std::span<const double> x, const OrliczSpec& spec, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
    double largest = 0.0;
    for (double c : x) largest = std::max(largest, std::abs(c));
    if (largest == 0.0) return 0.0;

    auto modular = [&](double r) {
        double total = 0.0;
        for (double c : x) total += spec(std::abs(c) / r);
        return total;
    };

    // Invariant once bracketed: modular(lo) > 1 >= modular(hi).
    double lo = largest;
    double hi = largest;
    int steps = 0;
    if (modular(largest) > 1.0) {
        hi = 2.0 * largest;
        while (modular(hi) > 1.0) {
            if (++steps > kMaxBracketSteps) throw ResourceError("Orlicz bracket search did not terminate");
            lo = hi;
            hi *= 2.0;
        }
    } else {
        lo = 0.5 * largest;
        while (modular(lo) <= 1.0) {
            if (++steps > kMaxBracketSteps) throw ResourceError("Orlicz bracket search did not terminate");
            hi = lo;
            lo *= 0.5;
        }
    }

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (modular(mid) <= 1.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

double n_norm_unchecked(std::span<const double> s, const ScalarFn& phi) {
    if (s.empty()) throw InvalidInput("N-norm needs at least one coordinate");
    double acc = std::abs(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) {
        const double t = std::abs(s[i]);
        acc = acc == 0.0 ? t : acc + acc * phi(t / acc);
    }
    return acc;
}

double n_norm(std::span<const double> s, const OrliczSpec& spec) {
    if (!spec.admissible_for_n_norm()) {
        throw InvalidInput("N-norm requires a 1-Lipschitz Orlicz function with phi(t)/t -> 1; '" +
                           spec.name + "' does not declare both");
    }
    return n_norm_unchecked(s, spec.fn);
}

double delta_transform(const ModulusSpec& mod, double t, int steps) {
    if (t < 0.0 || !std::isfinite(t)) throw InvalidInput("delta_transform needs t >= 0");
    if (steps < 16) throw InvalidInput("delta_transform needs at least 16 steps");
    if (t == 0.0) return 0.0;
    const double n = static_cast<double>(steps);
    const double eps = t / (n * n);
    const double h = (t - eps) / n;
    double total = 0.0;
    for (int i = 0; i < steps; ++i) {
        const double s = eps + (static_cast<double>(i) + 0.5) * h;
        total += mod(s) / s;
    }
    return total * h + mod(eps);
}

OrliczSpec delta_orlicz(const ModulusSpec& mod, int steps) {
    const auto grid = default_validation_grid();
    const bool admissible = validate_modulus(mod, grid).admissible();
    return {"delta:" + mod.name, [mod, steps](double t) { return delta_transform(mod, t, steps); },
            admissible, admissible};
}

double lp_norm(std::span<const double> x, double p) {
    double total = 0.0;
    for (double c : x) total += std::pow(std::abs(c), p);
    return std::pow(total, 1.0 / p);
}

CompareReport compare_lp(const OrliczSpec& spec, double p, BoundSide side,
                         std::span<const std::vector<double>> samples, NormKind kind) {
    if (!(p >= 1.0)) throw InvalidInput("compare_lp needs p >= 1");
    CompareReport report;
    const bool upper = side == BoundSide::Upper;

    const auto grid = geometric_grid(kGridLow, 1.0, 256);
    double constant = upper ? 0.0 : std::numeric_limits<double>::infinity();
    for (double t : grid) {
        const double ratio = spec(t) / std::pow(t, p);
        constant = upper ? std::max(constant, ratio) : std::min(constant, ratio);
    }
    report.hypothesis_constant = constant;
    report.applicable = upper ? constant <= kHypothesisUpperCap : constant >= kHypothesisLowerFloor;
    if (!report.applicable) return report;

    report.worst_ratio = upper ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& x = samples[i];
        const double base = lp_norm(x, p);
        if (base == 0.0) continue;
        const double value = kind == NormKind::Orlicz ? orlicz_norm(x, spec) : n_norm(x, spec);
        const double ratio = value / base;
        ++report.evaluated;
        if (upper ? ratio > report.worst_ratio : ratio < report.worst_ratio) {
            report.worst_ratio = ratio;
            report.worst_index = i;
        }
    }
    return report;
}

}  // namespace jamesgeo
