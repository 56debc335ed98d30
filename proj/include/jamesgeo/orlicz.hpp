#pragma once

// Orlicz functions, the Orlicz (Luxemburg) norm on finitely supported
// sequences, the iterated norms N_n^phi, and the delta transform that turns a
// convexity modulus into an Orlicz function.
//
// Function objects are invoked from pure code and may be called concurrently;
// suppliers must make them safe for that.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jamesgeo {

using ScalarFn = std::function<double(double)>;

struct OrliczSpec {
    std::string name;
    ScalarFn fn;
    // Declared, not proven. validate_orlicz measures them on a grid.
    bool is_one_lipschitz = false;
    bool slope_limit_one = false;

    double operator()(double t) const { return fn(t); }
    bool admissible_for_n_norm() const noexcept { return is_one_lipschitz && slope_limit_one; }
};

/// A candidate convexity modulus: positive on (0, inf) with fn(t)/t
/// non-decreasing and tending to 1.
struct ModulusSpec {
    std::string name;
    ScalarFn fn;

    double operator()(double t) const { return fn(t); }
};

/// Built-in fixtures selectable by key:
///   identity       t                    (1-Lipschitz, slope limit 1)
///   square         t^2
///   power          t^p                  (flags set only for p == 1)
///   sqrt           sqrt(t)              (not convex; a negative fixture)
///   log1p          log(1 + t)           (1-Lipschitz, concave, slope limit 0)
///   t_minus_log1p  t - log(1 + t)       (1-Lipschitz, slope limit 1)
///   soft_abs       sqrt(1 + t^2) - 1    (1-Lipschitz, slope limit 1)
/// Throws InvalidInput for unknown keys.
OrliczSpec builtin_orlicz(std::string_view key, double power = 2.0);
std::vector<std::string> builtin_orlicz_keys();

/// Built-in moduli: identity (s), rational (s^2/(1+s)), soft_abs (sqrt(1+s^2)-1).
ModulusSpec builtin_modulus(std::string_view key);
std::vector<std::string> builtin_modulus_keys();

/// 512 geometric points in [1e-6, 1e3].
std::vector<double> default_validation_grid();

struct OrliczValidation {
    bool zero_at_origin = false;
    bool monotone = false;
    bool convex = false;
    bool unbounded = false;
    bool one_lipschitz = false;
    bool slope_limit_one = false;
    std::vector<std::string> violations;

    bool is_orlicz() const noexcept { return zero_at_origin && monotone && convex && unbounded; }
};

/// Checks phi(0) = 0, monotonicity, midpoint convexity over all grid pairs, and
/// the declared flags. The slope limit is measured at the largest grid point
/// and needs that point to be >= 100. Failures are reported, never thrown.
OrliczValidation validate_orlicz(const OrliczSpec& spec, std::span<const double> grid);

struct ModulusValidation {
    bool positive = false;
    bool ratio_nondecreasing = false;
    bool ratio_at_most_one = false;
    bool ratio_tends_to_one = false;
    std::vector<std::string> violations;

    bool admissible() const noexcept {
        return positive && ratio_nondecreasing && ratio_at_most_one && ratio_tends_to_one;
    }
};

ModulusValidation validate_modulus(const ModulusSpec& mod, std::span<const double> grid);

inline constexpr double kOrliczDefaultTolerance = 1e-10;

/// inf { r > 0 : sum phi(|x_n| / r) <= 1 }, to within tol (absolute, on r).
/// The returned value is always feasible. Bracketing starts at max |x_n| and
/// doubles or halves at most 64 times before raising ResourceError.
double orlicz_norm(std::span<const double> x, const OrliczSpec& spec,
                   double tol = kOrliczDefaultTolerance);

/// N_1(s) = |s_1|, N_2(s, t) = |s| + |s| phi(|t|/|s|) (|t| when s = 0), and
/// N_n = N_2(N_{n-1}(s_1..s_{n-1}), s_n). Requires the 1-Lipschitz and
/// slope-limit-one flags; throws InvalidInput otherwise or for an empty s.
double n_norm(std::span<const double> s, const OrliczSpec& spec);

/// The same recursion with no admissibility check, for measuring what happens
/// outside the hypotheses under which N_n is a norm.
double n_norm_unchecked(std::span<const double> s, const ScalarFn& phi);

/// delta(t) = integral_0^t mod(s)/s ds by the composite midpoint rule on
/// [eps, t], eps = t / steps^2, plus mod(eps) for the head (an upper bound of
/// the head since the integrand is non-decreasing). Requires t >= 0 and
/// steps >= 16.
double delta_transform(const ModulusSpec& mod, double t, int steps = 4096);

/// An Orlicz function built from a modulus via delta_transform. Flags are set
/// per the transform's properties for admissible moduli.
OrliczSpec delta_orlicz(const ModulusSpec& mod, int steps = 1024);

enum class BoundSide { Upper, Lower };
enum class NormKind { Orlicz, NNorm };

struct CompareReport {
    bool applicable = false;
    double hypothesis_constant = 0.0;  // max (upper) or min (lower) of phi(t)/t^p on (0, 1]
    double worst_ratio = 0.0;          // max (upper) or min (lower) of ||x||_phi / ||x||_p
    std::size_t worst_index = 0;
    std::size_t evaluated = 0;
};

/// Measures the constant in ||x||_phi <= A ||x||_p (Upper) or
/// ||x||_phi >= a ||x||_p (Lower); with NormKind::NNorm the N-norm replaces
/// the Orlicz norm. The hypothesis phi(t) <= C t^p (resp. >= c t^p) on (0, 1]
/// is checked on 256 geometric points in [1e-6, 1]; it is accepted when
/// C <= 1e3 (resp. c >= 1e-3). When it fails the report is flagged
/// inapplicable and no samples are evaluated.
CompareReport compare_lp(const OrliczSpec& spec, double p, BoundSide side,
                         std::span<const std::vector<double>> samples,
                         NormKind kind = NormKind::Orlicz);

double lp_norm(std::span<const double> x, double p);

}  // namespace jamesgeo
