#pragma once

// Finitely supported real sequences (c_0 / J_p elements) and the James
// p-variation norm.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "jamesgeo/interlaced.hpp"

namespace jamesgeo {

/// x(i) = coeffs[i-1] for 1 <= i <= L, and x(i) = tail for i > L. A nonzero
/// tail models the constant part of an element of J_p** = J_p ⊕ R·1.
class FinSeq {
public:
    FinSeq() = default;
    explicit FinSeq(std::vector<double> coeffs, double tail = 0.0)
        : coeffs_(std::move(coeffs)), tail_(tail) {}
    FinSeq(std::initializer_list<double> coeffs) : coeffs_(coeffs) {}

    /// e_n and s_n (1-based).
    static FinSeq unit(std::size_t n);
    static FinSeq summing(std::size_t n);

    std::size_t length() const noexcept { return coeffs_.size(); }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double tail() const noexcept { return tail_; }

    /// 1-based evaluation; indices past the stored block return the tail.
    double operator()(std::size_t i) const noexcept {
        return i >= 1 && i <= coeffs_.size() ? coeffs_[i - 1] : tail_;
    }

    /// Indices i with x(i) != 0 among 1..L.
    std::vector<std::size_t> support() const;

    FinSeq& operator+=(const FinSeq& other);
    FinSeq& operator*=(double factor);
    friend FinSeq operator+(FinSeq a, const FinSeq& b) { return a += b; }
    friend FinSeq operator-(FinSeq a, const FinSeq& b) {
        FinSeq neg = b;
        neg *= -1.0;
        return a += neg;
    }
    friend FinSeq operator*(double factor, FinSeq a) { return a *= factor; }

    friend bool operator==(const FinSeq&, const FinSeq&) = default;

private:
    std::vector<double> coeffs_;
    double tail_ = 0.0;
};

/// max_i |x(i)|. Requires tail 0.
double sup_norm(const FinSeq& x);

/// f_k(n) = sum_i s_{n_i}, i.e. j -> |{i : n_i >= j}| for j <= n_k.
FinSeq summing_image(const InterlacedTuple& n);

/// Integer form of summing_image, used for exact distortion arithmetic.
std::vector<int> summing_counts(const InterlacedTuple& n);

struct DistortionCheck {
    int sup_norm = 0;       // ||f_k(n) - f_k(m)||_inf
    int distance = 0;       // d_K^k(n, m)
    int profile_span = 0;   // max - min of the coordinatewise difference, trailing 0 included
    double ratio = 0.0;     // sup_norm / distance

    bool within_bounds() const noexcept { return 2 * sup_norm >= distance && sup_norm <= distance; }
    bool profile_identity() const noexcept { return profile_span == distance; }
};

/// Exact integer check of d/2 <= ||f_k(n) - f_k(m)||_inf <= d. Returns
/// std::nullopt when n == m (the ratio is undefined).
std::optional<DistortionCheck> summing_distortion_check(const InterlacedTuple& n,
                                                        const InterlacedTuple& m);

/// Coordinatewise product of summing_image(n) with the indicator of a
/// (restricted to [1, n_k]).
FinSeq m_k_point(const InterlacedTuple& n, std::span<const int> a);

/// Exact J_p norm by dynamic programming over the canonical indices 1..L+1
/// (index L+1 carries the tail value). O(L^2).
double james_norm(const FinSeq& x, double p = 2.0);

/// Exhaustive maximum over every increasing index subset of 1..L+1. Throws
/// ResourceError when L+1 > 16.
double james_norm_bruteforce(const FinSeq& x, double p = 2.0);

inline constexpr std::size_t kJamesBruteforceMaxIndices = 16;

/// ||sum x_i||^p / sum ||x_i||^p for blocks with successive supports. This is
/// a measurement of the block constant; it asserts nothing.
double successive_block_ratio(std::span<const FinSeq> blocks, double p = 2.0);

}  // namespace jamesgeo
