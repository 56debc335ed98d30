#include "jamesgeo/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "jamesgeo/error.hpp"

namespace jamesgeo {

namespace {

void require_exponent(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw InvalidInput("James exponent p must lie in (1, inf), got " + std::to_string(p));
    }
}

// Canonical index values x(1), ..., x(L), x(L+1) = tail.
std::vector<double> canonical_values(const FinSeq& x) {
    std::vector<double> v(x.coeffs().begin(), x.coeffs().end());
    v.push_back(x.tail());
    return v;
}

}  // namespace

FinSeq FinSeq::unit(std::size_t n) {
    if (n == 0) throw InvalidInput("sequence indices start at 1");
    std::vector<double> c(n, 0.0);
    c[n - 1] = 1.0;
    return FinSeq(std::move(c));
}

FinSeq FinSeq::summing(std::size_t n) {
    if (n == 0) throw InvalidInput("sequence indices start at 1");
    return FinSeq(std::vector<double>(n, 1.0));
}

std::vector<std::size_t> FinSeq::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0.0) out.push_back(i + 1);
    }
    return out;
}

FinSeq& FinSeq::operator+=(const FinSeq& other) {
    const std::size_t len = std::max(coeffs_.size(), other.coeffs_.size());
    std::vector<double> sum(len);
    for (std::size_t i = 1; i <= len; ++i) sum[i - 1] = (*this)(i) + other(i);
    coeffs_ = std::move(sum);
    tail_ += other.tail_;
    return *this;
}

FinSeq& FinSeq::operator*=(double factor) {
    for (double& c : coeffs_) c *= factor;
    tail_ *= factor;
    return *this;
}

double sup_norm(const FinSeq& x) {
    if (x.tail() != 0.0) throw InvalidInput("sup_norm is defined on c_0 elements (tail must be 0)");
    double best = 0.0;
    for (double c : x.coeffs()) best = std::max(best, std::abs(c));
    return best;
}

std::vector<int> summing_counts(const InterlacedTuple& n) {
    std::vector<int> out(static_cast<std::size_t>(n.back()), 0);
    for (int v : n.entries()) {
        for (int j = 1; j <= v; ++j) ++out[j - 1];
    }
    return out;
}

FinSeq summing_image(const InterlacedTuple& n) {
    const auto counts = summing_counts(n);
    return FinSeq(std::vector<double>(counts.begin(), counts.end()));
}

std::optional<DistortionCheck> summing_distortion_check(const InterlacedTuple& n,
                                                        const InterlacedTuple& m) {
    const int d = dist(n, m);  // validates arity
    if (n == m) return std::nullopt;

    const auto fn = summing_counts(n);
    const auto fm = summing_counts(m);
    const std::size_t len = std::max(fn.size(), fm.size());
    int hi = 0;  // the trailing zero coordinate
    int lo = 0;
    int sup = 0;
    for (std::size_t j = 0; j < len; ++j) {
        const int a = j < fn.size() ? fn[j] : 0;
        const int b = j < fm.size() ? fm[j] : 0;
        const int diff = a - b;
        hi = std::max(hi, diff);
        lo = std::min(lo, diff);
        sup = std::max(sup, std::abs(diff));
    }

    DistortionCheck out;
    out.sup_norm = sup;
    out.distance = d;
    out.profile_span = hi - lo;
    out.ratio = static_cast<double>(sup) / static_cast<double>(d);
    return out;
}

FinSeq m_k_point(const InterlacedTuple& n, std::span<const int> a) {
    auto counts = summing_counts(n);
    std::vector<double> out(counts.size(), 0.0);
    for (int j : a) {
        if (j >= 1 && static_cast<std::size_t>(j) <= counts.size()) out[j - 1] = counts[j - 1];
    }
    return FinSeq(std::move(out));
}

double james_norm(const FinSeq& x, double p) {
    require_exponent(p);
    const auto v = canonical_values(x);
    // best[j]: largest sum of |increment|^p over increasing chains ending at j.
    // Every best value is >= 0, so chains may start anywhere.
    std::vector<double> best(v.size(), 0.0);
    double answer = 0.0;
    for (std::size_t j = 1; j < v.size(); ++j) {
        double b = 0.0;
        for (std::size_t i = 0; i < j; ++i) {
            b = std::max(b, std::max(0.0, best[i]) + std::pow(std::abs(v[j] - v[i]), p));
        }
        best[j] = b;
        answer = std::max(answer, b);
    }
    return std::pow(answer, 1.0 / p);
}

double james_norm_bruteforce(const FinSeq& x, double p) {
    require_exponent(p);
    const auto v = canonical_values(x);
    const std::size_t size = v.size();
    if (size > kJamesBruteforceMaxIndices) {
        throw ResourceError("brute-force James norm is capped at " +
                            std::to_string(kJamesBruteforceMaxIndices) + " canonical indices, got " +
                            std::to_string(size));
    }
    double answer = 0.0;
    const unsigned long subsets = 1UL << size;
    for (unsigned long mask = 1; mask < subsets; ++mask) {
        double total = 0.0;
        int previous = -1;
        for (std::size_t i = 0; i < size; ++i) {
            if (!(mask & (1UL << i))) continue;
            if (previous >= 0) total += std::pow(std::abs(v[i] - v[previous]), p);
            previous = static_cast<int>(i);
        }
        answer = std::max(answer, total);
    }
    return std::pow(answer, 1.0 / p);
}

double successive_block_ratio(std::span<const FinSeq> blocks, double p) {
    require_exponent(p);
    if (blocks.empty()) throw InvalidInput("successive_block_ratio needs at least one block");
    std::size_t last_index = 0;
    FinSeq sum;
    double denominator = 0.0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& block = blocks[b];
        if (block.tail() != 0.0) throw InvalidInput("blocks must have tail 0");
        const auto supp = block.support();
        if (supp.empty()) throw InvalidInput("block " + std::to_string(b) + " is zero");
        if (b > 0 && supp.front() <= last_index) {
            throw InvalidInput("block supports are not successive at block " + std::to_string(b));
        }
        last_index = supp.back();
        sum += block;
        denominator += std::pow(james_norm(block, p), p);
    }
    return std::pow(james_norm(sum, p), p) / denominator;
}

}  // namespace jamesgeo
