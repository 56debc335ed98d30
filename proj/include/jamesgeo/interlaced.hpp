#pragma once

// Interlaced graphs [N]^k.
//
// Vertices are strictly increasing k-tuples of positive integers. Two distinct
// tuples are adjacent when their entries alternate, n_1 <= m_1 <= n_2 <= ... <=
// n_k <= m_k (or the same with the roles exchanged). The metric is the
// shortest-path distance, which equals max F - min F for the walk profile
// F(i) = sum_{j<=i} 1_n(j) - 1_m(j).

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace jamesgeo {

class InterlacedTuple {
public:
    /// Throws InvalidInput unless entries is non-empty, positive and strictly increasing.
    explicit InterlacedTuple(std::vector<int> entries);
    InterlacedTuple(std::initializer_list<int> entries)
        : InterlacedTuple(std::vector<int>(entries)) {}

    std::size_t arity() const noexcept { return entries_.size(); }
    std::span<const int> entries() const noexcept { return entries_; }
    int operator[](std::size_t i) const { return entries_[i]; }
    int front() const noexcept { return entries_.front(); }
    int back() const noexcept { return entries_.back(); }
    bool contains(int value) const noexcept;

    std::string to_string() const;  // "1,3,4"

    friend bool operator==(const InterlacedTuple&, const InterlacedTuple&) = default;
    friend auto operator<=>(const InterlacedTuple&, const InterlacedTuple&) = default;

private:
    std::vector<int> entries_;
};

/// F(0..L) with L = max(n_k, m_k). F(0) = 0 and F(L) = 0.
struct WalkProfile {
    std::vector<int> values;

    int max() const;
    int min() const;
};

bool is_adjacent(const InterlacedTuple& n, const InterlacedTuple& m);

/// n_1 <= m_1 <= n_2 <= ... <= n_k <= m_k (true for n == m as well).
bool interlaced_before(const InterlacedTuple& n, const InterlacedTuple& m);

WalkProfile walk_profile(const InterlacedTuple& n, const InterlacedTuple& m);

/// Closed-form graph distance, max F - min F.
int dist(const InterlacedTuple& n, const InterlacedTuple& m);

/// Direct evaluation of sup over integer intervals S of ||n ∩ S| - |m ∩ S||.
int dist_by_segments(const InterlacedTuple& n, const InterlacedTuple& m);

/// Breadth-first search over all arity-k tuples drawn from entries(n) ∪ entries(m).
/// Geodesics between n and m never leave that universe, so this is exact.
int dist_oracle_bfs(const InterlacedTuple& n, const InterlacedTuple& m);

/// One step along a geodesic: returns l with dist(n, l) = 1 and
/// dist(l, m) = dist(n, m) - 1. Requires dist(n, m) >= 2.
InterlacedTuple geodesic_step(const InterlacedTuple& n, const InterlacedTuple& m);

/// n = v_0, ..., v_d = m with consecutive vertices adjacent and d = dist(n, m).
std::vector<InterlacedTuple> geodesic_path(const InterlacedTuple& n, const InterlacedTuple& m);

/// All k-subsets of universe, in lexicographic order. Duplicates in the universe
/// are ignored.
std::vector<InterlacedTuple> enumerate_tuples(std::span<const int> universe, std::size_t k);

/// Convenience: the universe {1, ..., max_entry}.
std::vector<int> integer_range(int first, int last);

}  // namespace jamesgeo
