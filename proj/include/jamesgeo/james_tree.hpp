#pragma once

// The dyadic tree T = 2^{<omega}, the James tree norm and the branch
// embeddings of the interlaced graphs into JT and into its predual.
//
// ||x||_JT = sup (sum_i (sum_{s in S_i} x(s))^2)^{1/2} over families of
// pairwise disjoint segments S_i, a segment being the chain of nodes between
// two prefix-comparable nodes.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jamesgeo/interlaced.hpp"

namespace jamesgeo {

inline constexpr std::size_t kDefaultDepthCap = 8;
inline constexpr std::size_t kExhaustiveMaxDepth = 3;

/// A finite 0/1 string; the empty string is the root. s <= t when t extends s.
class Node {
public:
    Node() = default;
    /// Throws InvalidInput on characters other than '0' and '1'.
    explicit Node(std::string bits);

    static Node root() { return Node(); }

    const std::string& bits() const noexcept { return bits_; }
    std::size_t depth() const noexcept { return bits_.size(); }
    bool is_root() const noexcept { return bits_.empty(); }

    /// this <= other in the tree order.
    bool is_prefix_of(const Node& other) const noexcept;
    Node prefix(std::size_t length) const;
    Node child(char bit) const;
    Node parent() const;

    // Lexicographic order on bit strings is a preorder traversal of T.
    friend auto operator<=>(const Node&, const Node&) = default;
    friend bool operator==(const Node&, const Node&) = default;

private:
    std::string bits_;
};

/// Longest common prefix of two nodes.
Node common_prefix(const Node& a, const Node& b);

class Segment {
public:
    /// Throws InvalidInput unless lo is a prefix of hi.
    Segment(Node lo, Node hi);

    const Node& lo() const noexcept { return lo_; }
    const Node& hi() const noexcept { return hi_; }
    std::size_t size() const noexcept { return hi_.depth() - lo_.depth() + 1; }
    bool contains(const Node& s) const noexcept;

    friend bool operator==(const Segment&, const Segment&) = default;

private:
    Node lo_;
    Node hi_;
};

/// The chain lo, ..., hi.
std::vector<Node> segment_nodes(const Segment& seg);

bool segments_disjoint(const Segment& a, const Segment& b);

/// A finitely supported function T -> R. Doubles as a vector of dual
/// coefficients (sum u(s) e*_s) when used on the left of pair().
class TreeVec {
public:
    explicit TreeVec(std::size_t depth_cap = kDefaultDepthCap) : depth_cap_(depth_cap) {}

    static TreeVec unit(const Node& s, std::size_t depth_cap = kDefaultDepthCap);
    /// sum_{s in S} e_s (or e*_s).
    static TreeVec indicator(const Segment& seg, std::size_t depth_cap = kDefaultDepthCap);

    std::size_t depth_cap() const noexcept { return depth_cap_; }
    double operator()(const Node& s) const;
    /// Throws InvalidInput when s is deeper than the depth cap.
    void set(const Node& s, double value);
    void add(const Node& s, double value);

    /// Stored entries (may include explicit zeros), in preorder.
    const std::map<Node, double>& entries() const noexcept { return entries_; }
    /// Nodes with a nonzero value, in preorder.
    std::vector<Node> support() const;

    TreeVec& operator+=(const TreeVec& other);
    TreeVec& operator*=(double factor);
    friend TreeVec operator+(TreeVec a, const TreeVec& b) { return a += b; }
    friend TreeVec operator-(TreeVec a, const TreeVec& b) {
        TreeVec neg = b;
        neg *= -1.0;
        return a += neg;
    }
    friend TreeVec operator*(double factor, TreeVec a) { return a *= factor; }

private:
    std::size_t depth_cap_;
    std::map<Node, double> entries_;
};

/// sigma restricted to its first `length()` digits; a finite stand-in for an
/// infinite branch sigma in 2^omega.
class Branch {
public:
    explicit Branch(std::string bits);
    /// Constant branch c c c ... of the given length.
    static Branch constant(char bit, std::size_t length);

    std::size_t length() const noexcept { return bits_.size(); }
    const std::string& bits() const noexcept { return bits_; }
    /// sigma|n. Throws InvalidInput when n exceeds the stored length.
    Node restrict_to(std::size_t n) const;

    friend bool operator==(const Branch&, const Branch&) = default;

private:
    std::string bits_;
};

/// First 1-based index r with sigma_r != tau_r among the stored digits.
std::optional<std::size_t> first_disagreement(const Branch& sigma, const Branch& tau);

enum class JtMode { Auto, Exhaustive, Spider };

struct JtResult {
    double norm = 0.0;
    std::vector<Segment> witness;  // pairwise disjoint; realizes norm
    JtMode mode = JtMode::Auto;    // solver actually used
};

/// Exact JT norm with a maximizing family.
///
/// Exhaustive: support within depth 3. Enumerates every family of disjoint
/// segments inside the prefix closure of the support (segments leaving that
/// closure only pick up zeros and can be trimmed).
///
/// Spider: support within the union of at most two root branches, any depth.
/// Auto picks spider when it applies, exhaustive otherwise.
///
/// Throws UnsupportedInstance for inputs outside the chosen mode.
JtResult jt_norm_exact(const TreeVec& x, JtMode mode = JtMode::Auto);

/// (sum_i (sum_{s in S_i} x(s))^2)^{1/2}; throws InvalidInput when two
/// segments share a node.
double jt_family_value(const TreeVec& x, const std::vector<Segment>& family);

/// Maximum of sum (interval sum)^2 over families of disjoint intervals of a
/// path, with the maximizing intervals as [first, last] index pairs.
struct PathOptimum {
    double value = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> intervals;
};
PathOptimum path_segments_optimum(const std::vector<double>& values);

/// <u, x> = sum_s u(s) x(s).
double pair(const TreeVec& u, const TreeVec& x);

/// g_sigma^k(n) = (2k)^{-1/2} sum_i e_{sigma|n_i}.
TreeVec g_embed(const Branch& sigma, std::size_t k, const InterlacedTuple& n);

/// f_sigma^k(n) = k^{-1/2} sum_i sum_{s <= sigma|n_i} e*_s, root included.
TreeVec f_embed(const Branch& sigma, std::size_t k, const InterlacedTuple& n);

/// f(m) - f(n) = sign * k^{-1/2} * sum_i 1_{S_i} for interlaced-adjacent n, m,
/// with S_i = {sigma|l : lo_i < l <= hi_i} pairwise disjoint. Empty segments
/// (n_i = m_i) are omitted.
struct FDifferenceDecomposition {
    int sign = 1;
    double scale = 1.0;
    std::vector<Segment> segments;
};
FDifferenceDecomposition f_difference_segments(const Branch& sigma, const InterlacedTuple& n,
                                               const InterlacedTuple& m);

/// Rebuilds f(m) - f(n) from the decomposition and compares coefficientwise
/// within tol; also checks pairwise disjointness and at most k segments.
bool verify_f_decomposition(const Branch& sigma, const InterlacedTuple& n, const InterlacedTuple& m,
                            const FDifferenceDecomposition& d, double tol = 1e-12);

/// <f_sigma(n) - f_tau(n), e_{sigma|n_1}>, which equals sqrt(k) when the
/// branches split at r <= n_1. Returns 0 when the stored branches agree.
/// Throws PreconditionError when they first disagree after n_1.
double f_separation(const Branch& sigma, const Branch& tau, std::size_t k, const InterlacedTuple& n);

struct GSeparation {
    double pairing = 0.0;  // <g_sigma(n) - g_tau(n), sum_{s in S} e*_s>, S = [sigma|n_1, sigma|n_k]
    double jt_norm = 0.0;  // ||g_sigma(n) - g_tau(n)||_JT, exact (spider)
};

GSeparation g_separation(const Branch& sigma, const Branch& tau, std::size_t k,
                         const InterlacedTuple& n);

std::string_view to_string(JtMode mode) noexcept;

}  // namespace jamesgeo
