#include "jamesgeo/james_tree.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "jamesgeo/error.hpp"

namespace jamesgeo {

namespace {

void require_bits(const std::string& bits) {
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidInput("tree node bits must be '0' or '1': '" + bits + "'");
    }
}

std::size_t common_prefix_length(const std::string& a, const std::string& b) {
    const std::size_t limit = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < limit && a[i] == b[i]) ++i;
    return i;
}

// Maximal elements of the support under the prefix order.
std::vector<Node> support_leaves(const std::vector<Node>& support) {
    std::vector<Node> leaves;
    for (const auto& s : support) {
        const bool covered = std::any_of(support.begin(), support.end(), [&](const Node& t) {
            return t != s && s.is_prefix_of(t);
        });
        if (!covered) leaves.push_back(s);
    }
    return leaves;
}

// Exhaustive search over disjoint segment families inside a prefix-closed node
// set. Nodes are visited in preorder; each node is unused, opens a segment, or
// extends its parent's segment when the parent is still that segment's bottom
// (so at most one child continues any segment).
class ExhaustiveSolver {
public:
    ExhaustiveSolver(const TreeVec& x, std::vector<Node> nodes) : nodes_(std::move(nodes)) {
        values_.reserve(nodes_.size());
        parent_.reserve(nodes_.size());
        for (const auto& s : nodes_) {
            values_.push_back(x(s));
            if (s.is_root()) {
                parent_.push_back(-1);
            } else {
                const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), s.parent());
                parent_.push_back(static_cast<int>(it - nodes_.begin()));
            }
        }
        assigned_.assign(nodes_.size(), -1);
    }

    JtResult solve() {
        search(0);
        JtResult out;
        out.norm = std::sqrt(best_value_);
        out.mode = JtMode::Exhaustive;
        for (const auto& [top, bottom] : best_family_) out.witness.emplace_back(nodes_[top], nodes_[bottom]);
        return out;
    }

private:
    struct Open {
        std::size_t top;
        std::size_t bottom;
        double sum;
    };

    void search(std::size_t i) {
        if (i == nodes_.size()) {
            double value = 0.0;
            for (const auto& seg : segments_) value += seg.sum * seg.sum;
            if (value > best_value_) {
                best_value_ = value;
                best_family_.clear();
                for (const auto& seg : segments_) best_family_.emplace_back(seg.top, seg.bottom);
            }
            return;
        }

        search(i + 1);  // unused

        segments_.push_back({i, i, values_[i]});
        assigned_[i] = static_cast<int>(segments_.size()) - 1;
        search(i + 1);
        segments_.pop_back();
        assigned_[i] = -1;

        const int parent = parent_[i];
        if (parent >= 0 && assigned_[parent] >= 0) {
            auto& seg = segments_[assigned_[parent]];
            if (seg.bottom == static_cast<std::size_t>(parent)) {
                const double saved_sum = seg.sum;
                seg.bottom = i;
                seg.sum += values_[i];
                assigned_[i] = assigned_[parent];
                search(i + 1);
                auto& restored = segments_[assigned_[parent]];
                restored.bottom = static_cast<std::size_t>(parent);
                restored.sum = saved_sum;
                assigned_[i] = -1;
            }
        }
    }

    std::vector<Node> nodes_;
    std::vector<double> values_;
    std::vector<int> parent_;
    std::vector<int> assigned_;
    std::vector<Open> segments_;
    double best_value_ = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> best_family_;
};

JtResult solve_exhaustive(const TreeVec& x, const std::vector<Node>& support) {
    for (const auto& s : support) {
        if (s.depth() > kExhaustiveMaxDepth) {
            throw UnsupportedInstance("exhaustive JT solver is limited to depth " +
                                      std::to_string(kExhaustiveMaxDepth) + "; node '" + s.bits() +
                                      "' has depth " + std::to_string(s.depth()));
        }
    }
    std::set<Node> closure;
    for (const auto& s : support) {
        for (std::size_t len = 0; len <= s.depth(); ++len) closure.insert(s.prefix(len));
    }
    return ExhaustiveSolver(x, std::vector<Node>(closure.begin(), closure.end())).solve();
}

// Chain of nodes of `leaf` with depth in [from, leaf.depth()].
std::vector<Node> chain(const Node& leaf, std::size_t from) {
    std::vector<Node> out;
    for (std::size_t len = from; len <= leaf.depth(); ++len) out.push_back(leaf.prefix(len));
    return out;
}

PathOptimum optimum_on(const TreeVec& x, const std::vector<Node>& path,
                       std::vector<Segment>& family) {
    std::vector<double> values;
    values.reserve(path.size());
    for (const auto& s : path) values.push_back(x(s));
    auto opt = path_segments_optimum(values);
    for (const auto& [first, last] : opt.intervals) family.emplace_back(path[first], path[last]);
    return opt;
}

// Spider: at most one segment can hold the fork node (two would share it), and
// a segment is a chain, so it continues into at most one leg. Every family is
// therefore a family on stem+leg_a plus a family on leg_b, for one choice of a.
JtResult solve_spider(const TreeVec& x, const std::vector<Node>& support) {
    const auto leaves = support_leaves(support);
    if (leaves.size() > 2) {
        throw UnsupportedInstance("spider JT solver needs support on at most two branches; got " +
                                  std::to_string(leaves.size()) + " leaves");
    }
    JtResult out;
    out.mode = JtMode::Spider;
    if (leaves.empty()) return out;

    if (leaves.size() == 1) {
        const auto opt = optimum_on(x, chain(leaves[0], 0), out.witness);
        out.norm = std::sqrt(opt.value);
        return out;
    }

    const std::size_t fork = common_prefix(leaves[0], leaves[1]).depth();
    double best = -1.0;
    for (std::size_t through = 0; through < 2; ++through) {
        const Node& main_leaf = leaves[through];
        const Node& other_leaf = leaves[1 - through];
        std::vector<Segment> family;
        const double value = optimum_on(x, chain(main_leaf, 0), family).value +
                             optimum_on(x, chain(other_leaf, fork + 1), family).value;
        if (value > best) {
            best = value;
            out.witness = std::move(family);
        }
    }
    out.norm = std::sqrt(best);
    return out;
}

}  // namespace

Node::Node(std::string bits) : bits_(std::move(bits)) { require_bits(bits_); }

bool Node::is_prefix_of(const Node& other) const noexcept {
    return bits_.size() <= other.bits_.size() &&
           std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

Node Node::prefix(std::size_t length) const {
    if (length > bits_.size()) throw InvalidInput("prefix longer than node");
    return Node(bits_.substr(0, length));
}

Node Node::child(char bit) const { return Node(bits_ + bit); }

Node Node::parent() const {
    if (is_root()) throw InvalidInput("the root has no parent");
    return Node(bits_.substr(0, bits_.size() - 1));
}

Node common_prefix(const Node& a, const Node& b) {
    return a.prefix(common_prefix_length(a.bits(), b.bits()));
}

Segment::Segment(Node lo, Node hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!lo_.is_prefix_of(hi_)) {
        throw InvalidInput("segment endpoints must be comparable: '" + lo_.bits() +
                           "' is not a prefix of '" + hi_.bits() + "'");
    }
}

bool Segment::contains(const Node& s) const noexcept {
    return lo_.is_prefix_of(s) && s.is_prefix_of(hi_);
}

std::vector<Node> segment_nodes(const Segment& seg) { return chain(seg.hi(), seg.lo().depth()); }

bool segments_disjoint(const Segment& a, const Segment& b) {
    // A shared node is a common prefix of both tops with depth at least both bottoms.
    const std::size_t shared = common_prefix_length(a.hi().bits(), b.hi().bits());
    return std::max(a.lo().depth(), b.lo().depth()) > shared;
}

TreeVec TreeVec::unit(const Node& s, std::size_t depth_cap) {
    TreeVec out(depth_cap);
    out.set(s, 1.0);
    return out;
}

TreeVec TreeVec::indicator(const Segment& seg, std::size_t depth_cap) {
    TreeVec out(depth_cap);
    for (const auto& s : segment_nodes(seg)) out.set(s, 1.0);
    return out;
}

double TreeVec::operator()(const Node& s) const {
    const auto it = entries_.find(s);
    return it == entries_.end() ? 0.0 : it->second;
}

void TreeVec::set(const Node& s, double value) {
    if (s.depth() > depth_cap_) {
        throw InvalidInput("node '" + s.bits() + "' exceeds depth cap " + std::to_string(depth_cap_));
    }
    entries_[s] = value;
}

void TreeVec::add(const Node& s, double value) { set(s, (*this)(s) + value); }

std::vector<Node> TreeVec::support() const {
    std::vector<Node> out;
    for (const auto& [s, v] : entries_) {
        if (v != 0.0) out.push_back(s);
    }
    return out;
}

TreeVec& TreeVec::operator+=(const TreeVec& other) {
    depth_cap_ = std::max(depth_cap_, other.depth_cap_);
    for (const auto& [s, v] : other.entries_) add(s, v);
    return *this;
}

TreeVec& TreeVec::operator*=(double factor) {
    for (auto& [s, v] : entries_) v *= factor;
    return *this;
}

Branch::Branch(std::string bits) : bits_(std::move(bits)) { require_bits(bits_); }

Branch Branch::constant(char bit, std::size_t length) { return Branch(std::string(length, bit)); }

Node Branch::restrict_to(std::size_t n) const {
    if (n > bits_.size()) {
        throw InvalidInput("branch of length " + std::to_string(bits_.size()) +
                           " is too short for restriction to " + std::to_string(n));
    }
    return Node(bits_.substr(0, n));
}

std::optional<std::size_t> first_disagreement(const Branch& sigma, const Branch& tau) {
    const std::size_t common = common_prefix_length(sigma.bits(), tau.bits());
    if (common == std::min(sigma.length(), tau.length())) return std::nullopt;
    return common + 1;
}

JtResult jt_norm_exact(const TreeVec& x, JtMode mode) {
    const auto support = x.support();
    switch (mode) {
        case JtMode::Exhaustive:
            return solve_exhaustive(x, support);
        case JtMode::Spider:
            return solve_spider(x, support);
        case JtMode::Auto:
            break;
    }
    if (support_leaves(support).size() <= 2) return solve_spider(x, support);
    const bool shallow = std::all_of(support.begin(), support.end(), [](const Node& s) {
        return s.depth() <= kExhaustiveMaxDepth;
    });
    if (shallow) return solve_exhaustive(x, support);
    throw UnsupportedInstance(
        "JT norm is computed exactly only for support within depth " +
        std::to_string(kExhaustiveMaxDepth) + " or on at most two branches");
}

double jt_family_value(const TreeVec& x, const std::vector<Segment>& family) {
    double total = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (!segments_disjoint(family[i], family[j])) {
                throw InvalidInput("segments " + std::to_string(i) + " and " + std::to_string(j) +
                                   " overlap");
            }
        }
        double sum = 0.0;
        for (const auto& s : segment_nodes(family[i])) sum += x(s);
        total += sum * sum;
    }
    return std::sqrt(total);
}

PathOptimum path_segments_optimum(const std::vector<double>& values) {
    const std::size_t len = values.size();
    std::vector<double> prefix(len + 1, 0.0);
    for (std::size_t i = 0; i < len; ++i) prefix[i + 1] = prefix[i] + values[i];

    // best[i]: optimum over the first i nodes; start[i] > 0 when the optimum
    // closes an interval [start[i], i] (1-based).
    std::vector<double> best(len + 1, 0.0);
    std::vector<std::size_t> start(len + 1, 0);
    for (std::size_t i = 1; i <= len; ++i) {
        best[i] = best[i - 1];
        for (std::size_t j = 1; j <= i; ++j) {
            const double sum = prefix[i] - prefix[j - 1];
            const double candidate = best[j - 1] + sum * sum;
            if (candidate > best[i]) {
                best[i] = candidate;
                start[i] = j;
            }
        }
    }

    PathOptimum out;
    out.value = best[len];
    for (std::size_t i = len; i > 0;) {
        if (start[i] == 0) {
            --i;
            continue;
        }
        out.intervals.emplace_back(start[i] - 1, i - 1);
        i = start[i] - 1;
    }
    std::reverse(out.intervals.begin(), out.intervals.end());
    return out;
}

double pair(const TreeVec& u, const TreeVec& x) {
    double total = 0.0;
    for (const auto& [s, coefficient] : u.entries()) total += coefficient * x(s);
    return total;
}

namespace {

void require_embedding_args(const Branch& sigma, std::size_t k, const InterlacedTuple& n) {
    if (k == 0 || n.arity() != k) {
        throw InvalidInput("tuple arity " + std::to_string(n.arity()) + " does not match k = " +
                           std::to_string(k));
    }
    if (static_cast<std::size_t>(n.back()) > sigma.length()) {
        throw InvalidInput("branch of length " + std::to_string(sigma.length()) +
                           " is too short for n_k = " + std::to_string(n.back()));
    }
}

}  // namespace

TreeVec g_embed(const Branch& sigma, std::size_t k, const InterlacedTuple& n) {
    require_embedding_args(sigma, k, n);
    const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(k));
    TreeVec out(std::max(sigma.length(), kDefaultDepthCap));
    for (int v : n.entries()) out.add(sigma.restrict_to(static_cast<std::size_t>(v)), scale);
    return out;
}

TreeVec f_embed(const Branch& sigma, std::size_t k, const InterlacedTuple& n) {
    require_embedding_args(sigma, k, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(k));
    TreeVec out(std::max(sigma.length(), kDefaultDepthCap));
    // Node sigma|l lies below sigma|n_i iff l <= n_i, root (l = 0) included.
    for (std::size_t l = 0; l <= static_cast<std::size_t>(n.back()); ++l) {
        std::size_t count = 0;
        for (int v : n.entries()) count += static_cast<std::size_t>(v) >= l ? 1 : 0;
        out.set(sigma.restrict_to(l), scale * static_cast<double>(count));
    }
    return out;
}

FDifferenceDecomposition f_difference_segments(const Branch& sigma, const InterlacedTuple& n,
                                               const InterlacedTuple& m) {
    if (!is_adjacent(n, m)) {
        throw PreconditionError("f-difference decomposition needs interlaced-adjacent tuples");
    }
    const std::size_t k = n.arity();
    require_embedding_args(sigma, k, n);
    require_embedding_args(sigma, k, m);

    FDifferenceDecomposition out;
    out.scale = 1.0 / std::sqrt(static_cast<double>(k));
    // With n_1 <= m_1 <= ... <= n_k <= m_k, f(m) - f(n) picks up the nodes
    // sigma|l with n_i < l <= m_i; the other order flips the sign.
    const bool n_first = interlaced_before(n, m);
    out.sign = n_first ? 1 : -1;
    const InterlacedTuple& low = n_first ? n : m;
    const InterlacedTuple& high = n_first ? m : n;
    for (std::size_t i = 0; i < k; ++i) {
        if (low[i] == high[i]) continue;
        out.segments.emplace_back(sigma.restrict_to(static_cast<std::size_t>(low[i]) + 1),
                                  sigma.restrict_to(static_cast<std::size_t>(high[i])));
    }
    return out;
}

bool verify_f_decomposition(const Branch& sigma, const InterlacedTuple& n, const InterlacedTuple& m,
                            const FDifferenceDecomposition& d, double tol) {
    if (d.segments.size() > n.arity()) return false;
    for (std::size_t i = 0; i < d.segments.size(); ++i) {
        for (std::size_t j = i + 1; j < d.segments.size(); ++j) {
            if (!segments_disjoint(d.segments[i], d.segments[j])) return false;
        }
    }
    const std::size_t k = n.arity();
    TreeVec rebuilt;
    for (const auto& seg : d.segments) {
        rebuilt += (static_cast<double>(d.sign) * d.scale) * TreeVec::indicator(seg, sigma.length());
    }
    const TreeVec difference = f_embed(sigma, k, m) - f_embed(sigma, k, n);
    const TreeVec residual = difference - rebuilt;
    for (const auto& [s, v] : residual.entries()) {
        if (std::abs(v) > tol) return false;
    }
    return true;
}

double f_separation(const Branch& sigma, const Branch& tau, std::size_t k, const InterlacedTuple& n) {
    require_embedding_args(sigma, k, n);
    require_embedding_args(tau, k, n);
    const auto r = first_disagreement(sigma, tau);
    if (!r) return 0.0;
    if (*r > static_cast<std::size_t>(n.front())) {
        throw PreconditionError("branches first disagree at " + std::to_string(*r) +
                                ", after n_1 = " + std::to_string(n.front()));
    }
    const Node anchor = sigma.restrict_to(static_cast<std::size_t>(n.front()));
    const TreeVec witness = TreeVec::unit(anchor, sigma.length());
    // The witness is a norm-one element of JT, so the pairing bounds the B-norm.
    if (std::abs(jt_norm_exact(witness).norm - 1.0) > 1e-12) {
        throw PreconditionError("witness e_{sigma|n_1} is not normalized");
    }
    return pair(f_embed(sigma, k, n) - f_embed(tau, k, n), witness);
}

GSeparation g_separation(const Branch& sigma, const Branch& tau, std::size_t k,
                         const InterlacedTuple& n) {
    require_embedding_args(sigma, k, n);
    require_embedding_args(tau, k, n);
    const auto r = first_disagreement(sigma, tau);
    if (!r) return {};
    if (*r > static_cast<std::size_t>(n.front())) {
        throw PreconditionError("branches first disagree at " + std::to_string(*r) +
                                ", after n_1 = " + std::to_string(n.front()));
    }
    const Segment s(sigma.restrict_to(static_cast<std::size_t>(n.front())),
                    sigma.restrict_to(static_cast<std::size_t>(n.back())));
    const TreeVec difference = g_embed(sigma, k, n) - g_embed(tau, k, n);
    GSeparation out;
    out.pairing = pair(TreeVec::indicator(s, sigma.length()), difference);
    out.jt_norm = jt_norm_exact(difference, JtMode::Spider).norm;
    return out;
}

std::string_view to_string(JtMode mode) noexcept {
    switch (mode) {
        case JtMode::Auto: return "auto";
        case JtMode::Exhaustive: return "exhaustive";
        case JtMode::Spider: return "spider";
    }
    return "auto";
}

}  // namespace jamesgeo
