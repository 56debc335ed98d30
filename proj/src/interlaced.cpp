#include "jamesgeo/interlaced.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>

#include "jamesgeo/error.hpp"

namespace jamesgeo {

namespace {

void require_same_arity(const InterlacedTuple& n, const InterlacedTuple& m) {
    if (n.arity() != m.arity()) {
        throw InvalidInput("arity mismatch: " + std::to_string(n.arity()) + " vs " +
                           std::to_string(m.arity()));
    }
}

InterlacedTuple reflect(const InterlacedTuple& t, int last) {
    std::vector<int> out;
    out.reserve(t.arity());
    for (auto it = t.entries().rbegin(); it != t.entries().rend(); ++it) out.push_back(last + 1 - *it);
    return InterlacedTuple(std::move(out));
}

// The inductive construction from the proof of the distance formula. Requires
// max F > 0; picks interlaced first-argmax / first-argmin points and swaps them.
InterlacedTuple step_toward(const InterlacedTuple& n, const InterlacedTuple& m) {
    const auto profile = walk_profile(n, m);
    const auto& f = profile.values;
    const int hi = profile.max();
    const int lo = profile.min();
    const int last = static_cast<int>(f.size()) - 1;

    auto first_at_or_after = [&](int start, int level) -> int {
        for (int i = start; i <= last; ++i) {
            if (f[i] == level) return i;
        }
        return -1;
    };

    std::vector<int> removed;  // a_1 < ... < a_p, in n \ m
    std::vector<int> added;    // b_1 < ... < b_p, in m \ n
    int a = first_at_or_after(0, hi);
    while (a >= 0) {
        removed.push_back(a);
        const int b = first_at_or_after(a + 1, lo);
        if (b < 0) break;
        added.push_back(b);
        a = first_at_or_after(b + 1, hi);
    }
    if (added.size() < removed.size()) {
        // p = q + 1: close just after the last maximizer of F. That step is a
        // descent (F(L) = 0 < max F), and closing any earlier would leave a later
        // maximum untouched.
        int t = last;
        while (f[t] != hi) --t;
        added.push_back(t + 1);
    }

    std::vector<int> entries;
    entries.reserve(n.arity());
    for (int v : n.entries()) {
        if (!std::binary_search(removed.begin(), removed.end(), v)) entries.push_back(v);
    }
    entries.insert(entries.end(), added.begin(), added.end());
    std::sort(entries.begin(), entries.end());
    return InterlacedTuple(std::move(entries));
}

}  // namespace

InterlacedTuple::InterlacedTuple(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidInput("tuple must have at least one entry");
    if (entries_.front() < 1) throw InvalidInput("tuple entries must be positive integers");
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] <= entries_[i - 1]) {
            throw InvalidInput("tuple entries must be strictly increasing: " + to_string());
        }
    }
}

bool InterlacedTuple::contains(int value) const noexcept {
    return std::binary_search(entries_.begin(), entries_.end(), value);
}

std::string InterlacedTuple::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

int WalkProfile::max() const { return *std::max_element(values.begin(), values.end()); }
int WalkProfile::min() const { return *std::min_element(values.begin(), values.end()); }

bool interlaced_before(const InterlacedTuple& n, const InterlacedTuple& m) {
    require_same_arity(n, m);
    const std::size_t k = n.arity();
    for (std::size_t i = 0; i < k; ++i) {
        if (n[i] > m[i]) return false;
        if (i + 1 < k && m[i] > n[i + 1]) return false;
    }
    return true;
}

bool is_adjacent(const InterlacedTuple& n, const InterlacedTuple& m) {
    if (n == m) {
        require_same_arity(n, m);
        return false;
    }
    return interlaced_before(n, m) || interlaced_before(m, n);
}

WalkProfile walk_profile(const InterlacedTuple& n, const InterlacedTuple& m) {
    require_same_arity(n, m);
    const int last = std::max(n.back(), m.back());
    WalkProfile out;
    out.values.assign(static_cast<std::size_t>(last) + 1, 0);
    std::size_t in = 0;
    std::size_t im = 0;
    for (int i = 1; i <= last; ++i) {
        int step = 0;
        if (in < n.arity() && n[in] == i) { ++step; ++in; }
        if (im < m.arity() && m[im] == i) { --step; ++im; }
        out.values[i] = out.values[i - 1] + step;
    }
    return out;
}

int dist(const InterlacedTuple& n, const InterlacedTuple& m) {
    const auto f = walk_profile(n, m);
    return f.max() - f.min();
}

int dist_by_segments(const InterlacedTuple& n, const InterlacedTuple& m) {
    require_same_arity(n, m);
    const int last = std::max(n.back(), m.back());
    int best = 0;
    for (int a = 1; a <= last; ++a) {
        int count = 0;
        for (int b = a; b <= last; ++b) {
            count += static_cast<int>(n.contains(b)) - static_cast<int>(m.contains(b));
            best = std::max(best, std::abs(count));
        }
    }
    return best;
}

int dist_oracle_bfs(const InterlacedTuple& n, const InterlacedTuple& m) {
    require_same_arity(n, m);
    if (n == m) return 0;
    std::vector<int> universe(n.entries().begin(), n.entries().end());
    universe.insert(universe.end(), m.entries().begin(), m.entries().end());
    const auto vertices = enumerate_tuples(universe, n.arity());

    std::map<InterlacedTuple, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
    const std::size_t source = index.at(n);
    const std::size_t target = index.at(m);

    std::vector<int> depth(vertices.size(), -1);
    std::queue<std::size_t> frontier;
    depth[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop();
        if (u == target) return depth[u];
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            if (depth[v] < 0 && is_adjacent(vertices[u], vertices[v])) {
                depth[v] = depth[u] + 1;
                frontier.push(v);
            }
        }
    }
    // Unreachable: the interlaced graph on a finite universe is connected.
    throw PreconditionError("bfs failed to reach target");
}

InterlacedTuple geodesic_step(const InterlacedTuple& n, const InterlacedTuple& m) {
    const auto profile = walk_profile(n, m);
    if (profile.max() - profile.min() <= 1) {
        throw PreconditionError("geodesic_step requires dist(n, m) >= 2");
    }
    if (profile.max() > 0) return step_toward(n, m);
    // Reflecting j -> L + 1 - j is an isometry that negates the profile, so the
    // construction applies to the mirrored pair.
    const int last = static_cast<int>(profile.values.size()) - 1;
    return reflect(step_toward(reflect(n, last), reflect(m, last)), last);
}

std::vector<InterlacedTuple> geodesic_path(const InterlacedTuple& n, const InterlacedTuple& m) {
    require_same_arity(n, m);
    std::vector<InterlacedTuple> path{n};
    while (dist(path.back(), m) >= 2) path.push_back(geodesic_step(path.back(), m));
    if (path.back() != m) path.push_back(m);
    return path;
}

std::vector<InterlacedTuple> enumerate_tuples(std::span<const int> universe, std::size_t k) {
    std::vector<int> values(universe.begin(), universe.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (k == 0) throw InvalidInput("arity must be at least 1");
    if (values.size() < k) {
        throw InvalidInput("universe of size " + std::to_string(values.size()) +
                           " has no " + std::to_string(k) + "-subsets");
    }

    std::vector<InterlacedTuple> out;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    const std::size_t size = values.size();
    while (true) {
        std::vector<int> entries(k);
        for (std::size_t i = 0; i < k; ++i) entries[i] = values[pick[i]];
        out.emplace_back(std::move(entries));

        std::size_t i = k;
        while (i > 0 && pick[i - 1] == size - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<int> integer_range(int first, int last) {
    std::vector<int> out;
    for (int v = first; v <= last; ++v) out.push_back(v);
    return out;
}

}  // namespace jamesgeo
