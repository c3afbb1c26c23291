#pragma once

// Test-side reference implementations. These stay independent of the library
// search paths they are used to check: plain subset scans and full
// enumerations only.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include <trichrome/coloring.hpp>
#include <trichrome/graph.hpp>

namespace oracles {

using trichrome::Color;
using trichrome::EdgeColoring;
using trichrome::PatternFamily;
using trichrome::SimpleGraph;

// largest two-colored vertex set by scanning all 2^n subsets
inline int brute_h2(const EdgeColoring& c) {
    int n = c.n();
    int best = 0;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        uint8_t used = 0;
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b)
                used |= uint8_t(1) << int(c.color(vs[a], vs[b]));
        if (__builtin_popcount(used) <= 2) best = std::max(best, (int)vs.size());
    }
    return best;
}

inline int brute_clique(const SimpleGraph& g) {
    int n = g.n();
    int best = 0;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        bool clique = true;
        for (size_t a = 0; a < vs.size() && clique; ++a)
            for (size_t b = a + 1; b < vs.size() && clique; ++b)
                clique = g.has_edge(vs[a], vs[b]);
        if (clique) best = std::max(best, (int)vs.size());
    }
    return best;
}

inline int brute_alpha(const SimpleGraph& g) { return brute_clique(g.complement()); }

// every 3^C(n,2) coloring in odometer order
inline void for_all_colorings(int n, const std::function<void(const EdgeColoring&)>& fn) {
    int m = n * (n - 1) / 2;
    std::vector<int> digits(m, 0);
    EdgeColoring c(n);
    while (true) {
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) c.set(i, j, Color(digits[k++]));
        fn(c);
        int pos = 0;
        while (pos < m && ++digits[pos] == 3) digits[pos++] = 0;
        if (pos == m) break;
    }
}

struct NaiveMinH2 {
    bool feasible = false;
    int value = 0;
    std::optional<EdgeColoring> witness;
};

// unpruned reference for the exact search
inline NaiveMinH2 naive_min_h2(int n, const PatternFamily& F) {
    NaiveMinH2 out;
    for_all_colorings(n, [&](const EdgeColoring& c) {
        if (!trichrome::is_avoiding(c, F)) return;
        int h2 = brute_h2(c);
        if (!out.feasible || h2 < out.value) {
            out.feasible = true;
            out.value = h2;
            out.witness = c;
        }
    });
    return out;
}

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    int n = a.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                match = a.has_edge(u, v) == b.has_edge(perm[u], perm[v]);
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// filtered full enumeration with pairwise isomorphism rejection
inline std::vector<SimpleGraph> iso_classes_by_filter(
    int n, const std::function<bool(const SimpleGraph&)>& pred) {
    std::vector<SimpleGraph> reps;
    int m = n * (n - 1) / 2;
    for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
        SimpleGraph g(n);
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if ((mask >> k) & 1) g.add_edge(i, j);
        if (!pred(g)) continue;
        bool fresh = true;
        for (const auto& r : reps)
            if (isomorphic(g, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(std::move(g));
    }
    return reps;
}

// DFS over the edge variables with short-odd-cycle pruning; reports the
// minimum objective over all labeled graphs passing the filters
struct GraphScan {
    int n;
    bool forbid_c5;  // in addition to triangles
    std::function<int(const SimpleGraph&)> objective;

    GraphScan(int n_, bool forbid_c5_, std::function<int(const SimpleGraph&)> obj)
        : n(n_), forbid_c5(forbid_c5_), objective(std::move(obj)) {}

    int run() {
        SimpleGraph g(n);
        best_ = INT32_MAX;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        go(g, edges, 0);
        return best_;
    }

private:
    void go(SimpleGraph& g, const std::vector<std::pair<int, int>>& edges, size_t k) {
        if (k == edges.size()) {
            best_ = std::min(best_, objective(g));
            return;
        }
        auto [u, v] = edges[k];
        go(g, edges, k + 1);
        if (creates_short_odd_cycle(g, u, v)) return;
        g.add_edge(u, v);
        go(g, edges, k + 1);
        g.remove_edge(u, v);
    }

    bool creates_short_odd_cycle(const SimpleGraph& g, int u, int v) const {
        if ((g.neighbors(u) & g.neighbors(v)).any()) return true;  // triangle
        if (!forbid_c5) return false;
        // path u-a-b-c-v plus the new edge closes a 5-cycle
        bool found = false;
        g.neighbors(u).for_each([&](int a) {
            if (found || a == v) return;
            g.neighbors(v).for_each([&](int c) {
                if (found || c == u || c == a) return;
                trichrome::Bitset mid = g.neighbors(a) & g.neighbors(c);
                mid.reset(u);
                mid.reset(v);
                if (mid.any()) found = true;
            });
        });
        return found;
    }

    int best_ = INT32_MAX;
};

inline int oracle_f(int n) {
    GraphScan scan{n, false, [](const SimpleGraph& g) {
                       return std::max(brute_alpha(g), brute_clique(g.square()));
                   }};
    return scan.run();
}

inline int oracle_g(int n) {
    GraphScan scan{n, true, [](const SimpleGraph& g) { return brute_alpha(g); }};
    return scan.run();
}

}  // namespace oracles
