#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "pattern.hpp"
#include "util.hpp"

namespace trichrome {

// Complete graph on n >= 1 vertices with one color per edge, stored as a
// flat upper-triangular array: (i,j), i<j maps to i*n - i(i+1)/2 + (j-i-1).
class EdgeColoring {
public:
    explicit EdgeColoring(int n, Color fill = Color::R)
        : n_(n), e_(size_t(n) * (n - 1) / 2, fill) {
        if (n < 1) throw std::invalid_argument("coloring needs n >= 1");
    }

    static EdgeColoring filled(int n, Color c) { return EdgeColoring(n, c); }

    int n() const { return n_; }
    int edge_count() const { return (int)e_.size(); }

    Color color(int i, int j) const { return e_[index(i, j)]; }
    void set(int i, int j, Color c) { e_[index(i, j)] = c; }

    size_t index(int i, int j) const {
        if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
            throw std::invalid_argument("bad edge (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") for n=" + std::to_string(n_));
        if (i > j) std::swap(i, j);
        return size_t(i) * n_ - size_t(i) * (i + 1) / 2 + (j - i - 1);
    }

    const std::vector<Color>& raw() const { return e_; }

    EdgeColoring induced(const std::vector<int>& vs) const {
        EdgeColoring c((int)vs.size() > 0 ? (int)vs.size() : 1);
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b)
                c.set((int)a, (int)b, color(vs[a], vs[b]));
        return c;
    }

    bool operator==(const EdgeColoring& o) const { return n_ == o.n_ && e_ == o.e_; }

    // Format: line 1 "n=<int>", then n(n-1)/2 chars over {r,b,y} in row-major
    // upper-triangular order; whitespace and newlines between chars ignored.
    void write(std::ostream& os) const {
        os << "n=" << n_ << "\n";
        size_t k = 0;
        for (int i = 0; i < n_ - 1; ++i) {
            for (int j = i + 1; j < n_; ++j) os << color_char(e_[k++]);
            os << "\n";
        }
    }

    std::string to_string() const {
        std::string s;
        for (Color c : e_) s += color_char(c);
        return s;
    }

    static EdgeColoring read(std::istream& is) {
        std::string line;
        if (!std::getline(is, line)) throw std::runtime_error("coloring file: empty input");
        if (line.rfind("n=", 0) != 0)
            throw std::runtime_error("coloring file line 1: expected \"n=<int>\"");
        int n = 0;
        try {
            n = std::stoi(line.substr(2));
        } catch (...) {
            throw std::runtime_error("coloring file line 1: bad vertex count");
        }
        if (n < 1) throw std::runtime_error("coloring file line 1: n must be >= 1");
        EdgeColoring c(n);
        size_t want = size_t(n) * (n - 1) / 2, got = 0;
        int lineno = 1;
        while (std::getline(is, line)) {
            ++lineno;
            for (size_t pos = 0; pos < line.size(); ++pos) {
                char ch = line[pos];
                if (ch == ' ' || ch == '\t' || ch == '\r') continue;
                if (got >= want)
                    throw std::runtime_error("coloring file line " + std::to_string(lineno) +
                                             " offset " + std::to_string(pos) +
                                             ": more than " + std::to_string(want) + " edges");
                try {
                    c.e_[got++] = parse_color(ch);
                } catch (const std::exception&) {
                    throw std::runtime_error("coloring file line " + std::to_string(lineno) +
                                             " offset " + std::to_string(pos) +
                                             ": expected r, b or y, found '" + ch + "'");
                }
            }
        }
        if (got != want)
            throw std::runtime_error("coloring file: expected " + std::to_string(want) +
                                     " edge colors, found " + std::to_string(got));
        return c;
    }

private:
    int n_;
    std::vector<Color> e_;
};

inline TrianglePattern triangle_pattern(const EdgeColoring& c, int u, int v, int w) {
    if (u == v || u == w || v == w)
        throw std::invalid_argument("triangle vertices must be distinct");
    return TrianglePattern(c.color(u, v), c.color(u, w), c.color(v, w));
}

struct TriangleHit {
    std::array<int, 3> vertices;
    TrianglePattern pattern;
};

// First triangle (lexicographic vertex order) whose color multiset is among
// `ps`. Constructions avoid sets larger than the 3-pattern families, hence
// the vector overloads.
inline std::optional<TriangleHit> find_pattern_from(const EdgeColoring& c,
                                                    const std::vector<TrianglePattern>& ps) {
    int n = c.n();
    auto member = [&](const TrianglePattern& p) {
        for (const auto& q : ps)
            if (q == p) return true;
        return false;
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Color cuv = c.color(u, v);
            for (int w = v + 1; w < n; ++w) {
                TrianglePattern p(cuv, c.color(u, w), c.color(v, w));
                if (member(p)) return TriangleHit{{u, v, w}, p};
            }
        }
    return std::nullopt;
}

inline std::optional<TriangleHit> find_pattern_from(const EdgeColoring& c,
                                                    const PatternFamily& F) {
    return find_pattern_from(c, F.patterns());
}

// Containment of a pattern reduces to multiset equality on some triangle.
inline std::optional<std::array<int, 3>> contains_pattern(const EdgeColoring& c,
                                                          const TrianglePattern& p) {
    auto hit = find_pattern_from(c, std::vector<TrianglePattern>{p});
    if (!hit) return std::nullopt;
    return hit->vertices;
}

inline bool is_avoiding(const EdgeColoring& c, const std::vector<TrianglePattern>& ps) {
    return !find_pattern_from(c, ps).has_value();
}

inline bool is_avoiding(const EdgeColoring& c, const PatternFamily& F) {
    return !find_pattern_from(c, F.patterns()).has_value();
}

// Graph of the edges whose color lies in S.
inline SimpleGraph color_class(const EdgeColoring& c, ColorSet S) {
    if (S.empty()) throw std::invalid_argument("color_class needs a nonempty color set");
    SimpleGraph g(c.n());
    for (int i = 0; i < c.n(); ++i)
        for (int j = i + 1; j < c.n(); ++j)
            if (S.contains(c.color(i, j))) g.add_edge(i, j);
    return g;
}

inline SimpleGraph color_class(const EdgeColoring& c, Color x) {
    return color_class(c, ColorSet{x});
}

inline EdgeColoring apply_color_permutation(const EdgeColoring& c, const ColorPermutation& p) {
    EdgeColoring out(c.n());
    for (int i = 0; i < c.n(); ++i)
        for (int j = i + 1; j < c.n(); ++j) out.set(i, j, p.apply(c.color(i, j)));
    return out;
}

struct SampleResult {
    std::optional<EdgeColoring> coloring;
    bool budget_exhausted = false;  // distinguishes "gave up" from "proved none exists"
    uint64_t nodes = 0;
};

// Randomized backtracking over a seeded random edge order, each edge trying
// colors in a seeded random order, backtracking on any forbidden triangle.
// The node budget is split into restart rounds with fresh derived orders;
// deterministic given (n, F, seed). Not uniform over avoiding colorings.
inline SampleResult sample_avoiding(int n, const PatternFamily& F, uint64_t seed,
                                    uint64_t node_budget = 2'000'000) {
    if (n < 1) throw std::invalid_argument("sample_avoiding needs n >= 1");
    SampleResult res;
    if (n == 1) {
        res.coloring = EdgeColoring(1);
        return res;
    }

    uint64_t round_budget = std::max<uint64_t>(20'000, node_budget / 24);
    uint64_t spent = 0;
    bool any_budget_abort = false;

    for (int round = 0; spent < node_budget; ++round) {
        EdgeColoring c(n);
        Rng rng(derive_seed(seed, 0xA11CE + round));

        std::vector<std::pair<int, int>> order;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) order.emplace_back(i, j);
        rng.shuffle(order);

        std::vector<std::array<Color, 3>> tries(order.size());
        for (auto& t : tries) {
            t = {Color::R, Color::B, Color::Y};
            for (int i = 2; i > 0; --i) std::swap(t[i], t[rng.below(i + 1)]);
        }

        std::vector<bool> assigned(c.edge_count(), false);
        uint64_t nodes = 0;
        uint64_t cap = std::min(round_budget, node_budget - spent);
        bool aborted = false;

        auto ok = [&](int i, int j, Color col) {
            for (int w = 0; w < n; ++w) {
                if (w == i || w == j) continue;
                if (!assigned[c.index(i, w)] || !assigned[c.index(j, w)]) continue;
                if (F.contains(TrianglePattern(col, c.color(i, w), c.color(j, w))))
                    return false;
            }
            return true;
        };

        std::function<bool(size_t)> go = [&](size_t k) -> bool {
            if (k == order.size()) return true;
            if (++nodes > cap) {
                aborted = true;
                return false;
            }
            auto [i, j] = order[k];
            for (Color col : tries[k]) {
                if (!ok(i, j, col)) continue;
                c.set(i, j, col);
                assigned[c.index(i, j)] = true;
                if (go(k + 1)) return true;
                assigned[c.index(i, j)] = false;
                if (aborted) return false;
            }
            return false;
        };

        bool found = go(0);
        spent += nodes;
        res.nodes = spent;
        if (found) {
            res.coloring = std::move(c);
            return res;
        }
        any_budget_abort |= aborted;
        if (!aborted) {
            // this round exhausted the whole space: infeasibility is proven
            res.budget_exhausted = false;
            return res;
        }
    }
    res.budget_exhausted = any_budget_abort;
    return res;
}

}  // namespace trichrome
