#pragma once

#include <algorithm>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"

namespace trichrome {

namespace detail {

// Branch and bound over bitset candidate sets with a greedy-coloring bound.
// Vertices are relabeled internally by non-increasing degree, which keeps the
// coloring bound tight; a greedy clique seeds the incumbent. Deterministic.
class CliqueSolver {
public:
    explicit CliqueSolver(const SimpleGraph& g) : n_(g.n()) {
        // input vertex order is kept: block-structured instances (blow-ups,
        // disjoint copies) lay their parts out contiguously and the
        // sequential coloring bound stays tight that way
        adj_.reserve(n_);
        for (int v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
    }

    // target > 0: stop as soon as a clique of that size is found (decision mode)
    std::vector<int> solve(int target = 0) {
        best_.clear();
        target_ = target;
        exhausted_ = false;
        nodes_ = 0;
        if (n_ == 0) return best_;
        if (target_ == 0) seed_incumbent();
        Bitset all(n_);
        for (int v = 0; v < n_; ++v) all.set(v);
        cur_.clear();
        expand(all);
        return best_;
    }

    // 0 = unlimited; when exhausted the result is only a lower bound
    void set_node_budget(uint64_t b) { budget_ = b; }
    bool exhausted() const { return exhausted_; }

private:
    void seed_incumbent() {
        // deterministic randomized greedy warm start; a tight incumbent is
        // what makes the coloring bound bite on dense instances
        Rng rng(uint64_t(n_) * 0x9e3779b9 + 0xC11C);
        int rounds = n_ > 48 ? 160 : 16;
        for (int s = 0; s < rounds; ++s) {
            int v0 = s < n_ ? s : (int)rng.below(n_);
            std::vector<int> clique{v0};
            Bitset cand = adj_[v0];
            while (cand.any()) {
                // among candidates, prefer one keeping the most options
                int pick = -1, pd = -1;
                int probe = 0;
                for (int v = cand.next(0); v >= 0 && probe < 8; v = cand.next(v + 1), ++probe) {
                    int d = (cand & adj_[v]).count();
                    if (d > pd) { pd = d; pick = v; }
                }
                clique.push_back(pick);
                cand &= adj_[pick];
            }
            if (clique.size() > best_.size()) best_ = clique;
        }
    }

    // sequential maximal color classes; the class index bounds the clique
    // extension available from each vertex onward
    void color_sort(const Bitset& cand, std::vector<int>& order, std::vector<int>& bound) {
        order.clear();
        bound.clear();
        Bitset uncolored = cand;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset pool = uncolored;
            while (true) {
                int v = pool.next(0);
                if (v < 0) break;
                order.push_back(v);
                bound.push_back(color);
                uncolored.reset(v);
                pool.reset(v);
                pool.subtract(adj_[v]);
            }
        }
    }

    void expand(const Bitset& cand) {
        if (target_ > 0 && (int)best_.size() >= target_) return;
        if (budget_ && ++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        if (!cand.any()) {
            if (cur_.size() > best_.size()) best_ = cur_;
            return;
        }
        std::vector<int> order, bound;
        color_sort(cand, order, bound);
        Bitset rem = cand;
        for (int i = (int)order.size() - 1; i >= 0; --i) {
            if (cur_.size() + bound[i] <= best_.size()) return;
            if (exhausted_) return;
            int v = order[i];
            cur_.push_back(v);
            Bitset next = rem & adj_[v];
            if (next.any()) {
                expand(next);
            } else if (cur_.size() > best_.size()) {
                best_ = cur_;
            }
            cur_.pop_back();
            if (target_ > 0 && (int)best_.size() >= target_) return;
            rem.reset(v);
        }
    }

    int n_;
    std::vector<Bitset> adj_;
    int target_ = 0;
    std::vector<int> cur_, best_;
    uint64_t budget_ = 0, nodes_ = 0;
    bool exhausted_ = false;
};

inline bool has_clique_of_size(const SimpleGraph& g, const std::vector<int>& within, int k) {
    if (k <= 0) return true;
    if ((int)within.size() < k) return false;
    SimpleGraph sub = g.induced(within);
    CliqueSolver s(sub);
    return (int)s.solve(k).size() >= k;
}

// Branch-and-reduce maximum independent set for sparse graphs: degree 0/1
// takes, full degree-2 folding, connected-component splitting and max-degree
// branching with a matching upper bound. Subproblems carry their own
// adjacency copy, which keeps folding and witness recovery simple.
class IndependentSetSolver {
public:
    explicit IndependentSetSolver(const SimpleGraph& g) : n_(g.n()) {
        adj_.reserve(n_);
        for (int v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
    }

    std::vector<int> solve() {
        Bitset alive(n_);
        for (int v = 0; v < n_; ++v) alive.set(v);
        exhausted_ = false;
        nodes_ = 0;
        std::vector<int> best = solve_problem(adj_, alive);
        std::sort(best.begin(), best.end());
        return best;
    }

    void set_node_budget(uint64_t b) { budget_ = b; }
    bool exhausted() const { return exhausted_; }

private:
    struct Fold {
        int v, u, w;  // u and w were merged into slot v
    };

    static int live_degree(const std::vector<Bitset>& adj, const Bitset& alive, int v) {
        return (adj[v] & alive).count();
    }

    static int matching_bound(const std::vector<Bitset>& adj, const Bitset& alive) {
        Bitset avail = alive;
        int matched = 0;
        for (int u = avail.next(0); u >= 0; u = avail.next(u + 1)) {
            Bitset nb = adj[u] & avail;
            int w = nb.next(u + 1);
            if (w >= 0) {
                avail.reset(u);
                avail.reset(w);
                ++matched;
            }
        }
        return alive.count() - matched;
    }

    std::vector<int> solve_problem(std::vector<Bitset> adj, Bitset alive) {
        if (budget_ && ++nodes_ > budget_) exhausted_ = true;
        // everything chosen while folds are active lives in the folded space
        // and is translated back at the end, including reduction takes: a
        // merged slot can itself be taken by a later reduction
        std::vector<int> chosen;
        std::vector<Fold> folds;

        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = alive.next(0); v >= 0; v = alive.next(v + 1)) {
                Bitset nb = adj[v] & alive;
                int d = nb.count();
                if (d == 0) {
                    chosen.push_back(v);
                    alive.reset(v);
                    changed = true;
                } else if (d == 1) {
                    chosen.push_back(v);
                    alive.reset(v);
                    alive.reset(nb.next(0));
                    changed = true;
                } else if (d == 2) {
                    int a = nb.next(0), b = nb.next(a + 1);
                    if (adj[a].test(b)) {
                        chosen.push_back(v);
                        alive.reset(v);
                        alive.reset(a);
                        alive.reset(b);
                    } else {
                        // fold: slot v becomes the merged vertex of {v,a,b};
                        // merged chosen later means "take a and b"
                        Bitset merged = (adj[a] | adj[b]) & alive;
                        merged.reset(v);
                        merged.reset(a);
                        merged.reset(b);
                        adj[v] = merged;
                        merged.for_each([&](int x) { adj[x].set(v); });
                        alive.reset(a);
                        alive.reset(b);
                        folds.push_back(Fold{v, a, b});
                    }
                    changed = true;
                }
            }
        }

        if (alive.any()) {
            std::vector<Bitset> comps = components_of(adj, alive);
            if (comps.size() > 1) {
                for (const Bitset& comp : comps) {
                    std::vector<int> sub = solve_problem(adj, comp);
                    chosen.insert(chosen.end(), sub.begin(), sub.end());
                }
            } else {
                int pick = -1, pd = -1;
                for (int v = alive.next(0); v >= 0; v = alive.next(v + 1)) {
                    int d = live_degree(adj, alive, v);
                    if (d > pd) { pd = d; pick = v; }
                }
                Bitset incl = alive;
                incl.reset(pick);
                incl.subtract(adj[pick]);
                std::vector<int> with = solve_problem(adj, incl);
                with.push_back(pick);
                Bitset excl = alive;
                excl.reset(pick);
                if (!exhausted_ && (int)with.size() < matching_bound(adj, excl)) {
                    std::vector<int> without = solve_problem(adj, excl);
                    if (without.size() > with.size()) with = std::move(without);
                }
                chosen.insert(chosen.end(), with.begin(), with.end());
            }
        }

        if (folds.empty()) return chosen;
        std::vector<char> in_set(n_, 0);
        for (int v : chosen) in_set[v] = 1;
        for (auto it = folds.rbegin(); it != folds.rend(); ++it) {
            if (in_set[it->v]) {
                in_set[it->v] = 0;
                in_set[it->u] = 1;
                in_set[it->w] = 1;
            } else {
                in_set[it->v] = 1;
            }
        }
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (in_set[v]) out.push_back(v);
        return out;
    }

    static std::vector<Bitset> components_of(const std::vector<Bitset>& adj,
                                             const Bitset& alive) {
        std::vector<Bitset> comps;
        Bitset left = alive;
        while (true) {
            int s = left.next(0);
            if (s < 0) break;
            Bitset comp(left.size());
            std::vector<int> stack{s};
            comp.set(s);
            left.reset(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                Bitset nb = adj[v] & left;
                nb.for_each([&](int w) {
                    comp.set(w);
                    left.reset(w);
                    stack.push_back(w);
                });
            }
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    int n_;
    std::vector<Bitset> adj_;
    uint64_t budget_ = 0, nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace detail

struct BudgetedSize {
    int value = 0;    // largest clique found; exact when `exact` holds
    bool exact = true;
};

// Anytime variant for measurement sweeps: random provider-backed instances
// around two hundred vertices can be genuinely hard, so the search stops at
// the node budget and says so instead of stalling.
inline BudgetedSize clique_number_budgeted(const SimpleGraph& g, uint64_t budget) {
    long edges = g.edge_count();
    long coedges = (long)g.n() * (g.n() - 1) / 2 - edges;
    BudgetedSize out;
    if (g.n() > 32 && coedges * 3 < edges) {
        SimpleGraph co = g.complement();
        detail::IndependentSetSolver mis(co);
        mis.set_node_budget(budget);
        out.value = (int)mis.solve().size();
        out.exact = !mis.exhausted();
    } else {
        detail::CliqueSolver solver(g);
        solver.set_node_budget(budget);
        out.value = (int)solver.solve().size();
        out.exact = !solver.exhausted();
    }
    return out;
}

// Maximum clique; for n <= 32 the witness is refined to the lexicographically
// smallest maximum clique, beyond that the first one found on the fixed
// branching order is returned. Dense graphs with a sparse complement are
// solved as an independent-set problem on the complement.
inline std::vector<int> max_clique(const SimpleGraph& g) {
    if (g.n() == 0) return {};
    long edges = g.edge_count();
    long coedges = (long)g.n() * (g.n() - 1) / 2 - edges;
    if (g.n() > 32 && coedges * 3 < edges) {
        SimpleGraph co = g.complement();
        detail::IndependentSetSolver mis(co);
        return mis.solve();
    }
    detail::CliqueSolver solver(g);
    std::vector<int> found = solver.solve();
    int omega = (int)found.size();
    if (g.n() > 32 || omega == 0) {
        std::sort(found.begin(), found.end());
        return found;
    }
    std::vector<int> chosen;
    std::vector<int> cand(g.n());
    for (int v = 0; v < g.n(); ++v) cand[v] = v;
    while ((int)chosen.size() < omega) {
        for (int v : cand) {
            std::vector<int> next;
            for (int w : cand)
                if (w != v && g.has_edge(v, w)) next.push_back(w);
            if (detail::has_clique_of_size(g, next, omega - (int)chosen.size() - 1)) {
                chosen.push_back(v);
                cand = std::move(next);
                break;
            }
        }
    }
    return chosen;
}

inline int clique_number(const SimpleGraph& g) {
    detail::CliqueSolver solver(g);
    return (int)solver.solve().size();
}

// Maximum independent set; sparse graphs go to the dedicated solver, dense
// ones through a clique search on the complement.
inline std::vector<int> max_independent_set(const SimpleGraph& g) {
    long edges = g.edge_count();
    long coedges = (long)g.n() * (g.n() - 1) / 2 - edges;
    if (g.n() <= 32 || edges * 2 > coedges) {
        return max_clique(g.complement());
    }
    detail::IndependentSetSolver s(g);
    return s.solve();
}

inline int independence_number(const SimpleGraph& g) {
    return (int)max_independent_set(g).size();
}

inline BudgetedSize independence_number_budgeted(const SimpleGraph& g, uint64_t budget) {
    long edges = g.edge_count();
    long coedges = (long)g.n() * (g.n() - 1) / 2 - edges;
    BudgetedSize out;
    if (g.n() <= 32 || edges * 2 > coedges) {
        SimpleGraph co = g.complement();
        detail::CliqueSolver solver(co);
        solver.set_node_budget(budget);
        out.value = (int)solver.solve().size();
        out.exact = !solver.exhausted();
    } else {
        detail::IndependentSetSolver s(g);
        s.set_node_budget(budget);
        out.value = (int)s.solve().size();
        out.exact = !s.exhausted();
    }
    return out;
}

// A vertex set inducing edges of at most two colors.
struct CliqueWitness {
    std::vector<int> vertices;  // sorted
    ColorSet colors_used;

    int size() const { return (int)vertices.size(); }

    bool validate(const EdgeColoring& c) const {
        if (colors_used.size() > 2) return false;
        for (size_t a = 0; a < vertices.size(); ++a) {
            int u = vertices[a];
            if (u < 0 || u >= c.n()) return false;
            if (a > 0 && vertices[a - 1] >= u) return false;
            for (size_t b = a + 1; b < vertices.size(); ++b)
                if (!colors_used.contains(c.color(u, vertices[b]))) return false;
        }
        return true;
    }
};

inline CliqueWitness make_witness(const EdgeColoring& c, std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    ColorSet used;
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b) used.add(c.color(vs[a], vs[b]));
    return CliqueWitness{std::move(vs), used};
}

struct TwoColorProfile {
    int s_rb = 0, s_ry = 0, s_by = 0;
    CliqueWitness w_rb, w_ry, w_by;
};

// Largest cliques confined to each pair of colors.
inline TwoColorProfile two_color_profile(const EdgeColoring& c) {
    TwoColorProfile p;
    auto solve_pair = [&](Color x, Color y) {
        SimpleGraph g = color_class(c, ColorSet{x, y});
        return make_witness(c, max_clique(g));
    };
    p.w_rb = solve_pair(Color::R, Color::B);
    p.w_ry = solve_pair(Color::R, Color::Y);
    p.w_by = solve_pair(Color::B, Color::Y);
    p.s_rb = p.w_rb.size();
    p.s_ry = p.w_ry.size();
    p.s_by = p.w_by.size();
    return p;
}

struct H2Result {
    int value = 0;
    CliqueWitness witness;
};

struct BudgetedH2 {
    int value = 0;  // size of the largest two-colored clique found
    bool exact = true;
};

inline BudgetedH2 h2_measured(const EdgeColoring& c, uint64_t budget) {
    if (c.n() == 1) return {1, true};
    BudgetedH2 out{0, true};
    for (ColorSet pair : {ColorSet{Color::R, Color::B}, ColorSet{Color::R, Color::Y},
                          ColorSet{Color::B, Color::Y}}) {
        BudgetedSize s = clique_number_budgeted(color_class(c, pair), budget);
        out.value = std::max(out.value, s.value);
        out.exact = out.exact && s.exact;
    }
    return out;
}

// Largest two-colored clique in c; the single-vertex clique covers n = 1.
inline H2Result h2_of_coloring(const EdgeColoring& c) {
    if (c.n() == 1) return {1, CliqueWitness{{0}, {}}};
    TwoColorProfile p = two_color_profile(c);
    H2Result res;
    res.value = std::max({p.s_rb, p.s_ry, p.s_by});
    const CliqueWitness* pick = nullptr;
    for (const CliqueWitness* w : {&p.w_rb, &p.w_ry, &p.w_by}) {
        if (w->size() != res.value) continue;
        if (!pick || w->vertices < pick->vertices) pick = w;
    }
    res.witness = *pick;
    return res;
}

}  // namespace trichrome
