#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "cliques.hpp"
#include "coloring.hpp"
#include "patterns.hpp"

namespace trichrome {

namespace detail {

// clique search on <= 32 vertices over plain masks, decision form
inline bool mask_clique_atleast(const uint32_t* adj, uint32_t cand, int need) {
    if (need <= 0) return true;
    if (__builtin_popcount(cand) < need) return false;
    while (cand) {
        int v = __builtin_ctz(cand);
        cand &= cand - 1;
        if (mask_clique_atleast(adj, cand & adj[v], need - 1)) return true;
    }
    return false;
}

inline int mask_clique_number(const uint32_t* adj, uint32_t cand) {
    int lo = 0;
    while (mask_clique_atleast(adj, cand, lo + 1)) ++lo;
    return lo;
}

}  // namespace detail

struct ExactResult {
    enum class Status { Exact, Interval, Infeasible };
    Status status = Status::Infeasible;
    int value = 0;       // meaningful when Exact
    int lower = 0;       // meaningful when Interval
    int upper = 0;       // meaningful when Interval
    std::optional<EdgeColoring> extremal_witness;
    uint64_t nodes_explored = 0;

    std::string status_name() const {
        switch (status) {
            case Status::Exact: return "exact";
            case Status::Interval: return "interval";
            default: return "infeasible";
        }
    }
};

struct ExactOptions {
    uint64_t node_budget = 400'000'000;
    uint64_t prime_seed = 1;          // seeds the warm-start sampler
    uint64_t prime_sample_budget = 200'000;
    bool use_priming = true;
};

namespace detail {

// Depth-first search over edge colorings of K_n in the block order
// (0,1),(0,2),(1,2),(0,3),... minimizing the largest two-colored clique over
// avoiding colorings. Prunes forbidden triangles, branches dominated by the
// incumbent, and prefixes that are not lexicographic minima under vertex
// permutations of the first four vertices combined with the family stabilizer.
class ExactH2Search {
public:
    ExactH2Search(int n, const PatternFamily& F, const ExactOptions& opt)
        : n_(n), F_(F), opt_(opt), c_(std::max(n, 1)) {}

    ExactResult run() {
        ExactResult out;
        if (n_ <= 2) {
            out.status = ExactResult::Status::Exact;
            out.value = n_;
            out.extremal_witness = EdgeColoring(n_);
            return out;
        }
        build_edge_order();
        build_symmetry_tables();

        if (opt_.use_priming) {
            SampleResult s = sample_avoiding(n_, F_, opt_.prime_seed, opt_.prime_sample_budget);
            if (s.coloring) {
                incumbent_ = h2_of_coloring(*s.coloring).value;
                witness_ = s.coloring;
            }
        }

        block_h2_.assign(n_, 0);
        block_h2_[1] = 2;  // two vertices always span a two-colored clique
        exhausted_ = false;
        abandoned_lb_ = INT32_MAX;
        dfs(0);

        out.nodes_explored = nodes_;
        if (!exhausted_) {
            if (witness_) {
                out.status = ExactResult::Status::Exact;
                out.value = incumbent_;
                out.extremal_witness = witness_;
            } else {
                out.status = ExactResult::Status::Infeasible;
            }
        } else {
            out.status = ExactResult::Status::Interval;
            int trivial = trivial_lower(n_);
            int lb = abandoned_lb_ == INT32_MAX ? incumbent_ : abandoned_lb_;
            if (witness_) lb = std::min(lb, incumbent_);
            out.lower = std::max(trivial, lb);
            out.upper = witness_ ? incumbent_ : n_;
            out.extremal_witness = witness_;
            if (witness_ && out.lower >= out.upper) {
                out.status = ExactResult::Status::Exact;
                out.value = out.upper;
            }
        }
        return out;
    }

    // three matchings cannot cover K_n once n >= 5, so some triangle repeats a color
    static int trivial_lower(int n) {
        if (n >= 5) return 3;
        return n >= 2 ? 2 : 1;
    }

private:
    struct Slot {
        int i, j;     // i < j, j is the block vertex
        bool block_end;
    };

    void build_edge_order() {
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                slots_.push_back({i, j, i == j - 1});
    }

    // For prefix sizes m = 2..4: slot relabelings under Sym(m) x stabilizer(F),
    // identity excluded. Transform t maps our prefix to an equivalent one; a
    // prefix is kept only if no transform produces a lexicographically
    // smaller color sequence.
    struct Transform {
        std::vector<int> slot_src;  // output slot t reads input slot slot_src[t]
        ColorPermutation gamma;
    };

    void build_symmetry_tables() {
        stab_ = family_stabilizer(F_);
        int max_m = std::min(n_, 4);
        sym_.assign(max_m + 1, {});
        std::vector<std::pair<int, int>> edge_of_slot;
        for (int j = 1; j < max_m; ++j)
            for (int i = 0; i < j; ++i) edge_of_slot.emplace_back(i, j);
        auto slot_of = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            return b * (b - 1) / 2 + a;
        };
        for (int m = 2; m <= max_m; ++m) {
            int nslots = m * (m - 1) / 2;
            std::vector<int> perm(m);
            for (int i = 0; i < m; ++i) perm[i] = i;
            do {
                for (const auto& gamma : stab_) {
                    bool id_vertex = true;
                    for (int i = 0; i < m; ++i) id_vertex &= perm[i] == i;
                    if (id_vertex && gamma.is_identity()) continue;
                    Transform tr;
                    tr.gamma = gamma;
                    tr.slot_src.resize(nslots);
                    for (int t = 0; t < nslots; ++t) {
                        auto [i, j] = edge_of_slot[t];
                        tr.slot_src[t] = slot_of(perm[i], perm[j]);
                    }
                    sym_[m].push_back(std::move(tr));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    bool prefix_is_canonical(int m) const {
        int nslots = m * (m - 1) / 2;
        for (const Transform& tr : sym_[m]) {
            for (int t = 0; t < nslots; ++t) {
                Color a = tr.gamma.apply(prefix_colors_[tr.slot_src[t]]);
                Color b = prefix_colors_[t];
                if (a < b) return false;
                if (a > b) break;
            }
        }
        return true;
    }

    // largest two-colored clique in the complete prefix {0..j}, given the
    // value for {0..j-1}; only cliques through j can enlarge it
    int prefix_h2(int j, int below) const {
        int best = below;
        for (int pair = 0; pair < 3; ++pair) {
            uint32_t cand = pair_adj_[pair][j] & ((uint32_t(1) << j) - 1);
            int need = best;  // need a clique of size `need` in N(j) to reach best+1
            while (detail::mask_clique_atleast(pair_adj_[pair].data(), cand, need))
                ++need;
            best = std::max(best, need);  // need-1 found in N(j), plus j itself
        }
        return best;
    }

    void set_pair_edges(int i, int j, Color col, bool on) {
        for (int pair = 0; pair < 3; ++pair) {
            if (!pair_colors_[pair].contains(col)) continue;
            if (on) {
                pair_adj_[pair][i] |= uint32_t(1) << j;
                pair_adj_[pair][j] |= uint32_t(1) << i;
            } else {
                pair_adj_[pair][i] &= ~(uint32_t(1) << j);
                pair_adj_[pair][j] &= ~(uint32_t(1) << i);
            }
        }
    }

    void dfs(size_t depth) {
        if (depth == slots_.size()) {
            int h2 = block_h2_[n_ - 1];
            if (!witness_ || h2 < incumbent_) {
                incumbent_ = h2;
                witness_ = c_;
            }
            return;
        }
        if (nodes_ >= opt_.node_budget) {
            exhausted_ = true;
            return;
        }
        const Slot& s = slots_[depth];
        for (Color col : all_colors) {
            if (exhausted_) {
                // everything from here on is abandoned; record the bound
                abandoned_lb_ = std::min(abandoned_lb_, block_h2_[s.j - 1]);
                return;
            }
            ++nodes_;
            if (!triangles_ok(s.i, s.j, col)) continue;
            c_.set(s.i, s.j, col);
            prefix_colors_[depth] = col;
            set_pair_edges(s.i, s.j, col, true);
            bool descend = true;
            if (s.block_end) {
                if (s.j <= 3 && !prefix_is_canonical(s.j + 1)) descend = false;
                if (descend) {
                    int h2 = prefix_h2(s.j, block_h2_[s.j - 1]);
                    if (witness_ && h2 >= incumbent_) descend = false;
                    block_h2_[s.j] = h2;
                }
            }
            if (descend) dfs(depth + 1);
            set_pair_edges(s.i, s.j, col, false);
        }
        if (exhausted_) abandoned_lb_ = std::min(abandoned_lb_, block_h2_[s.j - 1]);
    }

    bool triangles_ok(int i, int j, Color col) const {
        for (int k = 0; k < i; ++k)
            if (F_.contains(TrianglePattern(col, c_.color(k, i), c_.color(k, j)))) return false;
        return true;
    }

    int n_;
    PatternFamily F_;
    ExactOptions opt_;
    EdgeColoring c_;
    std::vector<Slot> slots_;
    std::vector<ColorPermutation> stab_;
    std::vector<std::vector<Transform>> sym_;
    std::array<Color, 496> prefix_colors_{};  // colors by slot index, n <= 32
    std::array<std::array<uint32_t, 32>, 3> pair_adj_{};
    const std::array<ColorSet, 3> pair_colors_{ColorSet{Color::R, Color::B},
                                               ColorSet{Color::R, Color::Y},
                                               ColorSet{Color::B, Color::Y}};
    std::vector<int> block_h2_;
    int incumbent_ = INT32_MAX;
    std::optional<EdgeColoring> witness_;
    uint64_t nodes_ = 0;
    bool exhausted_ = false;
    int abandoned_lb_ = INT32_MAX;
};

}  // namespace detail

// Exact minimum of the largest two-colored clique over all F-avoiding
// colorings of K_n. Degrades to an interval on budget exhaustion and reports
// infeasible only after the full symmetry-reduced space is exhausted.
inline ExactResult exact_h2(int n, const PatternFamily& F, ExactOptions opt = {}) {
    if (n < 1) throw std::invalid_argument("exact_h2 needs n >= 1");
    if (n > 31) throw std::invalid_argument("exact_h2 supports n <= 31");
    detail::ExactH2Search search(n, F, opt);
    return search.run();
}

// ---------------------------------------------------------------------------
// isomorph-rejecting graph enumeration
// ---------------------------------------------------------------------------

namespace detail {

// Equitable-refinement cells in a canonical order; certificate = smallest
// lower-triangle bit string over orderings that list cells in order.
inline std::vector<std::vector<int>> refine_cells(const SimpleGraph& g) {
    int n = g.n();
    std::vector<int> cell_of(n, 0);
    int ncells = 1;
    while (true) {
        // key: current cell, multiset of neighbor cells
        std::vector<std::pair<std::vector<int>, int>> keyed(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key{cell_of[v]};
            std::vector<int> nb;
            g.neighbors(v).for_each([&](int w) { nb.push_back(cell_of[w]); });
            std::sort(nb.begin(), nb.end());
            key.insert(key.end(), nb.begin(), nb.end());
            keyed[v] = {std::move(key), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = keyed;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next_cell(n);
        int nc = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++nc;
            next_cell[sorted[i].second] = nc;
        }
        ++nc;
        if (nc == ncells) break;
        cell_of = std::move(next_cell);
        ncells = nc;
    }
    std::vector<std::vector<int>> cells(ncells);
    for (int v = 0; v < n; ++v) cells[cell_of[v]].push_back(v);
    return cells;
}

class CanonicalKey {
public:
    explicit CanonicalKey(const SimpleGraph& g) : g_(g), n_(g.n()) {}

    std::string compute() {
        cells_ = refine_cells(g_);
        best_.assign(size_t(n_) * n_, 2);  // 2 compares above both bit values
        rows_.assign(size_t(n_) * n_, 0);
        placed_.clear();
        used_.assign(n_, false);
        dfs(0, 0, /*tight=*/true);
        std::string key = std::to_string(n_) + ":";
        for (int u = 1; u < n_; ++u)
            for (int v = 0; v < u; ++v) key += char('0' + best_[size_t(u) * n_ + v]);
        return key;
    }

private:
    // tight: rows_[0..pos) equals best_[0..pos). Returns whether best_ was
    // replaced inside the subtree (callers then continue in tight mode, since
    // the new best shares their prefix).
    bool dfs(int pos, size_t cell_idx, bool tight) {
        if (pos == n_) {
            best_ = rows_;  // by construction rows_ <= best_ here
            return true;
        }
        while (cell_idx < cells_.size()) {
            bool cell_has_free = false;
            for (int v : cells_[cell_idx])
                if (!used_[v]) { cell_has_free = true; break; }
            if (cell_has_free) break;
            ++cell_idx;
        }
        bool updated_any = false;
        for (int v : cells_[cell_idx]) {
            if (used_[v]) continue;
            // fill row `pos`: adjacency of v against already placed vertices
            int cmp = 0;  // -1 better than best_, 0 equal, +1 worse
            for (int p = 0; p < pos; ++p) {
                uint8_t bit = g_.has_edge(v, placed_[p]) ? 1 : 0;
                rows_[size_t(pos) * n_ + p] = bit;
                if (tight && cmp == 0) {
                    uint8_t b = best_[size_t(pos) * n_ + p];
                    if (bit < b) cmp = -1;
                    else if (bit > b) cmp = 1;
                }
            }
            if (tight && cmp > 0) continue;
            used_[v] = true;
            placed_.push_back(v);
            if (dfs(pos + 1, cell_idx, tight && cmp == 0)) {
                updated_any = true;
                tight = true;  // new best runs through our current prefix
            }
            placed_.pop_back();
            used_[v] = false;
        }
        return updated_any;
    }

    const SimpleGraph& g_;
    int n_;
    std::vector<std::vector<int>> cells_;
    std::vector<uint8_t> best_, rows_;
    std::vector<int> placed_;
    std::vector<bool> used_;
};

inline std::string canonical_key(const SimpleGraph& g) {
    if (g.n() == 0) return "0:";
    return CanonicalKey(g).compute();
}

}  // namespace detail

using GraphPredicate = std::function<bool(const SimpleGraph&)>;

// One representative per isomorphism class satisfying the predicate, built by
// vertex-by-vertex extension with canonical-form deduplication. The predicate
// must be hereditary (closed under deleting a vertex) for the enumeration to
// be complete.
inline std::vector<SimpleGraph> enumerate_graphs(int n, const GraphPredicate& pred,
                                                 int cap = 10) {
    if (n < 1 || n > cap)
        throw std::invalid_argument("enumerate_graphs: n must be in 1..cap(" +
                                    std::to_string(cap) + ")");
    std::vector<SimpleGraph> level;
    {
        SimpleGraph k1(1);
        if (pred(k1)) level.push_back(k1);
    }
    for (int k = 2; k <= n; ++k) {
        std::vector<SimpleGraph> next;
        std::unordered_set<std::string> seen;
        for (const SimpleGraph& g : level) {
            for (uint32_t mask = 0; mask < (uint32_t(1) << (k - 1)); ++mask) {
                SimpleGraph h(k);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int u = 0; u < k - 1; ++u)
                    if ((mask >> u) & 1) h.add_edge(u, k - 1);
                if (!pred(h)) continue;
                std::string key = detail::canonical_key(h);
                if (seen.insert(std::move(key)).second) next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

struct GraphSearchResult {
    int value = 0;
    SimpleGraph witness;
    long count_considered = 0;
};

// min over triangle-free G on n vertices of max(alpha(G), omega(G^2))
inline GraphSearchResult f_exact(int n, int cap = 10) {
    auto reps = enumerate_graphs(n, [](const SimpleGraph& g) { return g.triangle_free(); }, cap);
    GraphSearchResult res;
    res.count_considered = (long)reps.size();
    res.value = INT32_MAX;
    for (const SimpleGraph& g : reps) {
        int alpha = independence_number(g);
        int omega2 = clique_number(g.square());
        int f = std::max(alpha, omega2);
        if (f < res.value) {
            res.value = f;
            res.witness = g;
        }
    }
    return res;
}

// min independence number over graphs on n vertices with no C3 and no C5;
// bipartite graphs qualify vacuously
inline GraphSearchResult g_exact(int n, int cap = 10) {
    auto pred = [](const SimpleGraph& g) {
        auto og = g.odd_girth();
        return !og || *og >= 7;
    };
    auto reps = enumerate_graphs(n, pred, cap);
    GraphSearchResult res;
    res.count_considered = (long)reps.size();
    res.value = INT32_MAX;
    for (const SimpleGraph& g : reps) {
        int alpha = independence_number(g);
        if (alpha < res.value) {
            res.value = alpha;
            res.witness = g;
        }
    }
    return res;
}

struct SandwichReport {
    int n = 0;
    int lo = 0, hi = 0;
    ExactResult h2;
    bool applicable = false;  // false when exact_h2 degraded to an interval
    bool ok = false;

    std::string describe() const {
        if (!applicable) return "exact search incomplete; sandwich not checked";
        return std::to_string(lo) + " <= " + std::to_string(h2.value) +
               " <= " + std::to_string(hi) + (ok ? " holds" : " VIOLATED");
    }
};

inline SandwichReport sandwich_check(int n, const PatternFamily& F, int lo, int hi,
                                     ExactOptions opt = {}) {
    SandwichReport rep;
    rep.n = n;
    rep.lo = lo;
    rep.hi = hi;
    rep.h2 = exact_h2(n, F, opt);
    rep.applicable = rep.h2.status == ExactResult::Status::Exact;
    rep.ok = rep.applicable && lo <= rep.h2.value && rep.h2.value <= hi;
    return rep;
}

}  // namespace trichrome
