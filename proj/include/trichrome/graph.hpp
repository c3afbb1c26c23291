#pragma once

#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "util.hpp"

namespace trichrome {

// Undirected graph on vertices 0..n-1, bitset adjacency, no self-loops.
class SimpleGraph {
public:
    SimpleGraph() : n_(0) {}
    explicit SimpleGraph(int n) : n_(n), adj_(n, Bitset(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int n() const { return n_; }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[u].set(v);
        adj_[v].set(u);
    }
    void remove_edge(int u, int v) {
        check_pair(u, v);
        adj_[u].reset(v);
        adj_[v].reset(u);
    }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (v > u) out.emplace_back(u, v);
            });
        return out;
    }

    SimpleGraph complement() const {
        SimpleGraph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) g.add_edge(u, v);
        return g;
    }

    // vertices at distance <= 2 become adjacent
    SimpleGraph square() const {
        SimpleGraph g(n_);
        for (int u = 0; u < n_; ++u) {
            Bitset reach = adj_[u];
            adj_[u].for_each([&](int v) { reach |= adj_[v]; });
            reach.reset(u);
            reach.for_each([&](int v) {
                if (v > u) g.add_edge(u, v);
            });
        }
        return g;
    }

    SimpleGraph induced(const std::vector<int>& vs) const {
        SimpleGraph g((int)vs.size());
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b)
                if (has_edge(vs[a], vs[b])) g.add_edge((int)a, (int)b);
        return g;
    }

    std::optional<std::array<int, 3>> find_triangle() const {
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1)) {
                Bitset common = adj_[u] & adj_[v];
                int w = common.next(v + 1);
                if (w >= 0) return std::array<int, 3>{u, v, w};
            }
        return std::nullopt;
    }
    bool triangle_free() const { return !find_triangle().has_value(); }

    std::vector<std::vector<int>> connected_components() const {
        std::vector<std::vector<int>> comps;
        std::vector<bool> seen(n_, false);
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            std::vector<int> comp, stack{s};
            seen[s] = true;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                adj_[v].for_each([&](int w) {
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
                });
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    // 2-coloring by BFS, or an odd cycle (as a vertex sequence) when none exists
    struct BipartitionResult {
        bool bipartite = false;
        std::vector<int> side;       // 0/1 per vertex (valid when bipartite)
        std::vector<int> odd_cycle;  // nonempty when not bipartite
    };

    BipartitionResult bipartition() const {
        BipartitionResult res;
        res.side.assign(n_, -1);
        std::vector<int> parent(n_, -1);
        for (int s = 0; s < n_; ++s) {
            if (res.side[s] != -1) continue;
            res.side[s] = 0;
            std::vector<int> queue{s};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int v = queue[qi];
                int bad = -1;
                adj_[v].for_each([&](int w) {
                    if (res.side[w] == -1) {
                        res.side[w] = 1 - res.side[v];
                        parent[w] = v;
                        queue.push_back(w);
                    } else if (res.side[w] == res.side[v] && bad < 0) {
                        bad = w;
                    }
                });
                if (bad >= 0) {
                    res.odd_cycle = recover_cycle(v, bad, parent);
                    return res;
                }
            }
        }
        res.bipartite = true;
        return res;
    }

    // length of shortest odd cycle; nullopt when bipartite
    std::optional<int> odd_girth() const {
        std::optional<int> best;
        for (int s = 0; s < n_; ++s) {
            // BFS over (vertex, parity)
            std::vector<std::array<int, 2>> dist(n_, {-1, -1});
            dist[s][0] = 0;
            std::vector<std::pair<int, int>> queue{{s, 0}};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                auto [v, p] = queue[qi];
                adj_[v].for_each([&](int w) {
                    if (dist[w][1 - p] == -1) {
                        dist[w][1 - p] = dist[v][p] + 1;
                        queue.emplace_back(w, 1 - p);
                    }
                });
            }
            if (dist[s][1] != -1 && (!best || dist[s][1] < *best)) best = dist[s][1];
        }
        return best;
    }

    // row-major lower-triangle bit string; usable as a hash/equality key
    std::string adjacency_key() const {
        std::string key((n_ * (n_ - 1) / 2 + 7) / 8, '\0');
        int bit = 0;
        for (int u = 1; u < n_; ++u)
            for (int v = 0; v < u; ++v, ++bit)
                if (has_edge(u, v)) key[bit >> 3] |= char(1 << (bit & 7));
        return std::to_string(n_) + ":" + key;
    }

    bool operator==(const SimpleGraph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (!(adj_[v] == o.adj_[v])) return false;
        return true;
    }

    // Format: first line "n=<int>", then one "i j" edge per line, 0-indexed.
    void write(std::ostream& os) const {
        os << "n=" << n_ << "\n";
        for (auto [u, v] : edges()) os << u << ' ' << v << "\n";
    }

    static SimpleGraph read(std::istream& is) {
        std::string line;
        int lineno = 0;
        if (!std::getline(is, line)) throw std::runtime_error("graph file: empty input");
        ++lineno;
        if (line.rfind("n=", 0) != 0)
            throw std::runtime_error("graph file line 1: expected \"n=<int>\"");
        int n = 0;
        try {
            n = std::stoi(line.substr(2));
        } catch (...) {
            throw std::runtime_error("graph file line 1: bad vertex count");
        }
        SimpleGraph g(n);
        while (std::getline(is, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::istringstream ls(line);
            int u, v;
            if (!(ls >> u >> v) || u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw std::runtime_error("graph file line " + std::to_string(lineno) +
                                         ": bad edge \"" + line + "\"");
            g.add_edge(u, v);
        }
        return g;
    }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
            throw std::invalid_argument("bad vertex pair (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") for n=" + std::to_string(n_));
    }

    std::vector<int> recover_cycle(int a, int b, const std::vector<int>& parent) const {
        // walk both BFS-tree paths to the root, splice at the meeting point
        std::vector<int> pa{a}, pb{b};
        auto depth = [&](int v) {
            int d = 0;
            while (parent[v] != -1) { v = parent[v]; ++d; }
            return d;
        };
        int da = depth(a), db = depth(b);
        int x = a, y = b;
        while (da > db) { x = parent[x]; pa.push_back(x); --da; }
        while (db > da) { y = parent[y]; pb.push_back(y); --db; }
        while (x != y) {
            x = parent[x]; pa.push_back(x);
            y = parent[y]; pb.push_back(y);
        }
        pa.pop_back();  // drop the shared apex from one side
        std::vector<int> cycle(pa.begin(), pa.end());
        cycle.insert(cycle.end(), pb.rbegin(), pb.rend());
        return cycle;
    }

    int n_;
    std::vector<Bitset> adj_;
};

}  // namespace trichrome
