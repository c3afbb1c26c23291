#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliques.hpp"
#include "coloring.hpp"
#include "patterns.hpp"

namespace trichrome {

// A structural check required by an extractor failed; for avoiding inputs
// this cannot happen, so it signals a violated precondition.
struct precondition_violation : std::runtime_error {
    explicit precondition_violation(const std::string& what) : std::runtime_error(what) {}
};

struct ExtractionOutcome {
    CliqueWitness witness;
    int guarantee = 0;
    std::string lemma_id;
};

namespace detail {

inline std::string triple_str(int u, int v, int w) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + ")";
}

inline void require_avoiding(const EdgeColoring& c, const PatternFamily& F,
                             const std::string& who) {
    if (auto hit = find_pattern_from(c, F))
        throw precondition_violation(who + ": input contains " + hit->pattern.to_string() +
                                     " at " + triple_str(hit->vertices[0], hit->vertices[1],
                                                         hit->vertices[2]));
}

inline ExtractionOutcome finish(const EdgeColoring& c, std::vector<int> vertices,
                                int guarantee, const std::string& lemma_id) {
    ExtractionOutcome out;
    out.witness = make_witness(c, std::move(vertices));
    out.guarantee = guarantee;
    out.lemma_id = lemma_id;
    if (!out.witness.validate(c))
        throw precondition_violation(lemma_id + ": produced set is not two-colored");
    if (out.witness.size() < guarantee)
        throw precondition_violation(lemma_id + ": witness size " +
                                     std::to_string(out.witness.size()) +
                                     " under guarantee " + std::to_string(guarantee));
    return out;
}

// union of the larger bipartition side of every component of g
inline std::vector<int> larger_bipartition_sides(const SimpleGraph& g,
                                                 const std::string& who) {
    auto bp = g.bipartition();
    if (!bp.bipartite) {
        std::string cyc;
        for (int v : bp.odd_cycle) cyc += std::to_string(v) + " ";
        throw precondition_violation(who + ": odd cycle [" + cyc + "] where none may exist");
    }
    std::vector<int> out;
    for (const auto& comp : g.connected_components()) {
        std::vector<int> side0, side1;
        for (int v : comp) (bp.side[v] == 0 ? side0 : side1).push_back(v);
        const auto& take = side0.size() >= side1.size() ? side0 : side1;
        out.insert(out.end(), take.begin(), take.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Split on the maximum red degree: either a vertex with a big red
// neighborhood spans a red/yellow clique with it, or the red graph is
// colorable with few classes and the largest class is blue/yellow.
inline ExtractionOutcome extract_sqrt(const EdgeColoring& c) {
    detail::require_avoiding(c, family_of("rrb"), "extract_sqrt");
    int n = c.n();
    int guarantee = isqrt_ceil(n);
    SimpleGraph red = color_class(c, Color::R);
    int v_max = 0;
    for (int v = 1; v < n; ++v)
        if (red.degree(v) > red.degree(v_max)) v_max = v;
    int delta = red.degree(v_max);
    if (delta >= isqrt_floor(n)) {
        std::vector<int> set = red.neighbors(v_max).to_vector();
        set.push_back(v_max);
        return detail::finish(c, std::move(set), guarantee, "red_degree_sqrt_split");
    }
    // greedy proper coloring of the red graph, vertices by decreasing red degree
    std::vector<int> verts(n), cls(n, -1);
    for (int i = 0; i < n; ++i) verts[i] = i;
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return red.degree(a) != red.degree(b) ? red.degree(a) > red.degree(b) : a < b;
    });
    int nclasses = 0;
    for (int v : verts) {
        std::vector<bool> used(n + 1, false);
        red.neighbors(v).for_each([&](int w) {
            if (cls[w] >= 0) used[cls[w]] = true;
        });
        int k = 0;
        while (used[k]) ++k;
        cls[v] = k;
        nclasses = std::max(nclasses, k + 1);
    }
    int best_cls = 0, best_sz = -1;
    for (int k = 0; k < nclasses; ++k) {
        int sz = 0;
        for (int v = 0; v < n; ++v) sz += cls[v] == k;
        if (sz > best_sz) { best_sz = sz; best_cls = k; }
    }
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
        if (cls[v] == best_cls) set.push_back(v);
    return detail::finish(c, std::move(set), guarantee, "red_degree_sqrt_split");
}

// The red graph must be a matching; one endpoint per red edge plus every
// red-isolated vertex spans a blue/yellow clique.
inline ExtractionOutcome extract_red_matching(const EdgeColoring& c) {
    detail::require_avoiding(c, family_of("rrr,rrb,rry"), "extract_red_matching");
    int n = c.n();
    SimpleGraph red = color_class(c, Color::R);
    std::vector<int> set;
    for (int v = 0; v < n; ++v) {
        int d = red.degree(v);
        if (d > 1) {
            int a = red.neighbors(v).next(0);
            int b = red.neighbors(v).next(a + 1);
            throw precondition_violation("extract_red_matching: red edges (" +
                                         std::to_string(v) + "," + std::to_string(a) +
                                         ") and (" + std::to_string(v) + "," +
                                         std::to_string(b) + ") share a vertex");
        }
        if (d == 0 || red.neighbors(v).next(0) > v) set.push_back(v);
    }
    return detail::finish(c, std::move(set), ceil_div(n, 2), "red_matching");
}

enum class BipartiteRedKind {
    AllowRedTriangle,   // a red triangle forces an all-red/yellow coloring
    ForbidRedTriangle,  // a red triangle is impossible for the family
};

// Either a red triangle collapses the coloring to red/yellow on all of V, or
// the red graph is bipartite and the larger sides form a blue/yellow clique.
inline ExtractionOutcome extract_bipartite_red(const EdgeColoring& c, BipartiteRedKind kind) {
    const char* who = "extract_bipartite_red";
    PatternFamily F = kind == BipartiteRedKind::AllowRedTriangle ? family_of("rrb,bbr,yyr")
                                                                 : family_of("rrr,bbr,yyr");
    detail::require_avoiding(c, F, who);
    int n = c.n();
    SimpleGraph red = color_class(c, Color::R);
    auto tri = red.find_triangle();
    if (tri) {
        if (kind == BipartiteRedKind::ForbidRedTriangle)
            throw precondition_violation(std::string(who) + ": red triangle " +
                                         detail::triple_str((*tri)[0], (*tri)[1], (*tri)[2]) +
                                         " cannot occur");
        // no blue edge may coexist with a red triangle
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (c.color(u, v) == Color::B)
                    throw precondition_violation(std::string(who) + ": blue edge (" +
                                                 std::to_string(u) + "," + std::to_string(v) +
                                                 ") next to a red triangle");
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        return detail::finish(c, std::move(all), n, "red_bipartition");
    }
    std::vector<int> set = detail::larger_bipartition_sides(red, who);
    return detail::finish(c, std::move(set), ceil_div(n, 2), "red_bipartition");
}

// No vertex may touch both a red and a blue edge; the bigger single-palette
// side plus one extra vertex is two-colored.
inline ExtractionOutcome extract_disjoint_palettes(const EdgeColoring& c) {
    const char* who = "extract_disjoint_palettes";
    detail::require_avoiding(c, family_of("rrb,bbr,rby"), who);
    int n = c.n();
    SimpleGraph red = color_class(c, Color::R), blue = color_class(c, Color::B);
    std::vector<int> red_touch, blue_touch;
    for (int v = 0; v < n; ++v) {
        bool r = red.degree(v) > 0, b = blue.degree(v) > 0;
        if (r && b)
            throw precondition_violation(
                std::string(who) + ": vertex " + std::to_string(v) +
                " meets both a red edge (to " + std::to_string(red.neighbors(v).next(0)) +
                ") and a blue edge (to " + std::to_string(blue.neighbors(v).next(0)) +
                "), leaving their far edge uncolorable");
        if (r) red_touch.push_back(v);
        if (b) blue_touch.push_back(v);
    }
    const auto& excluded = red_touch.size() <= blue_touch.size() ? red_touch : blue_touch;
    std::vector<bool> out(n, false);
    for (int v : excluded) out[v] = true;
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
        if (!out[v]) set.push_back(v);
    if ((int)set.size() < n) {
        // smallest excluded vertex joins; its edges into the set share its palette
        set.push_back(excluded[0]);
        std::sort(set.begin(), set.end());
    }
    int guarantee = std::min(n, ceil_div(n, 2) + 1);
    return detail::finish(c, std::move(set), guarantee, "red_blue_vertex_split");
}

// smallest independent-set correction attainable from disjoint paths and
// cycles without triangles: 0,1,1,2,2 by n mod 5
inline int degree2_epsilon(int n) {
    static const int table[5] = {0, 1, 1, 2, 2};
    return table[n % 5];
}

// Red degrees are at most 2 and red triangles cannot occur, so red components
// are paths and cycles of length >= 4; their maximum independent set is a
// blue/yellow clique.
inline ExtractionOutcome extract_degree2(const EdgeColoring& c) {
    const char* who = "extract_degree2";
    detail::require_avoiding(c, family_of("rrr,bbb,rry"), who);
    int n = c.n();
    SimpleGraph red = color_class(c, Color::R);
    for (int v = 0; v < n; ++v)
        if (red.degree(v) > 2)
            throw precondition_violation(std::string(who) + ": vertex " + std::to_string(v) +
                                         " has red degree " + std::to_string(red.degree(v)));
    if (auto tri = red.find_triangle())
        throw precondition_violation(std::string(who) + ": red triangle " +
                                     detail::triple_str((*tri)[0], (*tri)[1], (*tri)[2]));
    std::vector<int> set;
    for (const auto& comp : red.connected_components()) {
        // walk the path or cycle from a deterministic starting point
        int start = comp[0];
        bool is_path = false;
        for (int v : comp)
            if (red.degree(v) <= 1) {
                start = v;
                is_path = true;
                break;
            }
        std::vector<int> walk{start};
        int prev = -1, cur = start;
        while ((int)walk.size() < (int)comp.size()) {
            int nxt = -1;
            red.neighbors(cur).for_each([&](int w) {
                if (w != prev && nxt < 0) nxt = w;
            });
            if (nxt < 0) break;
            walk.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        int take_upto = is_path ? (int)walk.size() : (int)walk.size() - 1;
        for (int i = 0; i < take_upto; i += 2) set.push_back(walk[i]);
        if (!is_path && (walk.size() & 1)) {
            // odd cycle: position size-1 neighbors position 0; drop the clash
            // by construction (last even index is size-3, safe)
        }
    }
    std::sort(set.begin(), set.end());
    int guarantee = 2 * (n / 5) + degree2_epsilon(n);
    return detail::finish(c, std::move(set), guarantee, "red_degree_two_paths_cycles");
}

// With three distinct majority colors forbidden, each neighborhood of the
// apex vertex is two-colored; the largest has (n-1)/3 vertices.
inline ExtractionOutcome extract_majority_neighborhood(const EdgeColoring& c,
                                                       const PatternFamily& F) {
    const char* who = "extract_majority_neighborhood";
    if (F.size() != 3) throw std::invalid_argument(std::string(who) + ": needs 3 patterns");
    ColorSet majors;
    for (const auto& p : F.patterns()) {
        auto m = p.majority_color();
        if (!m) throw std::invalid_argument(std::string(who) + ": rainbow pattern present");
        majors.add(*m);
    }
    if (majors.size() != 3)
        throw std::invalid_argument(std::string(who) + ": majority colors not distinct");
    detail::require_avoiding(c, F, who);
    int n = c.n();
    std::array<std::vector<int>, 3> nbhd;
    for (int v = 1; v < n; ++v) nbhd[int(c.color(0, v))].push_back(v);
    int best = 0;
    for (int k = 1; k < 3; ++k)
        if (nbhd[k].size() > nbhd[best].size()) best = k;
    // two-coloredness is certified by finish(); a failure here would expose a
    // forbidden triangle through the apex
    return detail::finish(c, nbhd[best], ceil_div(n - 1, 3), "majority_neighborhoods");
}

namespace detail {

// full neighborhood case split for the family {rrr,bby,yyb}: combines the
// apex neighborhoods into one red/blue and one red/yellow clique
inline ExtractionOutcome extract_apex_split_impl(const EdgeColoring& c, int depth) {
    const char* who = "extract_apex_split";
    PatternFamily F = family_of("rrr,bby,yyb");
    require_avoiding(c, F, who);
    int n = c.n();
    int guarantee = ceil_div(n, 2);
    std::array<std::vector<int>, 3> nb;
    for (int v = 1; v < n; ++v) nb[int(c.color(0, v))].push_back(v);
    const auto& N_r = nb[int(Color::R)];
    const auto& N_b = nb[int(Color::B)];
    const auto& N_y = nb[int(Color::Y)];

    auto with_apex = [&](const std::vector<int>& s) {
        std::vector<int> t = s;
        t.push_back(0);
        std::sort(t.begin(), t.end());
        return t;
    };

    if (N_r.size() <= 1 || N_b.size() <= 1 || N_y.size() <= 1) {
        // each apex neighborhood plus the apex is two-colored here
        std::vector<int> bestv;
        for (const auto* s : {&N_r, &N_b, &N_y}) {
            auto cand = with_apex(*s);
            if (make_witness(c, cand).validate(c) && cand.size() > bestv.size()) bestv = cand;
        }
        return finish(c, std::move(bestv), guarantee, "apex_neighborhood_split");
    }

    // the red neighborhood induces one color; flip blue/yellow so it is blue
    Color inner = c.color(N_r[0], N_r[1]);
    for (size_t a = 0; a < N_r.size(); ++a)
        for (size_t b = a + 1; b < N_r.size(); ++b)
            if (c.color(N_r[a], N_r[b]) != inner)
                throw precondition_violation(std::string(who) +
                                             ": red neighborhood is not monochromatic");
    if (inner == Color::R)
        throw precondition_violation(std::string(who) + ": red edge inside red neighborhood");
    if (inner == Color::Y) {
        if (depth > 0) throw precondition_violation(std::string(who) + ": swap loop");
        EdgeColoring swapped =
            apply_color_permutation(c, ColorPermutation(Color::R, Color::Y, Color::B));
        ExtractionOutcome sub = extract_apex_split_impl(swapped, depth + 1);
        return finish(c, sub.witness.vertices, guarantee, "apex_neighborhood_split");
    }

    // does some red-neighbor send only yellow to the yellow neighborhood?
    int lone = -1;
    for (int u : N_r) {
        bool all_yellow = true;
        for (int w : N_y) all_yellow &= c.color(u, w) == Color::Y;
        if (all_yellow) { lone = u; break; }
    }
    std::vector<int> v1, v2;
    if (lone >= 0) {
        for (int u : N_r)
            if (u != lone) v1.push_back(u);
        v1.insert(v1.end(), N_b.begin(), N_b.end());
        v1 = with_apex(v1);
        v2 = N_y;
        v2.push_back(lone);
        v2 = with_apex(v2);
    } else {
        v1 = N_r;
        v1.insert(v1.end(), N_b.begin(), N_b.end());
        v1 = with_apex(v1);
        v2 = with_apex(N_y);
    }
    if (!make_witness(c, v1).validate(c))
        throw precondition_violation(std::string(who) + ": red/blue side not two-colored");
    if (!make_witness(c, v2).validate(c))
        throw precondition_violation(std::string(who) + ": red/yellow side not two-colored");
    return finish(c, v1.size() >= v2.size() ? v1 : v2, guarantee, "apex_neighborhood_split");
}

}  // namespace detail

inline ExtractionOutcome extract_apex_split(const EdgeColoring& c) {
    return detail::extract_apex_split_impl(c, 0);
}

// Blue-triangle case, bipartite-blue case, or the full seven-cycle blow-up
// replay with the part-balance refinement for n = 2 mod 7.
inline ExtractionOutcome extract_c7_structure(const EdgeColoring& c) {
    const char* who = "extract_c7_structure";
    detail::require_avoiding(c, family_of("rrr,bbr,yyb"), who);
    int n = c.n();
    int guarantee = std::min(n, ceil_div(3 * n, 7) + epsilon1_mod7(n));
    if (n <= 2) {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        return detail::finish(c, std::move(all), guarantee, "seven_cycle_blowup");
    }
    SimpleGraph blue = color_class(c, Color::B);
    std::vector<int> bclique = max_clique(blue);

    if ((int)bclique.size() >= 3) {
        // A: only blue/yellow toward the clique; O: sends red, hence no blue
        std::vector<bool> in_b(n, false);
        for (int v : bclique) in_b[v] = true;
        std::vector<int> a_side, o_side;
        for (int x = 0; x < n; ++x) {
            if (in_b[x]) continue;
            bool has_red = false, has_blue = false;
            int yellow = 0;
            for (int b : bclique) {
                Color col = c.color(x, b);
                has_red |= col == Color::R;
                has_blue |= col == Color::B;
                yellow += col == Color::Y;
            }
            if (yellow > 1)
                throw precondition_violation(std::string(who) + ": vertex " +
                                             std::to_string(x) +
                                             " sends two yellow edges into a blue clique");
            if (has_red && has_blue)
                throw precondition_violation(std::string(who) + ": vertex " +
                                             std::to_string(x) +
                                             " sends both red and blue into a blue clique");
            (has_red ? o_side : a_side).push_back(x);
        }
        std::vector<int> ba = bclique;
        ba.insert(ba.end(), a_side.begin(), a_side.end());
        std::sort(ba.begin(), ba.end());
        auto& pick = ba.size() >= o_side.size() ? ba : o_side;
        return detail::finish(c, pick, guarantee, "seven_cycle_blowup");
    }

    auto bp = blue.bipartition();
    if (bp.bipartite) {
        std::vector<int> side = detail::larger_bipartition_sides(blue, who);
        return detail::finish(c, std::move(side), guarantee, "seven_cycle_blowup");
    }

    // shortest blue odd cycle must have length exactly 7
    auto og = blue.odd_girth();
    if (!og || *og != 7)
        throw precondition_violation(std::string(who) + ": blue odd girth " +
                                     std::to_string(og ? *og : -1) + ", expected 7");
    // recover a blue 7-cycle: bipartition's odd cycle may be longer, so find
    // one by brute walk from the odd-girth BFS
    std::vector<int> cyc = [&]() -> std::vector<int> {
        // BFS double-cover from each vertex until a length-7 odd closed walk
        for (int s = 0; s < n; ++s) {
            std::vector<std::array<int, 2>> par(n, {-1, -1});
            std::vector<std::array<int, 2>> dist(n, {-1, -1});
            dist[s][0] = 0;
            std::vector<std::pair<int, int>> queue{{s, 0}};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                auto [v, p] = queue[qi];
                blue.neighbors(v).for_each([&](int w) {
                    if (dist[w][1 - p] == -1) {
                        dist[w][1 - p] = dist[v][p] + 1;
                        par[w][1 - p] = v;
                        queue.emplace_back(w, 1 - p);
                    }
                });
            }
            if (dist[s][1] != 7) continue;
            std::vector<int> walk;
            int v = s, p = 1;
            while (!(v == s && p == 0)) {
                walk.push_back(v);
                int pv = par[v][p];
                v = pv;
                p = 1 - p;
            }
            std::vector<int> seen = walk;
            std::sort(seen.begin(), seen.end());
            if (std::unique(seen.begin(), seen.end()) != seen.end()) continue;
            if ((int)walk.size() == 7) return walk;
        }
        throw precondition_violation(std::string(who) + ": no blue 7-cycle recovered");
    }();

    // mimic classes: every vertex behaves like one cycle position
    std::vector<int> part_of(n, -1);
    for (int i = 0; i < 7; ++i) part_of[cyc[i]] = i;
    auto expected_color = [&](int di) {
        int d = std::min(di, 7 - di);
        return d == 1 ? Color::B : d == 2 ? Color::Y : Color::R;
    };
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (c.color(cyc[i], cyc[j]) != expected_color(j - i))
                throw precondition_violation(std::string(who) +
                                             ": seven-cycle colors break the distance rule");
    for (int x = 0; x < n; ++x) {
        if (part_of[x] >= 0) continue;
        int found = -1;
        for (int i = 0; i < 7; ++i) {
            bool match = true;
            for (int j = 0; j < 7 && match; ++j) {
                if (j == i) continue;
                match = c.color(x, cyc[j]) == expected_color(std::abs(j - i));
            }
            if (match) {
                found = i;
                break;
            }
        }
        if (found < 0)
            throw precondition_violation(std::string(who) + ": vertex " + std::to_string(x) +
                                         " mimics no cycle position");
        part_of[x] = found;
    }
    // certify the full blow-up structure
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Color want = part_of[u] == part_of[v]
                             ? Color::Y
                             : expected_color(std::abs(part_of[u] - part_of[v]));
            if (c.color(u, v) != want)
                throw precondition_violation(std::string(who) + ": edge (" +
                                             std::to_string(u) + "," + std::to_string(v) +
                                             ") breaks the blow-up structure");
        }
    std::array<std::vector<int>, 7> parts;
    for (int v = 0; v < n; ++v) parts[part_of[v]].push_back(v);
    std::vector<int> best;
    for (int i = 0; i < 7; ++i) {
        for (auto offsets : {std::array<int, 3>{0, 1, 2}, std::array<int, 3>{0, 2, 4}}) {
            std::vector<int> cand;
            for (int o : offsets) {
                const auto& p = parts[(i + o) % 7];
                cand.insert(cand.end(), p.begin(), p.end());
            }
            if (cand.size() > best.size()) best = cand;
        }
    }
    std::sort(best.begin(), best.end());
    return detail::finish(c, std::move(best), guarantee, "seven_cycle_blowup");
}

// Monochromatic-clique split when a mono triangle exists; otherwise the
// coloring is confined to n <= 7 with the cyclic structure at n = 7.
inline ExtractionOutcome extract_mono_apex(const EdgeColoring& c) {
    const char* who = "extract_mono_apex";
    PatternFamily F = family_of("rrb,bby,yyr");
    detail::require_avoiding(c, F, who);
    int n = c.n();
    int guarantee = n == 7 ? 3 : ceil_div(n, 2);

    // locate a monochromatic triangle of any color
    std::optional<Color> mono_color;
    for (Color x : all_colors) {
        if (color_class(c, x).find_triangle()) {
            mono_color = x;
            break;
        }
    }
    if (mono_color) {
        // rotate colors inside the family's cyclic stabilizer so the
        // monochromatic color plays red
        ColorPermutation rot = ColorPermutation::identity();
        if (*mono_color == Color::B)
            rot = ColorPermutation(Color::Y, Color::R, Color::B);  // b -> r
        else if (*mono_color == Color::Y)
            rot = ColorPermutation(Color::B, Color::Y, Color::R);  // y -> r
        EdgeColoring d = apply_color_permutation(c, rot);
        SimpleGraph red = color_class(d, Color::R);
        std::vector<int> R = max_clique(red);
        if ((int)R.size() < 3)
            throw precondition_violation(std::string(who) + ": lost the mono triangle");
        std::vector<bool> in_r(n, false);
        for (int v : R) in_r[v] = true;
        std::vector<int> o_side, p_side;
        for (int x = 0; x < n; ++x) {
            if (in_r[x]) continue;
            bool has_red = false, has_blue = false;
            int yellow = 0;
            for (int r : R) {
                Color col = d.color(x, r);
                has_red |= col == Color::R;
                has_blue |= col == Color::B;
                yellow += col == Color::Y;
            }
            if (yellow > 1)
                throw precondition_violation(std::string(who) + ": vertex " +
                                             std::to_string(x) +
                                             " sends two yellow edges into the clique");
            if (has_red && has_blue)
                throw precondition_violation(std::string(who) + ": vertex " +
                                             std::to_string(x) + " sends red and blue");
            (has_blue ? p_side : o_side).push_back(x);
        }
        std::vector<int> ro = R;
        ro.insert(ro.end(), o_side.begin(), o_side.end());
        std::sort(ro.begin(), ro.end());
        const auto& pick = ro.size() >= p_side.size() ? ro : p_side;
        return detail::finish(c, pick, guarantee, "mono_apex_split");
    }

    if (n > 7)
        throw precondition_violation(std::string(who) +
                                     ": no mono triangle is impossible beyond 7 vertices");
    if (n == 7) {
        // every color class is a 7-cycle; the apex with its red neighbors is
        // a red/yellow triple
        std::vector<int> set{0};
        for (int v = 1; v < 7; ++v)
            if (c.color(0, v) == Color::R) set.push_back(v);
        return detail::finish(c, std::move(set), guarantee, "mono_apex_split");
    }
    SimpleGraph red = color_class(c, Color::R);
    std::vector<int> side = detail::larger_bipartition_sides(red, who);
    return detail::finish(c, std::move(side), guarantee, "mono_apex_split");
}

// ---------------------------------------------------------------------------
// rainbow-free decompositions
// ---------------------------------------------------------------------------

struct BlobPartition {
    enum class Level { Blob, SubBlob };
    Level level = Level::Blob;
    std::vector<std::vector<int>> parts;
    std::map<std::pair<int, int>, Color> between_colors;
    bool single_part = false;

    ColorSet crossing_colors() const {
        ColorSet s;
        for (const auto& [k, col] : between_colors) s.add(col);
        return s;
    }

    bool validate(const EdgeColoring& c, int max_crossing_colors) const {
        std::vector<int> owner(c.n(), -1);
        for (size_t i = 0; i < parts.size(); ++i)
            for (int v : parts[i]) {
                if (v < 0 || v >= c.n() || owner[v] != -1) return false;
                owner[v] = (int)i;
            }
        for (int v = 0; v < c.n(); ++v)
            if (owner[v] == -1) return false;
        for (int u = 0; u < c.n(); ++u)
            for (int v = u + 1; v < c.n(); ++v) {
                if (owner[u] == owner[v]) continue;
                auto key = std::minmax(owner[u], owner[v]);
                auto it = between_colors.find({key.first, key.second});
                if (it == between_colors.end() || it->second != c.color(u, v)) return false;
            }
        return crossing_colors().size() <= max_crossing_colors;
    }
};

namespace detail {

// walks a red path between two vertices of one red component to surface the
// rainbow triangle implied by a non-monochromatic crossing
inline void throw_rainbow(const EdgeColoring& c, const SimpleGraph& red, int apex, int w1,
                          int w2, const std::string& who) {
    // BFS path w1 -> w2 in red
    int n = c.n();
    std::vector<int> par(n, -2);
    par[w1] = -1;
    std::vector<int> queue{w1};
    for (size_t qi = 0; qi < queue.size() && par[w2] == -2; ++qi) {
        int v = queue[qi];
        red.neighbors(v).for_each([&](int w) {
            if (par[w] == -2) {
                par[w] = v;
                queue.push_back(w);
            }
        });
    }
    std::vector<int> path;
    for (int v = w2; v != -1; v = par[v]) path.push_back(v);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (c.color(apex, path[i]) != c.color(apex, path[i + 1]))
            throw precondition_violation(
                who + ": rainbow triangle " + triple_str(apex, path[i], path[i + 1]));
    }
    throw precondition_violation(who + ": inconsistent crossing with no witness");
}

}  // namespace detail

// Parts are the red components; every crossing pair must be monochromatic
// blue or yellow.
inline BlobPartition blob_decomposition(const EdgeColoring& c) {
    const char* who = "blob_decomposition";
    detail::require_avoiding(c, family_of("rby"), who);
    SimpleGraph red = color_class(c, Color::R);
    BlobPartition bp;
    bp.level = BlobPartition::Level::Blob;
    bp.parts = red.connected_components();
    bp.single_part = bp.parts.size() == 1;
    for (size_t i = 0; i < bp.parts.size(); ++i)
        for (size_t j = i + 1; j < bp.parts.size(); ++j) {
            int a = bp.parts[i][0], b = bp.parts[j][0];
            Color col = c.color(a, b);
            for (int u : bp.parts[i])
                for (int v : bp.parts[j])
                    if (c.color(u, v) != col) {
                        if (c.color(u, b) != c.color(u, v))
                            detail::throw_rainbow(c, red, u, b, v, who);
                        // then c(u,b) != col = c(a,b): flip along part i
                        detail::throw_rainbow(c, red, b, a, u, who);
                    }
            bp.between_colors[{(int)i, (int)j}] = col;
        }
    return bp;
}

struct gallai_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A partition into >= 2 parts with monochromatic crossings using at most two
// colors overall. Tries two-color-union components, then per-color component
// merging with a quotient recursion, then exhaustive search at n <= 8.
inline BlobPartition gallai_partition(const EdgeColoring& c, int depth = 0) {
    const char* who = "gallai_partition";
    if (c.n() < 2) throw std::invalid_argument(std::string(who) + ": needs n >= 2");
    detail::require_avoiding(c, family_of("rby"), who);
    if (depth > 40) throw gallai_failure("quotient recursion did not converge");

    auto finish_parts = [&](std::vector<std::vector<int>> parts) -> std::optional<BlobPartition> {
        if (parts.size() < 2) return std::nullopt;
        BlobPartition bp;
        bp.level = BlobPartition::Level::SubBlob;
        std::sort(parts.begin(), parts.end());
        bp.parts = std::move(parts);
        for (size_t i = 0; i < bp.parts.size(); ++i)
            for (size_t j = i + 1; j < bp.parts.size(); ++j) {
                Color col = c.color(bp.parts[i][0], bp.parts[j][0]);
                for (int u : bp.parts[i])
                    for (int v : bp.parts[j])
                        if (c.color(u, v) != col) return std::nullopt;
                bp.between_colors[{(int)i, (int)j}] = col;
            }
        if (bp.crossing_colors().size() > 2) return std::nullopt;
        return bp;
    };

    // components of a two-color union graph leave only the third color across
    for (Color z : all_colors) {
        ColorSet others;
        for (Color x : all_colors)
            if (x != z) others.add(x);
        auto comps = color_class(c, others).connected_components();
        if (comps.size() >= 2) {
            auto bp = finish_parts(std::move(comps));
            if (bp) return *bp;
        }
    }

    // merge same-color components until crossings are monochromatic, then
    // recurse on the quotient if three crossing colors remain
    for (Color z : all_colors) {
        std::vector<std::vector<int>> parts = color_class(c, z).connected_components();
        bool merged = true;
        while (parts.size() >= 2 && merged) {
            merged = false;
            for (size_t i = 0; i < parts.size() && !merged; ++i)
                for (size_t j = i + 1; j < parts.size() && !merged; ++j) {
                    Color col = c.color(parts[i][0], parts[j][0]);
                    bool mono = true;
                    for (int u : parts[i])
                        for (int v : parts[j]) mono &= c.color(u, v) == col;
                    if (!mono) {
                        parts[i].insert(parts[i].end(), parts[j].begin(), parts[j].end());
                        std::sort(parts[i].begin(), parts[i].end());
                        parts.erase(parts.begin() + j);
                        merged = true;
                    }
                }
        }
        if (parts.size() < 2) continue;
        auto direct = finish_parts(parts);
        if (direct) return *direct;
        // crossings are monochromatic but use all three colors: partition the
        // quotient coloring and merge along it
        EdgeColoring q((int)parts.size());
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i + 1; j < parts.size(); ++j)
                q.set((int)i, (int)j, c.color(parts[i][0], parts[j][0]));
        try {
            BlobPartition qp = gallai_partition(q, depth + 1);
            std::vector<std::vector<int>> merged_parts;
            for (const auto& qpart : qp.parts) {
                std::vector<int> big;
                for (int pi : qpart)
                    big.insert(big.end(), parts[pi].begin(), parts[pi].end());
                std::sort(big.begin(), big.end());
                merged_parts.push_back(std::move(big));
            }
            auto bp = finish_parts(std::move(merged_parts));
            if (bp) return *bp;
        } catch (const gallai_failure&) {
        }
    }

    // exhaustive set-partition search, coarsest first
    if (c.n() <= 8) {
        int n = c.n();
        std::vector<int> assign(n, 0);
        std::function<std::optional<BlobPartition>(int, int)> rec =
            [&](int v, int used) -> std::optional<BlobPartition> {
            if (v == n) {
                if (used < 2) return std::nullopt;
                std::vector<std::vector<int>> parts(used);
                for (int i = 0; i < n; ++i) parts[assign[i]].push_back(i);
                return finish_parts(std::move(parts));
            }
            for (int k = 0; k <= used && k < n; ++k) {
                assign[v] = k;
                auto got = rec(v + 1, std::max(used, k + 1));
                if (got) return got;
            }
            return std::nullopt;
        };
        auto got = rec(0, 0);
        if (got) return *got;
    }
    throw gallai_failure(std::string(who) +
                         ": no valid partition found by merge strategies (n=" +
                         std::to_string(c.n()) + ")");
}

// Greedy partition into maximum cliques of one color class. Parts come out
// with non-increasing sizes; singletons are allowed.
inline std::vector<std::vector<int>> greedy_clique_partition(const EdgeColoring& c,
                                                             Color color) {
    SimpleGraph g = color_class(c, color);
    std::vector<bool> gone(c.n(), false);
    std::vector<std::vector<int>> parts;
    int remaining = c.n();
    while (remaining > 0) {
        std::vector<int> live;
        for (int v = 0; v < c.n(); ++v)
            if (!gone[v]) live.push_back(v);
        SimpleGraph sub = g.induced(live);
        std::vector<int> local = max_clique(sub);
        if (local.empty()) local.push_back(0);
        std::vector<int> part;
        for (int idx : local) part.push_back(live[idx]);
        std::sort(part.begin(), part.end());
        for (int v : part) gone[v] = true;
        remaining -= (int)part.size();
        parts.push_back(std::move(part));
    }
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i].size() < parts[i + 1].size())
            throw std::logic_error("greedy_clique_partition: sizes must be non-increasing");
    return parts;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

// Routes a family to its specialized extractor through a color permutation,
// falling back to the bare clique solver with the trivial guarantee.
inline ExtractionOutcome extract_dispatch(const EdgeColoring& c, const PatternFamily& F) {
    detail::require_avoiding(c, F, "extract_dispatch");

    struct Frame {
        PatternFamily family;
        std::function<ExtractionOutcome(const EdgeColoring&)> run;
    };
    static const std::vector<Frame> frames = {
        {family_of("rrr,rrb,rry"), [](const EdgeColoring& d) { return extract_red_matching(d); }},
        {family_of("rrb,bbr,yyr"),
         [](const EdgeColoring& d) {
             return extract_bipartite_red(d, BipartiteRedKind::AllowRedTriangle);
         }},
        {family_of("rrr,bbr,yyr"),
         [](const EdgeColoring& d) {
             return extract_bipartite_red(d, BipartiteRedKind::ForbidRedTriangle);
         }},
        {family_of("rrb,bbr,rby"),
         [](const EdgeColoring& d) { return extract_disjoint_palettes(d); }},
        {family_of("rrr,bbb,rry"), [](const EdgeColoring& d) { return extract_degree2(d); }},
        {family_of("rrb,bby,yyr"), [](const EdgeColoring& d) { return extract_mono_apex(d); }},
        {family_of("rrr,bbr,yyb"),
         [](const EdgeColoring& d) { return extract_c7_structure(d); }},
        {family_of("rrr,bby,yyb"), [](const EdgeColoring& d) { return extract_apex_split(d); }},
        {family_of("rrb"), [](const EdgeColoring& d) { return extract_sqrt(d); }},
    };

    auto rebuild = [&](ExtractionOutcome sub) {
        sub.witness = make_witness(c, sub.witness.vertices);
        return sub;
    };

    for (const Frame& fr : frames) {
        for (const auto& p : ColorPermutation::all()) {
            if (F.permuted(p) == fr.family)
                return rebuild(fr.run(apply_color_permutation(c, p)));
        }
    }

    // three distinct majority colors and no specialized frame
    if (F.size() == 3) {
        bool majority_ok = true;
        ColorSet majors;
        for (const auto& pat : F.patterns()) {
            auto m = pat.majority_color();
            if (!m) majority_ok = false;
            else majors.add(*m);
        }
        if (majority_ok && majors.size() == 3) return extract_majority_neighborhood(c, F);
    }

    // one pattern equivalent to rrb suffices for the square-root split
    TrianglePattern rrb = TrianglePattern::parse("rrb");
    for (const auto& p : ColorPermutation::all()) {
        if (F.permuted(p).contains(rrb))
            return rebuild(extract_sqrt(apply_color_permutation(c, p)));
    }

    H2Result h2 = h2_of_coloring(c);
    ExtractionOutcome out;
    out.witness = h2.witness;
    out.guarantee = std::min(c.n(), 2);
    out.lemma_id = "clique_solver_fallback";
    return out;
}

}  // namespace trichrome
