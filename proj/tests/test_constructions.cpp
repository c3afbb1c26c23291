#include <doctest.h>

#include <numeric>
#include <trichrome/cliques.hpp>
#include <trichrome/constructions.hpp>

#include "oracles.hpp"

using namespace trichrome;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("blow_up basics") {
    EdgeColoring inner(3, Color::R);
    EdgeColoring outer1(1);
    CHECK(blow_up(outer1, {3}, {inner}) == inner);

    // two all-red pairs joined in yellow
    EdgeColoring outer2(2, Color::Y);
    EdgeColoring redpair(2, Color::R);
    EdgeColoring c = blow_up(outer2, {2, 2}, {redpair, redpair});
    CHECK(c.n() == 4);
    CHECK(c.color(0, 1) == Color::R);
    CHECK(c.color(2, 3) == Color::R);
    CHECK(c.color(0, 2) == Color::Y);
    CHECK(c.color(1, 3) == Color::Y);
    CHECK(two_color_profile(c).s_ry == 4);

    // all parts of size one reproduce the outer coloring
    Rng rng(5);
    EdgeColoring outer5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) outer5.set(i, j, Color(rng.below(3)));
    std::vector<EdgeColoring> singles(5, EdgeColoring(1));
    CHECK(blow_up(outer5, {1, 1, 1, 1, 1}, singles) == outer5);

    CHECK_THROWS_AS(blow_up(outer2, {2}, {redpair}), std::invalid_argument);
    CHECK_THROWS_AS(blow_up(outer2, {2, 3}, {redpair, redpair}), std::invalid_argument);
}

TEST_CASE("spec table of generators") {
    for (int id = 1; id <= 17; ++id) {
        ConstructionSpec s = construction_spec(id);
        CHECK(s.id == id);
        CHECK(!s.avoided.empty());
        CHECK(!s.order_expr.empty());
    }
    CHECK_THROWS_AS(construction_spec(0), std::invalid_argument);
    CHECK_THROWS_AS(construction_spec(18), std::invalid_argument);
    CHECK_THROWS_AS(generate(14, 6), std::invalid_argument);   // below min_n
    CHECK_THROWS_AS(generate(3, 10), std::invalid_argument);   // missing seed
}

TEST_CASE("generate examples") {
    GeneratedColoring g1 = generate(1, 9);
    CHECK(is_avoiding(g1.coloring, PatternFamily::parse("rrb,rry") ));
    CHECK(is_avoiding(g1.coloring, PatternFamily::parse("bbr,bby")));
    CHECK(h2_of_coloring(g1.coloring).value == 3);

    GeneratedColoring g14 = generate(14, 7);
    CHECK(h2_of_coloring(g14.coloring).value == 3);

    // below the validity floor the internal five-clique dominates: picking one
    // vertex per part spans a red/blue K5, so h2 = 5 > 4 at n = 10
    GeneratedColoring g13_small = generate(13, 10);
    CHECK(h2_of_coloring(g13_small.coloring).value == 5);
    GeneratedColoring g13 = generate(13, 15);
    CHECK(h2_of_coloring(g13.coloring).value <= 2 * ceil_div(15, 5));

    GeneratedColoring g16 = generate(16, 9);
    CHECK(h2_of_coloring(g16.coloring).value == ceil_div(9, 2) + 1);
}

TEST_CASE("deterministic generators are reproducible from n alone") {
    for (int id : {1, 8, 12, 13, 14, 15, 16}) {
        ConstructionSpec s = construction_spec(id);
        CHECK(s.deterministic);
        int n = std::max(s.min_n, 13);
        CHECK(generate(id, n).coloring == generate(id, n).coloring);
    }
}

TEST_CASE("randomized generators are reproducible from the seed") {
    for (int id : {2, 3, 4, 5, 6, 7, 9, 10, 11, 17}) {
        ConstructionSpec s = construction_spec(id);
        CHECK_FALSE(s.deterministic);
        int n = std::max(s.min_n, 20);
        CHECK(generate(id, n, 42).coloring == generate(id, n, 42).coloring);
    }
}

TEST_CASE("every generator avoids its pattern set across sizes and seeds") {
    // generate() verifies avoidance internally and throws on violation
    for (int id = 1; id <= 17; ++id) {
        ConstructionSpec s = construction_spec(id);
        for (int n : {s.min_n, s.min_n + 1, 17, 26}) {
            if (n < s.min_n) continue;
            for (uint64_t seed : {0, 1}) {
                GeneratedColoring g =
                    s.deterministic ? generate(id, n) : generate(id, n, seed);
                CHECK(g.coloring.n() == n);
                if (s.deterministic) break;
            }
        }
    }
}

TEST_CASE("seven-cycle blowup part schedules") {
    // cyclic big/small arrangements per residue
    const char* schedule[7] = {"xxxxxxx", "wxxxxxx", "wxwxxxx", "wwxxwxx",
                               "wwxxwwx", "wwwwwxx", "wwwwwwx"};
    for (int n = 7; n <= 35; ++n) {
        EdgeColoring c = generate(14, n).coloring;
        // recover part sizes: parts are the yellow-inside classes; vertices are
        // laid out part by part, so split on the outer coloring boundaries
        std::vector<int> sizes;
        int start = 0;
        for (int v = 1; v <= n; ++v) {
            if (v == n || c.color(start, v) != Color::Y ||
                (v > start + 1 && c.color(v - 1, v) != Color::Y)) {
                // not reliable for size-1 parts; recompute below instead
            }
        }
        // simpler: recompute from the schedule and check against the coloring
        int w = ceil_div(n, 7), x = n / 7;
        sizes.clear();
        for (int i = 0; i < 7; ++i) sizes.push_back(schedule[n % 7][i] == 'w' ? w : x);
        CHECK(std::accumulate(sizes.begin(), sizes.end(), 0) == n);
        int mx = *std::max_element(sizes.begin(), sizes.end());
        int mn = *std::min_element(sizes.begin(), sizes.end());
        CHECK(mx - mn <= 1);
        // the coloring really uses those parts: inside yellow, across by rule
        std::vector<int> part_of(n);
        int v0 = 0;
        for (int i = 0; i < 7; ++i)
            for (int k = 0; k < sizes[i]; ++k) part_of[v0++] = i;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int d = std::abs(part_of[u] - part_of[v]);
                d = std::min(d, 7 - d);
                Color want = part_of[u] == part_of[v]
                                 ? Color::Y
                                 : (d == 1 ? Color::B : d == 2 ? Color::Y : Color::R);
                CHECK(c.color(u, v) == want);
            }
    }
}

TEST_CASE("provider: exact triangle-free optimum at five vertices") {
    ProviderResult r = provider({ProviderKind::TriangleFreeLowAlpha, 5, 0, 0});
    REQUIRE(r.graph.has_value());
    CHECK(r.graph->triangle_free());
    CHECK(r.alpha == 2);
    CHECK(r.graph->edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(r.graph->degree(v) == 2);
}

TEST_CASE("provider: seeded triangle-free process at forty vertices") {
    ProviderResult r = provider({ProviderKind::TriangleFreeLowAlpha, 40, 0, 7});
    REQUIRE(r.graph.has_value());
    CHECK(r.graph->triangle_free());
    CHECK(r.alpha >= 7);  // Ramsey floor: R(3,9) = 36 <= 40
    CHECK(r.alpha == independence_number(*r.graph));
}

TEST_CASE("provider: two-coloring with no monochromatic triangle at five vertices") {
    ProviderResult r = provider({ProviderKind::NoMonoClique2LogK, 5, 0, 0});
    REQUIRE(r.coloring.has_value());
    CHECK(r.hard_side_clique <= 2);
    CHECK(r.soft_side_clique <= 2);
}

TEST_CASE("provider: forbidden clique side is certified") {
    ProviderResult r = provider({ProviderKind::TwoColorNoKsNoKt, 30, 4, 3});
    REQUIRE(r.coloring.has_value());
    CHECK(r.hard_side_clique <= 3);
    CHECK(clique_number(color_class(*r.coloring, Color::R)) == r.hard_side_clique);
}

TEST_CASE("pack_copy meets the expectation bound") {
    SUBCASE("no edges, no overlap") {
        SimpleGraph g(4);
        PackResult r = pack_copy(g, 0);
        CHECK(r.overlap == 0);
        CHECK(r.bound == 0);
    }
    SUBCASE("perfect matching on four vertices forces zero overlap") {
        SimpleGraph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        // all 24 relabelings: the minimum possible overlap is zero
        std::vector<int> perm{0, 1, 2, 3};
        int best = 99;
        do {
            int ov = 0;
            for (auto [u, v] : g.edges())
                if (g.has_edge(perm[u], perm[v])) ++ov;
            best = std::min(best, ov);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(best == 0);
        PackResult r = pack_copy(g, 1);
        CHECK(r.bound == 0);
        CHECK(r.overlap == 0);
    }
    SUBCASE("five-cycle") {
        SimpleGraph g(5);
        for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
        PackResult r = pack_copy(g, 2);
        CHECK(r.bound == 2);
        CHECK(r.overlap <= 2);
        // oracle: some permutation attains the bound
        std::vector<int> perm{0, 1, 2, 3, 4};
        int best = 99;
        do {
            int ov = 0;
            for (auto [u, v] : g.edges())
                if (g.has_edge(perm[u], perm[v])) ++ov;
            best = std::min(best, ov);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(best <= 2);
    }
    SUBCASE("random triangle-free graphs stay within the bound") {
        for (uint64_t seed = 0; seed < 5; ++seed) {
            SimpleGraph g = detail::random_maximal_triangle_free(24, seed, 40);
            PackResult r = pack_copy(g, seed);
            long e = g.edge_count();
            CHECK(r.overlap <= (int)((e * e) / (24L * 23 / 2)));
        }
    }
}

TEST_CASE("verify_claims sweeps") {
    ConstructionReport r1 = verify_claims(1, 3, 60);
    CHECK(r1.all_ok);
    for (const auto& row : r1.rows) {
        CHECK(row.avoiding);
        CHECK(row.h2 == isqrt_ceil(row.n));
    }

    ConstructionReport r14 = verify_claims(14, 7, 40);
    CHECK(r14.all_ok);
    for (const auto& row : r14.rows)
        CHECK(row.h2 <= ceil_div(3 * row.n, 7) + epsilon1_mod7(row.n));

    ConstructionReport r12 = verify_claims(12, 11, 40);
    CHECK(r12.all_ok);
    ConstructionReport r13 = verify_claims(13, 11, 40);
    CHECK(r13.all_ok);
    ConstructionReport r15 = verify_claims(15, 3, 40);
    CHECK(r15.all_ok);
    for (const auto& row : r15.rows) CHECK(row.h2 == ceil_div(row.n, 2));
    ConstructionReport r16 = verify_claims(16, 3, 40);
    CHECK(r16.all_ok);
    ConstructionReport r8 = verify_claims(8, 3, 40);
    CHECK(r8.all_ok);

    // randomized sweep: avoidance asserted, h2 only reported
    ConstructionReport r3 = verify_claims(3, 10, 25, 5);
    CHECK(r3.all_ok);
    for (const auto& row : r3.rows) CHECK(row.h2 > 0);
}

TEST_CASE("packed pair avoids both monochromatic patterns") {
    for (uint64_t seed : {0, 9}) {
        GeneratedColoring g = generate(17, 30, seed);
        CHECK(is_avoiding(g.coloring, PatternFamily::parse("rrr,bbb")));
        CHECK(color_class(g.coloring, Color::R).triangle_free());
        CHECK(color_class(g.coloring, Color::B).triangle_free());
    }
}

TEST_SUITE_END();
