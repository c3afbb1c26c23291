#include <doctest.h>

#include <trichrome/exact.hpp>
#include <trichrome/patterns.hpp>

#include "oracles.hpp"

using namespace trichrome;

TEST_SUITE_BEGIN("exact");

namespace {

std::vector<PatternFamily> all_canonical_families() {
    std::vector<PatternFamily> out;
    for (int k = 1; k <= 3; ++k) {
        auto cat = enumerate_orbits(k);
        out.insert(out.end(), cat.representatives.begin(), cat.representatives.end());
    }
    return out;
}

}  // namespace

TEST_CASE("exact_h2 spec values") {
    CHECK(exact_h2(2, family_of("rby")).value == 2);
    CHECK(exact_h2(1, family_of("rrr")).value == 1);
    CHECK(exact_h2(4, family_of("rrb")).value == 2);
    CHECK(exact_h2(6, family_of("rrb,bbr,yyr")).value == 3);
    CHECK(exact_h2(7, family_of("rrb,bby,yyr")).value == 3);
}

TEST_CASE("exact_h2 equals full enumeration at n = 5 on a spot family") {
    PatternFamily F = family_of("rby");
    oracles::NaiveMinH2 naive = oracles::naive_min_h2(5, F);
    REQUIRE(naive.feasible);
    ExactResult r = exact_h2(5, F);
    REQUIRE(r.status == ExactResult::Status::Exact);
    CHECK(r.value == naive.value);
}

TEST_CASE("pruned search equals unpruned enumeration for every class at n = 4") {
    for (const PatternFamily& F : all_canonical_families()) {
        oracles::NaiveMinH2 naive = oracles::naive_min_h2(4, F);
        ExactResult r = exact_h2(4, F);
        INFO("family ", F.to_string());
        if (naive.feasible) {
            REQUIRE(r.status == ExactResult::Status::Exact);
            CHECK(r.value == naive.value);
        } else {
            CHECK(r.status == ExactResult::Status::Infeasible);
        }
        // and without warm starting
        ExactOptions cold;
        cold.use_priming = false;
        ExactResult rc = exact_h2(4, F, cold);
        CHECK(rc.status == r.status);
        if (naive.feasible) CHECK(rc.value == naive.value);
    }
}

TEST_CASE("exact witnesses re-verify") {
    for (const char* fam : {"rrb", "rrb,bbr,yyr", "rrr,bbb,rry", "rby"}) {
        PatternFamily F = family_of(fam);
        ExactResult r = exact_h2(5, F);
        REQUIRE(r.status == ExactResult::Status::Exact);
        REQUIRE(r.extremal_witness.has_value());
        CHECK(is_avoiding(*r.extremal_witness, F));
        CHECK(h2_of_coloring(*r.extremal_witness).value == r.value);
    }
}

TEST_CASE("exact_h2 invariant under color permutations of the family") {
    for (const char* fam : {"rrb,bby", "rrr,bbr,yyb"}) {
        PatternFamily F = family_of(fam);
        int base = exact_h2(5, F).value;
        for (const auto& p : ColorPermutation::all())
            CHECK(exact_h2(5, F.permuted(p)).value == base);
    }
}

TEST_CASE("exact_h2 monotone in n and in family refinement") {
    // growing n
    for (const char* fam : {"rrb", "rrb,bbr,yyr", "rrr,bbb,rry"}) {
        int prev = 0;
        for (int n = 2; n <= 6; ++n) {
            int v = exact_h2(n, family_of(fam)).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
    // growing family
    CHECK(exact_h2(5, family_of("rrb")).value <= exact_h2(5, family_of("rrb,bbr")).value);
    CHECK(exact_h2(5, family_of("rrb,bbr")).value <=
          exact_h2(5, family_of("rrb,bbr,yyr")).value);
    CHECK(exact_h2(6, family_of("rrr")).value <= exact_h2(6, family_of("rrr,bbb")).value);
    CHECK(exact_h2(6, family_of("rrr,bbb")).value <=
          exact_h2(6, family_of("rrr,bbb,rry")).value);
}

TEST_CASE("budget exhaustion degrades to a sound interval") {
    ExactOptions opt;
    opt.node_budget = 50;
    opt.use_priming = false;
    ExactResult r = exact_h2(6, family_of("rrb"), opt);
    REQUIRE(r.status == ExactResult::Status::Interval);
    CHECK(r.lower <= 3);  // true value
    CHECK(3 <= r.upper);
    CHECK(r.lower <= r.upper);
    // with warm start an upper bound is available even under a tiny budget
    ExactOptions warm;
    warm.node_budget = 50;
    ExactResult w = exact_h2(6, family_of("rrb"), warm);
    if (w.status == ExactResult::Status::Interval) {
        CHECK(w.upper <= 6);
        CHECK(w.lower <= 3);
        CHECK(3 <= w.upper);
    }
}

TEST_CASE("schedule formula defect at five vertices is real") {
    // three matchings cannot cover the ten edges of K5, so no coloring of K5
    // is triangle-rainbow everywhere and the minimum sits at 3, not at
    // 2*floor(5/5) + eps(5) = 2
    ExactResult r = exact_h2(5, family_of("rrr,bbb,rry"));
    REQUIRE(r.status == ExactResult::Status::Exact);
    CHECK(r.value == 3);
    CHECK(exact_h2(6, family_of("rrr,bbb,rry")).value == 3);
}

TEST_CASE("enumerate_graphs small classes") {
    auto tf = [](const SimpleGraph& g) { return g.triangle_free(); };
    auto all = [](const SimpleGraph&) { return true; };

    CHECK(enumerate_graphs(3, tf).size() == 3);
    CHECK(enumerate_graphs(4, all).size() == 11);
    CHECK(enumerate_graphs(5, all).size() == 34);
    CHECK(enumerate_graphs(6, tf).size() == 38);

    auto reps5 = enumerate_graphs(5, tf);
    CHECK(reps5.size() == 14);
    bool has_c5 = false;
    for (const auto& g : reps5) {
        CHECK(g.triangle_free());
        bool cyclic = g.edge_count() == 5;
        for (int v = 0; v < 5 && cyclic; ++v) cyclic = g.degree(v) == 2;
        has_c5 |= cyclic;
    }
    CHECK(has_c5);

    CHECK_THROWS_AS(enumerate_graphs(11, all), std::invalid_argument);
}

TEST_CASE("enumeration classes match pairwise isomorphism filtering") {
    auto tf = [](const SimpleGraph& g) { return g.triangle_free(); };
    for (int n = 2; n <= 5; ++n) {
        auto fast = enumerate_graphs(n, tf);
        auto slow = oracles::iso_classes_by_filter(n, tf);
        CHECK(fast.size() == slow.size());
    }
    auto og7 = [](const SimpleGraph& g) {
        auto og = g.odd_girth();
        return !og || *og >= 7;
    };
    for (int n = 4; n <= 6; ++n) {
        auto fast = enumerate_graphs(n, og7);
        auto slow = oracles::iso_classes_by_filter(n, og7);
        CHECK(fast.size() == slow.size());
    }
}

TEST_CASE("f_exact values and oracle agreement") {
    CHECK(f_exact(1).value == 1);
    CHECK(f_exact(3).value == 2);
    CHECK(f_exact(5).value == 3);
    for (int n = 1; n <= 6; ++n) {
        GraphSearchResult r = f_exact(n);
        CHECK(r.value == oracles::oracle_f(n));
        CHECK(r.witness.triangle_free());
        int f_w = std::max(oracles::brute_alpha(r.witness),
                           oracles::brute_clique(r.witness.square()));
        CHECK(f_w == r.value);
    }
}

TEST_CASE("g_exact values and oracle agreement") {
    CHECK(g_exact(1).value == 1);
    CHECK(g_exact(6).value == 3);
    CHECK(g_exact(7).value == 3);
    for (int n = 1; n <= 7; ++n) {
        GraphSearchResult r = g_exact(n);
        CHECK(r.value == oracles::oracle_g(n));
        auto og = r.witness.odd_girth();
        CHECK((!og || *og >= 7));
        CHECK(oracles::brute_alpha(r.witness) == r.value);
    }
}

TEST_CASE("sandwich checks") {
    // triangle-free side
    int f5 = f_exact(5).value;
    SandwichReport s1 = sandwich_check(5, family_of("rrr,rrb"), f5, 2 * f5);
    CHECK(s1.applicable);
    CHECK(s1.ok);
    // odd-girth side
    int g7 = g_exact(7).value;
    SandwichReport s2 = sandwich_check(7, family_of("rrr,rrb,yyr"), g7, 2 * g7);
    CHECK(s2.applicable);
    CHECK(s2.ok);
    // one-vertex degenerate case
    SandwichReport s3 = sandwich_check(1, family_of("rrr,rrb"), 1, 2);
    CHECK(s3.applicable);
    CHECK(s3.ok);
}

TEST_SUITE_END();
