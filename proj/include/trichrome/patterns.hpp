#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "pattern.hpp"

namespace trichrome {

// Lexicographically smallest family over the six color permutations, plus
// one permutation achieving it (first in the fixed enumeration on ties).
inline std::pair<PatternFamily, ColorPermutation> canonical_family(const PatternFamily& F) {
    PatternFamily best = F;
    ColorPermutation how = ColorPermutation::identity();
    bool first = true;
    for (const auto& p : ColorPermutation::all()) {
        PatternFamily cand = F.permuted(p);
        if (first || cand < best) {
            best = cand;
            how = p;
            first = false;
        }
    }
    return {best, how};
}

// All permutations fixing F setwise; contains the identity, forms a subgroup.
inline std::vector<ColorPermutation> family_stabilizer(const PatternFamily& F) {
    std::vector<ColorPermutation> out;
    for (const auto& p : ColorPermutation::all())
        if (F.permuted(p) == F) out.push_back(p);
    return out;
}

struct OrbitCatalog {
    int k = 0;
    std::vector<PatternFamily> representatives;       // canonical, sorted
    std::map<PatternFamily, PatternFamily> member_map;  // every k-subset -> its representative

    int orbit_size(const PatternFamily& rep) const {
        int c = 0;
        for (const auto& [mem, r] : member_map)
            if (r == rep) ++c;
        return c;
    }
};

// Groups all C(10,k) pattern subsets into equivalence classes under the six
// color permutations.
inline OrbitCatalog enumerate_orbits(int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("orbit enumeration supports k in 1..3");
    OrbitCatalog cat;
    cat.k = k;
    const auto& all = TrianglePattern::all();
    std::vector<int> idx(k);
    // iterate k-subsets of the 10 patterns
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            std::vector<TrianglePattern> ps;
            for (int i : idx) ps.push_back(all[i]);
            PatternFamily F(std::move(ps));
            auto [rep, perm] = canonical_family(F);
            (void)perm;
            cat.member_map.emplace(F, rep);
            return;
        }
        for (int i = start; i < (int)all.size(); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    for (const auto& [mem, rep] : cat.member_map)
        if (mem == rep) cat.representatives.push_back(rep);
    return cat;
}

}  // namespace trichrome
