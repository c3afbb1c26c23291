#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "color.hpp"

namespace trichrome {

// A triangle pattern: the multiset of the three edge colors of a K3,
// stored sorted under R < B < Y. Ten distinct values exist.
class TrianglePattern {
public:
    TrianglePattern(Color a, Color b, Color c) : c_{a, b, c} {
        std::sort(c_.begin(), c_.end());
    }

    static TrianglePattern parse(const std::string& s) {
        if (s.size() != 3) throw std::invalid_argument("pattern needs exactly 3 color letters: " + s);
        return TrianglePattern(parse_color(s[0]), parse_color(s[1]), parse_color(s[2]));
    }

    static const std::vector<TrianglePattern>& all() {
        static const std::vector<TrianglePattern> ps = [] {
            std::vector<TrianglePattern> out;
            for (int a = 0; a < 3; ++a)
                for (int b = a; b < 3; ++b)
                    for (int c = b; c < 3; ++c) out.emplace_back(Color(a), Color(b), Color(c));
            std::sort(out.begin(), out.end());
            return out;
        }();
        return ps;
    }

    const std::array<Color, 3>& colors() const { return c_; }

    bool is_monochromatic() const { return c_[0] == c_[1] && c_[1] == c_[2]; }
    bool is_rainbow() const { return c_[0] != c_[1] && c_[1] != c_[2]; }

    // color on >= 2 edges; rainbow patterns have none
    std::optional<Color> majority_color() const {
        if (is_rainbow()) return std::nullopt;
        return c_[0] == c_[1] ? c_[0] : c_[1];
    }
    // color on exactly 1 edge of a two-one pattern
    std::optional<Color> minority_color() const {
        if (is_rainbow() || is_monochromatic()) return std::nullopt;
        return c_[0] == c_[1] ? c_[2] : c_[0];
    }

    int count(Color c) const {
        return (c_[0] == c) + (c_[1] == c) + (c_[2] == c);
    }

    TrianglePattern permuted(const ColorPermutation& p) const {
        return TrianglePattern(p.apply(c_[0]), p.apply(c_[1]), p.apply(c_[2]));
    }

    // majority letter doubled then minority, e.g. "bbr"; "rby" for rainbow
    std::string to_string() const {
        if (is_rainbow()) return "rby";
        Color maj = *majority_color();
        if (is_monochromatic()) return std::string(3, color_char(maj));
        Color min_c = *minority_color();
        return {color_char(maj), color_char(maj), color_char(min_c)};
    }

    auto operator<=>(const TrianglePattern&) const = default;

private:
    std::array<Color, 3> c_;
};

// A set of 1..3 distinct patterns, stored sorted.
class PatternFamily {
public:
    explicit PatternFamily(std::vector<TrianglePattern> ps) : p_(std::move(ps)) {
        std::sort(p_.begin(), p_.end());
        p_.erase(std::unique(p_.begin(), p_.end()), p_.end());
        if (p_.empty() || p_.size() > 3)
            throw std::invalid_argument("pattern family must hold 1..3 distinct patterns");
    }
    PatternFamily(std::initializer_list<TrianglePattern> ps)
        : PatternFamily(std::vector<TrianglePattern>(ps)) {}

    // comma-separated pattern words in any case/order, e.g. "rrb,BBY"
    static PatternFamily parse(const std::string& s) {
        std::vector<TrianglePattern> ps;
        std::string cur;
        for (char ch : s) {
            if (ch == ',' || ch == ' ' || ch == ';') {
                if (!cur.empty()) ps.push_back(TrianglePattern::parse(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) ps.push_back(TrianglePattern::parse(cur));
        return PatternFamily(std::move(ps));
    }

    int size() const { return (int)p_.size(); }
    const std::vector<TrianglePattern>& patterns() const { return p_; }

    bool contains(const TrianglePattern& p) const {
        return std::binary_search(p_.begin(), p_.end(), p);
    }

    PatternFamily permuted(const ColorPermutation& perm) const {
        std::vector<TrianglePattern> out;
        out.reserve(p_.size());
        for (const auto& p : p_) out.push_back(p.permuted(perm));
        return PatternFamily(std::move(out));
    }

    std::string to_string() const {
        std::string s;
        for (const auto& p : p_) {
            if (!s.empty()) s += ',';
            s += p.to_string();
        }
        return s;
    }

    auto operator<=>(const PatternFamily&) const = default;

private:
    std::vector<TrianglePattern> p_;
};

inline PatternFamily family_of(const std::string& s) { return PatternFamily::parse(s); }

}  // namespace trichrome
