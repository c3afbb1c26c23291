#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trichrome {

// The three edge colors, totally ordered R < B < Y. Canonical forms
// throughout the library depend on this order being fixed.
enum class Color : uint8_t { R = 0, B = 1, Y = 2 };

inline constexpr std::array<Color, 3> all_colors{Color::R, Color::B, Color::Y};

inline char color_char(Color c) {
    switch (c) {
        case Color::R: return 'r';
        case Color::B: return 'b';
        default: return 'y';
    }
}

inline Color parse_color(char ch) {
    switch (ch) {
        case 'r': case 'R': return Color::R;
        case 'b': case 'B': return Color::B;
        case 'y': case 'Y': return Color::Y;
        default: throw std::invalid_argument(std::string("not a color: '") + ch + "'");
    }
}

// Subset of {R, B, Y} as a 3-bit mask.
class ColorSet {
public:
    ColorSet() : mask_(0) {}
    ColorSet(std::initializer_list<Color> cs) : mask_(0) {
        for (Color c : cs) add(c);
    }
    static ColorSet all() { return ColorSet{Color::R, Color::B, Color::Y}; }

    void add(Color c) { mask_ |= uint8_t(1) << int(c); }
    bool contains(Color c) const { return (mask_ >> int(c)) & 1; }
    int size() const { return __builtin_popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    uint8_t mask() const { return mask_; }

    std::string to_string() const {
        std::string s;
        for (Color c : all_colors)
            if (contains(c)) s += color_char(c);
        return s;
    }

    bool operator==(const ColorSet& o) const { return mask_ == o.mask_; }

private:
    uint8_t mask_;
};

// Bijection {R,B,Y} -> {R,B,Y}. There are exactly six.
class ColorPermutation {
public:
    ColorPermutation() : img_{Color::R, Color::B, Color::Y} {}
    ColorPermutation(Color r_to, Color b_to, Color y_to) : img_{r_to, b_to, y_to} {
        if (img_[0] == img_[1] || img_[0] == img_[2] || img_[1] == img_[2])
            throw std::invalid_argument("color permutation must be a bijection");
    }

    static ColorPermutation identity() { return ColorPermutation(); }

    static const std::array<ColorPermutation, 6>& all() {
        static const std::array<ColorPermutation, 6> perms = [] {
            std::array<ColorPermutation, 6> out{};
            int k = 0;
            for (Color a : all_colors)
                for (Color b : all_colors)
                    for (Color c : all_colors)
                        if (a != b && b != c && a != c) out[k++] = ColorPermutation(a, b, c);
            return out;
        }();
        return perms;
    }

    Color apply(Color c) const { return img_[int(c)]; }

    // (this o other): apply other first, then this
    ColorPermutation compose(const ColorPermutation& other) const {
        return ColorPermutation(apply(other.img_[0]), apply(other.img_[1]), apply(other.img_[2]));
    }

    ColorPermutation inverse() const {
        std::array<Color, 3> inv{};
        for (int i = 0; i < 3; ++i) inv[int(img_[i])] = Color(i);
        return ColorPermutation(inv[0], inv[1], inv[2]);
    }

    bool is_identity() const {
        return img_[0] == Color::R && img_[1] == Color::B && img_[2] == Color::Y;
    }

    // images of r, b, y in that order, e.g. identity -> "rby", swap r/b -> "bry"
    std::string to_string() const {
        return {color_char(img_[0]), color_char(img_[1]), color_char(img_[2])};
    }

    static ColorPermutation parse(const std::string& s) {
        if (s.size() != 3) throw std::invalid_argument("permutation needs 3 color letters");
        return ColorPermutation(parse_color(s[0]), parse_color(s[1]), parse_color(s[2]));
    }

    bool operator==(const ColorPermutation& o) const { return img_ == o.img_; }
    bool operator<(const ColorPermutation& o) const { return img_ < o.img_; }

private:
    std::array<Color, 3> img_;
};

}  // namespace trichrome
