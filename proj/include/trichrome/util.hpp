#pragma once

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace trichrome {

// Dynamic bitset sized at construction. Words beyond `nbits` stay zero.
class Bitset {
public:
    Bitset() : nbits_(0) {}
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w_) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    // this \ o
    Bitset& subtract(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }

    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    // lowest set bit at index >= from, or -1
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int k = from >> 6;
        uint64_t word = w_[k] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (word) return k * 64 + __builtin_ctzll(word);
            if (++k >= (int)w_.size()) return -1;
            word = w_[k];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = next(0); v >= 0; v = next(v + 1)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator<(const Bitset& o) const { return w_ < o.w_; }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int nbits_;
    std::vector<uint64_t> w_;
};

// splitmix64: fixed-output generator so seeded runs reproduce across platforms.
// std::uniform_int_distribution is implementation-defined, hence avoided.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed + 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, m), m > 0
    uint64_t below(uint64_t m) {
        uint64_t threshold = (~m + 1) % m;  // 2^64 mod m
        while (true) {
            uint64_t r = next();
            if (r >= threshold) return r % m;
        }
    }

    double unit() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

    bool coin() { return next() & 1; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    uint64_t s_;
};

// mixes a stream tag into a seed so sub-generators are independent
inline uint64_t derive_seed(uint64_t seed, uint64_t tag) {
    Rng r(seed ^ (tag * 0x9e3779b97f4a7c15ull + 0x3c6ef372fe94f82bull));
    return r.next();
}

// Runs fn(i) for i in [0, count). Results must be written to per-index slots;
// iteration order across threads is unspecified.
inline void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int nt = std::min(threads, count);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

inline int isqrt_floor(int n) {
    int r = (int)std::sqrt((double)n);
    while ((r + 1) * (r + 1) <= n) ++r;
    while (r * r > n) --r;
    return r;
}

inline int isqrt_ceil(int n) {
    int f = isqrt_floor(n);
    return f * f == n ? f : f + 1;
}

// mod-5 and mod-7 correction terms of the exact part-schedule bounds
inline int epsilon_mod5(int n) {
    int r = n % 5;
    return r == 0 ? 0 : (r == 1 ? 1 : 2);
}
inline int epsilon1_mod7(int n) { return n % 7 == 2 ? 1 : 0; }

}  // namespace trichrome
