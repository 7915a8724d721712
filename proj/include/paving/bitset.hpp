#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace paving {

// Hard cap on graph vertices; the default enumeration budget equals this.
// 256 admits J(10,5) (252 vertices), the largest Johnson graph we ever touch.
inline constexpr int kMaxVertices = 256;

// Flat 256-bit vertex set. All hot enumeration loops run on this type, so it
// stays allocation-free and trivially copyable.
struct VSet {
    std::array<std::uint64_t, 4> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }

    int count() const {
        return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
               std::popcount(w[3]);
    }

    friend VSet operator&(const VSet& a, const VSet& b) {
        VSet r;
        for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] & b.w[i];
        return r;
    }
    friend VSet operator|(const VSet& a, const VSet& b) {
        VSet r;
        for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] | b.w[i];
        return r;
    }
    VSet and_not(const VSet& o) const {
        VSet r;
        for (int i = 0; i < 4; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    friend bool operator==(const VSet& a, const VSet& b) { return a.w == b.w; }

    bool intersects(const VSet& o) const {
        return ((w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2]) | (w[3] & o.w[3])) != 0;
    }
    bool is_subset_of(const VSet& o) const {
        return ((w[0] & ~o.w[0]) | (w[1] & ~o.w[1]) | (w[2] & ~o.w[2]) | (w[3] & ~o.w[3])) == 0;
    }

    int find_first() const {
        for (int i = 0; i < 4; ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }
    // first bit strictly after i, or -1
    int find_next(int i) const {
        ++i;
        if (i >= kMaxVertices) return -1;
        int word = i >> 6;
        std::uint64_t cur = w[word] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return word * 64 + std::countr_zero(cur);
            if (++word == 4) return -1;
            cur = w[word];
        }
    }

    static VSet first_n(int k) {
        VSet r;
        for (int i = 0; i < 4; ++i) {
            int lo = i * 64;
            if (k <= lo)
                r.w[i] = 0;
            else if (k >= lo + 64)
                r.w[i] = ~std::uint64_t{0};
            else
                r.w[i] = (std::uint64_t{1} << (k - lo)) - 1;
        }
        return r;
    }
};

template <typename Fn>
void for_each_bit(const VSet& s, Fn&& fn) {
    for (int v = s.find_first(); v >= 0; v = s.find_next(v)) fn(v);
}

}  // namespace paving
