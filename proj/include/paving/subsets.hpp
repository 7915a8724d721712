#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "paving/errors.hpp"

namespace paving {

// An r-subset of [n] as an n-bit mask: bit i-1 <-> element i (1-based).
using Mask = std::uint64_t;

inline int card(Mask m) { return std::popcount(m); }

struct SubsetMask {
    Mask bits = 0;
    int n = 0;

    int cardinality() const { return card(bits); }
    bool contains(int element) const { return (bits >> (element - 1)) & 1; }
};

inline SubsetMask make_subset(int n, std::initializer_list<int> elems) {
    SubsetMask s{0, n};
    for (int e : elems) s.bits |= Mask{1} << (e - 1);
    return s;
}

inline void check_subset(const SubsetMask& s) {
    if (s.n < 0 || s.n > 64) throw validation_error("ground-set size out of range");
    if (s.n < 64 && (s.bits >> s.n) != 0)
        throw validation_error("subset has elements beyond the ground set");
}

// 1-based elements, ascending
inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

// "{1,3}" / "{}" for the empty subset
std::string format_subset(Mask m);

// Gosper's hack: next mask with the same popcount, ascending order.
inline Mask next_same_popcount(Mask v) {
    Mask c = v & -v;
    Mask r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

// All r-subsets of [n] in ascending mask order.
std::vector<Mask> all_r_subsets(int n, int r);

}  // namespace paving
