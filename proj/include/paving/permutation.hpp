#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "paving/subsets.hpp"

namespace paving {

enum class SupportClass { identity, transposition, support_ge_3 };

// Disjoint cycles in canonical form: each cycle starts at its minimum element,
// cycles sorted by minimum; length-1 cycles suppressed. Elements 1-based.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
    int moved = 0;  // |Supp|, equals the sum of cycle lengths
    int cycle_count() const { return static_cast<int>(cycles.size()); }
};

// A bijection of [n], 1-based externally, dense image array internally.
class Permutation {
  public:
    Permutation() = default;
    // image[i] = pi(i+1), 1-based values; validates bijectivity
    Permutation(int n, std::vector<int> image);

    static Permutation identity(int n);
    static Permutation transposition(int n, int e, int f);
    // cycle notation, e.g. "(1 2)(3 4 5)"; identity is "()"; whitespace and
    // commas both separate elements; disjoint cycles required, length >= 2
    static Permutation parse_cycles(std::string_view text, int n);

    int n() const { return n_; }
    int apply(int element) const { return img_[element - 1]; }
    bool is_identity() const;

    // this∘q: apply q first
    Permutation compose(const Permutation& q) const;
    Permutation inverse() const;
    Permutation power(std::uint64_t k) const;

    std::uint64_t order() const;  // lcm of cycle lengths
    SubsetMask support() const;
    CycleDecomposition cycle_decomposition() const;
    SupportClass classify_support() const;

    Mask apply_mask(Mask x) const;
    SubsetMask apply_to_set(const SubsetMask& x) const;
    // distinct iterates X, pi(X), ... in iteration order
    std::vector<Mask> orbit_of_mask(Mask x) const;

    std::string to_cycle_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.n_ == b.n_ && a.img_ == b.img_;
    }

  private:
    int n_ = 0;
    std::vector<int> img_;  // img_[i] = pi(i+1), 1-based
};

// Fix(pi) at level r: the r-subsets fixed setwise, ascending mask order.
// Each is a union of whole cycle supports plus fixed points.
std::vector<Mask> fixed_r_sets(const Permutation& p, int r);

// All permutations of [n] in lexicographic image order (n! of them).
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = i + 1;
    do {
        fn(Permutation(n, image));
    } while (std::next_permutation(image.begin(), image.end()));
}

}  // namespace paving
