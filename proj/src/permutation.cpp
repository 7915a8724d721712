#include "paving/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "paving/errors.hpp"

namespace paving {

Permutation::Permutation(int n, std::vector<int> image) : n_(n), img_(std::move(image)) {
    if (n < 0 || n > 64) throw validation_error("permutation: ground-set size out of range");
    if (static_cast<int>(img_.size()) != n)
        throw validation_error("permutation: image length differs from n");
    std::vector<bool> seen(n, false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[v - 1])
            throw validation_error("permutation: image is not a bijection of [n]");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(n, std::move(img));
}

Permutation Permutation::transposition(int n, int e, int f) {
    if (e < 1 || e > n || f < 1 || f > n || e == f)
        throw validation_error("transposition: need distinct elements of [n]");
    Permutation p = identity(n);
    std::swap(p.img_[e - 1], p.img_[f - 1]);
    return p;
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<bool> used(n, false);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw validation_error("cycle notation: expected '('");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i >= text.size()) throw validation_error("cycle notation: unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw validation_error("cycle notation: expected element or ')'");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v < 1 || v > n) throw validation_error("cycle notation: element outside [n]");
            if (used[v - 1]) throw validation_error("cycle notation: cycles are not disjoint");
            used[v - 1] = true;
            cyc.push_back(v);
        }
        if (cyc.size() == 1) throw validation_error("cycle notation: length-1 cycles are not allowed");
        for (std::size_t j = 0; j < cyc.size(); ++j)
            img[cyc[j] - 1] = cyc[(j + 1) % cyc.size()];
        skip_ws();
    }
    return Permutation(n, std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n_; ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& q) const {
    if (n_ != q.n_) throw validation_error("compose: mismatched ground sets");
    std::vector<int> img(n_);
    for (int i = 0; i < n_; ++i) img[i] = img_[q.img_[i] - 1];  // (p∘q)(x) = p(q(x))
    return Permutation(n_, std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(n_);
    for (int i = 0; i < n_; ++i) img[img_[i] - 1] = i + 1;
    return Permutation(n_, std::move(img));
}

Permutation Permutation::power(std::uint64_t k) const {
    Permutation acc = identity(n_);
    Permutation base = *this;
    while (k) {
        if (k & 1) acc = acc.compose(base);
        base = base.compose(base);
        k >>= 1;
    }
    return acc;
}

CycleDecomposition Permutation::cycle_decomposition() const {
    CycleDecomposition dec;
    std::vector<bool> seen(n_, false);
    for (int start = 1; start <= n_; ++start) {
        if (seen[start - 1] || img_[start - 1] == start) continue;
        std::vector<int> cyc;
        int cur = start;
        do {
            seen[cur - 1] = true;
            cyc.push_back(cur);
            cur = img_[cur - 1];
        } while (cur != start);
        dec.moved += static_cast<int>(cyc.size());
        dec.cycles.push_back(std::move(cyc));
    }
    // scanning from the minimum of each cycle already yields canonical form
    return dec;
}

std::uint64_t Permutation::order() const {
    std::uint64_t ord = 1;
    for (const auto& cyc : cycle_decomposition().cycles)
        ord = std::lcm<std::uint64_t>(ord, cyc.size());
    return ord;
}

SubsetMask Permutation::support() const {
    SubsetMask s{0, n_};
    for (int i = 0; i < n_; ++i)
        if (img_[i] != i + 1) s.bits |= Mask{1} << i;
    return s;
}

SupportClass Permutation::classify_support() const {
    int m = support().cardinality();
    if (m == 0) return SupportClass::identity;
    if (m == 2) return SupportClass::transposition;
    return SupportClass::support_ge_3;
}

Mask Permutation::apply_mask(Mask x) const {
    Mask out = 0;
    while (x) {
        int b = std::countr_zero(x);
        out |= Mask{1} << (img_[b] - 1);
        x &= x - 1;
    }
    return out;
}

SubsetMask Permutation::apply_to_set(const SubsetMask& x) const {
    if (x.n != n_) throw validation_error("apply_to_set: mismatched ground sets");
    return SubsetMask{apply_mask(x.bits), n_};
}

std::vector<Mask> Permutation::orbit_of_mask(Mask x) const {
    std::vector<Mask> orbit{x};
    for (Mask cur = apply_mask(x); cur != x; cur = apply_mask(cur)) orbit.push_back(cur);
    return orbit;
}

std::string Permutation::to_cycle_string() const {
    auto dec = cycle_decomposition();
    if (dec.cycles.empty()) return "()";
    std::string out;
    for (const auto& cyc : dec.cycles) {
        out += '(';
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(cyc[j]);
        }
        out += ')';
    }
    return out;
}

std::vector<Mask> fixed_r_sets(const Permutation& p, int r) {
    int n = p.n();
    if (r < 0 || r > n) throw validation_error("fixed_r_sets: r outside [0,n]");
    auto dec = p.cycle_decomposition();
    Mask fixed_points = ((n == 64 ? ~Mask{0} : (Mask{1} << n) - 1)) & ~p.support().bits;
    std::vector<Mask> cycle_masks;
    for (const auto& cyc : dec.cycles) {
        Mask m = 0;
        for (int e : cyc) m |= Mask{1} << (e - 1);
        cycle_masks.push_back(m);
    }
    std::vector<int> fixed = elements_of(fixed_points);

    std::vector<Mask> out;
    int num_cycles = static_cast<int>(cycle_masks.size());
    for (int js = 0; js < (1 << num_cycles); ++js) {
        Mask base = 0;
        int len = 0;
        for (int j = 0; j < num_cycles; ++j)
            if (js >> j & 1) {
                base |= cycle_masks[j];
                len += card(cycle_masks[j]);
            }
        int need = r - len;
        if (need < 0 || need > static_cast<int>(fixed.size())) continue;
        // choose `need` fixed points
        std::vector<int> idx(need);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            Mask m = base;
            for (int i : idx) m |= Mask{1} << (fixed[i] - 1);
            out.push_back(m);
            if (need == 0) break;
            int i = need - 1;
            while (i >= 0 && idx[i] == static_cast<int>(fixed.size()) - need + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace paving
