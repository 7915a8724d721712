#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paving/johnson.hpp"
#include "paving/permutation.hpp"
#include "paving/subsets.hpp"

namespace paving {

// A matroid stored by its non-bases: the dependent r-subsets of [n]. Bases
// are the remaining r-subsets. Construction goes through validate(), which
// checks the basis-exchange axiom exhaustively.
class Matroid {
  public:
    // Throws validation_error naming a failing (B1, B2, x) triple, or when no
    // basis remains.
    static Matroid validate(int n, int r, std::vector<Mask> nonbases);

    int n() const { return n_; }
    int rank() const { return r_; }
    const std::vector<Mask>& nonbases() const { return nonbases_; }
    const std::vector<Mask>& bases() const { return bases_; }
    bool is_basis(Mask m) const;

    // max over bases B of |S ∩ B|
    int rank_of(Mask s) const;

    friend bool operator==(const Matroid& a, const Matroid& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.nonbases_ == b.nonbases_;
    }

  private:
    Matroid(int n, int r, std::vector<Mask> nonbases);

    int n_ = 0;
    int r_ = 0;
    std::vector<Mask> nonbases_;  // ascending mask order
    std::vector<Mask> bases_;     // complement family, ascending
};

// Non-bases split into circuit-hyperplanes (w_part) and the rest (u_part).
struct UWSplit {
    std::vector<Mask> u_part;
    std::vector<Mask> w_part;
};
UWSplit uw_split(const Matroid& m);

// sparse paving <=> every non-basis is a circuit-hyperplane
bool is_sparse_paving(const Matroid& m);
// paving <=> every circuit has cardinality >= r <=> all (r-1)-subsets independent
bool is_paving(const Matroid& m);

// bases of the dual are the complements of bases; an involution
Matroid dual(const Matroid& m);

bool is_automorphism(const Matroid& m, const Permutation& p);

enum class AutKind { trivial, single_transposition, other };

struct AutClassification {
    AutKind kind = AutKind::trivial;
    std::optional<std::pair<int, int>> generator_pair;  // when kind == single_transposition
    std::uint64_t group_order = 1;
};

inline constexpr int kDefaultAutBudget = 9;  // largest n for the n!-filter

// Filters all n! permutations; budget-guarded.
AutClassification automorphism_classification(const Matroid& m, int budget_n = kDefaultAutBudget);

// Materializes the full group; only sensible for small n (guarded at n <= 7).
std::vector<Permutation> automorphism_group(const Matroid& m, int budget_n = 7);

// Minors by a pair {e,f}, ground set relabeled order-preservingly to [n-2].
Matroid delete_pair(const Matroid& m, int e, int f);
Matroid contract_pair(const Matroid& m, int e, int f);

// Rebuild the matroid on [n] from its two pair-minors (on [n-2], as produced
// by delete_pair/contract_pair), given that (e f) was an automorphism.
// Throws validation_error if the inputs cannot arise that way.
Matroid reconstruct_from_minors(const Matroid& deletion, const Matroid& contraction, int n, int r,
                                int e, int f);

// The sparse paving <-> stable set correspondence (non-bases as members).
Matroid stable_set_to_matroid(const StableSet& s);
StableSet matroid_to_stable_set(const Matroid& m);

// Canonical matroid file format: {"n":4,"r":2,"nonbases":[[1,2]]}, elements
// 1-based, rows ascending, rows sorted lexicographically. Readers reject
// duplicates and wrong-size subsets; writers emit canonical sorting.
Matroid read_matroid_json(std::istream& in);
Matroid read_matroid_file(const std::string& path);
std::string matroid_to_json(const Matroid& m);
void write_matroid_file(const std::string& path, const Matroid& m);

}  // namespace paving
