#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paving/combinatorics.hpp"
#include "paving/graph.hpp"
#include "paving/permutation.hpp"
#include "paving/subsets.hpp"

namespace paving {

// Default enumeration refusal threshold (vertex count of the Johnson graph).
inline constexpr std::size_t kDefaultVertexBudget = 256;

// J(n,r): vertices are the r-subsets of [n], edges join subsets with
// symmetric difference of size 2. r < 0 or r > n is the empty graph.
struct JohnsonParams {
    int n = 0;
    int r = 0;

    bool empty_graph() const { return r < 0 || r > n; }
    std::uint64_t vertex_count() const;
    int degree() const { return empty_graph() ? 0 : r * (n - r); }
    friend bool operator==(const JohnsonParams&, const JohnsonParams&) = default;
};

// X ~ Y iff |X symm Y| = 2; requires |X| = |Y|.
bool adjacent(const SubsetMask& x, const SubsetMask& y);

// Materialized Johnson graph with its vertex table (masks in ascending order).
struct JohnsonGraph {
    JohnsonParams params;
    std::vector<Mask> verts;
    Graph g;

    int index_of(Mask m) const;  // -1 if absent
    static JohnsonGraph build(JohnsonParams p, std::size_t max_vertices = kDefaultVertexBudget);
};

// A stable set in J(n,r): members pairwise at symmetric difference >= 4,
// canonically sorted by mask value.
struct StableSet {
    JohnsonParams params;
    std::vector<Mask> members;

    std::size_t size() const { return members.size(); }
    friend bool operator==(const StableSet&, const StableSet&) = default;
};

// Validating constructor: sorts, rejects duplicates, wrong-cardinality
// members, out-of-range elements and adjacent pairs.
StableSet make_stable_set(JohnsonParams params, std::vector<Mask> members);

// One-line stream form: members as "{1,2},{3,4}"; the empty set is an empty line.
std::string format_stable_set(const StableSet& s);

// i(J(n,r)), exact; 1 for the empty graph (only the empty set).
std::uint64_t count_stable_sets(JohnsonParams p, std::size_t max_vertices = kDefaultVertexBudget);

// i_k(J(n,r))
std::uint64_t count_stable_sets_by_size(JohnsonParams p, int k,
                                        std::size_t max_vertices = kDefaultVertexBudget);

// Stream all stable sets (empty set first, lexicographic in vertex order).
void for_each_stable_set(JohnsonParams p, const std::function<void(const std::vector<Mask>&)>& fn,
                         std::size_t max_vertices = kDefaultVertexBudget);

// --- pi-invariant stable sets -------------------------------------------------

// Orbits of the vertex set under pi whose union can participate in an
// invariant stable set (internally stable orbits), plus their compatibility
// graph: invariant stable sets correspond to independent sets of `compat`.
struct OrbitSystem {
    JohnsonParams params;
    std::vector<std::vector<int>> orbits;  // vertex indices; orbits sorted by min index
    Graph compat;
};
OrbitSystem build_orbit_system(const JohnsonGraph& jg, const Permutation& p);

std::uint64_t count_invariant_stable_sets(JohnsonParams p, const Permutation& pi,
                                          std::size_t max_vertices = kDefaultVertexBudget);
void for_each_invariant_stable_set(JohnsonParams p, const Permutation& pi,
                                   const std::function<void(const std::vector<Mask>&)>& fn,
                                   std::size_t max_vertices = kDefaultVertexBudget);

// I = I0 (members fixed by pi) disjoint-union I+ (members moved by pi);
// lambda counts the orbits inside I+ (each has >= 2 members).
struct InvariantSplit {
    StableSet whole;
    StableSet fixed_part;
    StableSet moved_part;
    std::uint64_t large_orbit_count = 0;
};
InvariantSplit split_invariant(const StableSet& i, const Permutation& pi);

// Close `seed` under pi-images; nullopt if the closure is not stable.
std::optional<StableSet> orbit_closure(const StableSet& seed, const Permutation& pi);

// Parameters of the induced subgraph on P_J = {X : X ∩ Supp(pi) = union of
// the chosen cycle supports}: J(n-m, r - sum of chosen cycle lengths).
JohnsonParams pblock_subgraph(JohnsonParams p, const Permutation& pi,
                              const std::vector<int>& cycle_indices);

// lhs = number of stable sets contained in Fix(pi); rhs = product over all
// cycle-index subsets of i(J(n-m, r - sum of lengths)). Asserts lhs <= rhs.
struct PBlockReport {
    BigInt lhs;
    BigInt rhs;
    bool ok = false;
};
PBlockReport check_pblock_bound(JohnsonParams p, const Permutation& pi,
                                std::size_t max_vertices = kDefaultVertexBudget);

// The four vertex classes keyed by intersection with {e,f}.
struct TranspositionPartition {
    std::vector<Mask> v_empty, v_e, v_f, v_ef;
};
TranspositionPartition transposition_partition(JohnsonParams p, int e, int f,
                                               std::size_t max_vertices = kDefaultVertexBudget);

// Explicit bijection V_e ∪ V_f -> J(n-2,r-1) box K2, verified edge-exactly in
// both directions.
bool check_box_product_iso(JohnsonParams p, int e, int f,
                           std::size_t max_vertices = kDefaultVertexBudget);

// Exact identity: #((e f)-invariant stable sets) = i(J(n-2,r-2)) * i(J(n-2,r)).
// The two sides are computed along independent routes.
struct ProductIdentityReport {
    BigInt lhs;
    BigInt rhs;
    bool ok = false;
};
ProductIdentityReport check_product_identity(JohnsonParams p, int e, int f,
                                             std::size_t max_vertices = kDefaultVertexBudget);

// F(I,A) = (I ∪ A) \ N(A) for an (e f)-invariant stable I and a stable
// A ⊆ V_e ∪ V_f; the result is stable and A = result ∩ (V_e ∪ V_f).
StableSet filter_map_F(const StableSet& i, const StableSet& a, int e, int f);

// indinv * i_k(J(n-2,r-1) box K2) <= (r(n-r))^k * i(J(n,r)), exact integers.
struct KBoundReport {
    BigInt invariant_count;  // indinv
    BigInt size_count;       // i_k of the box product
    BigInt total_count;      // i(J(n,r))
    BigInt lhs, rhs;
    bool ok = false;
    bool vacuous = false;  // i_k = 0
};
KBoundReport check_kbound(JohnsonParams p, int e, int f, int k,
                          std::size_t max_vertices = kDefaultVertexBudget);

}  // namespace paving
