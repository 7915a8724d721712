#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "paving/combinatorics.hpp"
#include "paving/matroid.hpp"

namespace paving {

enum class CensusKind { sparse_paving, all_matroids };

constexpr const char* kind_name(CensusKind k) {
    return k == CensusKind::sparse_paving ? "sparse" : "all";
}

struct CensusRecord {
    CensusKind kind = CensusKind::sparse_paving;
    int n = 0;
    int r = 0;
    std::uint64_t total = 0;
    std::uint64_t aut_trivial = 0;
    std::uint64_t aut_single_transposition = 0;
    std::uint64_t aut_other = 0;

    friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

inline constexpr int kSparseCensusMaxN = 8;
inline constexpr int kFullCensusMaxN = 6;

struct CensusOptions {
    int threads = 1;
    std::optional<std::string> cache_dir;  // one file per (kind,n,r) when set
};

// Per (n <= n_max, 0 <= r <= n): classify every sparse paving matroid (stable
// set of J(n,r)) by its automorphism group. Deterministic for any thread count.
std::vector<CensusRecord> sparse_census(int n_max, const CensusOptions& opts = {});

// t(n,r;pair) tallies: matroids whose automorphism group is exactly
// {id, (e f)}, indexed by the transposition.
struct TranspositionTally {
    int n = 0, r = 0;
    // counts indexed by pair (e,f), e < f, in lexicographic pair order
    std::vector<std::uint64_t> counts;
};

struct FullCensusResult {
    std::vector<CensusRecord> records;
    std::vector<TranspositionTally> t_counts;  // aligned with records

    std::uint64_t m_of(int n, int r) const;  // 0 when outside the census
};

std::vector<CensusRecord> full_census(int n_max, const CensusOptions& opts = {});
FullCensusResult full_census_detailed(int n_max, const CensusOptions& opts = {});

// Exhaustive scan over the valid matroids at (n,r), depth-first over the
// basis/non-basis decisions with exchange-violation pruning.
void for_each_matroid(int n, int r, const std::function<void(const Matroid&)>& fn);

// Stream of all sparse paving matroids at (n,r)
void for_each_sparse_matroid(int n, int r, const std::function<void(const Matroid&)>& fn);

// Row of the rank-distribution table: exact fraction s(n,r)/s(n).
struct RankDistRow {
    int r = 0;
    std::uint64_t count = 0;
};
struct RankDistribution {
    int n = 0;
    double beta = 0.6;
    std::uint64_t total = 0;  // s(n)
    std::vector<RankDistRow> rows;
    IntInterval window;             // rank_window(n, beta)
    std::uint64_t in_window = 0;    // mass inside the window
};
RankDistribution rank_distribution(int n, double beta = 0.6);

// kind,n,r,total,aut_trivial,aut_single_transposition,aut_other with a header
// row; rows sorted by (kind,n,r); LF endings.
std::string census_csv(const std::vector<CensusRecord>& records);

// Asymmetric / single-transposition fractions per n, for the trend report.
struct TrendRow {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t aut_trivial = 0;
    std::uint64_t aut_single_transposition = 0;
    double asymmetric_fraction = 0.0;
    double single_transposition_fraction = 0.0;
};
std::vector<TrendRow> trend_rows(const std::vector<CensusRecord>& records);

// --- shared classification engine ------------------------------------------

// Action of every non-identity permutation of [n] on the vertex table of
// J(n,r), with transposition markers; built once per (n,r).
struct PermActionTable {
    int n = 0;
    int num_vertices = 0;
    int num_perms = 0;                       // n! - 1
    std::vector<std::uint16_t> vertex_maps;  // num_perms x num_vertices
    std::vector<std::int32_t> transposition_id;  // pair index, or -1
    std::vector<std::pair<int, int>> pairs;      // pair index -> (e,f), e < f

    static PermActionTable build(int n, const std::vector<Mask>& verts);
};

struct FamilyClass {
    AutKind kind = AutKind::trivial;
    int pair_index = -1;  // when kind == single_transposition
};

// Classify the stabilizer of a family of vertex indices (early exit at the
// second nontrivial automorphism).
FamilyClass classify_family(const PermActionTable& table, const std::vector<std::uint16_t>& members,
                            const VSet& member_set);

}  // namespace paving
