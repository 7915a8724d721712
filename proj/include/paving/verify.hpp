#pragma once

#include <string>
#include <vector>

#include "paving/census.hpp"

namespace paving {

struct LemmaReport {
    std::string lemma_id;
    std::string grid;
    std::uint64_t checked = 0;
    std::vector<std::string> failures;
    double wall_seconds = 0.0;

    bool ok() const { return failures.empty(); }
};

std::string format_report(const LemmaReport& rep, bool with_timing);

// indinv(J(n,r), (e f)) == i(J(n-2,r-2)) * i(J(n-2,r)); n <= max_n, all r,
// all transpositions
LemmaReport verify_product_identity(int max_n);

// Lemma: indinv * i_k(box) <= (r(n-r))^k * i; k over `ks`
LemmaReport verify_kbound(int max_n, const std::vector<int>& ks);

// stable sets within Fix(pi) vs the block product, all non-identity pi
LemmaReport verify_pblocks(int max_n);

// V_e ∪ V_f isomorphic to J(n-2,r-1) box K2, edge-exact
LemmaReport verify_box_iso(int max_n);

// W(M) is a stable set for every matroid, n <= max_n exhaustively
LemmaReport verify_w_stability(int max_n);

// reconstruct(del, con) == M for every matroid with (e f) in Aut(M):
// all matroids up to max_n_full, sparse paving ones up to max_n_sparse
LemmaReport verify_reconstruction(int max_n_full, int max_n_sparse);

// central binomial bounds, the comparison bound, Pascal, deviation ratios
LemmaReport verify_binomial(int max_n);

// f(1/5) < 1 and f(1/13) < 0.48 under base-2 logs
LemmaReport verify_f_kappa();

// t(n,r;pi) <= m(n-2,r-2) m(n-2,r) + 3 from the full census
LemmaReport verify_t_upper(int max_n);

struct VerifyScope {
    int n_max_sparse = 7;
    int n_max_full = 6;
    std::vector<int> k_list = {0, 1, 2};
};
std::vector<LemmaReport> verify_all(const VerifyScope& scope = {});

}  // namespace paving
