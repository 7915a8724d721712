#include "paving/verify.hpp"

#include <chrono>
#include <sstream>

#include "paving/errors.hpp"
#include "paving/johnson.hpp"

namespace paving {

namespace {

class Stopwatch {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
};

std::string big_str(const BigInt& v) { return v.str(); }

}  // namespace

std::string format_report(const LemmaReport& rep, bool with_timing) {
    std::ostringstream out;
    out << "lemma: " << rep.lemma_id << "\n";
    out << "grid: " << rep.grid << "\n";
    out << "checked: " << rep.checked << "\n";
    out << "failures: " << rep.failures.size() << "\n";
    for (const std::string& f : rep.failures) out << "  " << f << "\n";
    if (with_timing) {
        out << "wall_time: " << rep.wall_seconds << "s\n";
    }
    return out.str();
}

LemmaReport verify_product_identity(int max_n) {
    Stopwatch sw;
    LemmaReport rep;
    rep.lemma_id = "product-identity";
    rep.grid = "n<=" + std::to_string(max_n) + ", 0<=r<=n, all transpositions";
    for (int n = 2; n <= max_n; ++n)
        for (int r = 0; r <= n; ++r)
            for (int e = 1; e <= n; ++e)
                for (int f = e + 1; f <= n; ++f) {
                    auto res = check_product_identity(JohnsonParams{n, r}, e, f);
                    ++rep.checked;
                    if (!res.ok)
                        rep.failures.push_back("n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                               " (e f)=(" + std::to_string(e) + " " +
                                               std::to_string(f) + "): " + big_str(res.lhs) +
                                               " != " + big_str(res.rhs));
                }
    rep.wall_seconds = sw.seconds();
    return rep;
}

LemmaReport verify_kbound(int max_n, const std::vector<int>& ks) {
    Stopwatch sw;
    LemmaReport rep;
    rep.lemma_id = "kbound";
    std::ostringstream grid;
    grid << "n<=" << max_n << ", 0<=r<=n, all transpositions, k in {";
    for (std::size_t i = 0; i < ks.size(); ++i) grid << (i ? "," : "") << ks[i];
    grid << "}";
    rep.grid = grid.str();
    for (int n = 2; n <= max_n; ++n)
        for (int r = 0; r <= n; ++r)
            for (int e = 1; e <= n; ++e)
                for (int f = e + 1; f <= n; ++f)
                    for (int k : ks) {
                        auto res = check_kbound(JohnsonParams{n, r}, e, f, k);
                        ++rep.checked;
                        if (!res.ok)
                            rep.failures.push_back(
                                "n=" + std::to_string(n) + " r=" + std::to_string(r) + " (e f)=(" +
                                std::to_string(e) + " " + std::to_string(f) + ") k=" +
                                std::to_string(k) + ": " + big_str(res.lhs) + " > " +
                                big_str(res.rhs));
                    }
    rep.wall_seconds = sw.seconds();
    return rep;
}

LemmaReport verify_pblocks(int max_n) {
    Stopwatch sw;
    LemmaReport rep;
    rep.lemma_id = "pblocks";
    rep.grid = "n<=" + std::to_string(max_n) + ", all non-identity permutations, 0<=r<=n";
    for (int n = 2; n <= max_n; ++n) {
        for_each_permutation(n, [&](const Permutation& pi) {
            if (pi.is_identity()) return;
            for (int r = 0; r <= n; ++r) {
                auto res = check_pblock_bound(JohnsonParams{n, r}, pi);
                ++rep.checked;
                if (!res.ok)
                    rep.failures.push_back("n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                           " pi=" + pi.to_cycle_string() + ": " + big_str(res.lhs) +
                                           " > " + big_str(res.rhs));
            }
        });
    }
    rep.wall_seconds = sw.seconds();
    return rep;
}

LemmaReport verify_box_iso(int max_n) {
    Stopwatch sw;
    LemmaReport rep;
    rep.lemma_id = "box-iso";
    rep.grid = "n<=" + std::to_string(max_n) + ", 1<=r<=n-1, all transpositions";
    for (int n = 2; n <= max_n; ++n)
        for (int r = 1; r <= n - 1; ++r)
            for (int e = 1; e <= n; ++e)
                for (int f = e + 1; f <= n; ++f) {
                    ++rep.checked;
                    if (!check_box_product_iso(JohnsonParams{n, r}, e, f))
                        rep.failures.push_back("n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                               " (e f)=(" + std::to_string(e) + " " +
                                               std::to_string(f) + ")");
                }
    rep.wall_seconds = sw.seconds();
    return rep;
}

LemmaReport verify_w_stability(int max_n) {
    Stopwatch sw;
    LemmaReport rep;
    rep.lemma_id = "w-stable";
    rep.grid = "all matroids, n<=" + std::to_string(max_n);
    for (int n = 1; n <= max_n; ++n)
        for (int r = 0; r <= n; ++r)
            for_each_matroid(n, r, [&](const Matroid& m) {
                ++rep.checked;
                auto split = uw_split(m);
                for (std::size_t a = 0; a < split.w_part.size(); ++a)
                    for (std::size_t b = a + 1; b < split.w_part.size(); ++b)
                        if (card(split.w_part[a] ^ split.w_part[b]) == 2) {
                            rep.failures.push_back(
                                "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                " circuit-hyperplanes " + format_subset(split.w_part[a]) + "," +
                                format_subset(split.w_part[b]) + " adjacent");
                            return;
                        }
            });
    rep.wall_seconds = sw.seconds();
    return rep;
}

namespace {

void roundtrip_matroid(const Matroid& m, LemmaReport& rep) {
    int n = m.n();
    for (int e = 1; e <= n; ++e)
        for (int f = e + 1; f <= n; ++f) {
            if (!is_automorphism(m, Permutation::transposition(n, e, f))) continue;
            ++rep.checked;
            try {
                Matroid back = reconstruct_from_minors(delete_pair(m, e, f), contract_pair(m, e, f),
                                                       n, m.rank(), e, f);
                if (!(back == m))
                    rep.failures.push_back("n=" + std::to_string(n) + " r=" +
                                           std::to_string(m.rank()) + " (e f)=(" +
                                           std::to_string(e) + " " + std::to_string(f) +
                                           "): reconstruction differs");
            } catch (const validation_error& ex) {
                rep.failures.push_back("n=" + std::to_string(n) + " r=" + std::to_string(m.rank()) +
                                       " (e f)=(" + std::to_string(e) + " " + std::to_string(f) +
                                       "): " + ex.what());
            }
        }
}

}  // namespace

LemmaReport verify_reconstruction(int max_n_full, int max_n_sparse) {
    Stopwatch sw;
    LemmaReport rep;
    rep.lemma_id = "reconstruct";
    rep.grid = "all matroids n<=" + std::to_string(max_n_full) + ", sparse paving n<=" +
               std::to_string(max_n_sparse) + ", all transpositions in Aut(M)";
    for (int n = 2; n <= max_n_full; ++n)
        for (int r = 0; r <= n; ++r)
            for_each_matroid(n, r, [&](const Matroid& m) { roundtrip_matroid(m, rep); });
    for (int n = max_n_full + 1; n <= max_n_sparse; ++n)
        for (int r = 0; r <= n; ++r)
            for_each_sparse_matroid(n, r, [&](const Matroid& m) { roundtrip_matroid(m, rep); });
    rep.wall_seconds = sw.seconds();
    return rep;
}

LemmaReport verify_binomial(int max_n) {
    Stopwatch sw;
    LemmaReport rep;
    rep.lemma_id = "binomial";
    rep.grid = "central bounds 1<=n<=" + std::to_string(max_n) + "; compare bound 0<=m<n; Pascal; deviation n=" +
               std::to_string(max_n) + ", |k|<=4";
    for (int n = 1; n <= max_n; ++n) {
        auto central = check_central_bounds(n);
        ++rep.checked;
        if (!central.both_ok())
            rep.failures.push_back("central bounds fail at n=" + std::to_string(n));
        if (n >= 2)
            for (int m = 0; m < n; ++m) {
                ++rep.checked;
                if (!check_compare_bound(n, m).ok)
                    rep.failures.push_back("compare bound fails at n=" + std::to_string(n) +
                                           " m=" + std::to_string(m));
            }
        for (int k = 1; k < n; ++k) {
            ++rep.checked;
            if (binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k))
                rep.failures.push_back("Pascal fails at n=" + std::to_string(n) +
                                       " k=" + std::to_string(k));
        }
    }
    for (int k = 0; k <= 4; ++k) {
        double ratio = deviation_ratio(max_n, k);
        ++rep.checked;
        if (ratio < 0.9 || ratio > 1.1)
            rep.failures.push_back("deviation ratio " + std::to_string(ratio) + " at n=" +
                                   std::to_string(max_n) + " k=" + std::to_string(k));
    }
    rep.wall_seconds = sw.seconds();
    return rep;
}

LemmaReport verify_f_kappa() {
    Stopwatch sw;
    LemmaReport rep;
    rep.lemma_id = "f-kappa";
    rep.grid = "kappa in {1/5, 1/13}";
    rep.checked = 2;
    if (!(f_kappa(1.0 / 5) < 1.0)) rep.failures.push_back("f(1/5) >= 1");
    if (!(f_kappa(1.0 / 13) < 0.48)) rep.failures.push_back("f(1/13) >= 0.48");
    rep.wall_seconds = sw.seconds();
    return rep;
}

LemmaReport verify_t_upper(int max_n) {
    Stopwatch sw;
    LemmaReport rep;
    rep.lemma_id = "t-upper";
    rep.grid = "n in {4.." + std::to_string(max_n) + "}, all r, all transpositions";
    FullCensusResult census = full_census_detailed(max_n);
    for (const TranspositionTally& tt : census.t_counts) {
        if (tt.n < 4) continue;
        BigInt bound = BigInt(census.m_of(tt.n - 2, tt.r - 2)) * census.m_of(tt.n - 2, tt.r) + 3;
        for (std::size_t p = 0; p < tt.counts.size(); ++p) {
            ++rep.checked;
            if (tt.counts[p] > bound)
                rep.failures.push_back("n=" + std::to_string(tt.n) + " r=" + std::to_string(tt.r) +
                                       " pair#" + std::to_string(p) + ": t=" +
                                       std::to_string(tt.counts[p]) + " > " + big_str(bound));
        }
    }
    rep.wall_seconds = sw.seconds();
    return rep;
}

std::vector<LemmaReport> verify_all(const VerifyScope& scope) {
    std::vector<LemmaReport> reports;
    reports.push_back(verify_binomial(64));
    reports.push_back(verify_f_kappa());
    reports.push_back(verify_product_identity(scope.n_max_sparse));
    reports.push_back(verify_kbound(scope.n_max_full, scope.k_list));
    reports.push_back(verify_pblocks(scope.n_max_full));
    reports.push_back(verify_box_iso(scope.n_max_sparse));
    reports.push_back(verify_w_stability(scope.n_max_full));
    reports.push_back(verify_reconstruction(scope.n_max_full, scope.n_max_sparse));
    reports.push_back(verify_t_upper(scope.n_max_full));
    return reports;
}

}  // namespace paving
