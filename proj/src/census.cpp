#include "paving/census.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "paving/errors.hpp"
#include "paving/parallel.hpp"

namespace paving {

namespace {

constexpr int kCensusFormatVersion = 1;

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int pair_index_of(int n, int e, int f) {
    // (e,f) with 1 <= e < f <= n, lexicographic
    int idx = 0;
    for (int a = 1; a < e; ++a) idx += n - a;
    return idx + (f - e - 1);
}

}  // namespace

PermActionTable PermActionTable::build(int n, const std::vector<Mask>& verts) {
    PermActionTable t;
    t.n = n;
    t.num_vertices = static_cast<int>(verts.size());
    t.num_perms = static_cast<int>(factorial(n)) - 1;
    t.vertex_maps.resize(static_cast<std::size_t>(t.num_perms) * t.num_vertices);
    t.transposition_id.resize(t.num_perms);
    for (int e = 1; e <= n; ++e)
        for (int f = e + 1; f <= n; ++f) t.pairs.emplace_back(e, f);

    int row = 0;
    for_each_permutation(n, [&](const Permutation& p) {
        if (p.is_identity()) return;
        std::uint16_t* map = &t.vertex_maps[static_cast<std::size_t>(row) * t.num_vertices];
        for (int v = 0; v < t.num_vertices; ++v) {
            Mask img = p.apply_mask(verts[v]);
            auto it = std::lower_bound(verts.begin(), verts.end(), img);
            map[v] = static_cast<std::uint16_t>(it - verts.begin());
        }
        if (p.classify_support() == SupportClass::transposition) {
            auto elems = elements_of(p.support().bits);
            t.transposition_id[row] = pair_index_of(n, elems[0], elems[1]);
        } else {
            t.transposition_id[row] = -1;
        }
        ++row;
    });
    return t;
}

FamilyClass classify_family(const PermActionTable& table, const std::vector<std::uint16_t>& members,
                            const VSet& member_set) {
    FamilyClass out;
    int nontrivial = 0;
    int first_pair = -1;
    for (int p = 0; p < table.num_perms; ++p) {
        const std::uint16_t* map =
            &table.vertex_maps[static_cast<std::size_t>(p) * table.num_vertices];
        bool stab = true;
        for (std::uint16_t v : members)
            if (!member_set.test(map[v])) {
                stab = false;
                break;
            }
        if (!stab) continue;
        if (++nontrivial >= 2) {
            out.kind = AutKind::other;
            return out;
        }
        first_pair = table.transposition_id[p];
    }
    if (nontrivial == 0) {
        out.kind = AutKind::trivial;
    } else if (first_pair >= 0) {
        out.kind = AutKind::single_transposition;
        out.pair_index = first_pair;
    } else {
        out.kind = AutKind::other;
    }
    return out;
}

namespace {

struct Tally {
    std::uint64_t total = 0, trivial = 0, single = 0, other = 0;
    std::vector<std::uint64_t> t_by_pair;

    void add(const FamilyClass& c) {
        ++total;
        switch (c.kind) {
            case AutKind::trivial:
                ++trivial;
                break;
            case AutKind::single_transposition:
                ++single;
                if (!t_by_pair.empty()) ++t_by_pair[c.pair_index];
                break;
            case AutKind::other:
                ++other;
                break;
        }
    }
    void merge(const Tally& o) {
        total += o.total;
        trivial += o.trivial;
        single += o.single;
        other += o.other;
        for (std::size_t i = 0; i < t_by_pair.size(); ++i) t_by_pair[i] += o.t_by_pair[i];
    }
};

// classify all stable sets of J(n,r), partitioned by the minimum vertex of
// the enumeration tree so workers stay deterministic
Tally sparse_tally(int n, int r, int threads, bool with_pairs) {
    JohnsonGraph jg = JohnsonGraph::build(JohnsonParams{n, r});
    PermActionTable table = PermActionTable::build(n, jg.verts);
    int num_pairs = static_cast<int>(table.pairs.size());

    auto make_tally = [&] {
        Tally t;
        if (with_pairs) t.t_by_pair.assign(num_pairs, 0);
        return t;
    };

    int v = jg.g.num_vertices;
    std::vector<Tally> slots(v + 1, make_tally());

    // slot 0: the empty family (the uniform matroid)
    {
        std::vector<std::uint16_t> none;
        slots[0].add(classify_family(table, none, VSet{}));
    }
    parallel_for_tasks(v, threads, [&](std::size_t root) {
        Tally& slot = slots[root + 1];
        std::vector<std::uint16_t> members;
        VSet member_set;
        for_each_independent_set_rooted(jg.g, jg.g.all_vertices(), static_cast<int>(root),
                                        [&](const std::vector<int>& idxs) {
                                            members.clear();
                                            member_set = VSet{};
                                            for (int i : idxs) {
                                                members.push_back(static_cast<std::uint16_t>(i));
                                                member_set.set(i);
                                            }
                                            slot.add(classify_family(table, members, member_set));
                                        });
    });
    Tally out = make_tally();
    for (const Tally& s : slots) out.merge(s);
    return out;
}

// --- exhaustive matroid search ----------------------------------------------

struct ExchangeConstraint {
    std::uint32_t i, j;        // both must be bases for the constraint to bind
    std::uint32_t candidates;  // subset-index mask; one must be a basis
};

struct MatroidSearchTables {
    int n, r;
    std::vector<Mask> subsets;
    // constraints bucketed by the largest subset index involved
    std::vector<std::vector<ExchangeConstraint>> buckets;
};

MatroidSearchTables build_search_tables(int n, int r) {
    MatroidSearchTables t{n, r, all_r_subsets(n, r), {}};
    int k = static_cast<int>(t.subsets.size());
    if (k > 32) throw budget_error("matroid search: more than 32 candidate subsets");
    t.buckets.resize(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            Mask b1 = t.subsets[i], b2 = t.subsets[j];
            for (Mask xm = b1 & ~b2; xm;) {
                int x = std::countr_zero(xm);
                xm &= xm - 1;
                std::uint32_t cand = 0;
                int maxidx = std::max(i, j);
                for (Mask ym = b2 & ~b1; ym;) {
                    int y = std::countr_zero(ym);
                    ym &= ym - 1;
                    Mask c = (b1 & ~(Mask{1} << x)) | (Mask{1} << y);
                    auto it = std::lower_bound(t.subsets.begin(), t.subsets.end(), c);
                    int idx = static_cast<int>(it - t.subsets.begin());
                    cand |= std::uint32_t{1} << idx;
                    maxidx = std::max(maxidx, idx);
                }
                t.buckets[maxidx].push_back(
                    {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), cand});
            }
        }
    return t;
}

// depth-first over basis/non-basis decisions in canonical subset order;
// a bucket is checked as soon as its last index is decided
void matroid_dfs(const MatroidSearchTables& t, int depth, std::uint32_t bases,
                 const std::function<void(std::uint32_t)>& leaf) {
    int k = static_cast<int>(t.subsets.size());
    if (depth == k) {
        if (bases != 0) leaf(bases);
        return;
    }
    for (int choice = 1; choice >= 0; --choice) {
        std::uint32_t nb = bases | (static_cast<std::uint32_t>(choice) << depth);
        bool ok = true;
        for (const ExchangeConstraint& c : t.buckets[depth]) {
            if ((nb >> c.i & 1) && (nb >> c.j & 1) && !(nb & c.candidates)) {
                ok = false;
                break;
            }
        }
        if (ok) matroid_dfs(t, depth + 1, nb, leaf);
    }
}

}  // namespace

void for_each_matroid(int n, int r, const std::function<void(const Matroid&)>& fn) {
    MatroidSearchTables t = build_search_tables(n, r);
    int k = static_cast<int>(t.subsets.size());
    matroid_dfs(t, 0, 0, [&](std::uint32_t bases) {
        std::vector<Mask> nonbases;
        for (int i = 0; i < k; ++i)
            if (!(bases >> i & 1)) nonbases.push_back(t.subsets[i]);
        fn(Matroid::validate(n, r, std::move(nonbases)));
    });
}

void for_each_sparse_matroid(int n, int r, const std::function<void(const Matroid&)>& fn) {
    std::uint64_t total = JohnsonParams{n, r}.vertex_count();
    for_each_stable_set(JohnsonParams{n, r}, [&](const std::vector<Mask>& members) {
        if (members.size() == total) return;  // no basis would remain (only r=0 or r=n)
        fn(Matroid::validate(n, r, members));
    });
}

namespace {

// --- cache ------------------------------------------------------------------

std::string cache_path(const std::string& dir, CensusKind kind, int n, int r) {
    return dir + "/" + kind_name(kind) + "_" + std::to_string(n) + "_" + std::to_string(r) +
           ".json";
}

std::optional<CensusRecord> load_cached(const std::string& dir, CensusKind kind, int n, int r) {
    std::ifstream in(cache_path(dir, kind, n, r));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("version").get<int>() != kCensusFormatVersion) return std::nullopt;
        CensusRecord rec;
        rec.kind = kind;
        rec.n = j.at("n").get<int>();
        rec.r = j.at("r").get<int>();
        if (rec.n != n || rec.r != r) return std::nullopt;
        rec.total = j.at("total").get<std::uint64_t>();
        rec.aut_trivial = j.at("aut_trivial").get<std::uint64_t>();
        rec.aut_single_transposition = j.at("aut_single_transposition").get<std::uint64_t>();
        rec.aut_other = j.at("aut_other").get<std::uint64_t>();
        return rec;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

void store_cached(const std::string& dir, const CensusRecord& rec) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    nlohmann::json j{{"version", kCensusFormatVersion}, {"n", rec.n},
                     {"r", rec.r},                      {"total", rec.total},
                     {"aut_trivial", rec.aut_trivial},  {"aut_single_transposition",
                                                         rec.aut_single_transposition},
                     {"aut_other", rec.aut_other}};
    std::ofstream out(cache_path(dir, rec.kind, rec.n, rec.r));
    out << j.dump() << "\n";
}

}  // namespace

std::vector<CensusRecord> sparse_census(int n_max, const CensusOptions& opts) {
    if (n_max < 1 || n_max > kSparseCensusMaxN)
        throw budget_error("sparse census: n_max must lie in [1," +
                           std::to_string(kSparseCensusMaxN) + "]");
    std::vector<CensusRecord> out;
    for (int n = 1; n <= n_max; ++n)
        for (int r = 0; r <= n; ++r) {
            if (opts.cache_dir) {
                if (auto rec = load_cached(*opts.cache_dir, CensusKind::sparse_paving, n, r)) {
                    out.push_back(*rec);
                    continue;
                }
            }
            // Totals count every stable set of J(n,r), matching i(J(n,r));
            // at r=0 and r=n this includes the single-vertex full family,
            // classified like the rest by its stabilizer.
            Tally tally = sparse_tally(n, r, opts.threads, false);
            CensusRecord rec{CensusKind::sparse_paving, n,           r,          tally.total,
                             tally.trivial,             tally.single, tally.other};
            if (opts.cache_dir) store_cached(*opts.cache_dir, rec);
            out.push_back(rec);
        }
    return out;
}

FullCensusResult full_census_detailed(int n_max, const CensusOptions& opts) {
    if (n_max < 1 || n_max > kFullCensusMaxN)
        throw budget_error("full census: n_max must lie in [1," + std::to_string(kFullCensusMaxN) +
                           "]");
    FullCensusResult out;
    for (int n = 1; n <= n_max; ++n) {
        for (int r = 0; r <= n; ++r) {
            JohnsonGraph jg = JohnsonGraph::build(JohnsonParams{n, r});
            PermActionTable table = PermActionTable::build(n, jg.verts);
            Tally tally;
            tally.t_by_pair.assign(table.pairs.size(), 0);

            MatroidSearchTables tables = build_search_tables(n, r);
            int k = static_cast<int>(tables.subsets.size());
            std::vector<std::uint16_t> members;
            VSet member_set;
            matroid_dfs(tables, 0, 0, [&](std::uint32_t bases) {
                members.clear();
                member_set = VSet{};
                for (int i = 0; i < k; ++i)
                    if (!(bases >> i & 1)) {
                        members.push_back(static_cast<std::uint16_t>(i));
                        member_set.set(i);
                    }
                tally.add(classify_family(table, members, member_set));
            });

            CensusRecord rec{CensusKind::all_matroids, n,           r,          tally.total,
                             tally.trivial,            tally.single, tally.other};
            if (opts.cache_dir) {
                if (auto cached = load_cached(*opts.cache_dir, CensusKind::all_matroids, n, r)) {
                    if (!(*cached == rec))
                        throw validation_error("full census: cache disagrees with recomputation");
                }
                store_cached(*opts.cache_dir, rec);
            }
            out.records.push_back(rec);
            TranspositionTally tt;
            tt.n = n;
            tt.r = r;
            tt.counts = std::move(tally.t_by_pair);
            out.t_counts.push_back(std::move(tt));
        }
    }
    return out;
}

std::vector<CensusRecord> full_census(int n_max, const CensusOptions& opts) {
    return full_census_detailed(n_max, opts).records;
}

std::uint64_t FullCensusResult::m_of(int n, int r) const {
    for (const CensusRecord& rec : records)
        if (rec.n == n && rec.r == r) return rec.total;
    return 0;
}

RankDistribution rank_distribution(int n, double beta) {
    if (n < 1 || n > kSparseCensusMaxN)
        throw budget_error("rank distribution: n must lie in [1," +
                           std::to_string(kSparseCensusMaxN) + "]");
    RankDistribution dist;
    dist.n = n;
    dist.beta = beta;
    dist.window = rank_window(n, beta);
    for (int r = 0; r <= n; ++r) {
        std::uint64_t s = count_stable_sets(JohnsonParams{n, r});
        dist.rows.push_back({r, s});
        dist.total += s;
        if (dist.window.contains(r)) dist.in_window += s;
    }
    return dist;
}

std::string census_csv(const std::vector<CensusRecord>& records) {
    std::vector<CensusRecord> sorted = records;
    std::sort(sorted.begin(), sorted.end(), [](const CensusRecord& a, const CensusRecord& b) {
        auto key = [](const CensusRecord& r) { return std::tuple(r.kind, r.n, r.r); };
        return key(a) < key(b);
    });
    std::ostringstream out;
    out << "kind,n,r,total,aut_trivial,aut_single_transposition,aut_other\n";
    for (const CensusRecord& r : sorted)
        out << kind_name(r.kind) << ',' << r.n << ',' << r.r << ',' << r.total << ','
            << r.aut_trivial << ',' << r.aut_single_transposition << ',' << r.aut_other << "\n";
    return out.str();
}

std::vector<TrendRow> trend_rows(const std::vector<CensusRecord>& records) {
    std::vector<TrendRow> rows;
    for (const CensusRecord& rec : records) {
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const TrendRow& t) { return t.n == rec.n; });
        if (it == rows.end()) {
            rows.push_back(TrendRow{rec.n, 0, 0, 0, 0.0, 0.0});
            it = rows.end() - 1;
        }
        it->total += rec.total;
        it->aut_trivial += rec.aut_trivial;
        it->aut_single_transposition += rec.aut_single_transposition;
    }
    std::sort(rows.begin(), rows.end(), [](const TrendRow& a, const TrendRow& b) { return a.n < b.n; });
    for (TrendRow& t : rows) {
        if (t.total) {
            t.asymmetric_fraction = static_cast<double>(t.aut_trivial) / t.total;
            t.single_transposition_fraction =
                static_cast<double>(t.aut_single_transposition) / t.total;
        }
    }
    return rows;
}

}  // namespace paving
