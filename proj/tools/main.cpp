// paving: exact enumeration of Johnson-graph stable sets, sparse paving and
// general matroid censuses by automorphism class, pair-minor reconstruction,
// and finite verification of the lemma-level identities behind them.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "paving/census.hpp"
#include "paving/errors.hpp"
#include "paving/johnson.hpp"
#include "paving/matroid.hpp"
#include "paving/parallel.hpp"
#include "paving/verify.hpp"

namespace {

using namespace paving;

struct GlobalFlags {
    int threads = default_thread_count();
    std::string format = "auto";  // csv | json-lines | plain
    bool no_timing = false;
};

std::string resolve_format(const GlobalFlags& g, const std::string& preferred) {
    return g.format == "auto" ? preferred : g.format;
}

// Results go to --out when given, else stdout.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw validation_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::string json_elements(Mask m) {
    std::string out = "[";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    return out + "]";
}

std::string json_members(const std::vector<Mask>& members) {
    std::string out = "[";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ',';
        out += json_elements(members[i]);
    }
    return out + "]";
}

int run_stable_sets(const GlobalFlags& g, int n, int r, const std::string& invariant,
                    bool count_only, const std::string& out_path) {
    std::string format = resolve_format(g, "plain");
    if (format == "csv") throw validation_error("stable-sets: csv format is not defined here");
    JohnsonParams params{n, r};
    OutputTarget out(out_path);

    std::optional<Permutation> pi;
    if (!invariant.empty()) pi = Permutation::parse_cycles(invariant, n);

    if (count_only) {
        std::uint64_t count = pi ? count_invariant_stable_sets(params, *pi)
                                 : count_stable_sets(params);
        out.stream() << count << "\n";
        return 0;
    }
    auto emit = [&](const std::vector<Mask>& members) {
        if (format == "json-lines")
            out.stream() << json_members(members) << "\n";
        else
            out.stream() << format_stable_set(StableSet{params, members}) << "\n";
    };
    if (pi)
        for_each_invariant_stable_set(params, *pi, emit);
    else
        for_each_stable_set(params, emit);
    return 0;
}

const char* kind_str(AutKind k) {
    switch (k) {
        case AutKind::trivial: return "trivial";
        case AutKind::single_transposition: return "single_transposition";
        default: return "other";
    }
}

int run_aut(const GlobalFlags& g, const std::string& input) {
    std::string format = resolve_format(g, "plain");
    Matroid m = read_matroid_file(input);
    AutClassification cls = automorphism_classification(m);
    if (format == "json-lines") {
        std::cout << "{\"order\":" << cls.group_order << ",\"kind\":\"" << kind_str(cls.kind)
                  << "\"";
        if (cls.generator_pair)
            std::cout << ",\"generator\":[" << cls.generator_pair->first << ","
                      << cls.generator_pair->second << "]";
        std::cout << "}\n";
    } else {
        std::cout << "order: " << cls.group_order << "\n";
        std::cout << "kind: " << kind_str(cls.kind) << "\n";
        if (cls.generator_pair)
            std::cout << "generator: (" << cls.generator_pair->first << " "
                      << cls.generator_pair->second << ")\n";
    }
    return 0;
}

int run_reconstruct(int n, int r, int e, int f, const std::string& del_path,
                    const std::string& con_path, const std::string& out_path) {
    Matroid deletion = read_matroid_file(del_path);
    Matroid contraction = read_matroid_file(con_path);
    Matroid m = reconstruct_from_minors(deletion, contraction, n, r, e, f);
    OutputTarget out(out_path);
    out.stream() << matroid_to_json(m) << "\n";
    return 0;
}

void emit_census(std::ostream& os, const std::string& format,
                 const std::vector<CensusRecord>& records, bool with_trend) {
    if (format == "csv") {
        os << census_csv(records);
    } else if (format == "json-lines") {
        for (const CensusRecord& r : records)
            os << "{\"kind\":\"" << kind_name(r.kind) << "\",\"n\":" << r.n << ",\"r\":" << r.r
               << ",\"total\":" << r.total << ",\"aut_trivial\":" << r.aut_trivial
               << ",\"aut_single_transposition\":" << r.aut_single_transposition
               << ",\"aut_other\":" << r.aut_other << "}\n";
    } else {
        for (const CensusRecord& r : records)
            os << "kind=" << kind_name(r.kind) << " n=" << r.n << " r=" << r.r
               << " total=" << r.total << " aut_trivial=" << r.aut_trivial
               << " aut_single_transposition=" << r.aut_single_transposition
               << " aut_other=" << r.aut_other << "\n";
    }
    if (!with_trend) return;
    std::vector<TrendRow> trend = trend_rows(records);
    char buf[64];
    if (format == "csv") {
        os << "\nn,total,asymmetric_fraction,single_transposition_fraction\n";
        for (const TrendRow& t : trend) {
            std::snprintf(buf, sizeof buf, "%.6f,%.6f", t.asymmetric_fraction,
                          t.single_transposition_fraction);
            os << t.n << ',' << t.total << ',' << buf << "\n";
        }
    } else if (format == "json-lines") {
        for (const TrendRow& t : trend) {
            std::snprintf(buf, sizeof buf, "%.6f", t.asymmetric_fraction);
            os << "{\"trend_n\":" << t.n << ",\"total\":" << t.total
               << ",\"asymmetric_fraction\":" << buf;
            std::snprintf(buf, sizeof buf, "%.6f", t.single_transposition_fraction);
            os << ",\"single_transposition_fraction\":" << buf << "}\n";
        }
    } else {
        for (const TrendRow& t : trend) {
            std::snprintf(buf, sizeof buf, "%.6f", t.asymmetric_fraction);
            os << "trend n=" << t.n << " total=" << t.total << " asymmetric_fraction=" << buf;
            std::snprintf(buf, sizeof buf, "%.6f", t.single_transposition_fraction);
            os << " single_transposition_fraction=" << buf << "\n";
        }
    }
}

int run_census(const GlobalFlags& g, const std::string& kind, int max_n,
               const std::string& out_path, const std::string& cache_dir) {
    std::string format = resolve_format(g, "csv");
    CensusOptions opts;
    opts.threads = g.threads;
    if (!cache_dir.empty()) opts.cache_dir = cache_dir;
    std::vector<CensusRecord> records =
        kind == "sparse" ? sparse_census(max_n, opts) : full_census(max_n, opts);
    OutputTarget out(out_path);
    emit_census(out.stream(), format, records, kind == "sparse");
    return 0;
}

int run_verify(const GlobalFlags& g, const std::string& lemma, int max_n,
               const std::vector<int>& ks) {
    LemmaReport rep;
    if (lemma == "product-identity")
        rep = verify_product_identity(max_n > 0 ? max_n : 7);
    else if (lemma == "kbound")
        rep = verify_kbound(max_n > 0 ? max_n : 6, ks.empty() ? std::vector<int>{0, 1, 2} : ks);
    else if (lemma == "pblocks")
        rep = verify_pblocks(max_n > 0 ? max_n : 6);
    else if (lemma == "box-iso")
        rep = verify_box_iso(max_n > 0 ? max_n : 7);
    else if (lemma == "w-stable")
        rep = verify_w_stability(max_n > 0 ? max_n : 6);
    else if (lemma == "reconstruct")
        rep = verify_reconstruction(std::min(max_n > 0 ? max_n : 6, 6), max_n > 0 ? max_n : 7);
    else if (lemma == "binomial")
        rep = verify_binomial(max_n > 0 ? max_n : 64);
    else if (lemma == "t-upper")
        rep = verify_t_upper(max_n > 0 ? max_n : 6);
    else if (lemma == "f-kappa")
        rep = verify_f_kappa();
    else
        throw validation_error("verify: unknown lemma " + lemma);
    std::cout << format_report(rep, !g.no_timing);
    return rep.ok() ? 0 : 1;
}

int run_rank_dist(const GlobalFlags& g, int n, double beta, const std::string& out_path) {
    std::string format = resolve_format(g, "plain");
    RankDistribution dist = rank_distribution(n, beta);
    OutputTarget out(out_path);
    std::ostream& os = out.stream();
    std::uint64_t out_window = dist.total - dist.in_window;
    if (format == "csv") {
        os << "r,count,total\n";
        for (const RankDistRow& row : dist.rows)
            os << row.r << ',' << row.count << ',' << dist.total << "\n";
        os << "\nwindow_lo,window_hi,in_window,out_window\n";
        os << dist.window.lo << ',' << dist.window.hi << ',' << dist.in_window << ','
           << out_window << "\n";
    } else if (format == "json-lines") {
        for (const RankDistRow& row : dist.rows)
            os << "{\"r\":" << row.r << ",\"count\":" << row.count << ",\"total\":" << dist.total
               << "}\n";
        os << "{\"window_lo\":" << dist.window.lo << ",\"window_hi\":" << dist.window.hi
           << ",\"in_window\":" << dist.in_window << ",\"out_window\":" << out_window << "}\n";
    } else {
        os << "n: " << dist.n << "\n";
        for (const RankDistRow& row : dist.rows)
            os << "r=" << row.r << " count=" << row.count << "/" << dist.total << "\n";
        os << "window: [" << dist.window.lo << "," << dist.window.hi << "]"
           << " in_window=" << dist.in_window << " out_window=" << out_window << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Johnson-graph stable sets, matroid censuses, and reconstruction"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--threads", g.threads, "worker threads (results are thread-count independent)");
    app.add_option("--format", g.format, "csv | json-lines | plain")
        ->check(CLI::IsMember({"auto", "csv", "json-lines", "plain"}));
    app.add_flag("--no-timing", g.no_timing, "suppress timing lines");

    // stable-sets
    int ss_n = 0, ss_r = 0;
    std::string ss_invariant, ss_out;
    bool ss_count_only = false;
    auto* ss = app.add_subcommand("stable-sets", "enumerate or count stable sets of J(n,r)");
    ss->add_option("--n", ss_n, "ground-set size")->required();
    ss->add_option("--r", ss_r, "rank level")->required();
    ss->add_option("--invariant", ss_invariant, "restrict to pi-invariant sets, cycle notation");
    ss->add_flag("--count-only", ss_count_only, "print the exact count only");
    ss->add_option("--out", ss_out, "write results to a file");

    // aut
    std::string aut_input;
    auto* aut = app.add_subcommand("aut", "classify the automorphism group of a matroid file");
    aut->add_option("--input", aut_input, "matroid JSON file")->required();

    // reconstruct
    std::string rec_del, rec_con, rec_out;
    int rec_n = 0, rec_r = 0, rec_e = 0, rec_f = 0;
    auto* rec = app.add_subcommand("reconstruct", "rebuild a matroid from its two pair-minors");
    rec->add_option("--del", rec_del, "deletion minor file")->required();
    rec->add_option("--con", rec_con, "contraction minor file")->required();
    rec->add_option("--n", rec_n)->required();
    rec->add_option("--r", rec_r)->required();
    rec->add_option("--e", rec_e)->required();
    rec->add_option("--f", rec_f)->required();
    rec->add_option("--out", rec_out, "write the matroid to a file");

    // census
    std::string census_kind, census_out, census_cache;
    int census_max_n = 0;
    auto* cen = app.add_subcommand("census", "matroid census by automorphism class");
    cen->add_option("--kind", census_kind, "sparse | all")
        ->required()
        ->check(CLI::IsMember({"sparse", "all"}));
    cen->add_option("--max-n", census_max_n, "largest ground-set size")->required();
    cen->add_option("--out", census_out, "write the table to a file");
    cen->add_option("--cache", census_cache, "cache directory (resumable)");

    // verify
    std::string verify_lemma;
    int verify_max_n = 0;
    std::vector<int> verify_ks;
    auto* ver = app.add_subcommand("verify", "run a lemma-level verification grid");
    ver->add_option("--lemma", verify_lemma,
                    "product-identity | kbound | pblocks | box-iso | w-stable | reconstruct | "
                    "binomial | t-upper | f-kappa")
        ->required()
        ->check(CLI::IsMember({"product-identity", "kbound", "pblocks", "box-iso", "w-stable",
                               "reconstruct", "binomial", "t-upper", "f-kappa"}));
    ver->add_option("--max-n", verify_max_n, "largest ground-set size of the grid");
    ver->add_option("--k", verify_ks, "cardinalities for kbound")->delimiter(',');

    // rank-dist
    int rd_n = 0;
    double rd_beta = 0.6;
    std::string rd_out;
    auto* rd = app.add_subcommand("rank-dist", "rank distribution of the sparse census");
    rd->add_option("--n", rd_n, "ground-set size")->required();
    rd->add_option("--beta", rd_beta, "window half-width factor");
    rd->add_option("--out", rd_out, "write the table to a file");

    try {
        app.parse(argc, argv);
        if (ss->parsed())
            return run_stable_sets(g, ss_n, ss_r, ss_invariant, ss_count_only, ss_out);
        if (aut->parsed()) return run_aut(g, aut_input);
        if (rec->parsed())
            return run_reconstruct(rec_n, rec_r, rec_e, rec_f, rec_del, rec_con, rec_out);
        if (cen->parsed()) return run_census(g, census_kind, census_max_n, census_out, census_cache);
        if (ver->parsed()) return run_verify(g, verify_lemma, verify_max_n, verify_ks);
        if (rd->parsed()) return run_rank_dist(g, rd_n, rd_beta, rd_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
