#include "paving/matroid.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "paving/errors.hpp"

namespace paving {

namespace {

Mask ground_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

Matroid::Matroid(int n, int r, std::vector<Mask> nonbases)
    : n_(n), r_(r), nonbases_(std::move(nonbases)) {
    std::vector<Mask> all = all_r_subsets(n_, r_);
    bases_.reserve(all.size() - nonbases_.size());
    std::set_difference(all.begin(), all.end(), nonbases_.begin(), nonbases_.end(),
                        std::back_inserter(bases_));
}

Matroid Matroid::validate(int n, int r, std::vector<Mask> nonbases) {
    if (n < 0 || n > 64) throw validation_error("matroid: n out of range");
    if (r < 0 || r > n) throw validation_error("matroid: rank outside [0,n]");
    std::sort(nonbases.begin(), nonbases.end());
    nonbases.erase(std::unique(nonbases.begin(), nonbases.end()), nonbases.end());
    for (Mask m : nonbases) {
        if ((m & ~ground_mask(n)) != 0)
            throw validation_error("matroid: non-basis outside the ground set");
        if (card(m) != r) throw validation_error("matroid: non-basis is not an r-subset");
    }

    Matroid out(n, r, std::move(nonbases));
    const std::vector<Mask>& bases = out.bases();
    if (bases.empty()) throw validation_error("matroid: at least one basis is required");

    // exchange: for all bases B1, B2 and x in B1 \ B2 there is y in B2 \ B1
    // with B1 - x + y a basis
    for (Mask b1 : bases)
        for (Mask b2 : bases) {
            if (b1 == b2) continue;
            Mask only1 = b1 & ~b2;
            for (Mask xm = only1; xm;) {
                int x = std::countr_zero(xm);
                xm &= xm - 1;
                bool found = false;
                for (Mask ym = b2 & ~b1; ym;) {
                    int y = std::countr_zero(ym);
                    ym &= ym - 1;
                    Mask candidate = (b1 & ~(Mask{1} << x)) | (Mask{1} << y);
                    if (out.is_basis(candidate)) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw validation_error("matroid: exchange fails for B1=" + format_subset(b1) +
                                           " B2=" + format_subset(b2) + " x=" +
                                           std::to_string(x + 1));
            }
        }
    return out;
}

bool Matroid::is_basis(Mask m) const {
    if (card(m) != r_) return false;
    return !std::binary_search(nonbases_.begin(), nonbases_.end(), m);
}

int Matroid::rank_of(Mask s) const {
    int best = 0;
    for (Mask b : bases()) {
        best = std::max(best, card(s & b));
        if (best == std::min(card(s), r_)) break;
    }
    return best;
}

UWSplit uw_split(const Matroid& m) {
    UWSplit out;
    int r = m.rank();
    for (Mask x : m.nonbases()) {
        // circuit: every one-element deletion is independent
        bool circuit = true;
        for (Mask xm = x; xm && circuit;) {
            int e = std::countr_zero(xm);
            xm &= xm - 1;
            if (m.rank_of(x & ~(Mask{1} << e)) != r - 1) circuit = false;
        }
        // hyperplane: rank r-1, and every extension has full rank
        bool hyperplane = circuit && m.rank_of(x) == r - 1;
        if (hyperplane) {
            Mask outside = ground_mask(m.n()) & ~x;
            for (Mask gm = outside; gm && hyperplane;) {
                int g = std::countr_zero(gm);
                gm &= gm - 1;
                if (m.rank_of(x | (Mask{1} << g)) != r) hyperplane = false;
            }
        }
        (hyperplane ? out.w_part : out.u_part).push_back(x);
    }
    return out;
}

bool is_sparse_paving(const Matroid& m) { return uw_split(m).u_part.empty(); }

bool is_paving(const Matroid& m) {
    if (m.rank() == 0) return true;
    for (Mask s : all_r_subsets(m.n(), m.rank() - 1))
        if (m.rank_of(s) != m.rank() - 1) return false;
    return true;
}

Matroid dual(const Matroid& m) {
    Mask ground = ground_mask(m.n());
    std::vector<Mask> nonbases;
    nonbases.reserve(m.nonbases().size());
    for (Mask x : m.nonbases()) nonbases.push_back(ground & ~x);
    std::sort(nonbases.begin(), nonbases.end());
    return Matroid::validate(m.n(), m.n() - m.rank(), std::move(nonbases));
}

bool is_automorphism(const Matroid& m, const Permutation& p) {
    if (p.n() != m.n()) throw validation_error("is_automorphism: mismatched ground sets");
    const auto& nb = m.nonbases();
    for (Mask x : nb)
        if (!std::binary_search(nb.begin(), nb.end(), p.apply_mask(x))) return false;
    return true;
}

AutClassification automorphism_classification(const Matroid& m, int budget_n) {
    if (m.n() > budget_n)
        throw budget_error("automorphism_classification: n exceeds the factorial budget of " +
                           std::to_string(budget_n));
    AutClassification out;
    bool single = false;
    std::pair<int, int> pair{0, 0};
    std::uint64_t nontrivial = 0;
    for_each_permutation(m.n(), [&](const Permutation& p) {
        if (p.is_identity() || !is_automorphism(m, p)) return;
        ++nontrivial;
        if (nontrivial == 1 && p.classify_support() == SupportClass::transposition) {
            single = true;
            auto elems = elements_of(p.support().bits);
            pair = {elems[0], elems[1]};
        }
    });
    out.group_order = nontrivial + 1;
    if (nontrivial == 0)
        out.kind = AutKind::trivial;
    else if (nontrivial == 1 && single) {
        out.kind = AutKind::single_transposition;
        out.generator_pair = pair;
    } else
        out.kind = AutKind::other;
    return out;
}

std::vector<Permutation> automorphism_group(const Matroid& m, int budget_n) {
    if (m.n() > budget_n)
        throw budget_error("automorphism_group: n exceeds the materialization budget");
    std::vector<Permutation> group;
    for_each_permutation(m.n(), [&](const Permutation& p) {
        if (is_automorphism(m, p)) group.push_back(p);
    });
    return group;
}

namespace {

// order-preserving relabeling of masks over [n]\{e,f} onto [n-2]
Mask compress(Mask m, int e, int f) {
    Mask out = 0;
    while (m) {
        int b = std::countr_zero(m) + 1;  // 1-based element
        m &= m - 1;
        int shift = (b > e) + (b > f);
        out |= Mask{1} << (b - 1 - shift);
    }
    return out;
}

// inverse of compress
Mask expand(Mask m, int e, int f) {
    int lo = std::min(e, f), hi = std::max(e, f);
    Mask out = 0;
    while (m) {
        int b = std::countr_zero(m) + 1;  // 1-based element of [n-2]
        m &= m - 1;
        int v = b;
        if (v >= lo) ++v;
        if (v >= hi) ++v;
        out |= Mask{1} << (v - 1);
    }
    return out;
}

void check_pair(const Matroid& m, int e, int f, const char* what) {
    if (e == f || e < 1 || f < 1 || e > m.n() || f > m.n())
        throw validation_error(std::string(what) + ": need distinct elements of [n]");
}

}  // namespace

Matroid delete_pair(const Matroid& m, int e, int f) {
    check_pair(m, e, f, "delete_pair");
    Mask pair = (Mask{1} << (e - 1)) | (Mask{1} << (f - 1));
    Mask rest = ground_mask(m.n()) & ~pair;
    int r_del = m.rank_of(rest);
    std::vector<Mask> nonbases;
    for (Mask z : all_r_subsets(m.n(), r_del)) {
        if (z & pair) continue;
        if (m.rank_of(z) != r_del) nonbases.push_back(compress(z, e, f));
    }
    std::sort(nonbases.begin(), nonbases.end());
    return Matroid::validate(m.n() - 2, r_del, std::move(nonbases));
}

Matroid contract_pair(const Matroid& m, int e, int f) {
    check_pair(m, e, f, "contract_pair");
    Mask pair = (Mask{1} << (e - 1)) | (Mask{1} << (f - 1));
    int r_con = m.rank() - m.rank_of(pair);
    std::vector<Mask> nonbases;
    for (Mask z : all_r_subsets(m.n(), r_con)) {
        if (z & pair) continue;
        if (m.rank_of(z | pair) != m.rank()) nonbases.push_back(compress(z, e, f));
    }
    std::sort(nonbases.begin(), nonbases.end());
    return Matroid::validate(m.n() - 2, r_con, std::move(nonbases));
}

// The six shapes a pair {e,f} with (e f) ∈ Aut(M) can take, keyed by the
// minor ranks rd = r(M\ef), rc = r(M/ef):
//   rc = r               both loops          minors equal, bases avoid e,f
//   rc = r-1, rd = r-1   circuit + cocircuit minors equal, M = minor ⊕ U_{1,2}
//   rc = r-1, rd = r     e,f parallel        B(del) plus e/f-lifts of B(con)
//   rc = r-2, rd = r-1   {e,f} a cocircuit   e/f-lifts of B(del) plus ef-lifts of B(con)
//   rc = r-2, rd = r-2   both coloops        minors equal, every basis takes e,f
//   rc = r-2, rd = r     independent+coindependent: the two-clause non-basis test
Matroid reconstruct_from_minors(const Matroid& deletion, const Matroid& contraction, int n, int r,
                                int e, int f) {
    if (deletion.n() != n - 2 || contraction.n() != n - 2)
        throw validation_error("reconstruct: minors must live on [n-2]");
    if (e == f || e < 1 || f < 1 || e > n || f > n)
        throw validation_error("reconstruct: need distinct elements of [n]");
    if (r < 0 || r > n) throw validation_error("reconstruct: rank outside [0,n]");

    Mask me = Mask{1} << (e - 1), mf = Mask{1} << (f - 1);
    int rd = deletion.rank(), rc = contraction.rank();
    auto lift = [&](Mask z) { return expand(z, std::min(e, f), std::max(e, f)); };

    std::vector<Mask> bases;
    auto degenerate_equal = [&]() {
        if (!(deletion == contraction))
            throw validation_error("reconstruct: minors must coincide in the degenerate case");
    };

    if (rc == r && rd == r) {
        // e, f loops
        degenerate_equal();
        for (Mask b : deletion.bases()) bases.push_back(lift(b));
    } else if (rc == r - 1 && rd == r - 1) {
        // {e,f} both a circuit and a cocircuit: minor ⊕ U_{1,2}
        degenerate_equal();
        for (Mask b : deletion.bases()) {
            bases.push_back(lift(b) | me);
            bases.push_back(lift(b) | mf);
        }
    } else if (rc == r - 1 && rd == r) {
        // e, f parallel, {e,f} not a cocircuit
        for (Mask b : deletion.bases()) bases.push_back(lift(b));
        for (Mask b : contraction.bases()) {
            bases.push_back(lift(b) | me);
            bases.push_back(lift(b) | mf);
        }
    } else if (rc == r - 2 && rd == r - 1) {
        // {e,f} a cocircuit of independent elements (dual of the parallel case)
        for (Mask b : deletion.bases()) {
            bases.push_back(lift(b) | me);
            bases.push_back(lift(b) | mf);
        }
        for (Mask b : contraction.bases()) bases.push_back(lift(b) | me | mf);
    } else if (rc == r - 2 && rd == r - 2) {
        // e, f coloops
        degenerate_equal();
        for (Mask b : deletion.bases()) bases.push_back(lift(b) | me | mf);
    } else if (rc == r - 2 && rd == r) {
        // {e,f} independent and coindependent
        for (Mask b : deletion.bases()) bases.push_back(lift(b));
        for (Mask b : contraction.bases()) bases.push_back(lift(b) | me | mf);
        // mixed class: X = Z + e (f outside) is a basis iff Z is independent
        // in M\ef and spanning in M/ef; mirror through X -> X symm {e,f}
        for (Mask z_small : all_r_subsets(n - 2, r - 1)) {
            bool independent = deletion.rank_of(z_small) == r - 1;
            bool spanning = contraction.rank_of(z_small) == r - 2;
            if (independent && spanning) {
                bases.push_back(lift(z_small) | me);
                bases.push_back(lift(z_small) | mf);
            }
        }
    } else {
        throw validation_error("reconstruct: minor ranks (" + std::to_string(rd) + "," +
                               std::to_string(rc) + ") cannot arise from rank " +
                               std::to_string(r));
    }

    std::sort(bases.begin(), bases.end());
    std::vector<Mask> nonbases;
    std::vector<Mask> all = all_r_subsets(n, r);
    std::set_difference(all.begin(), all.end(), bases.begin(), bases.end(),
                        std::back_inserter(nonbases));
    return Matroid::validate(n, r, std::move(nonbases));
}

Matroid stable_set_to_matroid(const StableSet& s) {
    if (s.params.empty_graph())
        throw validation_error("stable_set_to_matroid: rank outside [0,n]");
    if (BigInt(s.members.size()) >= binomial(s.params.n, s.params.r))
        throw validation_error("stable_set_to_matroid: no basis would remain");
    return Matroid::validate(s.params.n, s.params.r, s.members);
}

StableSet matroid_to_stable_set(const Matroid& m) {
    if (!is_sparse_paving(m))
        throw validation_error("matroid_to_stable_set: matroid is not sparse paving");
    return StableSet{JohnsonParams{m.n(), m.rank()}, m.nonbases()};
}

Matroid read_matroid_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw validation_error(std::string("matroid file: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("nonbases"))
        throw validation_error("matroid file: need object with n, r, nonbases");
    if (!j["n"].is_number_integer() || !j["r"].is_number_integer() || !j["nonbases"].is_array())
        throw validation_error("matroid file: malformed fields");
    int n = j["n"].get<int>(), r = j["r"].get<int>();
    if (n < 0 || n > 64) throw validation_error("matroid file: n out of range");
    if (r < 0 || r > n) throw validation_error("matroid file: r outside [0,n]");

    std::vector<Mask> nonbases;
    for (const auto& row : j["nonbases"]) {
        if (!row.is_array()) throw validation_error("matroid file: non-basis rows must be arrays");
        Mask m = 0;
        for (const auto& el : row) {
            if (!el.is_number_integer()) throw validation_error("matroid file: elements must be integers");
            int v = el.get<int>();
            if (v < 1 || v > n) throw validation_error("matroid file: element outside [n]");
            Mask bit = Mask{1} << (v - 1);
            if (m & bit) throw validation_error("matroid file: duplicate element in a non-basis");
            m |= bit;
        }
        if (card(m) != r) throw validation_error("matroid file: non-basis is not an r-subset");
        nonbases.push_back(m);
    }
    std::sort(nonbases.begin(), nonbases.end());
    if (std::adjacent_find(nonbases.begin(), nonbases.end()) != nonbases.end())
        throw validation_error("matroid file: duplicate non-basis");
    return Matroid::validate(n, r, std::move(nonbases));
}

Matroid read_matroid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("matroid file: cannot open " + path);
    return read_matroid_json(in);
}

std::string matroid_to_json(const Matroid& m) {
    std::vector<std::vector<int>> rows;
    for (Mask x : m.nonbases()) rows.push_back(elements_of(x));
    std::sort(rows.begin(), rows.end());  // canonical: lexicographic row order
    nlohmann::ordered_json j;
    j["n"] = m.n();
    j["r"] = m.rank();
    j["nonbases"] = rows;
    return j.dump();
}

void write_matroid_file(const std::string& path, const Matroid& m) {
    std::ofstream out(path);
    if (!out) throw validation_error("matroid file: cannot write " + path);
    out << matroid_to_json(m) << "\n";
}

}  // namespace paving
