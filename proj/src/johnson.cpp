#include "paving/johnson.hpp"

#include <algorithm>

#include "paving/errors.hpp"

namespace paving {

std::uint64_t JohnsonParams::vertex_count() const {
    if (empty_graph()) return 0;
    return binomial(n, r).convert_to<std::uint64_t>();
}

bool adjacent(const SubsetMask& x, const SubsetMask& y) {
    if (x.n != y.n) throw validation_error("adjacent: mismatched ground sets");
    if (card(x.bits) != card(y.bits))
        throw validation_error("adjacent: subsets have different cardinality");
    return card(x.bits ^ y.bits) == 2;
}

int JohnsonGraph::index_of(Mask m) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), m);
    if (it == verts.end() || *it != m) return -1;
    return static_cast<int>(it - verts.begin());
}

JohnsonGraph JohnsonGraph::build(JohnsonParams p, std::size_t max_vertices) {
    if (p.n < 0 || p.n > 64) throw validation_error("johnson: n out of range");
    max_vertices = std::min<std::size_t>(max_vertices, kMaxVertices);
    if (p.vertex_count() > max_vertices)
        throw budget_error("johnson: C(" + std::to_string(p.n) + "," + std::to_string(p.r) +
                           ") exceeds the vertex budget of " + std::to_string(max_vertices));
    JohnsonGraph jg;
    jg.params = p;
    jg.verts = p.empty_graph() ? std::vector<Mask>{} : all_r_subsets(p.n, p.r);
    int v = static_cast<int>(jg.verts.size());
    jg.g = Graph(v);
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            if (card(jg.verts[i] ^ jg.verts[j]) == 2) jg.g.add_edge(i, j);
    return jg;
}

StableSet make_stable_set(JohnsonParams params, std::vector<Mask> members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw validation_error("stable set: duplicate members");
    Mask ground = params.n == 64 ? ~Mask{0} : (Mask{1} << params.n) - 1;
    for (Mask m : members) {
        if ((m & ~ground) != 0) throw validation_error("stable set: member outside ground set");
        if (card(m) != params.r) throw validation_error("stable set: member is not an r-subset");
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (card(members[i] ^ members[j]) == 2)
                throw validation_error("stable set: members " + format_subset(members[i]) + " and " +
                                       format_subset(members[j]) + " are adjacent");
    return StableSet{params, std::move(members)};
}

std::string format_stable_set(const StableSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        if (i) out += ',';
        out += format_subset(s.members[i]);
    }
    return out;
}

std::uint64_t count_stable_sets(JohnsonParams p, std::size_t max_vertices) {
    if (p.empty_graph()) return 1;
    JohnsonGraph jg = JohnsonGraph::build(p, max_vertices);
    return count_independent_sets(jg.g);
}

std::uint64_t count_stable_sets_by_size(JohnsonParams p, int k, std::size_t max_vertices) {
    if (k < 0) return 0;
    if (p.empty_graph()) return k == 0 ? 1 : 0;
    JohnsonGraph jg = JohnsonGraph::build(p, max_vertices);
    return count_independent_sets_of_size(jg.g, k);
}

void for_each_stable_set(JohnsonParams p, const std::function<void(const std::vector<Mask>&)>& fn,
                         std::size_t max_vertices) {
    if (p.empty_graph()) {
        fn({});
        return;
    }
    JohnsonGraph jg = JohnsonGraph::build(p, max_vertices);
    std::vector<Mask> masks;
    for_each_independent_set(jg.g, [&](const std::vector<int>& members) {
        masks.clear();
        for (int v : members) masks.push_back(jg.verts[v]);
        fn(masks);
    });
}

OrbitSystem build_orbit_system(const JohnsonGraph& jg, const Permutation& p) {
    if (p.n() != jg.params.n) throw validation_error("orbit system: permutation over wrong ground set");
    int v = static_cast<int>(jg.verts.size());
    OrbitSystem sys;
    sys.params = jg.params;

    std::vector<bool> seen(v, false);
    for (int i = 0; i < v; ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        Mask cur = jg.verts[i];
        do {
            int idx = jg.index_of(cur);
            seen[idx] = true;
            orbit.push_back(idx);
            cur = p.apply_mask(cur);
        } while (cur != jg.verts[i]);
        // internal stability: an orbit with an adjacent pair can never sit
        // inside an invariant stable set
        bool stable = true;
        for (std::size_t a = 0; a < orbit.size() && stable; ++a)
            for (std::size_t b = a + 1; b < orbit.size(); ++b)
                if (jg.g.has_edge(orbit[a], orbit[b])) {
                    stable = false;
                    break;
                }
        if (stable) sys.orbits.push_back(std::move(orbit));
    }

    int k = static_cast<int>(sys.orbits.size());
    sys.compat = Graph(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            bool clash = false;
            for (int x : sys.orbits[a]) {
                for (int y : sys.orbits[b])
                    if (jg.g.has_edge(x, y)) {
                        clash = true;
                        break;
                    }
                if (clash) break;
            }
            if (clash) sys.compat.add_edge(a, b);
        }
    return sys;
}

std::uint64_t count_invariant_stable_sets(JohnsonParams p, const Permutation& pi,
                                          std::size_t max_vertices) {
    if (p.empty_graph()) return 1;
    JohnsonGraph jg = JohnsonGraph::build(p, max_vertices);
    OrbitSystem sys = build_orbit_system(jg, pi);
    return count_independent_sets(sys.compat);
}

void for_each_invariant_stable_set(JohnsonParams p, const Permutation& pi,
                                   const std::function<void(const std::vector<Mask>&)>& fn,
                                   std::size_t max_vertices) {
    if (p.empty_graph()) {
        fn({});
        return;
    }
    JohnsonGraph jg = JohnsonGraph::build(p, max_vertices);
    OrbitSystem sys = build_orbit_system(jg, pi);
    std::vector<Mask> masks;
    for_each_independent_set(sys.compat, [&](const std::vector<int>& chosen) {
        masks.clear();
        for (int o : chosen)
            for (int idx : sys.orbits[o]) masks.push_back(jg.verts[idx]);
        std::sort(masks.begin(), masks.end());
        fn(masks);
    });
}

InvariantSplit split_invariant(const StableSet& i, const Permutation& pi) {
    if (pi.n() != i.params.n) throw validation_error("split_invariant: mismatched ground sets");
    std::vector<Mask> mapped;
    mapped.reserve(i.members.size());
    for (Mask m : i.members) mapped.push_back(pi.apply_mask(m));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != i.members) throw validation_error("split_invariant: stable set is not pi-invariant");

    InvariantSplit out;
    out.whole = i;
    std::vector<Mask> fixed, moved;
    for (Mask m : i.members) (pi.apply_mask(m) == m ? fixed : moved).push_back(m);

    // lambda = number of orbits inside the moved part
    std::vector<bool> visited(moved.size(), false);
    for (std::size_t a = 0; a < moved.size(); ++a) {
        if (visited[a]) continue;
        ++out.large_orbit_count;
        Mask cur = pi.apply_mask(moved[a]);
        while (cur != moved[a]) {
            auto it = std::lower_bound(moved.begin(), moved.end(), cur);
            visited[static_cast<std::size_t>(it - moved.begin())] = true;
            cur = pi.apply_mask(cur);
        }
    }
    out.fixed_part = StableSet{i.params, std::move(fixed)};
    out.moved_part = StableSet{i.params, std::move(moved)};
    return out;
}

std::optional<StableSet> orbit_closure(const StableSet& seed, const Permutation& pi) {
    if (pi.n() != seed.params.n) throw validation_error("orbit_closure: mismatched ground sets");
    std::vector<Mask> closure;
    for (Mask m : seed.members)
        for (Mask it : pi.orbit_of_mask(m)) closure.push_back(it);
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    for (std::size_t a = 0; a < closure.size(); ++a)
        for (std::size_t b = a + 1; b < closure.size(); ++b)
            if (card(closure[a] ^ closure[b]) == 2) return std::nullopt;
    return StableSet{seed.params, std::move(closure)};
}

JohnsonParams pblock_subgraph(JohnsonParams p, const Permutation& pi,
                              const std::vector<int>& cycle_indices) {
    auto dec = pi.cycle_decomposition();
    int sum = 0;
    for (int j : cycle_indices) {
        if (j < 0 || j >= dec.cycle_count()) throw validation_error("pblock_subgraph: bad cycle index");
        sum += static_cast<int>(dec.cycles[j].size());
    }
    return JohnsonParams{p.n - dec.moved, p.r - sum};
}

PBlockReport check_pblock_bound(JohnsonParams p, const Permutation& pi, std::size_t max_vertices) {
    auto dec = pi.cycle_decomposition();
    if (dec.moved < 1) throw validation_error("check_pblock_bound: permutation must move something");

    PBlockReport rep;
    if (p.empty_graph()) {
        rep.lhs = 1;
    } else {
        JohnsonGraph jg = JohnsonGraph::build(p, max_vertices);
        VSet fix;
        for (Mask m : fixed_r_sets(pi, p.r)) fix.set(jg.index_of(m));
        rep.lhs = count_independent_sets(jg.g, fix);
    }

    int m_cycles = dec.cycle_count();
    rep.rhs = 1;
    for (int js = 0; js < (1 << m_cycles); ++js) {
        int sum = 0;
        for (int j = 0; j < m_cycles; ++j)
            if (js >> j & 1) sum += static_cast<int>(dec.cycles[j].size());
        rep.rhs *= count_stable_sets(JohnsonParams{p.n - dec.moved, p.r - sum}, max_vertices);
    }
    rep.ok = rep.lhs <= rep.rhs;
    return rep;
}

TranspositionPartition transposition_partition(JohnsonParams p, int e, int f,
                                               std::size_t max_vertices) {
    if (e == f || e < 1 || f < 1 || e > p.n || f > p.n)
        throw validation_error("transposition_partition: need distinct elements of [n]");
    TranspositionPartition part;
    if (p.empty_graph()) return part;
    Mask me = Mask{1} << (e - 1), mf = Mask{1} << (f - 1);
    JohnsonGraph jg = JohnsonGraph::build(p, max_vertices);
    for (Mask m : jg.verts) {
        bool he = m & me, hf = m & mf;
        if (he && hf)
            part.v_ef.push_back(m);
        else if (he)
            part.v_e.push_back(m);
        else if (hf)
            part.v_f.push_back(m);
        else
            part.v_empty.push_back(m);
    }
    return part;
}

bool check_box_product_iso(JohnsonParams p, int e, int f, std::size_t max_vertices) {
    if (p.r < 1 || p.r > p.n - 1) throw validation_error("check_box_product_iso: need 1 <= r <= n-1");
    if (e == f || e < 1 || f < 1 || e > p.n || f > p.n)
        throw validation_error("check_box_product_iso: need distinct elements of [n]");

    Mask me = Mask{1} << (e - 1), mf = Mask{1} << (f - 1);
    JohnsonGraph jg = JohnsonGraph::build(p, max_vertices);
    JohnsonGraph small = JohnsonGraph::build(JohnsonParams{p.n - 2, p.r - 1}, max_vertices);
    Graph box = box_product_with_k2(small.g);

    // relabeling table [n] -> [n-2] for elements other than e,f
    std::vector<int> relabel(p.n + 1, 0);
    int next = 1;
    for (int x = 1; x <= p.n; ++x)
        if (x != e && x != f) relabel[x] = next++;

    auto image_index = [&](Mask m) {
        int side = (m & me) ? 0 : 1;
        Mask rest = m & ~(me | mf);
        Mask compressed = 0;
        while (rest) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            compressed |= Mask{1} << (relabel[b + 1] - 1);
        }
        int idx = small.index_of(compressed);
        return 2 * idx + side;
    };

    std::vector<int> side_verts;  // indices into jg.verts of V_e ∪ V_f
    for (int i = 0; i < static_cast<int>(jg.verts.size()); ++i) {
        Mask m = jg.verts[i];
        bool he = m & me, hf = m & mf;
        if (he != hf) side_verts.push_back(i);
    }
    if (side_verts.size() != static_cast<std::size_t>(2 * small.verts.size())) return false;

    // bijectivity
    std::vector<bool> hit(box.num_vertices, false);
    for (int i : side_verts) {
        int img = image_index(jg.verts[i]);
        if (img < 0 || img >= box.num_vertices || hit[img]) return false;
        hit[img] = true;
    }
    // edge-exactness in both directions
    for (std::size_t a = 0; a < side_verts.size(); ++a)
        for (std::size_t b = a + 1; b < side_verts.size(); ++b) {
            int u = side_verts[a], v = side_verts[b];
            bool edge_big = jg.g.has_edge(u, v);
            bool edge_box = box.has_edge(image_index(jg.verts[u]), image_index(jg.verts[v]));
            if (edge_big != edge_box) return false;
        }
    return true;
}

ProductIdentityReport check_product_identity(JohnsonParams p, int e, int f,
                                             std::size_t max_vertices) {
    if (e == f) throw validation_error("check_product_identity: e and f must differ");
    ProductIdentityReport rep;
    Permutation t = Permutation::transposition(p.n, e, f);
    rep.lhs = count_invariant_stable_sets(p, t, max_vertices);
    rep.rhs = BigInt(count_stable_sets(JohnsonParams{p.n - 2, p.r - 2}, max_vertices)) *
              count_stable_sets(JohnsonParams{p.n - 2, p.r}, max_vertices);
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

StableSet filter_map_F(const StableSet& i, const StableSet& a, int e, int f) {
    if (i.params != a.params) throw validation_error("filter_map_F: mismatched parameters");
    int n = i.params.n;
    if (e == f || e < 1 || f < 1 || e > n || f > n)
        throw validation_error("filter_map_F: need distinct elements of [n]");
    Mask me = Mask{1} << (e - 1), mf = Mask{1} << (f - 1);

    Permutation t = Permutation::transposition(n, e, f);
    std::vector<Mask> mapped;
    for (Mask m : i.members) mapped.push_back(t.apply_mask(m));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != i.members) throw validation_error("filter_map_F: I is not (e f)-invariant");
    for (Mask m : a.members) {
        bool he = m & me, hf = m & mf;
        if (he == hf) throw validation_error("filter_map_F: A must lie within V_e ∪ V_f");
    }

    auto in_neighbourhood = [&](Mask x) {
        for (Mask m : a.members)
            if (card(x ^ m) == 2) return true;
        return false;
    };
    std::vector<Mask> result = a.members;
    for (Mask m : i.members)
        if (!in_neighbourhood(m)) result.push_back(m);
    std::sort(result.begin(), result.end());
    return StableSet{i.params, std::move(result)};
}

KBoundReport check_kbound(JohnsonParams p, int e, int f, int k, std::size_t max_vertices) {
    if (e == f) throw validation_error("check_kbound: e and f must differ");
    if (k < 0) throw validation_error("check_kbound: k must be nonnegative");

    KBoundReport rep;
    Permutation t = Permutation::transposition(p.n, e, f);
    rep.invariant_count = count_invariant_stable_sets(p, t, max_vertices);
    rep.total_count = count_stable_sets(p, max_vertices);

    JohnsonParams middle{p.n - 2, p.r - 1};
    if (middle.empty_graph()) {
        rep.size_count = k == 0 ? 1 : 0;
    } else {
        JohnsonGraph small = JohnsonGraph::build(middle, max_vertices);
        Graph box = box_product_with_k2(small.g);
        rep.size_count = count_independent_sets_of_size(box, k);
    }

    if (rep.size_count == 0) {
        rep.vacuous = true;
        rep.ok = true;
        return rep;
    }
    BigInt degree_pow = 1;
    for (int i = 0; i < k; ++i) degree_pow *= p.degree();
    rep.lhs = rep.invariant_count * rep.size_count;
    rep.rhs = degree_pow * rep.total_count;
    rep.ok = rep.lhs <= rep.rhs;
    return rep;
}

}  // namespace paving
