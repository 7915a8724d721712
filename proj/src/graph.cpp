#include "paving/graph.hpp"

#include <stdexcept>

namespace paving {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("independent-set count overflow");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("independent-set count overflow");
    return r;
}

std::uint64_t checked_pow2(int k) {
    if (k >= 64) throw std::overflow_error("independent-set count overflow");
    return std::uint64_t{1} << k;
}

// connected component of `seed` inside alive
VSet component_of(const Graph& g, const VSet& alive, int seed) {
    VSet comp;
    comp.set(seed);
    VSet frontier = comp;
    while (!frontier.empty()) {
        VSet next;
        for_each_bit(frontier, [&](int v) { next = next | (g.adj[v] & alive); });
        next = next.and_not(comp);
        comp = comp | next;
        frontier = next;
    }
    return comp;
}

int max_degree_vertex(const Graph& g, const VSet& alive, int& degree_out) {
    int best = -1, best_deg = -1;
    for_each_bit(alive, [&](int v) {
        int d = (g.adj[v] & alive).count();
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    });
    degree_out = best_deg;
    return best;
}

}  // namespace

std::uint64_t count_independent_sets(const Graph& g, const VSet& alive) {
    if (alive.empty()) return 1;
    int deg;
    int v = max_degree_vertex(g, alive, deg);
    if (deg == 0) return checked_pow2(alive.count());

    VSet comp = component_of(g, alive, v);
    if (comp.count() != alive.count())
        return checked_mul(count_independent_sets(g, comp),
                           count_independent_sets(g, alive.and_not(comp)));

    VSet without = alive;
    without.reset(v);
    VSet taken = without.and_not(g.adj[v]);
    return checked_add(count_independent_sets(g, without), count_independent_sets(g, taken));
}

std::uint64_t count_independent_sets_of_size(const Graph& g, const VSet& alive, int k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (alive.count() < k) return 0;
    int deg;
    int v = max_degree_vertex(g, alive, deg);
    if (deg == 0) {
        // C(#alive, k) fits easily at our scales
        std::uint64_t acc = 1;
        int m = alive.count();
        for (int i = 1; i <= k; ++i) acc = checked_mul(acc, m - k + i) / i;
        return acc;
    }
    VSet without = alive;
    without.reset(v);
    VSet taken = without.and_not(g.adj[v]);
    return checked_add(count_independent_sets_of_size(g, without, k),
                       count_independent_sets_of_size(g, taken, k - 1));
}

namespace {

void enumerate_rec(const Graph& g, const VSet& allowed, int start, std::vector<int>& members,
                   const IndepSetVisitor& visit) {
    visit(members);
    for (int v = start > 0 ? allowed.find_next(start - 1) : allowed.find_first(); v >= 0;
         v = allowed.find_next(v)) {
        VSet next_allowed = allowed.and_not(g.adj[v]);
        next_allowed.reset(v);
        members.push_back(v);
        enumerate_rec(g, next_allowed, v + 1, members, visit);
        members.pop_back();
    }
}

}  // namespace

void for_each_independent_set(const Graph& g, const VSet& alive, const IndepSetVisitor& visit) {
    std::vector<int> members;
    members.reserve(64);
    enumerate_rec(g, alive, 0, members, visit);
}

void for_each_independent_set_rooted(const Graph& g, const VSet& alive, int root,
                                     const IndepSetVisitor& visit) {
    if (!alive.test(root)) return;
    VSet allowed = alive.and_not(g.adj[root]);
    allowed.reset(root);
    std::vector<int> members{root};
    members.reserve(64);
    enumerate_rec(g, allowed, root + 1, members, visit);
}

Graph box_product_with_k2(const Graph& g) {
    Graph out(2 * g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) {
        out.add_edge(2 * v, 2 * v + 1);  // the matching
        for_each_bit(g.adj[v], [&](int u) {
            if (u > v) {
                out.add_edge(2 * v, 2 * u);
                out.add_edge(2 * v + 1, 2 * u + 1);
            }
        });
    }
    return out;
}

VSet neighbourhood(const Graph& g, const VSet& members) {
    VSet nb;
    for_each_bit(members, [&](int v) { nb = nb | g.adj[v]; });
    return nb;
}

}  // namespace paving
