#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "paving/bitset.hpp"

namespace paving {

// Undirected graph on vertices 0..num_vertices-1 with bitset adjacency rows.
// All graphs here are Johnson graphs, their induced subgraphs, or box products
// with K2; num_vertices never exceeds kMaxVertices.
struct Graph {
    int num_vertices = 0;
    std::vector<VSet> adj;

    explicit Graph(int nv = 0) : num_vertices(nv), adj(nv) {}

    void add_edge(int u, int v) {
        adj[u].set(v);
        adj[v].set(u);
    }
    bool has_edge(int u, int v) const { return adj[u].test(v); }
    VSet all_vertices() const { return VSet::first_n(num_vertices); }
};

// Exact count of independent sets (the empty set included) within `alive`,
// by branching on a max-degree vertex with connected-component splitting.
// Throws std::overflow_error if the count would exceed 64 bits.
std::uint64_t count_independent_sets(const Graph& g, const VSet& alive);
inline std::uint64_t count_independent_sets(const Graph& g) {
    return count_independent_sets(g, g.all_vertices());
}

// Exact count of independent sets of cardinality exactly k within `alive`.
std::uint64_t count_independent_sets_of_size(const Graph& g, const VSet& alive, int k);
inline std::uint64_t count_independent_sets_of_size(const Graph& g, int k) {
    return count_independent_sets_of_size(g, g.all_vertices(), k);
}

// Visit every independent set within `alive` exactly once, in lexicographic
// order of ascending member-index sequences (the empty set first). The
// callback receives the members in ascending order.
using IndepSetVisitor = std::function<void(const std::vector<int>&)>;
void for_each_independent_set(const Graph& g, const VSet& alive, const IndepSetVisitor& visit);
inline void for_each_independent_set(const Graph& g, const IndepSetVisitor& visit) {
    for_each_independent_set(g, g.all_vertices(), visit);
}

// Visit only the independent sets whose minimum member equals `root` (used to
// partition the enumeration tree across workers; the empty set belongs to no
// root).
void for_each_independent_set_rooted(const Graph& g, const VSet& alive, int root,
                                     const IndepSetVisitor& visit);

// G box K2: two copies of g plus a perfect matching between them; vertex v of
// copy s maps to index 2v+s.
Graph box_product_with_k2(const Graph& g);

// Neighbourhood of a vertex set: union of adj rows over members.
VSet neighbourhood(const Graph& g, const VSet& members);

}  // namespace paving
