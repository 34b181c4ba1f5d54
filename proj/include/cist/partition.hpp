#ifndef CIST_PARTITION_HPP
#define CIST_PARTITION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cist/graph.hpp"

namespace cist {

// Ordered bipartition (V1, V2) of the vertex set; candidate 2-CIST-partition.
struct CistPartition {
    VertexSet v1;
    VertexSet v2;
};

// Outcome of a check, with a machine-checkable counterexample on failure.
struct Verdict {
    bool ok = true;
    std::string reason;                        // empty iff ok
    std::optional<std::pair<int, int>> pair;   // vertex pair (u,v) for path conflicts
    std::optional<Edge> edge;                  // shared edge witness
    std::optional<int> vertex;                 // shared internal vertex witness
    std::vector<int> component;                // offending component / disconnected side

    static Verdict pass() { return {}; }
};

inline void check_partition_shape(const Graph& g, const CistPartition& p) {
    if (p.v1.empty() || p.v2.empty())
        throw InvalidPartition("both sides must be nonempty");
    if (!p.v1.intersect(p.v2).empty())
        throw InvalidPartition("sides overlap");
    if (p.v1.unite(p.v2) != VertexSet::range(g.vertex_count()))
        throw InvalidPartition("sides do not cover the vertex set");
}

// Definition-level validity of a 2-CIST-partition: both sides induce
// connected subgraphs and no component of the cross bipartite subgraph is a
// tree.  Every vertex belongs to the cross subgraph, so a vertex with no
// cross edge is an isolated (tree) component and invalidates the partition.
inline Verdict is_cist_partition(const Graph& g, const CistPartition& p) {
    check_partition_shape(g, p);

    for (int side = 1; side <= 2; ++side) {
        const VertexSet& s = side == 1 ? p.v1 : p.v2;
        auto comps = components(g, s);
        if (comps.size() > 1) {
            Verdict v;
            v.ok = false;
            v.reason = side == 1 ? "v1_disconnected" : "v2_disconnected";
            v.component = comps.front().items();
            return v;
        }
    }

    BipartiteView b = bipartite_between(g, p.v1, p.v2);
    // Component scan over left+right with the cross edges only.
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
    for (auto [u, v] : b.edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[static_cast<size_t>(s)] = true;
        std::size_t deg_sum = 0;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            comp.push_back(w);
            deg_sum += adj[static_cast<size_t>(w)].size();
            for (int z : adj[static_cast<size_t>(w)]) {
                if (seen[static_cast<size_t>(z)]) continue;
                seen[static_cast<size_t>(z)] = true;
                stack.push_back(z);
            }
        }
        std::size_t edges_in_comp = deg_sum / 2;
        if (edges_in_comp < comp.size()) {  // acyclic component (tree)
            Verdict v;
            v.ok = false;
            v.reason = "tree_component";
            std::sort(comp.begin(), comp.end());
            v.component = std::move(comp);
            return v;
        }
    }
    return Verdict::pass();
}

}  // namespace cist

#endif
