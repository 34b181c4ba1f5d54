#ifndef CIST_TREES_HPP
#define CIST_TREES_HPP

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "cist/partition.hpp"

namespace cist {

using EdgeSet = std::vector<Edge>;  // sorted, normalized

struct TreePair {
    EdgeSet t1;
    EdgeSet t2;
};

namespace detail {

inline EdgeSet normalize_edges(EdgeSet es) {
    for (auto& e : es) e = make_edge(e.first, e.second);
    std::sort(es.begin(), es.end());
    return es;
}

struct TreeView {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit TreeView(int n_, const EdgeSet& es) : n(n_), adj(static_cast<size_t>(n_)) {
        for (auto [u, v] : es) {
            adj[static_cast<size_t>(u)].push_back(v);
            adj[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& l : adj) std::sort(l.begin(), l.end());
    }

    int degree(int v) const { return static_cast<int>(adj[static_cast<size_t>(v)].size()); }

    // Unique tree path from u to v as a vertex sequence.
    std::vector<int> path(int u, int v) const {
        std::vector<int> parent(static_cast<size_t>(n), -2);
        std::queue<int> q;
        parent[static_cast<size_t>(u)] = -1;
        q.push(u);
        while (!q.empty() && parent[static_cast<size_t>(v)] == -2) {
            int w = q.front();
            q.pop();
            for (int z : adj[static_cast<size_t>(w)])
                if (parent[static_cast<size_t>(z)] == -2) {
                    parent[static_cast<size_t>(z)] = w;
                    q.push(z);
                }
        }
        std::vector<int> p;
        for (int w = v; w != -1; w = parent[static_cast<size_t>(w)]) p.push_back(w);
        std::reverse(p.begin(), p.end());
        return p;
    }
};

inline void require_spanning_tree(const Graph& g, const EdgeSet& es, const char* which) {
    const int n = g.vertex_count();
    if (static_cast<int>(es.size()) != n - 1)
        throw NotASpanningTree(std::string(which) + ": expected " + std::to_string(n - 1) +
                               " edges, got " + std::to_string(es.size()));
    std::set<Edge> dedup;
    for (auto [u, v] : es) {
        if (!g.has_edge(u, v))
            throw NotASpanningTree(std::string(which) + ": edge " + std::to_string(u) + "-" +
                                   std::to_string(v) + " not in the graph");
        if (!dedup.insert(make_edge(u, v)).second)
            throw NotASpanningTree(std::string(which) + ": repeated edge");
    }
    TreeView t(n, es);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (int z : t.adj[static_cast<size_t>(w)])
            if (!seen[static_cast<size_t>(z)]) {
                seen[static_cast<size_t>(z)] = true;
                ++reached;
                stack.push_back(z);
            }
    }
    if (reached != n)
        throw NotASpanningTree(std::string(which) + ": does not span all vertices");
    // n-1 edges + connected => acyclic
}

}  // namespace detail

// Extract two spanning trees from a valid 2-CIST-partition.
//
// S1/S2 are BFS trees of G[v1]/G[v2] rooted at each side's minimum vertex.
// Every component of the cross subgraph contains a cycle; its edges are
// oriented so each vertex gets exactly one out-edge: a DFS-found cycle is
// oriented cyclically along discovery order, every off-cycle vertex points
// along its BFS parent edge toward the cycle.  t1 takes each v2 vertex's
// out-edge (so v2 vertices are t1 leaves), t2 symmetrically.
inline TreePair partition_to_trees(const Graph& g, const CistPartition& p) {
    Verdict v = is_cist_partition(g, p);
    if (!v.ok) throw NotACistPartition("partition fails validity check: " + v.reason);

    const int n = g.vertex_count();
    TreePair out;

    auto side_tree = [&](const VertexSet& side, EdgeSet& acc) {
        if (side.size() <= 1) return;
        std::vector<bool> in(static_cast<size_t>(n), false);
        for (int w : side) in[static_cast<size_t>(w)] = true;
        std::vector<bool> seen(static_cast<size_t>(n), false);
        std::queue<int> q;
        seen[static_cast<size_t>(side.min())] = true;
        q.push(side.min());
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            for (int z : g.neighbors(w)) {
                if (!in[static_cast<size_t>(z)] || seen[static_cast<size_t>(z)]) continue;
                seen[static_cast<size_t>(z)] = true;
                acc.push_back(make_edge(w, z));
                q.push(z);
            }
        }
    };
    side_tree(p.v1, out.t1);
    side_tree(p.v2, out.t2);

    // Cross adjacency.
    BipartiteView b = bipartite_between(g, p.v1, p.v2);
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [u, w] : b.edges) {
        adj[static_cast<size_t>(u)].push_back(w);
        adj[static_cast<size_t>(w)].push_back(u);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());

    std::vector<int> out_to(static_cast<size_t>(n), -1);  // head of each vertex's out-edge
    std::vector<bool> done(static_cast<size_t>(n), false);

    for (int s = 0; s < n; ++s) {
        if (done[static_cast<size_t>(s)]) continue;

        // Collect the component by DFS from its minimum vertex, keeping the
        // active path so the first back edge closes a cycle.
        std::vector<int> state(static_cast<size_t>(n), 0);  // 0 new, 1 on path, 2 finished
        std::vector<int> parent(static_cast<size_t>(n), -1);
        std::vector<int> comp;
        std::vector<int> cycle;
        std::vector<std::pair<int, size_t>> stack{{s, 0}};
        state[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            auto& [w, idx] = stack.back();
            if (idx >= adj[static_cast<size_t>(w)].size()) {
                state[static_cast<size_t>(w)] = 2;
                comp.push_back(w);
                stack.pop_back();
                continue;
            }
            int z = adj[static_cast<size_t>(w)][idx++];
            if (z == parent[static_cast<size_t>(w)]) continue;
            if (state[static_cast<size_t>(z)] == 0) {
                state[static_cast<size_t>(z)] = 1;
                parent[static_cast<size_t>(z)] = w;
                stack.emplace_back(z, 0);
            } else if (state[static_cast<size_t>(z)] == 1 && cycle.empty()) {
                // Back edge w -> z: cycle is z .. w along the DFS path.
                for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                    cycle.push_back(it->first);
                    if (it->first == z) break;
                }
                std::reverse(cycle.begin(), cycle.end());  // discovery order z .. w
            }
        }
        detail::internal_check(!cycle.empty(), "cross component has a cycle",
                               "component of vertex " + std::to_string(s));

        // Orient the cycle along discovery order.
        std::vector<bool> on_cycle(static_cast<size_t>(n), false);
        for (size_t i = 0; i < cycle.size(); ++i) {
            on_cycle[static_cast<size_t>(cycle[i])] = true;
            out_to[static_cast<size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        }
        // Off-cycle vertices point along a BFS arborescence toward the cycle.
        std::queue<int> q;
        std::vector<bool> reached(static_cast<size_t>(n), false);
        for (int c : cycle) {
            reached[static_cast<size_t>(c)] = true;
            q.push(c);
        }
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            for (int z : adj[static_cast<size_t>(w)]) {
                if (reached[static_cast<size_t>(z)]) continue;
                reached[static_cast<size_t>(z)] = true;
                out_to[static_cast<size_t>(z)] = w;
                q.push(z);
            }
        }
        for (int w : comp) {
            done[static_cast<size_t>(w)] = true;
            detail::internal_check(out_to[static_cast<size_t>(w)] != -1,
                                   "orientation covers the component",
                                   "vertex " + std::to_string(w));
        }
    }

    for (int w : p.v2) out.t1.push_back(make_edge(w, out_to[static_cast<size_t>(w)]));
    for (int w : p.v1) out.t2.push_back(make_edge(w, out_to[static_cast<size_t>(w)]));

    out.t1 = detail::normalize_edges(std::move(out.t1));
    out.t2 = detail::normalize_edges(std::move(out.t2));
    return out;
}

// Definition-level CIST check: for every vertex pair, the two tree paths
// share no edge and no internal vertex.  Cubic, but it is the trusted oracle;
// the leaf-rule check below is the fast path.
inline Verdict verify_cists_definitional(const Graph& g, const TreePair& tp) {
    detail::require_spanning_tree(g, tp.t1, "t1");
    detail::require_spanning_tree(g, tp.t2, "t2");
    const int n = g.vertex_count();
    detail::TreeView a(n, tp.t1), b(n, tp.t2);

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto pa = a.path(u, v);
            auto pb = b.path(u, v);
            std::set<Edge> ea;
            for (size_t i = 0; i + 1 < pa.size(); ++i)
                ea.insert(make_edge(pa[i], pa[i + 1]));
            for (size_t i = 0; i + 1 < pb.size(); ++i)
                if (ea.count(make_edge(pb[i], pb[i + 1]))) {
                    Verdict bad;
                    bad.ok = false;
                    bad.reason = "paths_share_edge";
                    bad.pair = {u, v};
                    bad.edge = make_edge(pb[i], pb[i + 1]);
                    return bad;
                }
            std::set<int> ia(pa.begin() + 1, pa.end() - 1);
            for (size_t i = 1; i + 1 < pb.size(); ++i)
                if (ia.count(pb[i])) {
                    Verdict bad;
                    bad.ok = false;
                    bad.reason = "paths_share_internal_vertex";
                    bad.pair = {u, v};
                    bad.vertex = pb[i];
                    return bad;
                }
        }
    return Verdict::pass();
}

// Cross-check route: edge-disjoint trees whose internal-vertex sets (tree
// degree >= 2) are disjoint.  Validated against the definitional check
// rather than trusted.
inline Verdict verify_cists_leafrule(const Graph& g, const TreePair& tp) {
    detail::require_spanning_tree(g, tp.t1, "t1");
    detail::require_spanning_tree(g, tp.t2, "t2");
    std::set<Edge> e1(tp.t1.begin(), tp.t1.end());
    for (auto e : tp.t2)
        if (e1.count(e)) {
            Verdict bad;
            bad.ok = false;
            bad.reason = "shared_edge";
            bad.edge = e;
            return bad;
        }
    const int n = g.vertex_count();
    detail::TreeView a(n, tp.t1), b(n, tp.t2);
    for (int v = 0; v < n; ++v)
        if (a.degree(v) >= 2 && b.degree(v) >= 2) {
            Verdict bad;
            bad.ok = false;
            bad.reason = "shared_internal_vertex";
            bad.vertex = v;
            return bad;
        }
    return Verdict::pass();
}

}  // namespace cist

#endif
