#include <catch2/catch_amalgamated.hpp>

#include "cist/generators.hpp"
#include "cist/partition.hpp"
#include "test_util.hpp"

using namespace cist;

namespace {

Graph p4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}); }

Graph k33() {
    std::vector<Edge> es;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) es.emplace_back(u, v);
    return Graph::from_edges(6, es);
}

// Independent cycle test: DFS over a component of the cross subgraph looking
// for a back edge.
bool component_has_cycle_dfs(const std::vector<std::vector<int>>& adj, int start,
                             std::vector<bool>& seen) {
    std::vector<std::pair<int, int>> stack{{start, -1}};
    seen[static_cast<size_t>(start)] = true;
    std::vector<int> parent(adj.size(), -1);
    bool cycle = false;
    std::vector<int> order{start};
    while (!stack.empty()) {
        auto [w, par] = stack.back();
        stack.pop_back();
        for (int z : adj[static_cast<size_t>(w)]) {
            if (!seen[static_cast<size_t>(z)]) {
                seen[static_cast<size_t>(z)] = true;
                parent[static_cast<size_t>(z)] = w;
                stack.emplace_back(z, w);
                order.push_back(z);
            }
        }
    }
    // Count edges inside the component instead of tracking back edges from the
    // iterative traversal; a connected component has a cycle iff e >= v.
    std::size_t deg = 0;
    for (int w : order) deg += adj[static_cast<size_t>(w)].size();
    cycle = deg / 2 >= order.size();
    return cycle;
}

}  // namespace

TEST_CASE("is_cist_partition on complete graph split") {
    Graph k7 = complete_graph(7);
    CistPartition p{VertexSet{0, 1, 2}, VertexSet{3, 4, 5, 6}};
    REQUIRE(is_cist_partition(k7, p).ok);
}

TEST_CASE("is_cist_partition rejects the path partition with a tree component") {
    CistPartition p{VertexSet{0, 1}, VertexSet{2, 3}};
    auto v = is_cist_partition(p4(), p);
    REQUIRE_FALSE(v.ok);
    REQUIRE(v.reason == "tree_component");
    REQUIRE_FALSE(v.component.empty());
}

TEST_CASE("is_cist_partition rejects every bipartition of K33") {
    Graph g = k33();
    for (unsigned mask = 1; mask < 32; ++mask) {
        std::vector<int> v1{0}, v2;
        for (int v = 1; v < 6; ++v)
            ((mask >> (v - 1)) & 1 ? v2 : v1).push_back(v);
        CistPartition p{VertexSet(v1), VertexSet(v2)};
        REQUIRE_FALSE(is_cist_partition(g, p).ok);
    }
}

TEST_CASE("is_cist_partition flags disconnected sides") {
    Graph g = p4();
    auto v = is_cist_partition(g, CistPartition{VertexSet{0, 2}, VertexSet{1, 3}});
    REQUIRE_FALSE(v.ok);
    REQUIRE(v.reason == "v1_disconnected");
}

TEST_CASE("malformed partitions are errors, not verdicts") {
    Graph g = p4();
    REQUIRE_THROWS_AS(is_cist_partition(g, CistPartition{VertexSet{0, 1}, VertexSet{1, 2, 3}}),
                      InvalidPartition);
    REQUIRE_THROWS_AS(is_cist_partition(g, CistPartition{VertexSet{0, 1}, VertexSet{2}}),
                      InvalidPartition);
    REQUIRE_THROWS_AS(is_cist_partition(g, CistPartition{VertexSet{}, VertexSet{0, 1, 2, 3}}),
                      InvalidPartition);
}

TEST_CASE("a vertex without cross edges invalidates the partition") {
    // K4 plus a pendant vertex 4 on 0.  The K4 cross edges form a cycle, so
    // the only defect is vertex 4, which has no cross edge at all and is an
    // isolated (tree) component of the cross subgraph.
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    auto v = is_cist_partition(g, CistPartition{VertexSet{0, 1, 4}, VertexSet{2, 3}});
    REQUIRE_FALSE(v.ok);
    REQUIRE(v.reason == "tree_component");
    REQUIRE(v.component == std::vector<int>{4});
}

TEST_CASE("tree-component rule matches an independent DFS cycle check") {
    testutil::Rng rng(4242);
    for (int iter = 0; iter < 500; ++iter) {
        int n = rng.range(4, 10);
        Graph g = testutil::random_graph(n, 0.2 + 0.6 * rng.unit(), rng);
        std::vector<int> v1, v2;
        for (int v = 0; v < n; ++v) (rng.chance(0.5) ? v1 : v2).push_back(v);
        if (v1.empty() || v2.empty()) continue;
        VertexSet a(v1), b(v2);

        auto view = bipartite_between(g, a, b);
        std::vector<std::vector<int>> adj(static_cast<size_t>(n));
        for (auto [u, w] : view.edges) {
            adj[static_cast<size_t>(u)].push_back(w);
            adj[static_cast<size_t>(w)].push_back(u);
        }
        bool all_cyclic_dfs = true;
        std::vector<bool> seen(static_cast<size_t>(n), false);
        for (int s = 0; s < n; ++s) {
            if (seen[static_cast<size_t>(s)]) continue;
            if (!component_has_cycle_dfs(adj, s, seen)) all_cyclic_dfs = false;
        }

        auto verdict = is_cist_partition(g, CistPartition{a, b});
        bool sides_ok = components(g, a).size() == 1 && components(g, b).size() == 1;
        if (sides_ok)
            REQUIRE(verdict.ok == all_cyclic_dfs);
        else
            REQUIRE_FALSE(verdict.ok);
    }
}
