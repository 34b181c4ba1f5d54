#ifndef CIST_CONDITION_HPP
#define CIST_CONDITION_HPP

#include <limits>
#include <optional>
#include <vector>

#include "cist/graph.hpp"

namespace cist {

// Degree-sum parameters.  nullopt encodes +infinity (no qualifying pair),
// which is the convention for complete graphs.

// Minimum d(u)+d(v) over unordered pairs at distance exactly 2.  A pair is at
// distance 2 iff it is nonadjacent and has a common neighbor, so no BFS is
// needed here; tests cross-check against the BFS-distance route.
inline std::optional<int> mu2(const Graph& g) {
    std::optional<int> best;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) continue;
            if (g.common_neighbors(u, v).empty()) continue;
            int s = g.degree(u) + g.degree(v);
            if (!best || s < *best) best = s;
        }
    return best;
}

// Minimum d(u)+d(v) over nonadjacent unordered pairs.
inline std::optional<int> sigma2(const Graph& g) {
    std::optional<int> best;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) continue;
            int s = g.degree(u) + g.degree(v);
            if (!best || s < *best) best = s;
        }
    return best;
}

namespace detail {

// Dinic max-flow on the vertex-split digraph; capacities are 1 on the
// in->out arc of every vertex except s and t, so the max flow equals the
// minimum number of vertices separating s from t (s, t nonadjacent).
class VertexCutFlow {
public:
    explicit VertexCutFlow(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    int min_cut(int s, int t) {
        const int N = 2 * n_;
        head_.assign(static_cast<size_t>(N), -1);
        to_.clear();
        cap_.clear();
        next_.clear();
        auto add = [&](int a, int b, int c) {
            to_.push_back(b);
            cap_.push_back(c);
            next_.push_back(head_[static_cast<size_t>(a)]);
            head_[static_cast<size_t>(a)] = static_cast<int>(to_.size()) - 1;
        };
        auto arc = [&](int a, int b, int c) {
            add(a, b, c);
            add(b, a, 0);
        };
        const int INF = std::numeric_limits<int>::max() / 2;
        for (int v = 0; v < n_; ++v)
            arc(in(v), out(v), (v == s || v == t) ? INF : 1);
        for (int u = 0; u < n_; ++u)
            for (int v : g_.neighbors(u)) {
                arc(out(u), in(v), INF);
            }

        int flow = 0;
        std::vector<int> level(static_cast<size_t>(N));
        std::vector<int> iter(static_cast<size_t>(N));
        while (bfs(out(s), in(t), level)) {
            iter = head_;
            int f;
            while ((f = dfs(out(s), in(t), INF, level, iter)) > 0) flow += f;
            if (flow > n_) break;  // cut cannot exceed n
        }
        return flow;
    }

private:
    int in(int v) const { return 2 * v; }
    int out(int v) const { return 2 * v + 1; }

    bool bfs(int s, int t, std::vector<int>& level) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[static_cast<size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[static_cast<size_t>(v)]; e != -1; e = next_[static_cast<size_t>(e)]) {
                int w = to_[static_cast<size_t>(e)];
                if (cap_[static_cast<size_t>(e)] > 0 && level[static_cast<size_t>(w)] < 0) {
                    level[static_cast<size_t>(w)] = level[static_cast<size_t>(v)] + 1;
                    q.push(w);
                }
            }
        }
        return level[static_cast<size_t>(t)] >= 0;
    }

    int dfs(int v, int t, int f, std::vector<int>& level, std::vector<int>& iter) {
        if (v == t) return f;
        for (int& e = iter[static_cast<size_t>(v)]; e != -1; e = next_[static_cast<size_t>(e)]) {
            int w = to_[static_cast<size_t>(e)];
            if (cap_[static_cast<size_t>(e)] <= 0 || level[static_cast<size_t>(w)] != level[static_cast<size_t>(v)] + 1)
                continue;
            int d = dfs(w, t, std::min(f, cap_[static_cast<size_t>(e)]), level, iter);
            if (d > 0) {
                cap_[static_cast<size_t>(e)] -= d;
                cap_[static_cast<size_t>(e ^ 1)] += d;
                return d;
            }
        }
        return 0;
    }

    const Graph& g_;
    int n_;
    std::vector<int> head_, to_, cap_, next_;
};

}  // namespace detail

// Exact vertex connectivity: n-1 for complete graphs, 0 when disconnected,
// otherwise the minimum s-t vertex cut over all nonadjacent pairs.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw InvalidInput("vertex connectivity needs at least 2 vertices");
    if (g.is_complete()) return n - 1;
    if (!is_connected(g)) return 0;
    detail::VertexCutFlow flow(g);
    int best = n - 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            best = std::min(best, flow.min_cut(u, v));
            if (best == 0) return 0;
        }
    return best;
}

// Does removing `cut` disconnect the rest?  The construction needs this
// predicate directly, not a recomputed connectivity number.
inline bool is_vertex_cut(const Graph& g, const VertexSet& cut) {
    VertexSet rest = VertexSet::range(g.vertex_count()).subtract(cut);
    if (rest.size() <= 1) return false;
    return components(g, rest).size() >= 2;
}

// Lexicographically least pair {u, v} whose removal disconnects the graph.
inline std::optional<std::pair<int, int>> find_two_cut(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (is_vertex_cut(g, VertexSet{u, v})) return std::make_pair(u, v);
    return std::nullopt;
}

struct ConditionReport {
    int n = 0;
    std::size_t edges = 0;
    int delta = 0;
    bool connected = false;
    int kappa = 0;
    std::optional<int> sigma2;  // nullopt = +infinity
    std::optional<int> mu2;     // nullopt = +infinity
    bool fan_ok = false;        // connected && n >= 7 && mu2 >= n
};

inline ConditionReport condition_report(const Graph& g) {
    ConditionReport r;
    r.n = g.vertex_count();
    r.edges = g.edge_count();
    r.delta = g.min_degree();
    r.connected = is_connected(g);
    r.kappa = r.n >= 2 ? vertex_connectivity(g) : 0;
    r.sigma2 = sigma2(g);
    r.mu2 = mu2(g);
    r.fan_ok = r.connected && r.n >= 7 && (!r.mu2 || *r.mu2 >= r.n);
    return r;
}

}  // namespace cist

#endif
