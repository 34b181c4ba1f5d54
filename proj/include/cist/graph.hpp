#ifndef CIST_GRAPH_HPP
#define CIST_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cist/errors.hpp"

namespace cist {

using Edge = std::pair<int, int>;  // normalized u < v

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// A set of vertex ids, kept sorted and deduplicated.  Value semantics; the
// set algebra mirrors how the construction manipulates vertex roles.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> xs) : v_(std::move(xs)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }
    VertexSet(std::initializer_list<int> xs) : VertexSet(std::vector<int>(xs)) {}

    bool contains(int x) const {
        return std::binary_search(v_.begin(), v_.end(), x);
    }
    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    int min() const { return v_.front(); }

    void insert(int x) {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it == v_.end() || *it != x) v_.insert(it, x);
    }
    void erase(int x) {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it != v_.end() && *it == x) v_.erase(it);
    }

    VertexSet intersect(const VertexSet& o) const {
        std::vector<int> out;
        std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                              std::back_inserter(out));
        return from_sorted(std::move(out));
    }
    VertexSet unite(const VertexSet& o) const {
        std::vector<int> out;
        std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                       std::back_inserter(out));
        return from_sorted(std::move(out));
    }
    VertexSet subtract(const VertexSet& o) const {
        std::vector<int> out;
        std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                            std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    const std::vector<int>& items() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool operator==(const VertexSet& o) const { return v_ == o.v_; }
    bool operator!=(const VertexSet& o) const { return v_ != o.v_; }

    static VertexSet from_sorted(std::vector<int> xs) {
        VertexSet s;
        s.v_ = std::move(xs);
        return s;
    }
    static VertexSet range(int n) {
        std::vector<int> xs(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) xs[static_cast<size_t>(i)] = i;
        return from_sorted(std::move(xs));
    }

private:
    std::vector<int> v_;
};

// Immutable undirected simple graph on vertices 0..n-1.  Adjacency lists are
// sorted; derived views are materialized copies, never aliases.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        if (n < 0) throw InvalidInput("vertex count must be nonnegative");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<size_t>(n), {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw InvalidVertex("edge endpoint out of range");
            if (u == v) throw InvalidInput("self-loop");
            g.adj_[static_cast<size_t>(u)].push_back(v);
            g.adj_[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& lst : g.adj_) {
            std::sort(lst.begin(), lst.end());
            if (std::adjacent_find(lst.begin(), lst.end()) != lst.end())
                throw InvalidInput("duplicate edge");
        }
        g.m_ = edges.size();
        return g;
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int min_degree() const {
        int d = n_ > 0 ? degree(0) : 0;
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& lst = adj_[static_cast<size_t>(u)];
        return std::binary_search(lst.begin(), lst.end(), v);
    }

    bool is_complete() const {
        return m_ == static_cast<std::size_t>(n_) * (static_cast<std::size_t>(n_) - 1) / 2;
    }

    VertexSet neighbor_set(int v) const { return VertexSet(neighbors(v)); }

    VertexSet common_neighbors(int u, int v) const {
        const auto& a = neighbors(u);
        const auto& b = neighbors(v);
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(out));
        return VertexSet::from_sorted(std::move(out));
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw InvalidVertex("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Bipartite subgraph between two disjoint vertex sets: all of left and right
// belong to the view, so a vertex with no cross edge forms an isolated
// (hence tree) component.
struct BipartiteView {
    VertexSet left;
    VertexSet right;
    std::vector<Edge> edges;  // (u, v) with u in left, v in right
};

inline BipartiteView bipartite_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (!a.intersect(b).empty())
        throw InvalidPartition("bipartite sides overlap");
    BipartiteView view;
    view.left = a;
    view.right = b;
    for (int u : a)
        for (int v : g.neighbors(u))
            if (b.contains(v)) view.edges.emplace_back(u, v);
    return view;
}

// Shortest hop count; nullopt when u and v lie in different components.
inline std::optional<int> distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return 0;
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(u)] = 0;
    q.push(u);
    while (!q.empty()) {
        int w = q.front();
        q.pop();
        for (int z : g.neighbors(w)) {
            if (dist[static_cast<size_t>(z)] != -1) continue;
            dist[static_cast<size_t>(z)] = dist[static_cast<size_t>(w)] + 1;
            if (z == v) return dist[static_cast<size_t>(z)];
            q.push(z);
        }
    }
    return std::nullopt;
}

// Connected components of the induced subgraph G[within], each sorted,
// ordered by their minimum vertex.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
    std::vector<bool> in(static_cast<size_t>(g.vertex_count()), false);
    for (int v : within) {
        g.check_vertex(v);
        in[static_cast<size_t>(v)] = true;
    }
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    std::vector<VertexSet> comps;
    for (int s : within) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[static_cast<size_t>(s)] = true;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            comp.push_back(w);
            for (int z : g.neighbors(w)) {
                if (!in[static_cast<size_t>(z)] || seen[static_cast<size_t>(z)]) continue;
                seen[static_cast<size_t>(z)] = true;
                stack.push_back(z);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(VertexSet::from_sorted(std::move(comp)));
    }
    return comps;
}

inline bool is_connected_within(const Graph& g, const VertexSet& within) {
    if (within.empty()) return true;
    return components(g, within).size() == 1;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return is_connected_within(g, VertexSet::range(g.vertex_count()));
}

// ---------------------------------------------------------------------------
// Edge-list text format.
//
// Lines of "u v" token pairs, an optional leading "p <n>" header, blank lines
// and '#' comments ignored.  Without a header, labels are remapped densely to
// 0..n-1 in increasing label order; with a header, labels must already lie in
// [0, n) and are kept as-is (which permits isolated vertices).

struct ParseResult {
    Graph graph;
    std::vector<long long> labels;  // labels[id] = original label
    bool had_header = false;

    long long label_of(int id) const { return labels[static_cast<size_t>(id)]; }
    std::optional<int> id_of(long long label) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        if (it == labels.end() || *it != label) return std::nullopt;
        return static_cast<int>(it - labels.begin());
    }
};

namespace detail {

inline bool parse_ll(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (c < '0' || c > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace detail

inline ParseResult parse_edge_list(const std::string& text) {
    std::vector<std::pair<long long, long long>> raw;
    bool had_header = false;
    long long header_n = -1;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank
        if (first_content && a == "p") {
            if (!(ls >> b) || (ls >> extra) || !detail::parse_ll(b, header_n) || header_n < 0)
                throw ParseError(ParseError::Kind::Syntax,
                                 "line " + std::to_string(lineno) + ": malformed header");
            had_header = true;
            first_content = false;
            continue;
        }
        first_content = false;
        long long u, v;
        if (!(ls >> b) || (ls >> extra) || !detail::parse_ll(a, u) || !detail::parse_ll(b, v))
            throw ParseError(ParseError::Kind::Syntax,
                             "line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u == v)
            throw ParseError(ParseError::Kind::SelfLoop,
                             "line " + std::to_string(lineno) + ": self-loop at " + a);
        raw.emplace_back(u, v);
    }

    ParseResult res;
    res.had_header = had_header;
    if (had_header) {
        res.labels.resize(static_cast<size_t>(header_n));
        for (size_t i = 0; i < res.labels.size(); ++i) res.labels[i] = static_cast<long long>(i);
    } else {
        for (auto [u, v] : raw) {
            res.labels.push_back(u);
            res.labels.push_back(v);
        }
        std::sort(res.labels.begin(), res.labels.end());
        res.labels.erase(std::unique(res.labels.begin(), res.labels.end()), res.labels.end());
    }

    const int n = static_cast<int>(res.labels.size());
    std::vector<Edge> edges;
    std::map<Edge, int> seen_at;
    int edgeno = 0;
    for (auto [lu, lv] : raw) {
        ++edgeno;
        auto iu = res.id_of(lu);
        auto iv = res.id_of(lv);
        if (!iu || !iv)
            throw ParseError(ParseError::Kind::Syntax,
                             "label " + std::to_string(!iu ? lu : lv) + " outside header range");
        Edge e = make_edge(*iu, *iv);
        if (!seen_at.emplace(e, edgeno).second)
            throw ParseError(ParseError::Kind::DuplicateEdge,
                             "duplicate edge " + std::to_string(lu) + " " + std::to_string(lv));
        edges.push_back(e);
    }
    res.graph = Graph::from_edges(n, edges);
    return res;
}

// Canonical form: sorted "u v" lines with u < v, newline-terminated.
inline std::string write_edge_list(const Graph& g) {
    auto es = g.edges();
    std::sort(es.begin(), es.end());
    std::string out;
    for (auto [u, v] : es) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace cist

#endif
