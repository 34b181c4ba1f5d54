#ifndef CIST_CONSTRUCT_HPP
#define CIST_CONSTRUCT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cist/condition.hpp"
#include "cist/partition.hpp"

namespace cist {

// One label per construction branch; serialized into certificates.
enum class Branch {
    Complete,
    Kappa2_BigSide,
    Kappa2_Singleton_uvEdge,
    Kappa2_Singleton_NoUvEdge,
    Case1_Sub11,
    Case1_Sub12,
    Case1_Sub13,
    Case2_Claim34_MDisjointCut,
    Case2_Claim34_MMeetsCut,
    Case2_DEmpty,
    Case2_Sub21_DGe2,
    Case2_Sub21_DEq1,
    Case2_Sub221,
    Case2_Sub222_Direct,
    Case2_Sub222_Claim34,
};

inline const std::vector<std::pair<Branch, const char*>>& branch_names() {
    static const std::vector<std::pair<Branch, const char*>> names = {
        {Branch::Complete, "Complete"},
        {Branch::Kappa2_BigSide, "Kappa2_BigSide"},
        {Branch::Kappa2_Singleton_uvEdge, "Kappa2_Singleton_uvEdge"},
        {Branch::Kappa2_Singleton_NoUvEdge, "Kappa2_Singleton_NoUvEdge"},
        {Branch::Case1_Sub11, "Case1_Sub11"},
        {Branch::Case1_Sub12, "Case1_Sub12"},
        {Branch::Case1_Sub13, "Case1_Sub13"},
        {Branch::Case2_Claim34_MDisjointCut, "Case2_Claim34_MDisjointCut"},
        {Branch::Case2_Claim34_MMeetsCut, "Case2_Claim34_MMeetsCut"},
        {Branch::Case2_DEmpty, "Case2_DEmpty"},
        {Branch::Case2_Sub21_DGe2, "Case2_Sub21_DGe2"},
        {Branch::Case2_Sub21_DEq1, "Case2_Sub21_DEq1"},
        {Branch::Case2_Sub221, "Case2_Sub221"},
        {Branch::Case2_Sub222_Direct, "Case2_Sub222_Direct"},
        {Branch::Case2_Sub222_Claim34, "Case2_Sub222_Claim34"},
    };
    return names;
}

inline std::string to_string(Branch b) {
    for (auto& [k, v] : branch_names())
        if (k == b) return v;
    return "?";
}

inline std::optional<Branch> branch_from_string(const std::string& s) {
    for (auto& [k, v] : branch_names())
        if (s == v) return k;
    return std::nullopt;
}

inline std::vector<std::string> all_branch_labels() {
    std::vector<std::string> out;
    for (auto& [k, v] : branch_names()) out.emplace_back(v);
    return out;
}

// Decomposition around a chosen distance-2 pair (x, y):
//   M = common neighbors, X/Y = private neighbors of x/y, D = the rest.
struct FanContext {
    int x = -1;
    int y = -1;
    VertexSet M, X, Y, D;

    int m() const { return M.size(); }
    int t() const { return X.size(); }
    int s() const { return Y.size(); }
    int d() const { return D.size(); }
};

using WitnessValue = std::variant<int, std::vector<int>, std::vector<Edge>>;

struct ConstructionTrace {
    Branch branch = Branch::Complete;
    std::optional<FanContext> context;
    std::map<std::string, WitnessValue> witnesses;
    std::vector<std::string> checked;  // runtime facts that were verified
};

struct Construction {
    CistPartition partition;
    ConstructionTrace trace;
};

// Minimal cover of D inside M ∪ Y, with one distinct representative in D per
// cover vertex (the witness that the cover satisfies the Hall condition).
struct CoverSet {
    VertexSet s_set;
    std::vector<Edge> representatives;  // (cover vertex, matched D vertex)
};

namespace detail {

class ClaimLog {
public:
    explicit ClaimLog(std::vector<std::string>& sink) : sink_(sink) {}

    void require(bool cond, const char* claim, const std::string& detail) {
        internal_check(cond, claim, detail);
        note(claim);
    }
    void note(const char* claim) {
        for (auto& c : sink_)
            if (c == claim) return;
        sink_.emplace_back(claim);
    }

private:
    std::vector<std::string>& sink_;
};

inline std::vector<int> vec(const VertexSet& s) { return s.items(); }

}  // namespace detail

// Distance-2 pair minimizing |N(x) ∩ N(y)|, then maximizing d(x)+d(y), then
// lexicographically least; oriented so d(x) <= d(y).
inline std::pair<int, int> choose_xy(const Graph& g) {
    if (g.is_complete()) throw NotApplicable("complete graph has no distance-2 pair");
    int best_c = -1, best_s = -1, bx = -1, by = -1;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) continue;
            int c = g.common_neighbors(u, v).size();
            if (c == 0) continue;
            int s = g.degree(u) + g.degree(v);
            if (bx == -1 || c < best_c || (c == best_c && s > best_s)) {
                best_c = c;
                best_s = s;
                bx = u;
                by = v;
            }
        }
    if (bx == -1) throw NotApplicable("no distance-2 pair");
    if (g.degree(bx) <= g.degree(by)) return {bx, by};
    return {by, bx};
}

inline FanContext make_fan_context(const Graph& g, int x, int y, detail::ClaimLog& log) {
    FanContext ctx;
    ctx.x = x;
    ctx.y = y;
    detail::internal_check(!g.has_edge(x, y) && x != y, "chosen pair at distance two",
                           "pair " + std::to_string(x) + "," + std::to_string(y));
    ctx.M = g.common_neighbors(x, y);
    detail::internal_check(!ctx.M.empty(), "chosen pair at distance two", "no common neighbor");
    ctx.X = g.neighbor_set(x).subtract(ctx.M);
    ctx.Y = g.neighbor_set(y).subtract(ctx.M);
    VertexSet used = VertexSet{x, y}.unite(ctx.M).unite(ctx.X).unite(ctx.Y);
    ctx.D = VertexSet::range(g.vertex_count()).subtract(used);

    log.require(ctx.m() >= 2, "distance2_common_neighbors_ge_2",
                "|M| = " + std::to_string(ctx.m()));
    if (ctx.m() == 2)
        log.require(ctx.D.empty(), "tight_pair_covers_rest",
                    "|M| = 2 but D nonempty");
    log.require(ctx.d() <= ctx.m() - 2, "outside_set_bound",
                "|D| = " + std::to_string(ctx.d()) + " > |M|-2");
    log.require(ctx.t() <= ctx.s(), "private_sides_ordered",
                "|X| > |Y| despite d(x) <= d(y)");
    return ctx;
}

// --- kappa = 2 -------------------------------------------------------------

inline Construction lemma3_construct(const Graph& g, std::pair<int, int> cut,
                                     std::vector<std::string>* checked = nullptr) {
    std::vector<std::string> local;
    detail::ClaimLog log(checked ? *checked : local);
    const auto [u, v] = cut;
    const VertexSet cutset{u, v};

    auto comps = components(g, VertexSet::range(g.vertex_count()).subtract(cutset));
    log.require(comps.size() == 2, "two_cut_splits_in_two",
                "removing the 2-cut left " + std::to_string(comps.size()) + " components");
    VertexSet g1 = comps[0], g2 = comps[1];
    if (g1.size() > g2.size()) std::swap(g1, g2);

    auto attached = [&](const VertexSet& side, int to) {
        for (int w : side)
            if (g.has_edge(w, to)) return true;
        return false;
    };
    log.require(attached(g1, u) && attached(g1, v) && attached(g2, u) && attached(g2, v),
                "cut_touches_both_sides", "a cut vertex has no neighbor in some side");

    // Structure forced on any cross pair at distance 2: common neighborhood is
    // exactly the cut, and each endpoint is adjacent to all of its own side.
    auto assert_partner_structure = [&](int w, const VertexSet& side, const char* claim) {
        VertexSet expect = side.subtract(VertexSet{w}).unite(cutset);
        log.require(g.neighbor_set(w) == expect, claim,
                    "vertex " + std::to_string(w) + " misses forced adjacencies");
    };

    Construction res;
    res.trace.witnesses["cut_u"] = u;
    res.trace.witnesses["cut_v"] = v;
    res.trace.witnesses["G1"] = detail::vec(g1);
    res.trace.witnesses["G2"] = detail::vec(g2);

    if (g1.size() >= 2) {
        int x1 = -1, y1 = -1;
        for (int w : g1) {
            for (int b : g2)
                if (!g.common_neighbors(w, b).empty()) {
                    x1 = w;
                    y1 = b;
                    break;
                }
            if (x1 != -1) break;
        }
        log.require(x1 != -1, "cross_distance2_pair_exists", "no cross pair at distance 2");
        log.require(g.common_neighbors(x1, y1) == cutset, "cross_pair_common_is_cut",
                    "common neighborhood differs from the cut");
        assert_partner_structure(x1, g1, "tight_pair_covers_rest");
        assert_partner_structure(y1, g2, "tight_pair_covers_rest");

        int x2 = -1, y2 = -1;
        for (int w : g1)
            if (w != x1 && (g.has_edge(w, u) || g.has_edge(w, v))) {
                x2 = w;
                break;
            }
        for (int b : g2)
            if (b != y1 && (g.has_edge(b, u) || g.has_edge(b, v))) {
                y2 = b;
                break;
            }
        log.require(x2 != -1 && y2 != -1, "second_attachment_exists",
                    "only one vertex of a side touches the cut");
        assert_partner_structure(x2, g1, "second_attachment_both");
        assert_partner_structure(y2, g2, "second_attachment_both");

        res.partition.v1 = VertexSet{u, y1}.unite(g1.subtract(VertexSet{x1}));
        res.partition.v2 = VertexSet{v, x1}.unite(g2.subtract(VertexSet{y1}));
        res.trace.branch = Branch::Kappa2_BigSide;
        res.trace.witnesses["x1"] = x1;
        res.trace.witnesses["x2"] = x2;
        res.trace.witnesses["y1"] = y1;
        res.trace.witnesses["y2"] = y2;
        return res;
    }

    // Singleton small side.
    int x1 = g1.min();
    log.require(g2.size() >= 4, "big_side_at_least_4",
                "|G2| = " + std::to_string(g2.size()));
    log.require(g.has_edge(x1, u) && g.has_edge(x1, v), "singleton_attached_to_cut",
                "singleton side not adjacent to both cut vertices");

    std::vector<int> partners;
    for (int b : g2)
        if (g.has_edge(b, u) || g.has_edge(b, v)) partners.push_back(b);
    log.require(partners.size() >= 2, "second_attachment_exists",
                "big side touches the cut in fewer than 2 vertices");
    int y1 = partners[0], y2 = partners[1];
    assert_partner_structure(y1, g2, "tight_pair_covers_rest");
    assert_partner_structure(y2, g2, "second_attachment_both");

    res.partition.v1 = VertexSet{u, x1, y1};
    res.partition.v2 = VertexSet{v}.unite(g2.subtract(VertexSet{y1}));
    res.trace.witnesses["x1"] = x1;
    res.trace.witnesses["y1"] = y1;
    res.trace.witnesses["y2"] = y2;

    if (g.has_edge(u, v)) {
        res.trace.branch = Branch::Kappa2_Singleton_uvEdge;
    } else {
        log.require(partners.size() >= 3, "third_attachment_exists",
                    "degree sum of the nonadjacent cut pair leaves no third attachment");
        int y3 = partners[2];
        assert_partner_structure(y3, g2, "third_attachment_structure");
        res.trace.witnesses["y3"] = y3;
        res.trace.branch = Branch::Kappa2_Singleton_NoUvEdge;
    }
    return res;
}

// --- |M| = 2 ---------------------------------------------------------------

inline Construction case1_construct(const Graph& g, const FanContext& ctx,
                                    std::vector<std::string>* checked = nullptr) {
    std::vector<std::string> local;
    detail::ClaimLog log(checked ? *checked : local);
    detail::internal_check(ctx.m() == 2, "two_common_neighbors_case",
                           "|M| = " + std::to_string(ctx.m()));
    log.require(ctx.D.empty(), "tight_pair_covers_rest", "D nonempty with |M| = 2");
    log.require(!ctx.X.empty(), "private_side_nonempty", "X empty in the |M| = 2 case");

    int u1 = ctx.M.items()[0], u2 = ctx.M.items()[1];
    if (g.degree(u1) < 4) std::swap(u1, u2);
    log.require(g.degree(u1) >= 4, "degree4_in_M",
                "both common neighbors have degree <= 3");

    Construction res;
    res.trace.context = ctx;
    res.trace.witnesses["x"] = ctx.x;
    res.trace.witnesses["y"] = ctx.y;
    res.trace.witnesses["u1"] = u1;
    res.trace.witnesses["u2"] = u2;

    if (g.degree(u2) >= 4 || !g.has_edge(u1, u2)) {
        VertexSet v1{ctx.x, ctx.y, u1};
        log.require(!is_vertex_cut(g, v1), "xyu1_not_a_cut",
                    "{x, y, u1} disconnects the graph");
        res.partition.v1 = v1;
        res.partition.v2 = ctx.X.unite(ctx.Y).unite(VertexSet{u2});
        res.trace.branch = g.degree(u2) >= 4 ? Branch::Case1_Sub11 : Branch::Case1_Sub12;
        return res;
    }

    // d(u2) = 3 with u1u2 an edge: the whole graph's shape is forced.
    log.require(g.neighbor_set(u2) == VertexSet{ctx.x, ctx.y, u1},
                "forced_adjacency_structure", "N(u2) != {x, y, u1}");
    log.require(g.degree(u1) == g.vertex_count() - 1, "forced_adjacency_structure",
                "u1 is not universal");
    const VertexSet all = VertexSet::range(g.vertex_count());
    for (int xi : ctx.X)
        log.require(g.neighbor_set(xi) == all.subtract(VertexSet{xi, ctx.y, u2}),
                    "forced_adjacency_structure",
                    "X vertex " + std::to_string(xi) + " misses forced adjacencies");
    for (int yj : ctx.Y)
        log.require(g.neighbor_set(yj) == all.subtract(VertexSet{yj, ctx.x, u2}),
                    "forced_adjacency_structure",
                    "Y vertex " + std::to_string(yj) + " misses forced adjacencies");

    res.partition.v1 = VertexSet{ctx.y, u1};
    res.partition.v2 = all.subtract(res.partition.v1);
    res.trace.branch = Branch::Case1_Sub13;
    return res;
}

// --- m-cut through {x, y} --------------------------------------------------

// kappa = -1 recomputes the connectivity; callers that already know it pass
// it through.
inline Construction claim34_construct(const Graph& g, const VertexSet& U, const FanContext& ctx,
                                      int kappa = -1, std::vector<std::string>* checked = nullptr) {
    std::vector<std::string> local;
    detail::ClaimLog log(checked ? *checked : local);
    if (kappa < 0) kappa = vertex_connectivity(g);
    const int m = ctx.m();
    const int n = g.vertex_count();

    detail::internal_check(U.contains(ctx.x) && U.contains(ctx.y), "cut_contains_pair",
                           "U misses x or y");
    detail::internal_check(U.size() == m, "cut_has_size_m",
                           "|U| = " + std::to_string(U.size()) + ", m = " + std::to_string(m));
    log.require(kappa == m, "kappa_at_least_m",
                "kappa = " + std::to_string(kappa) + " with an m-cut, m = " + std::to_string(m));

    const VertexSet outside = VertexSet::range(n).subtract(U);
    auto comps = components(g, outside);
    log.require(comps.size() >= 2, "cut_disconnects", "U is not a cut");

    log.require(outside.subtract(ctx.M).empty(), "m_cut_outside_in_M",
                "a vertex outside U is not a common neighbor of x and y");
    for (int w : outside)
        log.require(g.neighbor_set(w).intersect(U) == U, "outside_adjacent_to_whole_cut",
                    "vertex " + std::to_string(w) + " misses part of U");
    log.require(n <= 2 * m && m >= (n + 1) / 2 && m >= 4, "cut_forces_half_order",
                "n = " + std::to_string(n) + ", m = " + std::to_string(m));

    Construction res;
    res.trace.context = ctx;
    res.trace.witnesses["U"] = detail::vec(U);

    const VertexSet u_cap_m = U.intersect(ctx.M);
    if (u_cap_m.empty()) {
        log.require(outside == ctx.M, "outside_equals_M", "V \\ U != M with U disjoint from M");
        const auto& out_items = outside.items();
        VertexSet rest = U.subtract(VertexSet{ctx.x, ctx.y});
        log.require(out_items.size() >= 2 && rest.size() >= 2, "cut_forces_half_order",
                    "not enough vertices for the disjoint-cut wiring");
        int u1 = out_items[0], u2 = out_items[1];
        int a1 = rest.items()[0], a2 = rest.items()[1];
        res.partition.v1 = VertexSet{ctx.x, ctx.y, u1, u2};
        res.partition.v2 = VertexSet::range(n).subtract(res.partition.v1);
        res.trace.branch = Branch::Case2_Claim34_MDisjointCut;
        res.trace.witnesses["u1"] = u1;
        res.trace.witnesses["u2"] = u2;
        res.trace.witnesses["a1"] = a1;
        res.trace.witnesses["a2"] = a2;
        return res;
    }

    int u3 = u_cap_m.min();
    int u1 = outside.min();
    res.partition.v1 = VertexSet{ctx.x, u1, u3};
    res.partition.v2 = VertexSet::range(n).subtract(res.partition.v1);
    res.trace.branch = Branch::Case2_Claim34_MMeetsCut;
    res.trace.witnesses["u1"] = u1;
    res.trace.witnesses["u3"] = u3;
    return res;
}

// --- cover selection for |M| >= 3, Y nonempty, D nonempty -------------------

inline CoverSet select_cover_S(const Graph& g, const FanContext& ctx,
                               std::vector<std::string>* checked = nullptr) {
    std::vector<std::string> local;
    detail::ClaimLog log(checked ? *checked : local);
    detail::internal_check(!ctx.D.empty() && !ctx.Y.empty(), "cover_inputs_nonempty",
                           "select_cover_S needs nonempty Y and D");

    const VertexSet pool = ctx.M.unite(ctx.Y);
    for (int v : ctx.D)
        log.require(!g.neighbor_set(v).intersect(pool).empty(), "outside_vertex_sees_M_or_Y",
                    "vertex " + std::to_string(v) + " has no neighbor in M or Y");

    std::vector<int> cand;
    std::vector<VertexSet> covers_d;  // candidate -> D-neighborhood
    for (int c : pool) {
        VertexSet nd = g.neighbor_set(c).intersect(ctx.D);
        if (!nd.empty()) {
            cand.push_back(c);
            covers_d.push_back(std::move(nd));
        }
    }

    auto covers_all = [&](const std::vector<int>& idx) {
        VertexSet got;
        for (int i : idx) got = got.unite(covers_d[static_cast<size_t>(i)]);
        return ctx.D.subtract(got).empty();
    };

    // Exact minimum cover: try sizes upward; ties resolved by |S ∩ M| then by
    // lexicographic order; both fall out of scanning candidates in id order
    // and keeping the first best.
    std::vector<int> best;
    int best_m_overlap = -1;
    for (int k = 1; k <= ctx.d() && best.empty(); ++k) {
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
        const int c = static_cast<int>(cand.size());
        if (k > c) break;
        for (;;) {
            if (covers_all(idx)) {
                int overlap = 0;
                for (int i : idx)
                    if (ctx.M.contains(cand[static_cast<size_t>(i)])) ++overlap;
                if (overlap > best_m_overlap) {
                    best_m_overlap = overlap;
                    best.clear();
                    for (int i : idx) best.push_back(cand[static_cast<size_t>(i)]);
                }
            }
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == c - k + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < k; ++i)
                idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
        }
    }
    detail::internal_check(!best.empty(), "cover_exists",
                           "no cover of D within M and Y despite per-vertex neighbors");

    CoverSet cover;
    cover.s_set = VertexSet(best);

    // Minimality gives pairwise incomparable D-neighborhoods.
    const auto nd_of = [&](int s) { return g.neighbor_set(s).intersect(ctx.D); };
    for (int a : cover.s_set)
        for (int b : cover.s_set) {
            if (a == b) continue;
            log.require(!nd_of(a).subtract(nd_of(b)).empty(), "cover_minimality_incomparable",
                        "cover vertices " + std::to_string(a) + "," + std::to_string(b) +
                            " have nested D-neighborhoods");
        }

    // Hall condition, certified by a matching that saturates S into D.
    const auto& s_items = cover.s_set.items();
    std::map<int, int> matched_d;  // D vertex -> index into s_items
    std::vector<int> match_of_s(s_items.size(), -1);
    for (size_t i = 0; i < s_items.size(); ++i) {
        std::map<int, bool> visited;
        // Kuhn's augmenting search.
        std::function<bool(int)> aug = [&](int si) -> bool {
            for (int dvert : nd_of(s_items[static_cast<size_t>(si)])) {
                if (visited[dvert]) continue;
                visited[dvert] = true;
                auto it = matched_d.find(dvert);
                if (it == matched_d.end() || aug(it->second)) {
                    matched_d[dvert] = static_cast<int>(si);
                    match_of_s[static_cast<size_t>(si)] = dvert;
                    return true;
                }
            }
            return false;
        };
        log.require(aug(static_cast<int>(i)), "cover_hall_condition",
                    "no system of distinct representatives for the cover");
    }
    for (size_t i = 0; i < s_items.size(); ++i)
        cover.representatives.emplace_back(s_items[i], match_of_s[i]);

    log.require(cover.s_set.size() <= ctx.d(), "cover_at_most_outside",
                "|S| > |D|");
    return cover;
}

// --- |M| >= 3 ---------------------------------------------------------------

inline Construction case2_construct(const Graph& g, const FanContext& ctx, int kappa = -1,
                                    std::vector<std::string>* checked = nullptr) {
    std::vector<std::string> local;
    detail::ClaimLog log(checked ? *checked : local);
    if (kappa < 0) kappa = vertex_connectivity(g);
    const int m = ctx.m();
    const int n = g.vertex_count();
    detail::internal_check(m >= 3, "three_common_neighbors_case", "|M| < 3");
    log.require(kappa >= m, "kappa_at_least_m",
                "kappa = " + std::to_string(kappa) + " < m = " + std::to_string(m));

    const VertexSet all = VertexSet::range(n);

    if (ctx.D.empty()) {
        std::vector<int> pick(ctx.M.items().begin(), ctx.M.items().begin() + (m - 2));
        VertexSet v1 = VertexSet{ctx.x, ctx.y}.unite(VertexSet(pick));
        if (is_vertex_cut(g, v1)) {
            auto res = claim34_construct(g, v1, ctx, kappa, checked);
            return res;
        }
        Construction res;
        res.trace.context = ctx;
        res.trace.branch = Branch::Case2_DEmpty;
        res.partition.v1 = v1;
        res.partition.v2 = all.subtract(v1);
        res.trace.witnesses["x"] = ctx.x;
        res.trace.witnesses["y"] = ctx.y;
        res.trace.witnesses["M_prefix"] = pick;
        return res;
    }

    if (ctx.Y.empty()) {
        log.require(ctx.X.empty(), "no_private_neighbors", "Y empty but X nonempty");
        log.require(m >= 4, "degree_sum_forces_m_ge_4", "2m < n despite Y = X = {}");
        for (int v : ctx.D) {
            log.require(g.neighbor_set(v) == ctx.M, "isolated_set_dominated_by_M",
                        "vertex " + std::to_string(v) + " of D has neighbors outside M");
        }

        Construction res;
        res.trace.context = ctx;
        res.trace.witnesses["x"] = ctx.x;
        res.trace.witnesses["y"] = ctx.y;
        if (ctx.d() >= 2) {
            int u1 = ctx.M.items()[0], u2 = ctx.M.items()[1];
            int v1 = ctx.D.min();
            res.partition.v1 = VertexSet{ctx.x, u1, u2, v1};
            res.partition.v2 = all.subtract(res.partition.v1);
            res.trace.branch = Branch::Case2_Sub21_DGe2;
            res.trace.witnesses["u1"] = u1;
            res.trace.witnesses["u2"] = u2;
            res.trace.witnesses["v1"] = v1;
            return res;
        }
        // |D| = 1: hang the partition on an edge inside M.
        std::optional<Edge> m_edge;
        for (int a : ctx.M) {
            for (int b : ctx.M)
                if (a < b && g.has_edge(a, b)) {
                    m_edge = Edge{a, b};
                    break;
                }
            if (m_edge) break;
        }
        log.require(m_edge.has_value(), "M_not_independent",
                    "M independent with |D| = 1 contradicts the degree condition");
        int v1 = ctx.D.min();
        res.partition.v1 = VertexSet{ctx.x, m_edge->first, v1};
        res.partition.v2 = all.subtract(res.partition.v1);
        res.trace.branch = Branch::Case2_Sub21_DEq1;
        res.trace.witnesses["m_edge"] = std::vector<Edge>{*m_edge};
        res.trace.witnesses["v1"] = v1;
        return res;
    }

    // Y and D both nonempty: pick the cover and split on whether it meets M.
    CoverSet cover = select_cover_S(g, ctx, checked);
    const VertexSet& S = cover.s_set;

    if (!S.intersect(ctx.M).empty()) {
        VertexSet v11 = VertexSet{ctx.x, ctx.y}.unite(S);
        if (!is_connected_within(g, all.subtract(v11))) {
            log.require(v11.size() == m, "cover_cut_is_m_cut",
                        "G - ({x,y} ∪ S) disconnected but |{x,y} ∪ S| != m");
            return claim34_construct(g, v11, ctx, kappa, checked);
        }
        Construction res;
        res.trace.context = ctx;
        res.trace.branch = Branch::Case2_Sub221;
        res.partition.v1 = v11;
        res.partition.v2 = all.subtract(v11);
        res.trace.witnesses["S"] = detail::vec(S);
        res.trace.witnesses["S_reps"] = cover.representatives;
        return res;
    }

    // S inside Y.
    for (int uj : ctx.M) {
        VertexSet rj = ctx.D.subtract(g.neighbor_set(uj));
        log.require(rj.size() >= S.size(), "M_vertex_misses_cover_many",
                    "vertex " + std::to_string(uj) + " of M misses fewer than |S| of D");
    }
    const VertexSet xym = ctx.X.unite(ctx.Y).unite(ctx.M);
    for (int s : S)
        log.require(g.neighbor_set(s).intersect(xym).size() >= S.size() + 1,
                    "cover_vertex_degree_bound",
                    "cover vertex " + std::to_string(s) + " has too few neighbors in X ∪ Y ∪ M");

    int u1 = ctx.M.min();
    VertexSet v12 = VertexSet{ctx.x, ctx.y, u1}.unite(S);

    auto direct = [&]() {
        Construction res;
        res.trace.context = ctx;
        res.trace.branch = Branch::Case2_Sub222_Direct;
        res.partition.v1 = v12;
        res.partition.v2 = all.subtract(v12);
        res.trace.witnesses["S"] = detail::vec(S);
        res.trace.witnesses["S_reps"] = cover.representatives;
        res.trace.witnesses["u1"] = u1;
        return res;
    };

    if (S.size() <= m - 3) {
        if (is_vertex_cut(g, v12)) {
            log.require(v12.size() == m, "cover_cut_is_m_cut",
                        "G - V12 disconnected but |V12| != m");
            return claim34_construct(g, v12, ctx, kappa, checked);
        }
        return direct();
    }

    // |S| = m - 2: the cover and D pair up through a perfect matching.
    log.require(S.size() == m - 2 && ctx.d() == m - 2, "cover_matches_outside",
                "|S| or |D| differs from m-2");
    for (int s : S) {
        VertexSet nd = g.neighbor_set(s).intersect(ctx.D);
        log.require(nd.size() == 1, "cover_outside_perfect_matching",
                    "cover vertex " + std::to_string(s) + " covers more than one D vertex");
    }
    for (int v : ctx.D) {
        VertexSet ns = g.neighbor_set(v).intersect(S);
        log.require(ns.size() == 1, "cover_outside_perfect_matching",
                    "D vertex " + std::to_string(v) + " sees more than one cover vertex");
        log.require(g.neighbor_set(v).intersect(ctx.M).empty(), "outside_avoids_M",
                    "D vertex " + std::to_string(v) + " adjacent to M");
    }

    for (int yi : S) {
        VertexSet u = v12.subtract(VertexSet{yi});
        if (is_vertex_cut(g, u)) {
            auto res = claim34_construct(g, u, ctx, kappa, checked);
            res.trace.branch = Branch::Case2_Sub222_Claim34;
            res.trace.witnesses["dropped_cover_vertex"] = yi;
            return res;
        }
    }
    return direct();
}

// --- top level ---------------------------------------------------------------

inline Construction construct(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw PreconditionFailed("connected");
    if (n < 7) throw PreconditionFailed("n >= 7");
    auto mu = mu2(g);
    if (mu && *mu < n) throw PreconditionFailed("mu2 >= n");

    Construction res;
    if (g.is_complete()) {
        std::vector<int> v1;
        for (int i = 0; i < n / 2; ++i) v1.push_back(i);
        res.partition.v1 = VertexSet(v1);
        res.partition.v2 = VertexSet::range(n).subtract(res.partition.v1);
        res.trace.branch = Branch::Complete;
        res.trace.witnesses["v1_size"] = n / 2;
    } else {
        detail::ClaimLog log(res.trace.checked);
        const int kappa = vertex_connectivity(g);
        log.require(kappa >= 2, "min_degree_sum_implies_two_connected",
                    "kappa = " + std::to_string(kappa));
        if (kappa == 2) {
            auto cut = find_two_cut(g);
            detail::internal_check(cut.has_value(), "two_cut_found",
                                   "kappa = 2 but no 2-cut located");
            Construction sub = lemma3_construct(g, *cut, &res.trace.checked);
            res.partition = sub.partition;
            res.trace.branch = sub.trace.branch;
            res.trace.context = sub.trace.context;
            for (auto& [k, v] : sub.trace.witnesses) res.trace.witnesses[k] = v;
        } else {
            auto [x, y] = choose_xy(g);
            FanContext ctx = make_fan_context(g, x, y, log);
            Construction sub = ctx.m() == 2 ? case1_construct(g, ctx, &res.trace.checked)
                                            : case2_construct(g, ctx, kappa, &res.trace.checked);
            res.partition = sub.partition;
            res.trace.branch = sub.trace.branch;
            res.trace.context = sub.trace.context;
            for (auto& [k, v] : sub.trace.witnesses) res.trace.witnesses[k] = v;
        }
    }

    Verdict v = is_cist_partition(g, res.partition);
    detail::internal_check(v.ok, "partition_validates",
                           "constructed partition rejected: " + v.reason);
    res.trace.checked.push_back("partition_validates");
    return res;
}

}  // namespace cist

#endif
