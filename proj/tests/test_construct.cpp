#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cist/certificate.hpp"
#include "cist/construct.hpp"
#include "cist/generators.hpp"
#include "cist/oracle.hpp"
#include "cist/trees.hpp"
#include "test_util.hpp"

using namespace cist;

namespace {

Graph k7_minus_01() {
    std::vector<Edge> es;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
            if (!(u == 0 && v == 1)) es.emplace_back(u, v);
    return Graph::from_edges(7, es);
}

// Full pipeline on one input: construct, validate, extract, verify.
Construction run_and_check(const Graph& g, Branch expect) {
    Construction c = construct(g);
    INFO("branch " << to_string(c.trace.branch));
    REQUIRE(c.trace.branch == expect);
    REQUIRE(is_cist_partition(g, c.partition).ok);
    TreePair tp = partition_to_trees(g, c.partition);
    REQUIRE(verify_cists_definitional(g, tp).ok);
    REQUIRE(verify_cists_leafrule(g, tp).ok);
    return c;
}

bool checked_contains(const Construction& c, const std::string& claim) {
    for (auto& s : c.trace.checked)
        if (s == claim) return true;
    return false;
}

}  // namespace

TEST_CASE("choose_xy picks the tightest highest-degree pair, then lexicographic") {
    REQUIRE(choose_xy(k7_minus_01()) == std::make_pair(0, 1));
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    REQUIRE(choose_xy(c5) == std::make_pair(0, 2));
    REQUIRE(choose_xy(lemma3_fixture(2, 4, true)) == std::make_pair(0, 2));
    REQUIRE_THROWS_AS(choose_xy(complete_graph(7)), NotApplicable);
}

TEST_CASE("construct preconditions") {
    std::vector<Edge> es;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) es.emplace_back(u, v);
    Graph k33 = Graph::from_edges(6, es);
    REQUIRE_THROWS_MATCHES(construct(k33), PreconditionFailed,
                           Catch::Matchers::Predicate<PreconditionFailed>(
                               [](const PreconditionFailed& e) { return e.conjunct == "n >= 7"; }));
    REQUIRE_THROWS_MATCHES(construct(sharpness_graph(3, 3)), PreconditionFailed,
                           Catch::Matchers::Predicate<PreconditionFailed>(
                               [](const PreconditionFailed& e) { return e.conjunct == "mu2 >= n"; }));
    Graph disconnected = Graph::from_edges(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    REQUIRE_THROWS_MATCHES(construct(disconnected), PreconditionFailed,
                           Catch::Matchers::Predicate<PreconditionFailed>(
                               [](const PreconditionFailed& e) { return e.conjunct == "connected"; }));
}

TEST_CASE("complete graph splits in half") {
    auto c = run_and_check(complete_graph(7), Branch::Complete);
    REQUIRE(c.partition.v1 == VertexSet{0, 1, 2});
    REQUIRE(c.partition.v2 == VertexSet{3, 4, 5, 6});
    for (int n = 8; n <= 12; ++n) run_and_check(complete_graph(n), Branch::Complete);
}

TEST_CASE("kappa=2 with a big small side") {
    auto c = run_and_check(lemma3_fixture(2, 4, true), Branch::Kappa2_BigSide);
    REQUIRE(std::get<int>(c.trace.witnesses.at("cut_u")) == 6);
    REQUIRE(std::get<int>(c.trace.witnesses.at("cut_v")) == 7);
    REQUIRE(std::get<int>(c.trace.witnesses.at("x1")) == 0);
    REQUIRE(std::get<int>(c.trace.witnesses.at("y1")) == 2);
    REQUIRE(c.partition.v1 == VertexSet{1, 2, 6});
    REQUIRE(c.partition.v2 == VertexSet{0, 3, 4, 5, 7});
    run_and_check(lemma3_fixture(3, 5, false), Branch::Kappa2_BigSide);
    run_and_check(lemma3_fixture(2, 5, true, 3), Branch::Kappa2_BigSide);
}

TEST_CASE("kappa=2 with a singleton side") {
    auto c = run_and_check(lemma3_fixture(1, 6, true), Branch::Kappa2_Singleton_uvEdge);
    REQUIRE(c.partition.v1 == VertexSet{0, 1, 7});
    REQUIRE(c.partition.v2 == VertexSet{2, 3, 4, 5, 6, 8});

    auto c2 = run_and_check(lemma3_fixture(1, 6, false), Branch::Kappa2_Singleton_NoUvEdge);
    REQUIRE(c2.trace.witnesses.count("y3") == 1);
}

TEST_CASE("|M|=2 subcases") {
    auto c11 = run_and_check(case1_sub11_fixture(), Branch::Case1_Sub11);
    REQUIRE(c11.partition.v1 == VertexSet{0, 1, 2});
    REQUIRE(checked_contains(c11, "xyu1_not_a_cut"));
    REQUIRE(checked_contains(c11, "degree4_in_M"));

    auto c12 = run_and_check(case1_sub12_fixture(), Branch::Case1_Sub12);
    REQUIRE(c12.partition.v1 == VertexSet{0, 1, 2});

    auto c13 = run_and_check(case1_sub13_fixture(), Branch::Case1_Sub13);
    REQUIRE(c13.partition.v1 == VertexSet{1, 2});
    REQUIRE(checked_contains(c13, "forced_adjacency_structure"));
}

TEST_CASE("case1 rejects a context with leftover vertices") {
    Graph g = case1_sub11_fixture();
    FanContext ctx;
    ctx.x = 0;
    ctx.y = 1;
    ctx.M = VertexSet{2, 3};
    ctx.X = VertexSet{4, 5};
    ctx.Y = VertexSet{6};
    ctx.D = VertexSet{7};
    REQUIRE_THROWS_AS(case1_construct(g, ctx), InternalInvariantViolation);
}

TEST_CASE("|M|>=3 with D empty") {
    auto c = run_and_check(k7_minus_01(), Branch::Case2_DEmpty);
    REQUIRE(c.trace.context.has_value());
    REQUIRE(c.trace.context->m() == 5);
    REQUIRE(c.trace.context->x == 0);
    REQUIRE(c.trace.context->y == 1);
    REQUIRE(c.partition.v1 == VertexSet{0, 1, 2, 3, 4});
    REQUIRE(c.partition.v2 == VertexSet{5, 6});
}

TEST_CASE("Y empty subcases") {
    auto big = run_and_check(sub21_fixture(4, 2), Branch::Case2_Sub21_DGe2);
    REQUIRE(big.partition.v1 == VertexSet{0, 2, 3, 6});
    REQUIRE(checked_contains(big, "isolated_set_dominated_by_M"));
    REQUIRE(checked_contains(big, "kappa_at_least_m"));

    auto one = run_and_check(sub21_fixture(4, 1), Branch::Case2_Sub21_DEq1);
    REQUIRE(one.partition.v1 == VertexSet{0, 2, 6});
    REQUIRE(checked_contains(one, "M_not_independent"));

    run_and_check(sub21_fixture(5, 2), Branch::Case2_Sub21_DGe2);
    run_and_check(sub21_fixture(6, 3), Branch::Case2_Sub21_DGe2);
}

TEST_CASE("cover selection unit examples") {
    SECTION("unique cover") {
        Graph g = Graph::from_edges(4, {{2, 3}});
        FanContext ctx;
        ctx.M = VertexSet{0, 1};
        ctx.Y = VertexSet{2};
        ctx.D = VertexSet{3};
        auto cover = select_cover_S(g, ctx);
        REQUIRE(cover.s_set == VertexSet{2});
        REQUIRE(cover.representatives == std::vector<Edge>{{2, 3}});
    }
    SECTION("smaller cover wins") {
        Graph g = Graph::from_edges(4, {{0, 2}, {1, 2}, {1, 3}});
        FanContext ctx;
        ctx.M = VertexSet{0};
        ctx.Y = VertexSet{1};
        ctx.D = VertexSet{2, 3};
        auto cover = select_cover_S(g, ctx);
        REQUIRE(cover.s_set == VertexSet{1});
    }
    SECTION("ties prefer M") {
        Graph g = Graph::from_edges(3, {{0, 2}, {1, 2}});
        FanContext ctx;
        ctx.M = VertexSet{0};
        ctx.Y = VertexSet{1};
        ctx.D = VertexSet{2};
        auto cover = select_cover_S(g, ctx);
        REQUIRE(cover.s_set == VertexSet{0});
    }
    SECTION("uncovered outside vertex is an invariant violation") {
        Graph g = Graph::from_edges(3, {{0, 1}});
        FanContext ctx;
        ctx.M = VertexSet{0};
        ctx.Y = VertexSet{1};
        ctx.D = VertexSet{2};
        REQUIRE_THROWS_AS(select_cover_S(g, ctx), InternalInvariantViolation);
    }
}

TEST_CASE("Y nonempty: cover meets M") {
    auto c = run_and_check(case2_sub221_fixture(), Branch::Case2_Sub221);
    REQUIRE(c.partition.v1 == VertexSet{0, 1, 2});
    REQUIRE(std::get<std::vector<int>>(c.trace.witnesses.at("S")) == std::vector<int>{2});
}

TEST_CASE("Y nonempty: cover inside Y, direct partition") {
    auto c = run_and_check(case2_sub222_fixture(), Branch::Case2_Sub222_Direct);
    REQUIRE(c.partition.v1 == VertexSet{0, 1, 2, 7});
    REQUIRE(std::get<std::vector<int>>(c.trace.witnesses.at("S")) == std::vector<int>{7});
    REQUIRE(checked_contains(c, "cover_vertex_degree_bound"));
    REQUIRE(checked_contains(c, "cover_hall_condition"));
    REQUIRE(checked_contains(c, "M_vertex_misses_cover_many"));
}

TEST_CASE("Y nonempty: cover pairs with D through a perfect matching") {
    auto c = run_and_check(case2_sub222_matching_fixture(), Branch::Case2_Sub222_Direct);
    REQUIRE(c.partition.v1 == VertexSet{0, 1, 2, 6, 10});
    REQUIRE(checked_contains(c, "cover_matches_outside"));
    REQUIRE(checked_contains(c, "cover_outside_perfect_matching"));
    REQUIRE(checked_contains(c, "outside_avoids_M"));
}

TEST_CASE("m-cut rerouting when the D-empty prefix disconnects the rest") {
    auto c = run_and_check(complete_minus_matching(8, 4), Branch::Case2_Claim34_MMeetsCut);
    REQUIRE(c.partition.v1 == VertexSet{0, 2, 6});
    REQUIRE(std::get<std::vector<int>>(c.trace.witnesses.at("U")) ==
            std::vector<int>{0, 1, 2, 3, 4, 5});
    REQUIRE(checked_contains(c, "m_cut_outside_in_M"));
    REQUIRE(checked_contains(c, "outside_adjacent_to_whole_cut"));
}

TEST_CASE("claim34 with a cut disjoint from M, driven directly") {
    Graph g = complete_bipartite(4, 4);
    auto [x, y] = choose_xy(g);
    REQUIRE(x == 0);
    REQUIRE(y == 1);
    std::vector<std::string> checked;
    detail::ClaimLog log(checked);
    FanContext ctx = make_fan_context(g, x, y, log);
    REQUIRE(ctx.M == VertexSet{4, 5, 6, 7});
    REQUIRE(ctx.D == VertexSet{2, 3});

    auto c = claim34_construct(g, VertexSet{0, 1, 2, 3}, ctx, 4);
    REQUIRE(c.trace.branch == Branch::Case2_Claim34_MDisjointCut);
    REQUIRE(c.partition.v1 == VertexSet{0, 1, 4, 5});
    REQUIRE(is_cist_partition(g, c.partition).ok);
    TreePair tp = partition_to_trees(g, c.partition);
    REQUIRE(verify_cists_definitional(g, tp).ok);

    // Malformed cut: missing y.
    REQUIRE_THROWS_AS(claim34_construct(g, VertexSet{0, 2, 3, 4}, ctx, 4),
                      InternalInvariantViolation);

    // construct() itself routes K44 through the Y-empty case instead.
    run_and_check(g, Branch::Case2_Sub21_DGe2);
}

TEST_CASE("oracle agrees with the constructor on all fixtures") {
    for (const auto& label : all_branch_labels()) {
        auto fixture = case_fixture(label);
        if (!fixture) continue;
        auto res = oracle_2cist_partition(*fixture);
        INFO("fixture " << label);
        REQUIRE(res.found);
        REQUIRE(is_cist_partition(*fixture, res.partition).ok);
    }
}

TEST_CASE("construct succeeds on random degree-condition graphs") {
    std::set<std::string> branches;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 7 + static_cast<int>(seed % 10);
        auto sample = fan_random(n, seed);
        Construction c = construct(sample.graph);
        branches.insert(to_string(c.trace.branch));
        REQUIRE(is_cist_partition(sample.graph, c.partition).ok);
        TreePair tp = partition_to_trees(sample.graph, c.partition);
        REQUIRE(verify_cists_definitional(sample.graph, tp).ok);
        REQUIRE(verify_cists_leafrule(sample.graph, tp).ok);
    }
    REQUIRE(branches.size() >= 2);
}

TEST_CASE("construction is deterministic") {
    for (const auto& label : {"Kappa2_BigSide", "Case1_Sub11", "Case2_Sub221",
                              "Case2_Sub222_Direct", "Case2_DEmpty"}) {
        auto g = case_fixture(label);
        REQUIRE(g.has_value());
        auto c1 = make_certificate(*g);
        auto c2 = make_certificate(*g);
        REQUIRE(certificate_json(c1).dump(2) == certificate_json(c2).dump(2));
    }
}
