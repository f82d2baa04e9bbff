#include <doctest.h>

#include "halin/search.hpp"
#include "halin/verify.hpp"
#include "support.hpp"

using namespace halin;
using namespace testsupport;

namespace {

SearchOutcome run(const Graph& g, int grid, std::uint64_t budget = 10'000'000'000ULL) {
    SearchOptions opts;
    opts.node_budget = budget;
    return search_b0_vpg(g, grid, opts);
}

void expect_sat_with_valid_witness(const Graph& g, int grid) {
    SearchOutcome out = run(g, grid);
    REQUIRE(out.status == SearchOutcome::Status::Sat);
    REQUIRE(out.witness.has_value());
    Representation rep = witness_representation(*out.witness);
    VerifyReport report = verify_representation(g, rep);
    CHECK(report.passed);
    for (const auto& [v, s] : rep.shapes) CHECK(shape_matches_kind(s, RepKind::VpgSeg));
}

}  // namespace

TEST_CASE("grid bound formula") {
    CHECK(normalize_grid_bound(6) == 12);
    CHECK(normalize_grid_bound(1) == 2);
    CHECK(normalize_grid_bound(3) == 6);
}

TEST_CASE("small positive instances") {
    expect_sat_with_valid_witness(path_graph(3), 6);
    expect_sat_with_valid_witness(path_graph(4), 8);
    expect_sat_with_valid_witness(complete_graph(3), 6);
}

TEST_CASE("monotone in the grid size") {
    CHECK(run(path_graph(3), 6).status == SearchOutcome::Status::Sat);
    CHECK(run(path_graph(3), 8).status == SearchOutcome::Status::Sat);
    CHECK(run(complete_graph(3), 6).status == SearchOutcome::Status::Sat);
    CHECK(run(complete_graph(3), 10).status == SearchOutcome::Status::Sat);
}

TEST_CASE("undersized grids are rejected") {
    CHECK_THROWS_AS(run(path_graph(4), 7), GridTooSmallError);
}

TEST_CASE("status is independent of the placement order") {
    Graph g = path_graph(4);
    for (std::vector<int> order :
         {std::vector<int>{0, 1, 2, 3}, {3, 2, 1, 0}, {1, 3, 0, 2}}) {
        SearchOptions opts;
        opts.order_override = &order;
        SearchOutcome out = search_b0_vpg(g, 8, opts);
        CHECK(out.status == SearchOutcome::Status::Sat);
        Representation rep = witness_representation(*out.witness);
        CHECK(verify_representation(g, rep).passed);
    }
}

TEST_CASE("a tiny budget aborts instead of lying") {
    SearchOutcome out = run(fig1_graph(), 12, 50);
    CHECK(out.status == SearchOutcome::Status::Aborted);
    CHECK(!out.witness.has_value());
    CHECK(out.nodes_explored > 50);
}

TEST_CASE("progress callback fires on long runs") {
    // a SAT instance large enough to pass the first callback threshold is
    // not cheap; instead check the callback plumbing via a tiny budget abort
    bool called = false;
    SearchOptions opts;
    opts.node_budget = 3'000'000;
    opts.progress = [&](std::uint64_t nodes, int depth) {
        called = true;
        CHECK(nodes > 0);
        CHECK(depth >= 0);
    };
    SearchOutcome out = search_b0_vpg(fig1_graph(), 12, opts);
    CHECK((out.status == SearchOutcome::Status::Aborted || called));
    if (out.nodes_explored >= (1 << 20)) CHECK(called);
}

TEST_CASE("empty and single-vertex graphs are trivially representable") {
    CHECK(run(Graph(0), 0).status == SearchOutcome::Status::Sat);
    expect_sat_with_valid_witness(Graph(1), 2);
}

TEST_CASE("the fig1 refutation is stable under relabeling and placement order") {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
                                              {2, 3}, {2, 5}, {3, 4}, {4, 5}};
    for (std::vector<int> perm : {std::vector<int>{3, 0, 5, 2, 4, 1}, {5, 4, 3, 2, 1, 0}}) {
        Graph g(6);
        for (auto [u, v] : edges) g.add_edge(perm[u], perm[v]);
        CHECK(run(g, 12).status == SearchOutcome::Status::Unsat);
    }
    Graph g = fig1_graph();
    std::vector<int> order = {5, 3, 1, 0, 2, 4};
    SearchOptions opts;
    opts.order_override = &order;
    CHECK(search_b0_vpg(g, 12, opts).status == SearchOutcome::Status::Unsat);
}
