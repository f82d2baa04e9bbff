#include <doctest.h>

#include <random>

#include "halin/epg.hpp"
#include "halin/verify.hpp"
#include "halin/vpg.hpp"
#include "support.hpp"

using namespace halin;
using namespace testsupport;

namespace {

OrthoPath seg(Rat x1, Rat y1, Rat x2, Rat y2) {
    OrthoPath p;
    p.points = {{x1, y1}, {x2, y2}};
    check_invariants(p);
    return p;
}

}  // namespace

TEST_CASE("shapes unfold to the expected polylines") {
    OrthoPath l = to_path(LShape{Rat(1), Rat(3), Rat(0), Rat(2)});
    CHECK(l.points == std::vector<OrthoPath::Point>{{Rat(1), Rat(2)}, {Rat(1), Rat(0)}, {Rat(3), Rat(0)}});
    CHECK(l.bends() == 1);

    OrthoPath c = to_path(CShape{Rat(0), Rat(5, 4), Rat(13, 4), Rat(0), Rat(3)});
    CHECK(c.points == std::vector<OrthoPath::Point>{
                          {Rat(5, 4), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(3)}, {Rat(13, 4), Rat(3)}});
    CHECK(c.bends() == 2);

    OrthoPath s = to_path(SShape{Rat(-1, 4), Rat(0), Rat(15, 4), Rat(0), Rat(3)});
    CHECK(s.points == std::vector<OrthoPath::Point>{
                          {Rat(-1, 4), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(3)}, {Rat(15, 4), Rat(3)}});
    CHECK(s.bends() == 2);

    CHECK_THROWS_AS(to_path(CShape{Rat(2), Rat(1), Rat(3), Rat(0), Rat(1)}), DegenerateShapeError);
}

TEST_CASE("touching is any common point, sharing needs positive length") {
    OrthoPath h = seg(Rat(0), Rat(0), Rat(2), Rat(0));
    OrthoPath v = seg(Rat(1), Rat(-1), Rat(1), Rat(1));
    CHECK(paths_touch(h, v));
    CHECK(!paths_share_segment(h, v));

    OrthoPath corner = seg(Rat(2), Rat(0), Rat(2), Rat(5));
    CHECK(paths_touch(h, corner));  // single shared endpoint counts

    OrthoPath above = seg(Rat(0), Rat(1), Rat(2), Rat(1));
    CHECK(!paths_touch(h, above));

    OrthoPath overlap = seg(Rat(1), Rat(0), Rat(3), Rat(0));
    CHECK(paths_touch(h, overlap));
    CHECK(paths_share_segment(h, overlap));

    OrthoPath point_touch = seg(Rat(2), Rat(0), Rat(4), Rat(0));
    CHECK(paths_touch(h, point_touch));
    CHECK(!paths_share_segment(h, point_touch));  // zero-length contact
}

TEST_CASE("closed-form L contact on fig1 shapes") {
    LShape v1{Rat(2), Rat(3), Rat(2), Rat(3)};
    LShape v2{Rat(1), Rat(3), Rat(3), Rat(4)};
    LShape v5{Rat(2), Rat(3), Rat(1), Rat(2)};
    CHECK(lvpg_condition_intersect(v1, v5));
    CHECK(!lvpg_condition_intersect(v2, v5));
    CHECK(lvpg_condition_intersect(v1, v1));
}

TEST_CASE("closed-form C contact on fig1 shapes") {
    CShape v2{Rat(1, 2), Rat(15, 4), Rat(13, 4), Rat(2), Rat(3)};
    CShape v4{Rat(3), Rat(17, 4), Rat(13, 4), Rat(0), Rat(3)};
    CShape v5{Rat(2), Rat(13, 4), Rat(11, 4), Rat(0), Rat(1)};
    CHECK(cepg_condition_share(v2, v4));
    CHECK(!cepg_condition_share(v2, v5));
    CHECK(cepg_condition_share(v2, v2));
}

TEST_CASE("closed-form S contact on fig1 shapes") {
    SShape root{Rat(1, 4), Rat(11, 4), Rat(13, 4), Rat(2), Rat(3)};
    SShape first{Rat(-1, 4), Rat(0), Rat(15, 4), Rat(0), Rat(3)};
    SShape v5{Rat(3, 4), Rat(2), Rat(11, 4), Rat(0), Rat(1)};
    CHECK(sepg_condition_share(root, first));
    CHECK(!sepg_condition_share(first, v5));
    CHECK(sepg_condition_share(root, root));
}

TEST_CASE("contact predicates are symmetric and reflexive") {
    std::mt19937_64 rng(7);
    auto half = [&]() { return Rat(static_cast<int>(rng() % 25), 2); };
    for (int trial = 0; trial < 200; ++trial) {
        LShape a{half(), half(), half(), half()};
        if (a.x_lo > a.x_hi) std::swap(a.x_lo, a.x_hi);
        if (a.y_lo >= a.y_hi) a.y_hi = a.y_lo + 1;
        LShape b{half(), half(), half(), half()};
        if (b.x_lo > b.x_hi) std::swap(b.x_lo, b.x_hi);
        if (b.y_lo >= b.y_hi) b.y_hi = b.y_lo + 1;
        OrthoPath pa = to_path(a), pb = to_path(b);
        CHECK(paths_touch(pa, pb) == paths_touch(pb, pa));
        CHECK(paths_share_segment(pa, pb) == paths_share_segment(pb, pa));
        CHECK(paths_touch(pa, pa));
        if (paths_share_segment(pa, pb)) CHECK(paths_touch(pa, pb));
    }
}

TEST_CASE("closed-form predicates agree with the geometric oracle on random shapes") {
    std::mt19937_64 rng(99);
    auto grid = [&](int den, int span) { return Rat(static_cast<int>(rng() % span), den); };

    for (int trial = 0; trial < 2000; ++trial) {
        LShape a{grid(2, 30), Rat(0), grid(2, 30), Rat(0)};
        a.x_hi = a.x_lo + (rng() % 3 == 0 ? Rat(0) : grid(2, 12));
        a.y_hi = a.y_lo + Rat(1) + grid(2, 8);
        LShape b{grid(2, 30), Rat(0), grid(2, 30), Rat(0)};
        b.x_hi = b.x_lo + (rng() % 3 == 0 ? Rat(0) : grid(2, 12));
        b.y_hi = b.y_lo + Rat(1) + grid(2, 8);
        CHECK(lvpg_condition_intersect(a, b) == paths_touch(to_path(a), to_path(b)));
    }
    for (int trial = 0; trial < 2000; ++trial) {
        CShape a{grid(4, 40), Rat(0), Rat(0), grid(4, 40), Rat(0)};
        a.bottom_x = a.spine_x + Rat(1, 4) + grid(4, 10);
        a.top_x = a.spine_x + Rat(1, 4) + grid(4, 10);
        a.y_hi = a.y_lo + Rat(1, 4) + grid(4, 10);
        CShape b{grid(4, 40), Rat(0), Rat(0), grid(4, 40), Rat(0)};
        b.bottom_x = b.spine_x + Rat(1, 4) + grid(4, 10);
        b.top_x = b.spine_x + Rat(1, 4) + grid(4, 10);
        b.y_hi = b.y_lo + Rat(1, 4) + grid(4, 10);
        CHECK(cepg_condition_share(a, b) == paths_share_segment(to_path(a), to_path(b)));
    }
    for (int trial = 0; trial < 2000; ++trial) {
        int h = 1 + static_cast<int>(rng() % 6);
        auto s_grid = [&](int span) { return Rat(static_cast<int>(rng() % span), 2 * h); };
        SShape a{s_grid(60), Rat(0), Rat(0), s_grid(60), Rat(0)};
        a.x_mid = a.x_lo + Rat(1, 2 * h) + s_grid(12);
        a.x_hi = a.x_mid + Rat(1, 2 * h) + s_grid(12);
        a.y_hi = a.y_lo + Rat(1, 2 * h) + s_grid(12);
        SShape b{s_grid(60), Rat(0), Rat(0), s_grid(60), Rat(0)};
        b.x_mid = b.x_lo + Rat(1, 2 * h) + s_grid(12);
        b.x_hi = b.x_mid + Rat(1, 2 * h) + s_grid(12);
        b.y_hi = b.y_lo + Rat(1, 2 * h) + s_grid(12);
        CHECK(sepg_condition_share(a, b) == paths_share_segment(to_path(a), to_path(b)));
    }
}

TEST_CASE("corrupting one coordinate is detected and localized") {
    TucDecomposition d = decompose(fig1_graph());
    Representation rep = build_lvpg(make_vpg_frame(d));
    LShape v5 = std::get<LShape>(rep.shapes.at(4));
    v5.x_hi = Rat(5, 2);  // pull the arm back so it misses v6
    rep.shapes[4] = v5;
    VerifyReport report = verify_representation(d.graph, rep);
    CHECK(!report.passed);
    CHECK(report.mismatch_count == 1);
    for (const auto& p : report.pairs)
        if (!p.ok()) {
            CHECK(p.u == 4);
            CHECK(p.v == 5);
        }
}

TEST_CASE("report text and trivial cases") {
    Graph empty(0);
    Representation rep;
    VerifyReport report = verify_representation(empty, rep);
    CHECK(report.passed);
    CHECK(report.pairs.empty());

    Graph two(2);
    two.add_edge(0, 1);
    Representation partial;
    partial.kind = RepKind::VpgSeg;
    partial.shapes.emplace(0, seg(Rat(0), Rat(0), Rat(1), Rat(0)));
    CHECK_THROWS_AS(verify_representation(two, partial), MissingShapeError);

    partial.shapes.emplace(1, seg(Rat(1), Rat(0), Rat(1), Rat(2)));
    VerifyReport ok = verify_representation(two, partial);
    CHECK(ok.passed);
    CHECK(ok.to_text() == "0 1 expected=1 got=1 OK\n");

    Graph isolated(2);
    VerifyReport bad = verify_representation(isolated, partial);
    CHECK(!bad.passed);
    CHECK(bad.to_text() == "0 1 expected=0 got=1 MISMATCH\n");
}

TEST_CASE("bend bounds are enforced per kind") {
    Graph g(1);
    Representation rep;
    rep.kind = RepKind::VpgSeg;
    OrthoPath bent;
    bent.points = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
    rep.shapes.emplace(0, bent);
    VerifyReport report = verify_representation(g, rep);
    CHECK(!report.passed);
    CHECK(report.bend_violations == std::vector<int>{0});
    CHECK(!shape_matches_kind(rep.shapes.at(0), RepKind::VpgSeg));

    rep.kind = RepKind::VpgL;  // 1 bend allowed, but the variant type is wrong for the kind
    CHECK(verify_representation(g, rep).passed);
    CHECK(!shape_matches_kind(rep.shapes.at(0), RepKind::VpgL));
}
