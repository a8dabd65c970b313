#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "diskpaths/obstacle_exact.hpp"
#include "diskpaths/pathgraph.hpp"
#include "diskpaths/verify.hpp"

using namespace diskpaths;

namespace {

Scene mixed_scene() {
    Scene sc;
    sc.disks.push_back({0, {0, 0}, 1.2, kInf});
    sc.disks.push_back({1, {3.2, 0.4}, 0.9, 0.4});
    sc.disks.push_back({2, {-3, -0.5}, 1.0, 0.0});
    sc.disks.push_back({3, {0.5, -3.4}, 0.8, 1.4});
    validate(sc);
    return sc;
}

Scene lone_disk(double weight, double radius = 1.0) {
    Scene sc;
    sc.disks.push_back({0, {0, 0}, radius, weight});
    validate(sc);
    return sc;
}

}  // namespace

TEST_CASE("point classification") {
    Scene sc = mixed_scene();
    NodeView free_pt = classify_point(sc, {0, 5});
    REQUIRE(free_pt.disk == -1);
    REQUIRE(free_pt.inside == -1);

    NodeView on_rim = classify_point(sc, {1.2, 0});
    REQUIRE(on_rim.disk == 0);
    REQUIRE(on_rim.angle == Catch::Approx(0.0).margin(1e-12));

    NodeView inside = classify_point(sc, {3.2, 0.4});
    REQUIRE(inside.inside == 1);
    REQUIRE(inside.disk == -1);

    REQUIRE_THROWS_AS(classify_point(sc, {0.3, 0.2}), TerminalInsideObstacle);
}

TEST_CASE("edge pricing is exactly symmetric") {
    Scene sc = mixed_scene();
    SteinerSet set = build_steiner_set(sc, 1.0);
    std::vector<NodeView> views = flatten_nodes(sc, set);
    // Add the node species the discretization never produces: free
    // terminals and a terminal inside a finite-weight interior.
    for (Point p : {Point{-6, 1}, Point{6, -1}, Point{0.2, 2.1}, Point{3.2, 0.4},
                    Point{2.9, 0.1}}) {
        NodeView n = classify_point(sc, p);
        n.kind = NodeKind::terminal;
        views.push_back(n);
    }
    AvoidAllSolver solver;
    solver.build(sc);
    std::vector<AvoidAllSolver::Attachment> att(views.size());
    for (size_t i = 0; i < views.size(); ++i) {
        att[i].p = views[i].p;
        if (views[i].inside < 0) att[i] = solver.attach(views[i].p);
    }
    PricingContext ctx{&sc, &solver, sc.tol()};
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<size_t> pick(0, views.size() - 1);
    bool saw_curved = false, saw_interior = false;
    for (int trial = 0; trial < 400; ++trial) {
        size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        auto fwd = price_edge(ctx, views[i], att[i], views[j], att[j]);
        auto rev = price_edge(ctx, views[j], att[j], views[i], att[i]);
        REQUIRE(fwd.first == rev.first);
        REQUIRE(fwd.second == rev.second);  // bitwise, not approximate
        saw_curved = saw_curved || fwd.first == EdgeClass::curved_detour;
        saw_interior = saw_interior || fwd.first == EdgeClass::interior_chord;
    }
    REQUIRE(saw_curved);
    REQUIRE(saw_interior);
}

TEST_CASE("same-disk pricing regimes") {
    AvoidAllSolver solver;
    auto price_pair = [&](const Scene& sc, double ang_u, double ang_v) {
        const Disk& d = sc.disks[0];
        NodeView u{d.boundary_point(ang_u), 0, ang_u, -1, NodeKind::ring_point};
        NodeView v{d.boundary_point(ang_v), 0, ang_v, -1, NodeKind::ring_point};
        PricingContext ctx{&sc, &solver, sc.tol()};
        return price_edge(ctx, u, solver.attach(u.p), v, solver.attach(v.p));
    };
    SECTION("weights at most one always take the chord") {
        for (double w : {0.3, 1.0}) {
            Scene sc = lone_disk(w);
            solver.build(sc);
            for (double span : {0.2, 1.0, 2.5, kPi}) {
                auto [cls, cost] = price_pair(sc, 0.4, 0.4 + span);
                REQUIRE(cls == EdgeClass::interior_chord);
                REQUIRE(cost == Catch::Approx(w * 2 * std::sin(span / 2)).epsilon(1e-12));
            }
        }
    }
    SECTION("intermediate weights split by separation") {
        Scene sc = lone_disk(1.4);
        solver.build(sc);
        auto near = price_pair(sc, 0.0, 0.3);
        REQUIRE(near.first == EdgeClass::boundary_arc);
        REQUIRE(near.second == Catch::Approx(0.3).epsilon(1e-12));
        auto far = price_pair(sc, 0.0, kPi);
        REQUIRE(far.first == EdgeClass::interior_chord);
        REQUIRE(far.second == Catch::Approx(2.8).epsilon(1e-12));
    }
    SECTION("at the obstacle threshold the arc always wins") {
        Scene sc = lone_disk(kPi / 2);
        solver.build(sc);
        for (double span : {0.2, 1.5, kPi}) {
            auto [cls, cost] = price_pair(sc, 1.0, 1.0 + span);
            REQUIRE(cls == EdgeClass::boundary_arc);
            REQUIRE(cost == Catch::Approx(span).epsilon(1e-12));
        }
    }
    SECTION("free boundaries cost nothing either way") {
        Scene sc = lone_disk(0.0);
        solver.build(sc);
        auto [cls, cost] = price_pair(sc, 0.0, 2.0);
        REQUIRE(cls == EdgeClass::boundary_arc);
        REQUIRE(cost == 0.0);
    }
}

TEST_CASE("interior terminals price in two phases") {
    Scene sc;
    sc.disks.push_back({0, {0, 0}, 1, 0.5});
    sc.disks.push_back({1, {4, 0}, 1, 1.0});
    validate(sc);
    AvoidAllSolver solver;
    solver.build(sc);
    PricingContext ctx{&sc, &solver, sc.tol()};
    auto node = [&](Point p) {
        NodeView n = classify_point(sc, p);
        n.kind = NodeKind::terminal;
        return n;
    };
    auto attach = [&](const NodeView& n) {
        AvoidAllSolver::Attachment at;
        at.p = n.p;
        if (n.inside < 0) at = solver.attach(n.p);
        return at;
    };
    NodeView center = node({0, 0});
    REQUIRE(center.inside == 0);

    SECTION("exit chord plus exposed middle") {
        NodeView far_rim = node({3, 0});
        auto [cls, cost] = price_edge(ctx, center, attach(center), far_rim, attach(far_rim));
        REQUIRE(cls == EdgeClass::free_segment);
        REQUIRE(cost == Catch::Approx(2.5).epsilon(1e-12));
    }
    SECTION("own boundary costs the raw weight") {
        NodeView own_rim = node({1, 0});
        auto [cls, cost] = price_edge(ctx, center, attach(center), own_rim, attach(own_rim));
        REQUIRE(cls == EdgeClass::interior_chord);
        REQUIRE(cost == Catch::Approx(0.5).epsilon(1e-12));
    }
    SECTION("two points inside the same disk") {
        NodeView a = node({-0.2, 0});
        NodeView b = node({0.3, 0});
        auto [cls, cost] = price_edge(ctx, a, attach(a), b, attach(b));
        REQUIRE(cls == EdgeClass::interior_chord);
        REQUIRE(cost == Catch::Approx(0.25).epsilon(1e-12));
    }
    SECTION("free target through open space") {
        NodeView out = node({-3, 0});
        auto [cls, cost] = price_edge(ctx, center, attach(center), out, attach(out));
        REQUIRE(cls == EdgeClass::free_segment);
        REQUIRE(cost == Catch::Approx(2.5).epsilon(1e-12));
    }
    SECTION("blocked middle rides the detour solver") {
        Scene blocked;
        blocked.disks.push_back({0, {0, 0}, 1, 0.5});
        blocked.disks.push_back({1, {4, 0}, 1, kInf});
        validate(blocked);
        AvoidAllSolver bs;
        bs.build(blocked);
        PricingContext bctx{&blocked, &bs, blocked.tol()};
        NodeView u = classify_point(blocked, {0, 0});
        NodeView v = classify_point(blocked, {7, 0});
        AvoidAllSolver::Attachment au;
        au.p = u.p;
        auto [cls, cost] = price_edge(bctx, u, au, v, bs.attach(v.p));
        REQUIRE(cls == EdgeClass::curved_detour);
        double middle = wrap_around_disk({1, 0}, {7, 0}, blocked.disks[1], 1.0);
        REQUIRE(cost == Catch::Approx(0.5 + middle).epsilon(1e-9));
    }
}

TEST_CASE("terminal insertion reuses coincident vertices") {
    Scene sc = lone_disk(1.0);
    SteinerSet set = build_steiner_set(sc, 1.0);
    PathGraph g = build_graph(sc, set);
    size_t before = g.nodes.size();
    // The first vicinity center sits at angle zero.
    int reused = insert_terminal(g, {1, 0});
    REQUIRE(reused == 0);
    REQUIRE(g.nodes.size() == before);
    int fresh = insert_terminal(g, {-2, 1});
    REQUIRE(fresh == static_cast<int>(before));
    REQUIRE(g.nodes.size() == before + 1);
    REQUIRE(g.adj[fresh].size() == before);
    int again = insert_terminal(g, {-2, 1});
    REQUIRE(again == fresh);
    REQUIRE(g.nodes.size() == before + 1);
}

TEST_CASE("unit-rate diametric route costs exactly four") {
    Scene sc = lone_disk(1.0);
    RouteStats stats;
    WeightedPath route = approximate_route(sc, 1.0, {-2, 0}, {2, 0}, &stats);
    REQUIRE_FALSE(stats.dense);
    REQUIRE(route.weight == Catch::Approx(4.0).epsilon(1e-12));
    REQUIRE(route.euclidean == Catch::Approx(4.0).epsilon(1e-12));
    REQUIRE(route.pieces.size() == 3);
    REQUIRE(route.pieces[1].mult == 1.0);
    REQUIRE(route.pieces[1].disk == 0);
    REQUIRE(audit_path(sc, route) == Catch::Approx(4.0).epsilon(1e-9));
    REQUIRE(dist(route.pieces.front().a, {-2, 0}) <= 1e-12);
    REQUIRE(dist(route.pieces.back().b, {2, 0}) <= 1e-12);
}

TEST_CASE("explicit and implicit graphs agree") {
    Scene sc;
    sc.disks.push_back({0, {0, 0}, 1, kInf});
    sc.disks.push_back({1, {3.5, 1}, 0.8, 0.7});
    sc.disks.push_back({2, {-0.5, -3.2}, 0.9, 0.0});
    validate(sc);
    Point s{-3, 2}, t{5, -1};
    RouteStats explicit_stats, dense_stats;
    WeightedPath a = approximate_route(sc, 0.5, s, t, &explicit_stats);
    WeightedPath b = approximate_route(sc, 0.5, s, t, &dense_stats, 0);
    REQUIRE_FALSE(explicit_stats.dense);
    REQUIRE(dense_stats.dense);
    REQUIRE(explicit_stats.graph_nodes == dense_stats.graph_nodes);
    REQUIRE(a.weight == Catch::Approx(b.weight).epsilon(1e-12));
    REQUIRE(audit_path(sc, a) == Catch::Approx(a.weight).epsilon(1e-7));
    REQUIRE(audit_path(sc, b) == Catch::Approx(b.weight).epsilon(1e-7));
}

TEST_CASE("route weight equals its piece accounting") {
    Scene sc = mixed_scene();
    WeightedPath route = approximate_route(sc, 1.0, {-6, 1}, {6, -1});
    REQUIRE_FALSE(route.pieces.empty());
    double weight = 0, length = 0;
    for (const Piece& p : route.pieces) {
        weight += p.mult * p.length;
        length += p.length;
        REQUIRE(p.length > 0);
    }
    REQUIRE(route.weight == Catch::Approx(weight).epsilon(1e-12));
    REQUIRE(route.euclidean == Catch::Approx(length).epsilon(1e-12));
    REQUIRE(route.weight <= route.euclidean * kPi / 2 + 1e-12);
    for (size_t i = 0; i + 1 < route.pieces.size(); ++i) {
        REQUIRE(dist(route.pieces[i].b, route.pieces[i + 1].a) <= 10 * sc.tol());
    }
}

TEST_CASE("path audits reject broken geometry") {
    Scene sc = lone_disk(kInf);
    SECTION("segment through an obstacle prices to infinity") {
        WeightedPath wp;
        append_piece(wp, make_segment({-2, 0}, {2, 0}));
        REQUIRE(audit_path(sc, wp) == kInf);
    }
    SECTION("disconnected pieces") {
        WeightedPath wp;
        append_piece(wp, make_segment({-3, 2}, {-2, 2}));
        append_piece(wp, make_segment({1, 2}, {2, 2}));
        REQUIRE_THROWS_AS(audit_path(sc, wp), ValidationError);
    }
    SECTION("arc endpoints off the circle") {
        WeightedPath wp;
        Piece arc;
        arc.kind = Piece::Kind::arc;
        arc.disk = 0;
        arc.a = {5, 5};
        arc.b = {6, 5};
        arc.length = 1;
        wp.pieces.push_back(arc);
        REQUIRE_THROWS_AS(audit_path(sc, wp), ValidationError);
    }
    SECTION("arc pointing at a missing disk") {
        WeightedPath wp;
        Piece arc = make_arc(sc.disks[0], 3, 0.0, 1.0, true, 1.0);
        wp.pieces.push_back(arc);
        REQUIRE_THROWS_AS(audit_path(sc, wp), ValidationError);
    }
}

TEST_CASE("degenerate queries") {
    Scene sc = lone_disk(1.0);
    SECTION("identical terminals") {
        WeightedPath route = approximate_route(sc, 1.0, {3, 3}, {3, 3});
        REQUIRE(route.weight == 0.0);
        REQUIRE(route.pieces.empty());
    }
    SECTION("vertex ids out of range") {
        SteinerSet set = build_steiner_set(sc, 1.0);
        PathGraph g = build_graph(sc, set);
        REQUIRE_THROWS_AS(shortest_path(g, -1, 0), ValidationError);
        REQUIRE_THROWS_AS(shortest_path(g, 0, static_cast<int>(g.nodes.size())),
                          ValidationError);
    }
    SECTION("no disks at all") {
        Scene empty;
        validate(empty);
        AvoidAllSolver solver;
        solver.build(empty);
        WeightedPath out;
        double w = dense_route(empty, solver, {}, {0, 0}, {3, 4}, &out);
        REQUIRE(w == Catch::Approx(5.0).epsilon(1e-12));
        REQUIRE(out.pieces.size() == 1);
    }
}
