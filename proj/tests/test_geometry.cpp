#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "diskpaths/geometry.hpp"

using namespace diskpaths;

TEST_CASE("angle helpers") {
    REQUIRE(direction({0, 0}, {1, 1}) == Catch::Approx(kPi / 4));
    REQUIRE(direction({2, 0}, {1, 0}) == Catch::Approx(kPi));
    REQUIRE(normalize_angle(2 * kPi + 0.5) == Catch::Approx(0.5));
    REQUIRE(normalize_angle(-0.5) == Catch::Approx(2 * kPi - 0.5));
    REQUIRE(ccw_delta(3 * kPi / 2, kPi / 2) == Catch::Approx(kPi));
    REQUIRE(angular_distance(0.1, 2 * kPi - 0.1) == Catch::Approx(0.2));
    REQUIRE(angular_distance(1.0, 1.0 + kPi) == Catch::Approx(kPi));
}

TEST_CASE("inscribed-angle chord and arc") {
    // theta = 0 is the diameter; theta = pi/2 degenerates to a point.
    REQUIRE(chord_from_inscribed(2.0, 0.0) == Catch::Approx(4.0));
    REQUIRE(arc_from_inscribed(2.0, 0.0) == Catch::Approx(2 * kPi));
    REQUIRE(chord_from_inscribed(1.0, kPi / 2) == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(arc_from_inscribed(1.0, kPi / 2) == Catch::Approx(0.0).margin(1e-15));
    // Consistency with the central-angle forms: inscribed theta spans a
    // central angle pi - 2*theta on the far side.
    double theta = 0.3, r = 1.7;
    double central = kPi - 2 * theta;
    REQUIRE(chord_from_inscribed(r, theta) == Catch::Approx(2 * r * std::sin(central / 2)));
    REQUIRE(arc_from_inscribed(r, theta) == Catch::Approx(r * central));
}

TEST_CASE("disk boundary accessors") {
    Disk d{7, {3, -2}, 2.5, 1.0};
    for (double a : {0.0, 0.7, kPi, 5.1}) {
        Point p = d.boundary_point(a);
        REQUIRE(dist(p, d.center) == Catch::Approx(d.radius));
        REQUIRE(d.angle_of(p) == Catch::Approx(a));
        REQUIRE(d.signed_distance(p) == Catch::Approx(0.0).margin(1e-12));
    }
    REQUIRE(d.signed_distance(d.center) == Catch::Approx(-d.radius));
    REQUIRE(d.signed_distance({3, 3}) == Catch::Approx(2.5));
}

TEST_CASE("weight clamps") {
    REQUIRE_FALSE(Disk{0, {}, 1, 1.0}.is_obstacle());
    REQUIRE_FALSE(Disk{0, {}, 1, 1.5707}.is_obstacle());
    REQUIRE(Disk{0, {}, 1, kPi / 2}.is_obstacle());
    REQUIRE(Disk{0, {}, 1, kInf}.is_obstacle());
    REQUIRE(Disk{0, {}, 1, kInf}.effective_weight() == Catch::Approx(kPi / 2));
    REQUIRE(Disk{0, {}, 1, 0.3}.effective_weight() == Catch::Approx(0.3));
    REQUIRE(Disk{0, {}, 1, 0.3}.arc_multiplier() == Catch::Approx(0.3));
    REQUIRE(Disk{0, {}, 1, 2.0}.arc_multiplier() == Catch::Approx(1.0));
    REQUIRE(Disk{0, {}, 1, 0.0}.arc_multiplier() == Catch::Approx(0.0));
}

TEST_CASE("segment versus disk interior") {
    Disk d{0, {0, 0}, 1, 1.0};
    SECTION("crossing, missing, tangent") {
        REQUIRE(segment_crosses_interior({-2, 0}, {2, 0}, d, 0.0));
        REQUIRE_FALSE(segment_crosses_interior({-2, 1.5}, {2, 1.5}, d, 0.0));
        // A tangent line touches the boundary without entering.
        REQUIRE_FALSE(segment_crosses_interior({-2, 1}, {2, 1}, d, 0.0));
        // One endpoint strictly inside counts as crossing.
        REQUIRE(segment_crosses_interior({0, 0.5}, {3, 0}, d, 0.0));
        // Segments ending short of the disk do not cross.
        REQUIRE_FALSE(segment_crosses_interior({-3, 0}, {-1.5, 0}, d, 0.0));
    }
    SECTION("exactly symmetric in the endpoints") {
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> u(-3, 3);
        for (int i = 0; i < 2000; ++i) {
            Point p{u(rng), u(rng)}, q{u(rng), u(rng)};
            REQUIRE(segment_crosses_interior(p, q, d, 1e-9) ==
                    segment_crosses_interior(q, p, d, 1e-9));
        }
    }
}

TEST_CASE("segment-circle intersection parameters") {
    Disk d{0, {0, 0}, 1, 1.0};
    SECTION("secant from outside") {
        auto ts = segment_circle_hits({-2, 0}, {2, 0}, d);
        REQUIRE(ts.size() == 2);
        REQUIRE(ts[0] == Catch::Approx(0.25));
        REQUIRE(ts[1] == Catch::Approx(0.75));
    }
    SECTION("from the center outward") {
        auto ts = segment_circle_hits({0, 0}, {2, 0}, d);
        REQUIRE(ts.size() == 1);
        REQUIRE(ts[0] == Catch::Approx(0.5));
    }
    SECTION("clear miss") {
        REQUIRE(segment_circle_hits({-2, 2}, {2, 2}, d).empty());
    }
    SECTION("hits are sorted and on the circle") {
        std::mt19937_64 rng(999);
        std::uniform_real_distribution<double> u(-3, 3);
        for (int i = 0; i < 500; ++i) {
            Point p{u(rng), u(rng)}, q{u(rng), u(rng)};
            auto ts = segment_circle_hits(p, q, d);
            for (size_t j = 0; j + 1 < ts.size(); ++j) REQUIRE(ts[j] <= ts[j + 1]);
            for (double t : ts) {
                Point x = p + (q - p) * t;
                REQUIRE(dist(x, d.center) == Catch::Approx(1.0).margin(1e-9));
            }
        }
    }
}

TEST_CASE("tangents from a point") {
    Disk d{0, {0, 0}, 1, 1.0};
    SECTION("exterior point sees two tangency angles") {
        auto angs = tangents_from_point({2, 0}, d);
        REQUIRE(angs.size() == 2);
        std::sort(angs.begin(), angs.end());
        REQUIRE(angs[0] == Catch::Approx(kPi / 3));
        REQUIRE(angs[1] == Catch::Approx(2 * kPi - kPi / 3));
        // The tangent leg is perpendicular to the radius at tangency.
        for (double a : angs) {
            Point tp = d.boundary_point(a);
            REQUIRE(std::abs(dot(tp - Point{2, 0}, tp - d.center)) < 1e-12);
        }
    }
    SECTION("interior point has none, boundary point has itself") {
        REQUIRE(tangents_from_point({0.5, 0}, d).empty());
        auto angs = tangents_from_point({0, 1}, d, 1e-9);
        REQUIRE(angs.size() == 1);
        REQUIRE(angs[0] == Catch::Approx(kPi / 2));
    }
}

TEST_CASE("common tangents of two disks") {
    Disk a{0, {0, 0}, 1, 1.0};
    Disk b{1, {4, 0}, 1, 1.0};
    auto lines = common_tangents(a, b);
    REQUIRE(lines.size() == 4);
    int internal = 0;
    for (const TangentLine& t : lines) {
        internal += t.internal ? 1 : 0;
        Point pa = a.boundary_point(t.angle_a);
        Point pb = b.boundary_point(t.angle_b);
        // Both radii meet the tangent segment at right angles.
        REQUIRE(std::abs(dot(pb - pa, pa - a.center)) < 1e-9);
        REQUIRE(std::abs(dot(pb - pa, pb - b.center)) < 1e-9);
    }
    REQUIRE(internal == 2);
    // Equal radii: external tangents are the horizontal lines y = +-1.
    // Internal ones cross at the midpoint with |leg| = sqrt(3).
    double ext = 0, inr = 0;
    for (const TangentLine& t : lines) {
        Point pa = a.boundary_point(t.angle_a);
        Point pb = b.boundary_point(t.angle_b);
        if (!t.internal) ext = std::max(ext, std::abs(pa.y));
        if (t.internal) inr = dist(pa, pb);
    }
    REQUIRE(ext == Catch::Approx(1.0));
    REQUIRE(inr == Catch::Approx(2 * std::sqrt(3.0)));

    SECTION("touching or overlapping disks have none") {
        REQUIRE(common_tangents(a, Disk{1, {2, 0}, 1, 1}).empty());
        REQUIRE(common_tangents(a, Disk{1, {1, 0}, 1, 1}).empty());
    }
}
