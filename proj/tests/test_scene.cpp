#include <catch2/catch_amalgamated.hpp>

#include "diskpaths/scene.hpp"

using namespace diskpaths;

static Scene two_disks(double r0, double w0, double gap, double r1 = 1.0, double w1 = 1.0) {
    Scene sc;
    sc.disks.push_back({0, {0, 0}, r0, w0});
    sc.disks.push_back({1, {r0 + gap + r1, 0}, r1, w1});
    return sc;
}

TEST_CASE("validation rejects malformed scenes") {
    SECTION("non-positive radius") {
        Scene sc;
        sc.disks.push_back({0, {0, 0}, 0.0, 1.0});
        try {
            validate(sc);
            FAIL("expected a validation error");
        } catch (const ValidationError& e) {
            REQUIRE(e.kind == ValidationError::Kind::nonpositive_radius);
            REQUIRE(e.disk_a == 0);
        }
    }
    SECTION("negative or NaN weight") {
        Scene sc;
        sc.disks.push_back({0, {0, 0}, 1.0, -0.5});
        REQUIRE_THROWS_AS(validate(sc), ValidationError);
        sc.disks[0].weight = std::nan("");
        REQUIRE_THROWS_AS(validate(sc), ValidationError);
    }
    SECTION("overlapping and touching disks") {
        Scene sc;
        sc.disks.push_back({0, {0, 0}, 1.0, 1.0});
        sc.disks.push_back({1, {1.5, 0}, 1.0, 1.0});
        try {
            validate(sc);
            FAIL("expected a validation error");
        } catch (const ValidationError& e) {
            REQUIRE(e.kind == ValidationError::Kind::overlap);
            REQUIRE(e.disk_a == 0);
            REQUIRE(e.disk_b == 1);
        }
        // Exact tangency counts as overlap too: clearances must be positive.
        sc.disks[1].center = {2.0, 0};
        REQUIRE_THROWS_AS(validate(sc), ValidationError);
        sc.disks[1].center = {2.0 + 1e-3, 0};
        REQUIRE_NOTHROW(validate(sc));
    }
    SECTION("valid scene passes") {
        REQUIRE_NOTHROW(validate(two_disks(1, 1, 0.5)));
    }
}

TEST_CASE("clearance") {
    SECTION("lone disk falls back to its radius") {
        Scene sc;
        sc.disks.push_back({0, {5, 5}, 2.5, 1.0});
        REQUIRE(clearance(sc, 0) == Catch::Approx(2.5));
    }
    SECTION("nearest neighbor distance between boundaries") {
        Scene sc = two_disks(1, 1, 0.75);
        sc.disks.push_back({2, {0, 10}, 1.0, 1.0});
        REQUIRE(clearance(sc, 0) == Catch::Approx(0.75));
        REQUIRE(clearance(sc, 1) == Catch::Approx(0.75));
        REQUIRE(clearance(sc, 2) == Catch::Approx(8.0));
    }
}

TEST_CASE("angular radius") {
    SECTION("zero weight is rejected") {
        Scene sc = two_disks(1, 0, 1);
        REQUIRE_THROWS_AS(weighted_angular_radius(sc, 0), ValidationError);
    }
    SECTION("never exceeds arcsin(1/4)") {
        double cap = std::asin(0.25);
        for (double w : {0.05, 0.5, 1.0, 1.3, kPi / 2, 10.0, kInf}) {
            for (double gap : {0.25, 1.0, 4.0}) {
                Scene sc = two_disks(1.5, w, gap);
                double alpha = weighted_angular_radius(sc, 0);
                REQUIRE(alpha > 0);
                REQUIRE(alpha <= cap + 1e-15);
            }
        }
    }
    SECTION("weight 1 with ample clearance hits the cap exactly") {
        Scene sc = two_disks(1, 1, 2);
        REQUIRE(weighted_angular_radius(sc, 0) == Catch::Approx(std::asin(0.25)));
    }
    SECTION("unit weight, tight clearance uses the clearance") {
        Scene sc = two_disks(1, 1, 0.5);
        REQUIRE(weighted_angular_radius(sc, 0) == Catch::Approx(std::asin(0.5 / 4)));
    }
    SECTION("heavy weights shrink it via the clamped ratio") {
        Scene sc = two_disks(1, kInf, 2);
        REQUIRE(weighted_angular_radius(sc, 0) ==
                Catch::Approx(std::asin(1.0 / (4 * (kPi / 2)))));
    }
}

TEST_CASE("global constants") {
    SECTION("c = 1 gives the closed-form a") {
        // Radii 2/pi with unit gap: c = (pi/2) * (2/pi) / 1 = 1, and the
        // quadratic for a collapses to 2 + sqrt(5).
        double r = 2 / kPi;
        Scene sc = two_disks(r, 1, 1, r, 1);
        SceneConstants k = global_constants(sc);
        REQUIRE(k.c == Catch::Approx(1.0).epsilon(1e-12));
        REQUIRE(k.a == Catch::Approx(2 + std::sqrt(5.0)).epsilon(1e-12));
        // a = 2 + sqrt(5) is the root of a^2 - 4a - 1, which is exactly
        // where the derived constant (6a+2)/(a-1) equals 2a.
        double b = (6 * k.a + 2) / (k.a - 1);
        REQUIRE(b == Catch::Approx(2 * k.a).epsilon(1e-12));
    }
    SECTION("scales with radius over clearance") {
        Scene sc = two_disks(2, 1, 0.5);
        SceneConstants k = global_constants(sc);
        REQUIRE(k.c == Catch::Approx((kPi / 2) * 2 / 0.5));
        REQUIRE(k.a > 1);
        REQUIRE(k.a == Catch::Approx((1 + 3 * k.c + std::sqrt(9 * k.c * k.c + 10 * k.c + 1)) / 2));
    }
    SECTION("empty scene is rejected") {
        REQUIRE_THROWS_AS(global_constants(Scene{}), ValidationError);
    }
}

TEST_CASE("scene JSON round trip") {
    Scene sc;
    sc.disks.push_back({0, {0.1, -2.25}, 1.5, 0.0});
    sc.disks.push_back({3, {4.0 / 3.0, 2e-7}, 0.625, kInf});
    sc.disks.push_back({4, {-7, 0.3}, 2.0, 1.0 / 3.0});
    sc.query = Query{{-3.125, 0.5}, {9, -1}};
    sc.tolerance_override = 1e-7;

    Scene back = load_scene_text(scene_to_json(sc));
    REQUIRE(back.disks.size() == sc.disks.size());
    for (size_t i = 0; i < sc.disks.size(); ++i) {
        REQUIRE(back.disks[i].id == sc.disks[i].id);
        // %.17g keeps doubles bit-exact through the round trip.
        REQUIRE(back.disks[i].center.x == sc.disks[i].center.x);
        REQUIRE(back.disks[i].center.y == sc.disks[i].center.y);
        REQUIRE(back.disks[i].radius == sc.disks[i].radius);
        REQUIRE(back.disks[i].weight == sc.disks[i].weight);
    }
    REQUIRE(back.query.has_value());
    REQUIRE(back.query->s.x == sc.query->s.x);
    REQUIRE(back.query->t.y == sc.query->t.y);
    REQUIRE(back.tolerance_override == sc.tolerance_override);
}

TEST_CASE("scene JSON parsing details") {
    SECTION("weight accepts inf spellings and rejects junk") {
        REQUIRE(parse_weight(nlohmann::json("inf")) == kInf);
        REQUIRE(parse_weight(nlohmann::json("Infinity")) == kInf);
        REQUIRE(parse_weight(nlohmann::json(0.25)) == 0.25);
        REQUIRE_THROWS_AS(parse_weight(nlohmann::json("huge")), ParseError);
        REQUIRE_THROWS_AS(parse_weight(nlohmann::json(nullptr)), ParseError);
    }
    SECTION("ids default to position when omitted") {
        Scene sc = load_scene_text(R"({"disks": [
            {"cx": 0, "cy": 0, "r": 1, "w": 1},
            {"cx": 5, "cy": 0, "r": 1, "w": 1}
        ]})");
        REQUIRE(sc.disks[0].id == 0);
        REQUIRE(sc.disks[1].id == 1);
    }
    SECTION("malformed documents raise ParseError") {
        REQUIRE_THROWS_AS(load_scene_text("not json"), ParseError);
        REQUIRE_THROWS_AS(load_scene_text("{}"), ParseError);
        REQUIRE_THROWS_AS(load_scene_text(R"({"disks": [{"cx": 0}]})"), ParseError);
        REQUIRE_THROWS_AS(load_scene_text(R"({"disks": [], "query": {"s": [0]}})"),
                          ParseError);
        REQUIRE_THROWS_AS(load_scene("/nonexistent/scene.json"), ParseError);
    }
}

TEST_CASE("tolerance derivation") {
    Scene sc = two_disks(1, 1, 1);
    // Bounding box spans x in [-1, 4], y in [-1, 1]: diagonal sqrt(29).
    REQUIRE(sc.tol() == Catch::Approx(1e-9 * std::sqrt(29.0)));
    sc.tolerance_override = 1e-6;
    REQUIRE(sc.tol() == 1e-6);
}
