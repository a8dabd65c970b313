#pragma once

// Planar primitives: points, disks, angles, tangent lines and arcs.
// Everything downstream (discretization, path graphs, exact solvers)
// is built on the handful of closed forms in this header.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace diskpaths {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Direction angle of q as seen from p, in [0, 2*pi).
inline double direction(Point p, Point q) {
    double a = std::atan2(q.y - p.y, q.x - p.x);
    return a < 0 ? a + 2 * kPi : a;
}

// Reduce an angle to [0, 2*pi).
inline double normalize_angle(double a) {
    a = std::fmod(a, 2 * kPi);
    return a < 0 ? a + 2 * kPi : a;
}

// Counterclockwise sweep from a to b, in [0, 2*pi).
inline double ccw_delta(double a, double b) { return normalize_angle(b - a); }

// Shorter angular separation, in [0, pi]. Operands are ordered before
// any arithmetic so the result is bitwise identical under a swap.
inline double angular_distance(double a, double b) {
    double d = a < b ? ccw_delta(a, b) : ccw_delta(b, a);
    return std::min(d, 2 * kPi - d);
}

// A weighted disk. Travel through the interior costs `weight` per unit
// length, travel along the boundary costs min(1, weight) per unit, and
// the free plane outside all disks costs 1. A weight of +infinity (or
// anything >= pi/2) makes the interior useless: a boundary arc between
// two points is never longer than pi/2 times the chord, so the clamped
// weight min(weight, pi/2) prices every path a disk interior can offer.
struct Disk {
    int id = 0;
    Point center{};
    double radius = 0.0;
    double weight = 1.0;

    bool is_obstacle() const { return weight >= kPi / 2; }
    double effective_weight() const { return std::min(weight, kPi / 2); }
    double arc_multiplier() const { return std::min(1.0, weight); }

    Point boundary_point(double angle) const {
        return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
    }
    double angle_of(Point p) const { return direction(center, p); }
    // Signed distance to the boundary; negative inside.
    double signed_distance(Point p) const { return dist(p, center) - radius; }
};

// Chord and arc lengths written in terms of the inscribed angle theta at
// the far endpoint of a diameter: the chord subtending it has length
// 2*R*cos(theta) and the complementary boundary arc R*(pi - 2*theta).
inline double chord_from_inscribed(double radius, double theta) {
    return 2 * radius * std::cos(theta);
}
inline double arc_from_inscribed(double radius, double theta) {
    return radius * (kPi - 2 * theta);
}

// Arc length along a disk boundary between two boundary angles, taking
// the shorter way around.
inline double shorter_arc_length(const Disk& d, double a, double b) {
    return d.radius * angular_distance(a, b);
}

// True when the open segment (p, q) intersects the open disk interior
// shrunk by tol. Touching the boundary does not count as crossing.
// Endpoints are ordered canonically first so the answer is exactly
// symmetric in p and q despite floating-point rounding.
inline bool segment_crosses_interior(Point p, Point q, const Disk& d, double tol) {
    if (q.x < p.x || (q.x == p.x && q.y < p.y)) std::swap(p, q);
    Point pq = q - p;
    double len2 = dot(pq, pq);
    double t = len2 > 0 ? std::clamp(dot(d.center - p, pq) / len2, 0.0, 1.0) : 0.0;
    Point closest = p + pq * t;
    return dist(closest, d.center) < d.radius - tol;
}

// Parameters t in [0, 1] where segment p + t*(q - p) meets the circle
// bounding d, sorted ascending. 0, 1 or 2 entries.
inline std::vector<double> segment_circle_hits(Point p, Point q, const Disk& d) {
    Point u = q - p;
    Point w = p - d.center;
    double a = dot(u, u);
    double b = 2 * dot(u, w);
    double c = dot(w, w) - d.radius * d.radius;
    std::vector<double> out;
    if (a == 0) return out;
    double disc = b * b - 4 * a * c;
    if (disc < 0) return out;
    double sq = std::sqrt(disc);
    for (double t : {(-b - sq) / (2 * a), (-b + sq) / (2 * a)}) {
        if (t >= 0.0 && t <= 1.0) out.push_back(t);
    }
    return out;
}

// Boundary angles of the two tangency points of tangent lines from an
// exterior point p. Empty if p is inside; a single angle if p lies on
// the boundary (the tangent line at p itself).
inline std::vector<double> tangents_from_point(Point p, const Disk& d, double tol = 0.0) {
    double dc = dist(p, d.center);
    if (dc < d.radius - tol) return {};
    if (dc <= d.radius + tol) return {d.angle_of(p)};
    double beta = direction(d.center, p);
    double phi = std::acos(std::clamp(d.radius / dc, -1.0, 1.0));
    return {normalize_angle(beta - phi), normalize_angle(beta + phi)};
}

// A common tangent line of two disjoint disks, recorded by its tangency
// angles. External tangents keep both disks on the same side; internal
// ones separate them.
struct TangentLine {
    double angle_a = 0.0;  // boundary angle on the first disk
    double angle_b = 0.0;  // boundary angle on the second disk
    bool internal = false;
};

// All common tangent lines of two disks with disjoint closures: two
// external and two internal, four in total.
inline std::vector<TangentLine> common_tangents(const Disk& a, const Disk& b) {
    double dc = dist(a.center, b.center);
    std::vector<TangentLine> out;
    if (dc <= a.radius + b.radius) return out;
    double beta = direction(a.center, b.center);
    {
        double phi = std::acos(std::clamp((a.radius - b.radius) / dc, -1.0, 1.0));
        out.push_back({normalize_angle(beta + phi), normalize_angle(beta + phi), false});
        out.push_back({normalize_angle(beta - phi), normalize_angle(beta - phi), false});
    }
    {
        double phi = std::acos(std::clamp((a.radius + b.radius) / dc, -1.0, 1.0));
        out.push_back({normalize_angle(beta + phi), normalize_angle(beta + phi + kPi), true});
        out.push_back({normalize_angle(beta - phi), normalize_angle(beta - phi + kPi), true});
    }
    return out;
}

}  // namespace diskpaths
