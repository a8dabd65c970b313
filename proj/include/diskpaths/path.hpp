#pragma once

// Geometric path representation shared by the exact solvers and the
// graph pipeline: an ordered chain of straight segments and boundary
// arcs, each priced as multiplier * length.

#include "diskpaths/geometry.hpp"

namespace diskpaths {

struct Piece {
    enum class Kind { segment, arc };
    Kind kind = Kind::segment;
    Point a{}, b{};
    int disk = -1;       // owning disk for arcs and interior chords
    double ang_a = 0.0;  // arc endpoints as boundary angles
    double ang_b = 0.0;
    bool ccw = true;     // arc direction from ang_a to ang_b
    double length = 0.0;
    double mult = 1.0;
};

struct WeightedPath {
    std::vector<Piece> pieces;
    double weight = 0.0;
    double euclidean = 0.0;
};

inline Piece make_segment(Point a, Point b, double mult = 1.0, int disk = -1) {
    Piece p;
    p.kind = Piece::Kind::segment;
    p.a = a;
    p.b = b;
    p.disk = disk;
    p.length = dist(a, b);
    p.mult = mult;
    return p;
}

inline Piece make_arc(const Disk& d, int disk_index, double ang_a, double ang_b, bool ccw,
                      double mult) {
    Piece p;
    p.kind = Piece::Kind::arc;
    p.disk = disk_index;
    p.ang_a = ang_a;
    p.ang_b = ang_b;
    p.ccw = ccw;
    p.a = d.boundary_point(ang_a);
    p.b = d.boundary_point(ang_b);
    p.length = d.radius * (ccw ? ccw_delta(ang_a, ang_b) : ccw_delta(ang_b, ang_a));
    p.mult = mult;
    return p;
}

// Arc between two boundary angles taking the shorter way (ties go ccw).
inline Piece make_shorter_arc(const Disk& d, int disk_index, double ang_a, double ang_b,
                              double mult) {
    bool ccw = ccw_delta(ang_a, ang_b) <= ccw_delta(ang_b, ang_a);
    return make_arc(d, disk_index, ang_a, ang_b, ccw, mult);
}

inline void append_piece(WeightedPath& path, const Piece& p) {
    if (p.length < 1e-15) return;
    path.pieces.push_back(p);
    path.weight += p.mult * p.length;
    path.euclidean += p.length;
}

inline void append_path(WeightedPath& path, const WeightedPath& tail) {
    for (const Piece& p : tail.pieces) append_piece(path, p);
}

inline WeightedPath reverse_path(const WeightedPath& in) {
    WeightedPath out;
    for (auto it = in.pieces.rbegin(); it != in.pieces.rend(); ++it) {
        Piece p = *it;
        std::swap(p.a, p.b);
        std::swap(p.ang_a, p.ang_b);
        p.ccw = !p.ccw;
        append_piece(out, p);
    }
    return out;
}

}  // namespace diskpaths
