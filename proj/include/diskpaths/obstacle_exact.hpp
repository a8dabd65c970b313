#pragma once

// Exact solvers for the two regimes where shortest paths have a finite
// combinatorial structure:
//
//  * AvoidAllSolver prices taut detours that stay outside every open
//    disk interior, with boundary arcs costing min(1, w) per unit. The
//    taut family (tangent legs, boundary arcs, common-tangent hops) is
//    exhaustive for obstacle-weight disks; for cheaper arcs it is still
//    a realizable path family, which is all the graph pipeline needs of
//    its detour edges.
//
//  * build_visgraph / exact_path handle scenes whose weights are all 0
//    or at least pi/2: obstacles contribute tangency nodes and arcs,
//    and each zero-weight disk collapses to a hub node whose interior
//    is free to cross, entered radially. Tangent wraps around a zero
//    disk are dominated by passing through it, so zero disks need no
//    tangency nodes of their own.
//
//  * single_disk_optimum evaluates the one-disk problem to closed form
//    where available and by a scan plus golden-section refinement of
//    the exit-point family otherwise.

#include "diskpaths/dijkstra.hpp"
#include "diskpaths/path.hpp"
#include "diskpaths/scene.hpp"

namespace diskpaths {

inline bool segment_clear(const Scene& scene, Point p, Point q, double tol) {
    for (const Disk& d : scene.disks) {
        if (segment_crosses_interior(p, q, d, tol)) return false;
    }
    return true;
}

// Shortest p -> q cost around a single disk, ignoring all others:
// straight if the open segment misses the interior, otherwise tangent
// leg + arc (costed mult per unit) + tangent leg, better of both sides.
inline double wrap_around_disk(Point p, Point q, const Disk& d, double mult) {
    if (!segment_crosses_interior(p, q, d, 0.0)) return dist(p, q);
    double dp = dist(p, d.center), dq = dist(q, d.center);
    double bp = direction(d.center, p), bq = direction(d.center, q);
    double phip = std::acos(std::clamp(d.radius / dp, -1.0, 1.0));
    double phiq = std::acos(std::clamp(d.radius / dq, -1.0, 1.0));
    double legp = std::sqrt(std::max(0.0, dp * dp - d.radius * d.radius));
    double legq = std::sqrt(std::max(0.0, dq * dq - d.radius * d.radius));
    // On the counterclockwise side the path touches at bp+phip and
    // leaves at bq-phiq; mirrored for the clockwise side.
    double ccw = mult * d.radius * ccw_delta(bp + phip, bq - phiq);
    double cw = mult * d.radius * ccw_delta(bq + phiq, bp - phip);
    return legp + legq + std::min(ccw, cw);
}

// ---------------------------------------------------------------------
// AvoidAllSolver
// ---------------------------------------------------------------------

class AvoidAllSolver {
public:
    struct TangentLeg {
        int disk = -1;
        double angle = 0.0;
        double len = 0.0;
    };

    struct Attachment {
        Point p{};
        int on_disk = -1;              // boundary membership, -1 if free
        double boundary_angle = 0.0;
        std::vector<TangentLeg> legs;  // unblocked tangent legs per disk
        std::vector<double> reach;     // cheapest cost to each base node
        std::vector<double> via;       // reach relaxed through base all-pairs
    };

    void build(const Scene& scene) {
        scene_ = &scene;
        tol_ = scene.tol();
        base_.clear();
        mates_.clear();
        on_disk_.assign(scene.disks.size(), {});
        for (size_t i = 0; i < scene.disks.size(); ++i) {
            for (size_t j = i + 1; j < scene.disks.size(); ++j) {
                for (const TangentLine& t :
                     common_tangents(scene.disks[i], scene.disks[j])) {
                    Point a = scene.disks[i].boundary_point(t.angle_a);
                    Point b = scene.disks[j].boundary_point(t.angle_b);
                    if (!segment_clear(scene, a, b, tol_)) continue;
                    int ia = intern(static_cast<int>(i), t.angle_a);
                    int ib = intern(static_cast<int>(j), t.angle_b);
                    mates_.push_back({ia, ib, dist(a, b)});
                }
            }
        }
        build_base_matrix();
    }

    const Scene& scene() const { return *scene_; }
    size_t base_count() const { return base_.size(); }

    Attachment attach(Point p) const {
        Attachment at;
        at.p = p;
        const auto& disks = scene_->disks;
        for (size_t i = 0; i < disks.size(); ++i) {
            if (std::abs(disks[i].signed_distance(p)) <= tol_) {
                at.on_disk = static_cast<int>(i);
                at.boundary_angle = disks[i].angle_of(p);
                break;
            }
        }
        for (size_t j = 0; j < disks.size(); ++j) {
            if (static_cast<int>(j) == at.on_disk) continue;
            for (double ang : tangents_from_point(p, disks[j], tol_)) {
                Point y = disks[j].boundary_point(ang);
                if (!segment_clear(*scene_, p, y, tol_)) continue;
                at.legs.push_back({static_cast<int>(j), ang, dist(p, y)});
            }
        }
        at.reach.assign(base_.size(), kInf);
        for (size_t b = 0; b < base_.size(); ++b) {
            const BaseNode& bn = base_[b];
            const Disk& d = disks[bn.disk];
            double best = kInf;
            if (at.on_disk == bn.disk) {
                best = d.arc_multiplier() * d.radius *
                       angular_distance(at.boundary_angle, bn.angle);
            }
            for (const TangentLeg& leg : at.legs) {
                if (leg.disk != bn.disk) continue;
                best = std::min(best, leg.len + d.arc_multiplier() * d.radius *
                                                    angular_distance(leg.angle, bn.angle));
            }
            at.reach[b] = best;
        }
        at.via.assign(base_.size(), kInf);
        for (size_t b = 0; b < base_.size(); ++b) {
            double best = kInf;
            for (size_t a = 0; a < base_.size(); ++a) {
                best = std::min(best, at.reach[a] + dmat_[a * base_.size() + b]);
            }
            at.via[b] = best;
        }
        return at;
    }

    // Taut detour cost between two attached points. Exact when every
    // disk has obstacle weight; an upper bound (realizable path family)
    // otherwise. Symmetric by construction.
    double distance(const Attachment& u, const Attachment& v) const {
        if (segment_clear(*scene_, u.p, v.p, tol_)) return dist(u.p, v.p);
        double best = kInf;
        for (size_t b = 0; b < base_.size(); ++b) {
            best = std::min(best, u.via[b] + v.reach[b]);
            best = std::min(best, u.reach[b] + v.via[b]);
        }
        // Single-disk wraps that touch no common-tangent node.
        const auto& disks = scene_->disks;
        for (size_t c = 0; c < disks.size(); ++c) {
            const Disk& d = disks[c];
            double arc_rate = d.arc_multiplier() * d.radius;
            auto entries = [&](const Attachment& at, auto&& fn) {
                if (at.on_disk == static_cast<int>(c)) fn(0.0, at.boundary_angle);
                for (const TangentLeg& leg : at.legs) {
                    if (leg.disk == static_cast<int>(c)) fn(leg.len, leg.angle);
                }
            };
            entries(u, [&](double lu, double au) {
                entries(v, [&](double lv, double av) {
                    // Legs first so the sum rounds identically when the
                    // arguments are swapped.
                    best = std::min(best, lu + lv + arc_rate * angular_distance(au, av));
                });
            });
        }
        return best;
    }

    // Full geometry for one detour, via Dijkstra on the small explicit
    // graph of base nodes plus the two endpoints' tangent legs. Its
    // value always matches distance() on the same pair.
    WeightedPath path(Point pu, Point pv) const {
        Attachment u = attach(pu), v = attach(pv);
        struct MNode {
            Point p;
            int disk;
            double ang;
        };
        struct MEdge {
            int to;
            double w;
            int arc_disk;  // -1 for straight pieces
        };
        std::vector<MNode> nodes{{pu, u.on_disk, u.boundary_angle},
                                 {pv, v.on_disk, v.boundary_angle}};
        std::vector<int> base_id(base_.size());
        for (size_t b = 0; b < base_.size(); ++b) {
            const BaseNode& bn = base_[b];
            base_id[b] = static_cast<int>(nodes.size());
            nodes.push_back(
                {scene_->disks[bn.disk].boundary_point(bn.angle), bn.disk, bn.angle});
        }
        std::vector<std::vector<MEdge>> adj(nodes.size());
        auto link = [&](int a, int b, double w, int arc_disk) {
            adj[a].push_back({b, w, arc_disk});
            adj[b].push_back({a, w, arc_disk});
        };
        auto add_leg_nodes = [&](int owner, const Attachment& at) {
            for (const TangentLeg& leg : at.legs) {
                int id = static_cast<int>(nodes.size());
                nodes.push_back({scene_->disks[leg.disk].boundary_point(leg.angle),
                                 leg.disk, leg.angle});
                adj.emplace_back();
                link(owner, id, leg.len, -1);
            }
        };
        add_leg_nodes(0, u);
        add_leg_nodes(1, v);
        if (segment_clear(*scene_, pu, pv, tol_)) link(0, 1, dist(pu, pv), -1);
        for (const Mate& m : mates_) link(base_id[m.a], base_id[m.b], m.len, -1);
        // Complete arc connections among nodes sharing a disk.
        for (size_t a = 0; a < nodes.size(); ++a) {
            for (size_t b = a + 1; b < nodes.size(); ++b) {
                if (nodes[a].disk < 0 || nodes[a].disk != nodes[b].disk) continue;
                const Disk& d = scene_->disks[nodes[a].disk];
                double w = d.arc_multiplier() * d.radius *
                           angular_distance(nodes[a].ang, nodes[b].ang);
                link(static_cast<int>(a), static_cast<int>(b), w, nodes[a].disk);
            }
        }
        DijkstraResult res = dijkstra_adjacency(
            adj, [](const MEdge& e) { return std::pair{e.to, e.w}; }, 0, 1);
        WeightedPath out;
        std::vector<int> chain = walk_parents(res, 1);
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            const MNode& x = nodes[chain[i]];
            const MNode& y = nodes[chain[i + 1]];
            // Recover which edge Dijkstra used: straight unless the pair
            // shares a disk and the arc cost matches better.
            double used = res.dist[chain[i + 1]] - res.dist[chain[i]];
            bool arc = false;
            if (x.disk >= 0 && x.disk == y.disk) {
                const Disk& d = scene_->disks[x.disk];
                double arc_w =
                    d.arc_multiplier() * d.radius * angular_distance(x.ang, y.ang);
                arc = std::abs(used - arc_w) <= std::abs(used - dist(x.p, y.p));
            }
            if (arc) {
                const Disk& d = scene_->disks[x.disk];
                append_piece(out, make_shorter_arc(d, x.disk, x.ang, y.ang,
                                                   d.arc_multiplier()));
            } else {
                append_piece(out, make_segment(x.p, y.p));
            }
        }
        return out;
    }

private:
    struct BaseNode {
        int disk;
        double angle;
    };
    struct Mate {
        int a, b;
        double len;
    };

    const Scene* scene_ = nullptr;
    double tol_ = 0.0;
    std::vector<BaseNode> base_;
    std::vector<Mate> mates_;
    std::vector<std::vector<int>> on_disk_;
    std::vector<double> dmat_;

    int intern(int disk, double angle) {
        double ang_tol = tol_ / scene_->disks[disk].radius;
        for (int id : on_disk_[disk]) {
            if (angular_distance(base_[id].angle, angle) < ang_tol) return id;
        }
        base_.push_back({disk, angle});
        on_disk_[disk].push_back(static_cast<int>(base_.size()) - 1);
        return static_cast<int>(base_.size()) - 1;
    }

    void build_base_matrix() {
        size_t n = base_.size();
        std::vector<std::vector<std::pair<int, double>>> adj(n);
        for (const Mate& m : mates_) {
            adj[m.a].push_back({m.b, m.len});
            adj[m.b].push_back({m.a, m.len});
        }
        for (const auto& ids : on_disk_) {
            for (size_t x = 0; x < ids.size(); ++x) {
                for (size_t y = x + 1; y < ids.size(); ++y) {
                    const Disk& d = scene_->disks[base_[ids[x]].disk];
                    double w = d.arc_multiplier() * d.radius *
                               angular_distance(base_[ids[x]].angle, base_[ids[y]].angle);
                    adj[ids[x]].push_back({ids[y], w});
                    adj[ids[y]].push_back({ids[x], w});
                }
            }
        }
        dmat_.assign(n * n, kInf);
        for (size_t s = 0; s < n; ++s) {
            DijkstraResult r = dijkstra_adjacency(
                adj, [](const std::pair<int, double>& e) { return e; },
                static_cast<int>(s));
            for (size_t t = 0; t < n; ++t) dmat_[s * n + t] = r.dist[t];
        }
    }
};

// ---------------------------------------------------------------------
// Extended visibility graph for obstacle / zero-weight scenes
// ---------------------------------------------------------------------

struct VisNode {
    enum class Kind { terminal, tangency, hub };
    Kind kind = Kind::tangency;
    Point p{};
    int disk = -1;       // tangency: owning disk; hub: its zero disk
    double angle = 0.0;  // boundary angle when on a disk
};

struct VisEdge {
    enum class Kind { segment, arc, hub };
    int u = 0, v = 0;
    double w = 0.0;
    Kind kind = Kind::segment;
};

struct VisGraph {
    std::vector<VisNode> nodes;
    std::vector<VisEdge> edges;
    std::vector<std::vector<std::pair<int, double>>> adj;
    int s = 0, t = 1;
};

namespace detail {

inline bool zero_or_obstacle(const Disk& d) {
    return d.weight == 0 || d.weight >= kPi / 2;
}

// Point where a path from p enters zero disk d: the radial boundary
// point toward p, or p itself when p is already inside.
inline Point zero_entry_point(const Disk& d, Point p) {
    double dc = dist(p, d.center);
    if (dc <= d.radius) return p;
    return d.center + (p - d.center) * (d.radius / dc);
}

}  // namespace detail

inline VisGraph build_visgraph(const Scene& scene, Point s, Point t) {
    validate(scene);
    double tol = scene.tol();
    for (const Disk& d : scene.disks) {
        if (!detail::zero_or_obstacle(d)) {
            throw ValidationError(ValidationError::Kind::unsupported_weight,
                                  "disk " + std::to_string(d.id) +
                                      " has weight in (0, pi/2); exact solving needs "
                                      "weights 0 or >= pi/2",
                                  d.id);
        }
    }
    for (const Disk& d : scene.disks) {
        if (d.weight > 0 && d.signed_distance(s) < -tol) throw TerminalInsideObstacle(d.id);
        if (d.weight > 0 && d.signed_distance(t) < -tol) throw TerminalInsideObstacle(d.id);
    }

    VisGraph g;
    auto terminal_node = [&](Point p) {
        VisNode n;
        n.kind = VisNode::Kind::terminal;
        n.p = p;
        for (size_t i = 0; i < scene.disks.size(); ++i) {
            if (scene.disks[i].weight > 0 &&
                std::abs(scene.disks[i].signed_distance(p)) <= tol) {
                n.disk = static_cast<int>(i);
                n.angle = scene.disks[i].angle_of(p);
            }
        }
        return n;
    };
    g.nodes.push_back(terminal_node(s));
    g.nodes.push_back(terminal_node(t));

    std::vector<int> hub_of(scene.disks.size(), -1);
    for (size_t i = 0; i < scene.disks.size(); ++i) {
        if (scene.disks[i].weight != 0) continue;
        hub_of[i] = static_cast<int>(g.nodes.size());
        VisNode n;
        n.kind = VisNode::Kind::hub;
        n.p = scene.disks[i].center;
        n.disk = static_cast<int>(i);
        g.nodes.push_back(n);
    }

    // Tangency nodes are added lazily per surviving edge, deduplicated
    // per disk by boundary angle (terminals sitting on a boundary count
    // as nodes of that disk too).
    auto tangency = [&](int disk, double angle) {
        double ang_tol = tol / scene.disks[disk].radius;
        for (size_t i = 0; i < g.nodes.size(); ++i) {
            if (g.nodes[i].disk == disk && g.nodes[i].kind != VisNode::Kind::hub &&
                angular_distance(g.nodes[i].angle, angle) < ang_tol) {
                return static_cast<int>(i);
            }
        }
        VisNode n;
        n.kind = VisNode::Kind::tangency;
        n.disk = disk;
        n.angle = angle;
        n.p = scene.disks[disk].boundary_point(angle);
        g.nodes.push_back(n);
        return static_cast<int>(g.nodes.size()) - 1;
    };
    auto add_edge = [&](int u, int v, double w, VisEdge::Kind kind) {
        if (u == v) return;
        g.edges.push_back({u, v, w, kind});
    };

    std::vector<size_t> obstacles, zeros;
    for (size_t i = 0; i < scene.disks.size(); ++i) {
        (scene.disks[i].weight > 0 ? obstacles : zeros).push_back(i);
    }

    // Common tangents between obstacle pairs.
    for (size_t a = 0; a < obstacles.size(); ++a) {
        for (size_t b = a + 1; b < obstacles.size(); ++b) {
            const Disk& da = scene.disks[obstacles[a]];
            const Disk& db = scene.disks[obstacles[b]];
            for (const TangentLine& tl : common_tangents(da, db)) {
                Point pa = da.boundary_point(tl.angle_a);
                Point pb = db.boundary_point(tl.angle_b);
                if (!segment_clear(scene, pa, pb, tol)) continue;
                add_edge(tangency(static_cast<int>(obstacles[a]), tl.angle_a),
                         tangency(static_cast<int>(obstacles[b]), tl.angle_b),
                         dist(pa, pb), VisEdge::Kind::segment);
            }
        }
    }
    // Terminal tangent legs.
    for (int term : {0, 1}) {
        Point p = g.nodes[term].p;
        for (size_t i : obstacles) {
            if (g.nodes[term].disk == static_cast<int>(i)) continue;
            for (double ang : tangents_from_point(p, scene.disks[i], tol)) {
                Point y = scene.disks[i].boundary_point(ang);
                if (!segment_clear(scene, p, y, tol)) continue;
                add_edge(term, tangency(static_cast<int>(i), ang), dist(p, y),
                         VisEdge::Kind::segment);
            }
        }
    }
    if (segment_clear(scene, s, t, tol)) add_edge(0, 1, dist(s, t), VisEdge::Kind::segment);

    // Hub connections: radial tangent lines from each zero disk's center
    // to each obstacle, terminals, and other hubs.
    for (size_t z : zeros) {
        const Disk& dz = scene.disks[z];
        int hub = hub_of[z];
        for (size_t i : obstacles) {
            for (double ang : tangents_from_point(dz.center, scene.disks[i], tol)) {
                Point y = scene.disks[i].boundary_point(ang);
                Point e = detail::zero_entry_point(dz, y);
                if (!segment_clear(scene, e, y, tol)) continue;
                add_edge(hub, tangency(static_cast<int>(i), ang), dist(dz.center, y) - dz.radius,
                         VisEdge::Kind::hub);
            }
        }
        for (int term : {0, 1}) {
            Point p = g.nodes[term].p;
            double w = std::max(0.0, dist(p, dz.center) - dz.radius);
            if (w > 0 && !segment_clear(scene, detail::zero_entry_point(dz, p), p, tol)) {
                continue;
            }
            add_edge(hub, term, w, VisEdge::Kind::hub);
        }
        for (size_t z2 : zeros) {
            if (z2 <= z) continue;
            const Disk& dz2 = scene.disks[z2];
            Point e1 = detail::zero_entry_point(dz, dz2.center);
            Point e2 = detail::zero_entry_point(dz2, dz.center);
            if (!segment_clear(scene, e1, e2, tol)) continue;
            add_edge(hub, hub_of[z2], dist(dz.center, dz2.center) - dz.radius - dz2.radius,
                     VisEdge::Kind::hub);
        }
    }

    // Arc edges between angularly consecutive nodes on each obstacle.
    for (size_t i : obstacles) {
        std::vector<std::pair<double, int>> ring;
        for (size_t id = 0; id < g.nodes.size(); ++id) {
            if (g.nodes[id].disk == static_cast<int>(i) &&
                g.nodes[id].kind != VisNode::Kind::hub) {
                ring.push_back({g.nodes[id].angle, static_cast<int>(id)});
            }
        }
        if (ring.size() < 2) continue;
        std::sort(ring.begin(), ring.end());
        const Disk& d = scene.disks[i];
        for (size_t x = 0; x < ring.size(); ++x) {
            size_t y = (x + 1) % ring.size();
            double gap = ccw_delta(ring[x].first, ring[y].first);
            add_edge(ring[x].second, ring[y].second, d.arc_multiplier() * d.radius * gap,
                     VisEdge::Kind::arc);
        }
    }

    g.adj.assign(g.nodes.size(), {});
    for (const VisEdge& e : g.edges) {
        g.adj[e.u].push_back({e.v, e.w});
        g.adj[e.v].push_back({e.u, e.w});
    }
    return g;
}

inline WeightedPath exact_path(const Scene& scene, Point s, Point t) {
    VisGraph g = build_visgraph(scene, s, t);
    DijkstraResult res =
        dijkstra_adjacency(g.adj, [](const std::pair<int, double>& e) { return e; }, g.s, g.t);
    WeightedPath out;
    std::vector<int> chain = walk_parents(res, g.t);
    if (chain.size() < 2 && dist(s, t) > scene.tol()) {
        throw ValidationError(ValidationError::Kind::bad_query, "terminals unreachable");
    }
    // Entry point of the pending zero-disk transit, if the previous edge
    // dove into a hub.
    Point pending{};
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        const VisNode& x = g.nodes[chain[i]];
        const VisNode& y = g.nodes[chain[i + 1]];
        if (x.kind == VisNode::Kind::hub && y.kind == VisNode::Kind::hub) {
            const Disk& dz = scene.disks[x.disk];
            const Disk& dz2 = scene.disks[y.disk];
            Point e1 = detail::zero_entry_point(dz, dz2.center);
            Point e2 = detail::zero_entry_point(dz2, dz.center);
            append_piece(out, make_segment(pending, e1, 0.0, x.disk));
            append_piece(out, make_segment(e1, e2));
            pending = e2;
        } else if (y.kind == VisNode::Kind::hub) {
            const Disk& dz = scene.disks[y.disk];
            Point e = detail::zero_entry_point(dz, x.p);
            append_piece(out, make_segment(x.p, e));
            pending = e;
        } else if (x.kind == VisNode::Kind::hub) {
            const Disk& dz = scene.disks[x.disk];
            Point e = detail::zero_entry_point(dz, y.p);
            append_piece(out, make_segment(pending, e, 0.0, x.disk));
            append_piece(out, make_segment(e, y.p));
        } else {
            // Straight or arc edge; identify arcs by shared disk + cost.
            double used = res.dist[chain[i + 1]] - res.dist[chain[i]];
            bool arc = false;
            if (x.disk >= 0 && x.disk == y.disk) {
                const Disk& d = scene.disks[x.disk];
                double arc_w = d.arc_multiplier() * d.radius * angular_distance(x.angle, y.angle);
                arc = std::abs(used - arc_w) <= std::abs(used - dist(x.p, y.p));
            }
            if (arc) {
                const Disk& d = scene.disks[x.disk];
                append_piece(out,
                             make_shorter_arc(d, x.disk, x.angle, y.angle, d.arc_multiplier()));
            } else {
                append_piece(out, make_segment(x.p, y.p));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// Single-disk closed forms
// ---------------------------------------------------------------------

// Exact optimum from a boundary point s to a point t outside or on the
// disk, for any weight. Uses closed forms where the structure is known
// (w = 0, w >= pi/2, t on the boundary) and otherwise minimizes over
// the exit point of the single interior chord, which is exhaustive:
// for w < 1 arcs are dominated by their chords and outside excursions
// by interior ones; for 1 <= w < pi/2 boundary-to-boundary subpaths
// reduce to min(arc, w * chord) and tangential departures are the
// chord-degenerate endpoint of the same family.
inline double single_disk_optimum(const Disk& d, Point s, Point t, double tol = 1e-9) {
    double scale = d.radius + dist(t, d.center);
    if (std::abs(d.signed_distance(s)) > tol * scale) {
        throw ValidationError(ValidationError::Kind::bad_query,
                              "s must lie on the disk boundary");
    }
    if (d.signed_distance(t) < -tol * scale) {
        throw ValidationError(ValidationError::Kind::bad_query,
                              "t must lie outside or on the disk");
    }
    double w = d.weight;
    if (w == 0) return std::max(0.0, dist(t, d.center) - d.radius);
    if (std::abs(d.signed_distance(t)) <= tol * scale) {
        double chord = dist(s, t);
        double arc = d.arc_multiplier() * d.radius *
                     angular_distance(d.angle_of(s), d.angle_of(t));
        return std::min(d.effective_weight() * chord, arc);
    }
    if (w >= kPi / 2) return wrap_around_disk(s, t, d, 1.0);

    double mult = d.arc_multiplier();
    double s_ang = d.angle_of(s);
    auto f = [&](double psi) {
        Point q = d.boundary_point(psi);
        double first = std::min(w * dist(s, q),
                                mult * d.radius * angular_distance(s_ang, psi));
        return first + wrap_around_disk(q, t, d, mult);
    };
    // Dense scan, then golden-section refinement of each local minimum.
    const int kSamples = 8192;
    std::vector<double> vals(kSamples);
    for (int i = 0; i < kSamples; ++i) vals[i] = f(2 * kPi * i / kSamples);
    double best = kInf;
    const double golden = 0.6180339887498949;
    for (int i = 0; i < kSamples; ++i) {
        double prev = vals[(i + kSamples - 1) % kSamples];
        double next = vals[(i + 1) % kSamples];
        if (vals[i] > prev || vals[i] > next) continue;
        double lo = 2 * kPi * (i - 1) / kSamples, hi = 2 * kPi * (i + 1) / kSamples;
        double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 120; ++it) {
            if (f1 < f2) {
                hi = x2, x2 = x1, f2 = f1;
                x1 = hi - golden * (hi - lo);
                f1 = f(x1);
            } else {
                lo = x1, x1 = x2, f1 = f2;
                x2 = lo + golden * (hi - lo);
                f2 = f(x2);
            }
        }
        best = std::min({best, f1, f2, vals[i]});
    }
    return best;
}

}  // namespace diskpaths
