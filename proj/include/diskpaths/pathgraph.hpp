#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "diskpaths/dijkstra.hpp"
#include "diskpaths/discretize.hpp"
#include "diskpaths/geometry.hpp"
#include "diskpaths/obstacle_exact.hpp"
#include "diskpaths/path.hpp"
#include "diskpaths/scene.hpp"

namespace diskpaths {

// How an edge's weight was derived. One rule per node pair; the graph
// stores the cheapest realization together with its class.
enum class EdgeClass {
    boundary_arc,    // shorter boundary arc, rate min(1, w) per unit length
    interior_chord,  // straight chord through one disk, rate w
    free_segment,    // straight segment outside every interior, rate 1
    curved_detour,   // taut route around blocking disks
};

inline const char* edge_class_name(EdgeClass c) {
    switch (c) {
        case EdgeClass::boundary_arc: return "boundary_arc";
        case EdgeClass::interior_chord: return "interior_chord";
        case EdgeClass::free_segment: return "free_segment";
        case EdgeClass::curved_detour: return "curved_detour";
    }
    return "unknown";
}

// A graph vertex with its geometric placement. Boundary nodes carry the
// owning disk and angle; a terminal strictly inside a finite-weight disk
// records that disk in `inside` instead.
struct NodeView {
    Point p{};
    int disk = -1;    // boundary membership, -1 if not on a circle
    double angle = 0.0;
    int inside = -1;  // disk whose open interior contains the point
    NodeKind kind = NodeKind::terminal;
};

// Classifies an arbitrary point against the scene. Throws
// TerminalInsideObstacle when the point lies strictly inside a disk
// whose weight makes the interior untraversable.
inline NodeView classify_point(const Scene& scene, Point p) {
    NodeView n;
    n.p = p;
    double tol = scene.tol();
    for (size_t i = 0; i < scene.disks.size(); ++i) {
        const Disk& d = scene.disks[i];
        double sd = d.signed_distance(p);
        if (std::abs(sd) <= tol) {
            n.disk = static_cast<int>(i);
            n.angle = d.angle_of(p);
            return n;
        }
        if (sd < -tol) {
            if (d.is_obstacle()) throw TerminalInsideObstacle(d.id);
            n.inside = static_cast<int>(i);
            return n;
        }
    }
    return n;
}

struct PricingContext {
    const Scene* scene = nullptr;
    const AvoidAllSolver* solver = nullptr;
    double tol = 0.0;
};

namespace detail {

// Boundary point where the straight segment from p (strictly inside d)
// toward q leaves the disk. Falls back to q when q never exits.
inline Point interior_exit(const Disk& d, Point p, Point q) {
    std::vector<double> hits = segment_circle_hits(p, q, d);
    if (hits.empty()) return q;
    return p + (q - p) * hits.back();
}

}  // namespace detail

// Cheapest single-edge cost between two placed nodes, with the rule that
// produced it. Symmetric in its arguments, including at floating-point
// level: every branch evaluates the same expressions under a swap.
inline std::pair<EdgeClass, double> price_edge(const PricingContext& ctx,
                                               const NodeView& u,
                                               const AvoidAllSolver::Attachment& au,
                                               const NodeView& v,
                                               const AvoidAllSolver::Attachment& av) {
    const Scene& sc = *ctx.scene;

    if (u.inside >= 0 || v.inside >= 0) {
        // A stretch inside disk i is paid at the raw weight w_i.
        int iu = u.inside, iv = v.inside;
        if (iu >= 0 && (iv == iu || (iv < 0 && v.disk == iu)))
            return {EdgeClass::interior_chord, sc.disks[iu].weight * dist(u.p, v.p)};
        if (iv >= 0 && iu < 0 && u.disk == iv)
            return {EdgeClass::interior_chord, sc.disks[iv].weight * dist(u.p, v.p)};
        // Two-phase: straight inside each endpoint's disk up to the exit
        // crossing, then the exposed middle between the exits.
        Point x = u.p, y = v.p;
        double head = 0, tail = 0;
        if (iu >= 0) {
            x = detail::interior_exit(sc.disks[iu], u.p, v.p);
            head = sc.disks[iu].weight * dist(u.p, x);
        }
        if (iv >= 0) {
            y = detail::interior_exit(sc.disks[iv], v.p, u.p);
            tail = sc.disks[iv].weight * dist(v.p, y);
        }
        if (dist(x, y) <= ctx.tol)
            return {EdgeClass::interior_chord, head + tail};
        if (segment_clear(sc, x, y, ctx.tol))
            return {EdgeClass::free_segment, head + tail + dist(x, y)};
        double mid = ctx.solver->distance(ctx.solver->attach(x), ctx.solver->attach(y));
        return {EdgeClass::curved_detour, head + tail + mid};
    }

    if (u.disk >= 0 && u.disk == v.disk) {
        const Disk& d = sc.disks[u.disk];
        double arc = d.arc_multiplier() * d.radius * angular_distance(u.angle, v.angle);
        if (d.weight < kPi / 2) {
            double chord = d.weight * dist(u.p, v.p);
            if (chord < arc) return {EdgeClass::interior_chord, chord};
        }
        return {EdgeClass::boundary_arc, arc};
    }

    if (segment_clear(sc, u.p, v.p, ctx.tol))
        return {EdgeClass::free_segment, dist(u.p, v.p)};
    return {EdgeClass::curved_detour, ctx.solver->distance(au, av)};
}

// Flattens a Steiner set into placed vertices, disk by disk in node order.
inline std::vector<NodeView> flatten_nodes(const Scene& scene, const SteinerSet& set) {
    std::vector<NodeView> views;
    views.reserve(set.total());
    for (size_t i = 0; i < set.per_disk.size(); ++i) {
        const Disk& d = scene.disks[i];
        for (const SteinerNode& sn : set.per_disk[i].nodes) {
            NodeView n;
            n.p = d.boundary_point(sn.angle);
            n.disk = static_cast<int>(i);
            n.angle = sn.angle;
            n.kind = sn.kind;
            views.push_back(n);
        }
    }
    return views;
}

struct GraphEdge {
    int to = -1;
    EdgeClass cls = EdgeClass::free_segment;
    double w = 0.0;
};

// Explicit complete graph over the discretization, used when the vertex
// count is small enough to store all pairs.
struct PathGraph {
    const Scene* scene = nullptr;
    double epsilon = 0.0;
    double tol = 0.0;
    std::shared_ptr<AvoidAllSolver> solver;
    std::vector<NodeView> nodes;
    std::vector<AvoidAllSolver::Attachment> attachments;
    std::vector<std::vector<GraphEdge>> adj;

    PricingContext pricing() const { return {scene, solver.get(), tol}; }
};

inline PathGraph build_graph(const Scene& scene, const SteinerSet& set) {
    PathGraph g;
    g.scene = &scene;
    g.epsilon = set.epsilon;
    g.tol = scene.tol();
    g.solver = std::make_shared<AvoidAllSolver>();
    g.solver->build(scene);
    g.nodes = flatten_nodes(scene, set);
    g.attachments.reserve(g.nodes.size());
    for (const NodeView& n : g.nodes) g.attachments.push_back(g.solver->attach(n.p));
    size_t v = g.nodes.size();
    g.adj.assign(v, {});
    PricingContext ctx = g.pricing();
    for (size_t i = 0; i < v; ++i) {
        for (size_t j = i + 1; j < v; ++j) {
            auto [cls, w] = price_edge(ctx, g.nodes[i], g.attachments[i],
                                       g.nodes[j], g.attachments[j]);
            g.adj[i].push_back({static_cast<int>(j), cls, w});
            g.adj[j].push_back({static_cast<int>(i), cls, w});
        }
    }
    return g;
}

// Adds a query point as a vertex, connected to every existing vertex.
// Returns the vertex id; a point coinciding with an existing vertex
// reuses that vertex instead of growing the graph.
inline int insert_terminal(PathGraph& g, Point p) {
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        if (dist(g.nodes[i].p, p) <= g.tol) return static_cast<int>(i);
    }
    NodeView n = classify_point(*g.scene, p);
    n.kind = NodeKind::terminal;
    AvoidAllSolver::Attachment at;
    at.p = p;
    if (n.inside < 0) at = g.solver->attach(p);
    int id = static_cast<int>(g.nodes.size());
    g.nodes.push_back(n);
    g.attachments.push_back(std::move(at));
    g.adj.emplace_back();
    PricingContext ctx = g.pricing();
    for (int i = 0; i < id; ++i) {
        auto [cls, w] = price_edge(ctx, g.nodes[i], g.attachments[i],
                                   g.nodes[id], g.attachments[id]);
        g.adj[i].push_back({id, cls, w});
        g.adj[id].push_back({i, cls, w});
    }
    return id;
}

// Emits the geometry realizing one edge, in u -> v travel direction.
inline void append_edge_geometry(WeightedPath& out, const Scene& sc,
                                 const AvoidAllSolver& solver, double tol,
                                 const NodeView& u, const NodeView& v, EdgeClass cls) {
    if (u.inside >= 0 || v.inside >= 0) {
        int iu = u.inside, iv = v.inside;
        bool single = (iu >= 0 && (iv == iu || (iv < 0 && v.disk == iu))) ||
                      (iv >= 0 && iu < 0 && u.disk == iv);
        if (!single) {
            Point x = u.p, y = v.p;
            if (iu >= 0) x = detail::interior_exit(sc.disks[iu], u.p, v.p);
            if (iv >= 0) y = detail::interior_exit(sc.disks[iv], v.p, u.p);
            if (iu >= 0) append_piece(out, make_segment(u.p, x, sc.disks[iu].weight, iu));
            if (dist(x, y) > tol) {
                if (segment_clear(sc, x, y, tol)) {
                    append_piece(out, make_segment(x, y));
                } else {
                    append_path(out, solver.path(x, y));
                }
            }
            if (iv >= 0) append_piece(out, make_segment(y, v.p, sc.disks[iv].weight, iv));
            return;
        }
        int di = iu >= 0 ? iu : iv;
        append_piece(out, make_segment(u.p, v.p, sc.disks[di].weight, di));
        return;
    }
    switch (cls) {
        case EdgeClass::boundary_arc: {
            const Disk& d = sc.disks[u.disk];
            append_piece(out, make_shorter_arc(d, u.disk, u.angle, v.angle, d.arc_multiplier()));
            return;
        }
        case EdgeClass::interior_chord: {
            append_piece(out, make_segment(u.p, v.p, sc.disks[u.disk].weight, u.disk));
            return;
        }
        case EdgeClass::free_segment:
            append_piece(out, make_segment(u.p, v.p));
            return;
        case EdgeClass::curved_detour:
            append_path(out, solver.path(u.p, v.p));
            return;
    }
}

// Runs Dijkstra between two vertex ids and reconstructs the geometric
// route. The returned path's weight is accumulated from its pieces.
inline WeightedPath shortest_path(const PathGraph& g, int s, int t) {
    int v = static_cast<int>(g.nodes.size());
    if (s < 0 || s >= v || t < 0 || t >= v)
        throw ValidationError(ValidationError::Kind::bad_query, "vertex id out of range");
    WeightedPath out;
    if (s == t) return out;
    auto res = dijkstra_adjacency(
        g.adj, [](const GraphEdge& e) { return std::pair<int, double>{e.to, e.w}; }, s, t);
    if (!(res.dist[t] < kInf))
        throw ValidationError(ValidationError::Kind::bad_query, "terminals unreachable");
    std::vector<int> chain = walk_parents(res, t);
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        int a = chain[i], b = chain[i + 1];
        const GraphEdge* used = nullptr;
        for (const GraphEdge& e : g.adj[a]) {
            if (e.to == b) { used = &e; break; }
        }
        append_edge_geometry(out, *g.scene, *g.solver, g.tol, g.nodes[a], g.nodes[b],
                             used ? used->cls : EdgeClass::free_segment);
    }
    return out;
}

namespace detail {

// Weighted length of one straight piece, re-derived from scratch: the
// segment is split at every circle crossing and each slice is rated by
// the disk that strictly contains its midpoint (rate 1 outside).
inline double audit_segment(const Scene& sc, Point a, Point b, double tol) {
    double len = dist(a, b);
    if (len <= 1e-15) return 0;
    std::vector<double> cuts{0.0, 1.0};
    for (const Disk& d : sc.disks) {
        for (double t : segment_circle_hits(a, b, d)) cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double span = (cuts[i + 1] - cuts[i]) * len;
        if (span <= 1e-15) continue;
        Point m = a + (b - a) * ((cuts[i] + cuts[i + 1]) / 2);
        double rate = 1.0;
        for (const Disk& d : sc.disks) {
            if (d.signed_distance(m) < -tol) {
                rate = d.weight;
                break;
            }
        }
        if (rate == kInf) return kInf;
        total += rate * span;
    }
    return total;
}

}  // namespace detail

// Independently re-prices a path from its geometry alone, ignoring the
// weights and multipliers stored on the pieces. Throws when consecutive
// pieces fail to share an endpoint or an arc leaves its circle.
inline double audit_path(const Scene& sc, const WeightedPath& path) {
    double tol = sc.tol();
    double total = 0;
    bool linked = false;
    Point prev{};
    for (const Piece& pc : path.pieces) {
        if (linked && dist(prev, pc.a) > 10 * tol)
            throw ValidationError(ValidationError::Kind::bad_query,
                                  "path pieces are not contiguous");
        prev = pc.b;
        linked = true;
        if (pc.kind == Piece::Kind::arc) {
            if (pc.disk < 0 || pc.disk >= static_cast<int>(sc.disks.size()))
                throw ValidationError(ValidationError::Kind::bad_query,
                                      "arc refers to no disk");
            const Disk& d = sc.disks[pc.disk];
            if (std::abs(dist(pc.a, d.center) - d.radius) > 10 * tol ||
                std::abs(dist(pc.b, d.center) - d.radius) > 10 * tol)
                throw ValidationError(ValidationError::Kind::bad_query,
                                      "arc endpoint is off its circle");
            double sweep = pc.ccw ? ccw_delta(pc.ang_a, pc.ang_b)
                                  : ccw_delta(pc.ang_b, pc.ang_a);
            total += std::min(1.0, d.weight) * d.radius * sweep;
        } else {
            double piece_total = detail::audit_segment(sc, pc.a, pc.b, tol);
            if (piece_total == kInf) return kInf;
            total += piece_total;
        }
    }
    return total;
}

struct RouteStats {
    size_t steiner_nodes = 0;
    size_t graph_nodes = 0;
    bool dense = false;  // implicit all-pairs mode, no stored edges
};

// Shortest route over an arbitrary placed vertex set plus two terminals,
// with the complete graph kept implicit: Dijkstra scans edge weights on
// demand instead of storing all pairs. Geometry is reconstructed only
// when `out` is non-null.
inline double dense_route(const Scene& scene, const AvoidAllSolver& solver,
                          std::vector<NodeView> views, Point s, Point t,
                          WeightedPath* out, size_t* node_count = nullptr) {
    double tol = scene.tol();
    auto place = [&](Point p) {
        for (size_t i = 0; i < views.size(); ++i) {
            if (dist(views[i].p, p) <= tol) return static_cast<int>(i);
        }
        NodeView n = classify_point(scene, p);
        n.kind = NodeKind::terminal;
        views.push_back(n);
        return static_cast<int>(views.size() - 1);
    };
    int si = place(s);
    int ti = place(t);
    if (node_count) *node_count = views.size();
    if (si == ti) return 0;
    std::vector<AvoidAllSolver::Attachment> att(views.size());
    for (size_t i = 0; i < views.size(); ++i) {
        att[i].p = views[i].p;
        if (views[i].inside < 0) att[i] = solver.attach(views[i].p);
    }
    PricingContext ctx{&scene, &solver, tol};
    auto weight = [&](int a, int b) {
        return price_edge(ctx, views[a], att[a], views[b], att[b]).second;
    };
    auto res = dijkstra_dense(static_cast<int>(views.size()), weight, si, ti);
    if (!(res.dist[ti] < kInf))
        throw ValidationError(ValidationError::Kind::bad_query, "terminals unreachable");
    if (out) {
        std::vector<int> chain = walk_parents(res, ti);
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            int a = chain[i], b = chain[i + 1];
            EdgeClass cls = price_edge(ctx, views[a], att[a], views[b], att[b]).first;
            append_edge_geometry(*out, scene, solver, tol, views[a], views[b], cls);
        }
    }
    return res.dist[ti];
}

// End-to-end query: discretize, connect, insert both terminals, route.
// Above `explicit_limit` vertices the complete graph is never stored;
// Dijkstra scans edge weights on demand with identical pricing.
inline WeightedPath approximate_route(const Scene& scene, double epsilon, Point s, Point t,
                                      RouteStats* stats = nullptr,
                                      size_t explicit_limit = 1500) {
    SteinerSet set = build_steiner_set(scene, epsilon);
    if (stats) {
        stats->steiner_nodes = set.total();
        stats->graph_nodes = set.total() + 2;
        stats->dense = false;
    }
    if (set.total() + 2 <= explicit_limit) {
        PathGraph g = build_graph(scene, set);
        int si = insert_terminal(g, s);
        int ti = insert_terminal(g, t);
        if (stats) stats->graph_nodes = g.nodes.size();
        return shortest_path(g, si, ti);
    }

    AvoidAllSolver solver;
    solver.build(scene);
    WeightedPath out;
    size_t count = 0;
    dense_route(scene, solver, flatten_nodes(scene, set), s, t, &out, &count);
    if (stats) {
        stats->graph_nodes = count;
        stats->dense = true;
    }
    return out;
}

}  // namespace diskpaths
