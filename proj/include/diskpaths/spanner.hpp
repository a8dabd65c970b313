#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "diskpaths/pathgraph.hpp"

namespace diskpaths {

// Sparse cone graph over the same vertices as the complete path graph.
// Each vertex keeps at most one selection per cone, 2k cones of angle
// π/k, so the edge count is at most 2k·|V| instead of |V|².
struct YaoGraph {
    int k = 0;
    std::vector<NodeView> nodes;
    std::vector<std::vector<GraphEdge>> adj;
    size_t edge_count = 0;  // undirected edges kept
};

// Worst-case stretch the cone construction guarantees: 1/(1 − 2 sin(θ/2))
// with θ = π/k. Finite and above 1 for every k ≥ 4.
inline double yao_stretch_bound(int k) {
    return 1.0 / (1.0 - 2.0 * std::sin(kPi / (2.0 * k)));
}

inline YaoGraph build_yao(const Scene& scene, const SteinerSet& set, int k) {
    if (k < 4)
        throw ValidationError(ValidationError::Kind::bad_parameter,
                              "cone parameter k must be at least 4");
    validate(scene);
    YaoGraph y;
    y.k = k;
    y.nodes = flatten_nodes(scene, set);
    int v = static_cast<int>(y.nodes.size());
    y.adj.assign(v, {});

    AvoidAllSolver solver;
    solver.build(scene);
    double tol = scene.tol();
    PricingContext ctx{&scene, &solver, tol};
    std::vector<AvoidAllSolver::Attachment> att;
    att.reserve(v);
    for (const NodeView& n : y.nodes) att.push_back(solver.attach(n.p));

    double theta = kPi / k;
    int cones = 2 * k;
    struct Best {
        int vertex = -1;
        double disk_dist = 0;
        int disk = 0;
        double len = 0;
        double ang = 0;
    };
    std::vector<Best> best(cones);
    std::vector<std::pair<int, int>> picks;
    for (int u = 0; u < v; ++u) {
        const NodeView& nu = y.nodes[u];
        // First cone boundary lies on the tangent at u; a vertex on no
        // disk falls back to the +x axis. Cones are numbered clockwise
        // and half-open on their leading ray.
        double start = nu.disk >= 0 ? nu.angle + kPi / 2 : 0.0;
        std::fill(best.begin(), best.end(), Best{});
        for (int w = 0; w < v; ++w) {
            if (w == u) continue;
            const NodeView& nw = y.nodes[w];
            bool visible = (nu.disk >= 0 && nu.disk == nw.disk) ||
                           segment_clear(scene, nu.p, nw.p, tol);
            if (!visible) continue;
            double off = normalize_angle(start - direction(nu.p, nw.p));
            int cone = std::min(static_cast<int>(off / theta), cones - 1);
            const Disk& dw = scene.disks[nw.disk];
            double dd = std::max(0.0, dist(nu.p, dw.center) - dw.radius);
            double len = dist(nu.p, nw.p);
            Best& b = best[cone];
            bool take;
            if (b.vertex < 0) {
                take = true;
            } else if (dd != b.disk_dist) {
                take = dd < b.disk_dist;
            } else if (nw.disk != b.disk) {
                take = nw.disk < b.disk;
            } else if (len != b.len) {
                take = len < b.len;
            } else {
                take = nw.angle < b.ang;
            }
            if (take) b = {w, dd, nw.disk, len, nw.angle};
        }
        for (const Best& b : best) {
            if (b.vertex >= 0)
                picks.emplace_back(std::min(u, b.vertex), std::max(u, b.vertex));
        }
    }
    std::sort(picks.begin(), picks.end());
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
    for (auto [a, b] : picks) {
        auto [cls, w] = price_edge(ctx, y.nodes[a], att[a], y.nodes[b], att[b]);
        y.adj[a].push_back({b, cls, w});
        y.adj[b].push_back({a, cls, w});
    }
    y.edge_count = picks.size();
    return y;
}

// Worst all-pairs stretch of the sparse graph against the complete one.
// Throws when the two graphs do not share their vertex set.
inline double spanning_audit(const YaoGraph& y, const PathGraph& g) {
    size_t v = y.nodes.size();
    if (v != g.nodes.size())
        throw ValidationError(ValidationError::Kind::bad_parameter,
                              "vertex sets differ in size");
    for (size_t i = 0; i < v; ++i) {
        if (dist(y.nodes[i].p, g.nodes[i].p) > g.tol)
            throw ValidationError(ValidationError::Kind::bad_parameter,
                                  "vertex sets differ");
    }
    if (v < 2) return 1;
    // All-pairs distances of the complete graph via Floyd-Warshall on a
    // dense matrix: one cubic pass shared by every source, with a much
    // smaller constant than per-source Dijkstra on a graph this dense.
    std::vector<double> w(v * v, kInf);
    for (size_t i = 0; i < v; ++i) {
        w[i * v + i] = 0;
        for (const GraphEdge& e : g.adj[i]) w[i * v + e.to] = e.w;
    }
    for (size_t k = 0; k < v; ++k) {
        const double* wk = &w[k * v];
        for (size_t i = 0; i < v; ++i) {
            double wik = w[i * v + k];
            if (wik == kInf) continue;
            double* wi = &w[i * v];
            for (size_t j = 0; j < v; ++j) {
                double cand = wik + wk[j];
                if (cand < wi[j]) wi[j] = cand;
            }
        }
    }
    auto proj = [](const GraphEdge& e) { return std::pair<int, double>{e.to, e.w}; };
    double worst = 1;
    for (size_t s = 0; s < v; ++s) {
        auto dy = dijkstra_adjacency(y.adj, proj, static_cast<int>(s));
        for (size_t t = s + 1; t < v; ++t) {
            if (w[s * v + t] <= g.tol) continue;
            worst = std::max(worst, dy.dist[t] / w[s * v + t]);
        }
    }
    return worst;
}

}  // namespace diskpaths
