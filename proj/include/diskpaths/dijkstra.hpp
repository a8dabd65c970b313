#pragma once

// Two Dijkstra variants. The adjacency-list version serves the explicit
// graphs (path graph, visibility graph, Yao graph). The dense version
// walks an implicit complete graph whose edge weights are computed on
// demand, which keeps memory flat when the node count climbs into the
// tens of thousands (reference grids, fine discretizations).

#include <queue>

#include "diskpaths/geometry.hpp"

namespace diskpaths {

struct DijkstraResult {
    std::vector<double> dist;
    std::vector<int> parent;
};

// adj[u] iterates over edges; proj(edge) -> {target, weight}.
template <class EdgeList, class Proj>
DijkstraResult dijkstra_adjacency(const std::vector<EdgeList>& adj, Proj proj, int source,
                                  int target = -1) {
    size_t n = adj.size();
    DijkstraResult res{std::vector<double>(n, kInf), std::vector<int>(n, -1)};
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    res.dist[source] = 0;
    pq.push({0.0, source});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > res.dist[u]) continue;
        if (u == target) break;
        for (const auto& e : adj[u]) {
            auto [v, w] = proj(e);
            double nd = d + w;
            if (nd < res.dist[v]) {
                res.dist[v] = nd;
                res.parent[v] = u;
                pq.push({nd, v});
            }
        }
    }
    return res;
}

// O(V^2) scan-minimum Dijkstra over an implicit complete graph.
// weight(u, v) may return infinity; it is called once per settled
// source node and unsettled partner. Stops early once target settles.
template <class WeightFn>
DijkstraResult dijkstra_dense(int n, WeightFn&& weight, int source, int target = -1) {
    DijkstraResult res{std::vector<double>(n, kInf), std::vector<int>(n, -1)};
    std::vector<char> done(static_cast<size_t>(n), 0);
    res.dist[source] = 0;
    for (int round = 0; round < n; ++round) {
        int u = -1;
        double best = kInf;
        for (int v = 0; v < n; ++v) {
            if (!done[v] && res.dist[v] < best) {
                best = res.dist[v];
                u = v;
            }
        }
        if (u < 0) break;
        done[u] = 1;
        if (u == target) break;
        for (int v = 0; v < n; ++v) {
            if (done[v]) continue;
            double nd = best + weight(u, v);
            if (nd < res.dist[v]) {
                res.dist[v] = nd;
                res.parent[v] = u;
            }
        }
    }
    return res;
}

inline std::vector<int> walk_parents(const DijkstraResult& res, int target) {
    std::vector<int> chain;
    for (int v = target; v != -1; v = res.parent[v]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

}  // namespace diskpaths
