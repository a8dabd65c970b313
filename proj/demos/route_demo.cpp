// Builds a small mixed-weight scene in code, routes across it at a few
// accuracies, and writes an SVG picture of the best route next to the
// executable. Run it with no arguments.

#include <cstdio>
#include <fstream>

#include "diskpaths/pathgraph.hpp"
#include "diskpaths/svg.hpp"

using namespace diskpaths;

int main() {
    Scene sc;
    sc.disks.push_back({0, {0.0, 0.0}, 1.5, 0.0});    // free transit
    sc.disks.push_back({1, {4.5, 0.5}, 1.0, 0.4});    // cheap interior
    sc.disks.push_back({2, {2.0, -3.5}, 1.2, kInf});  // impassable
    sc.disks.push_back({3, {6.5, -2.5}, 0.8, 1.0});   // same cost as free space
    sc.query = Query{{-3.0, -1.0}, {8.5, 0.5}};

    Point s = sc.query->s, t = sc.query->t;
    std::printf("routing (%g, %g) -> (%g, %g) through %zu disks\n", s.x, s.y, t.x, t.y,
                sc.disks.size());

    WeightedPath best;
    for (double eps : {1.0, 0.5, 0.25}) {
        RouteStats st;
        WeightedPath path = approximate_route(sc, eps, s, t, &st);
        std::printf("  eps=%-5g weight=%.9f euclidean=%.9f nodes=%zu%s\n", eps, path.weight,
                    path.euclidean, st.graph_nodes, st.dense ? " (dense)" : "");
        best = path;
    }
    std::printf("  audit of the last route: %.9f\n", audit_path(sc, best));

    SteinerSet set = build_steiner_set(sc, 0.25);
    std::ofstream svg("route_demo.svg");
    svg << render_svg(sc, &best, &set);
    std::printf("wrote route_demo.svg\n");
    return 0;
}
