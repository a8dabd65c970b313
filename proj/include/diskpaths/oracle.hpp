#pragma once

#include <cmath>
#include <vector>

#include "diskpaths/pathgraph.hpp"

namespace diskpaths {

namespace detail {

// Uniform angular grid, ⌈2π/h⌉ vertices per disk starting at phase 0.
// Deliberately ignores the adaptive placement scheme so the two node
// layouts are independent; pricing is shared.
inline std::vector<NodeView> grid_views(const Scene& scene, double h) {
    std::vector<NodeView> views;
    for (size_t i = 0; i < scene.disks.size(); ++i) {
        const Disk& d = scene.disks[i];
        int m = static_cast<int>(std::ceil(2 * kPi / h));
        for (int l = 0; l < m; ++l) {
            NodeView n;
            n.p = d.boundary_point(l * h);
            n.disk = static_cast<int>(i);
            n.angle = l * h;
            n.kind = NodeKind::ring_point;
            views.push_back(n);
        }
    }
    return views;
}

}  // namespace detail

// Brute-force reference: shortest route over the uniform grid. An upper
// bound on the true optimum, decreasing as h shrinks (phase-0 grids nest
// when h halves).
inline double reference_optimum(const Scene& scene, Point s, Point t, double h) {
    if (!(h > 0))
        throw ValidationError(ValidationError::Kind::bad_parameter,
                              "grid spacing must be positive");
    validate(scene);
    AvoidAllSolver solver;
    solver.build(scene);
    return dense_route(scene, solver, detail::grid_views(scene, h), s, t, nullptr);
}

// Slack the grid itself is allowed: its optimum can only overshoot the
// true one, by an amount that shrinks linearly with the spacing.
inline double grid_allowance(const Scene& scene, double h, double reference) {
    double sum_r = 0;
    for (const Disk& d : scene.disks) sum_r += d.radius;
    if (!(reference > 0)) return 0;
    return 5 * h * sum_r / reference;
}

// Adaptive route weight divided by the grid reference. The acceptance
// suite asserts this stays within (1+ε)·(1+grid_allowance).
inline double approximation_ratio(const Scene& scene, Point s, Point t, double epsilon,
                                  double h) {
    if (!(h <= epsilon / 100 + 1e-15))
        throw ValidationError(ValidationError::Kind::bad_parameter,
                              "grid spacing too coarse for the requested epsilon");
    WeightedPath route = approximate_route(scene, epsilon, s, t);
    double ref = reference_optimum(scene, s, t, h);
    if (!(ref > 0)) return 1;
    return route.weight / ref;
}

}  // namespace diskpaths
