#pragma once

// Steiner-point construction. Every positive-weight disk gets evenly
// spaced vicinity centers; each center owns a ladder of ring points
// whose inscribed-angle gaps shrink geometrically toward the center,
// thinned to the annulus where they matter. Zero-weight disks get
// centers only, spaced so that the free interior absorbs the error.
// The count bounds promised by the construction are evaluated in
// predicted_counts so tests and the bench command can compare them
// against what was actually enumerated.

#include "diskpaths/scene.hpp"

namespace diskpaths {

enum class NodeKind { vicinity_center, ring_point, terminal };

inline const char* node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::vicinity_center: return "vicinity_center";
        case NodeKind::ring_point: return "ring_point";
        default: return "terminal";
    }
}

struct SteinerNode {
    int disk = -1;
    double angle = 0.0;
    NodeKind kind = NodeKind::ring_point;
    int vicinity = -1;  // index of the owning center in its disk's center list
};

// Angular gap between consecutive vicinity centers of a zero-weight
// disk: eps * d / (a * (d + 1)).
inline double zero_weight_gap(const Scene& scene, size_t i, double eps) {
    double d = clearance(scene, i);
    double a = global_constants(scene).a;
    return eps * d / (a * (d + 1));
}

// Decay factor of the ring-point gap sequence: each inscribed-angle gap
// is the previous one times q = 1 - 2*w*eps/(a*pi).
inline double ring_decay(const Scene& scene, size_t i, double eps) {
    double w = scene.disks[i].effective_weight();
    double a = global_constants(scene).a;
    return 1 - 2 * w * eps / (a * kPi);
}

inline std::vector<double> vicinity_centers(const Scene& scene, size_t i, double eps) {
    const Disk& d = scene.disks[i];
    std::vector<double> out;
    if (d.weight == 0) {
        // Largest k with (k-1) * gap < 2*pi, centers at multiples of the gap.
        double gap = zero_weight_gap(scene, i, eps);
        int k = static_cast<int>(std::floor(2 * kPi / gap)) + 1;
        while (k > 1 && (k - 1) * gap >= 2 * kPi) --k;
        out.reserve(k);
        for (int j = 0; j < k; ++j) out.push_back(j * gap);
    } else {
        double alpha = weighted_angular_radius(scene, i);
        int k = static_cast<int>(std::floor(kPi / (2 * alpha)));
        out.reserve(k);
        for (int j = 0; j < k; ++j) out.push_back(2 * kPi * j / k);
    }
    return out;
}

struct RingPlacement {
    std::vector<double> kept;  // boundary angles surviving the annulus filter
    int placed = 0;            // 2r+1 candidates, diametric point included
    int r = 0;                 // ladder length per half-disk
    double q = 0.0;
};

// Ring points owned by the vicinity center at boundary angle phi on
// disk i. A candidate at ladder index l (l = 1..r, mirrored on both
// half-disks) has cumulative inscribed angle A = (pi/2)(1 - q^l) at the
// center, so it sits at central angle pi - 2A from phi and its chord to
// the center has length 2R cos A. Kept iff that chord lies in
// [2R sin(alpha), 2R sin(2*alpha)].
inline RingPlacement ring_points(const Scene& scene, size_t i, double eps, double phi) {
    double alpha = weighted_angular_radius(scene, i);
    RingPlacement out;
    out.q = ring_decay(scene, i, eps);
    out.r = static_cast<int>(std::floor(std::log(2 * alpha / kPi) / std::log(out.q)));
    out.placed = 2 * out.r + 1;
    // Cumulative angle window that lands inside the annulus.
    double lo = kPi / 2 - 2 * alpha, hi = kPi / 2 - alpha;
    double slack = 1e-12 * kPi;
    for (int l = 1; l <= out.r; ++l) {
        double A = (kPi / 2) * (1 - std::pow(out.q, l));
        if (A < lo - slack || A > hi + slack) continue;
        out.kept.push_back(normalize_angle(phi + (kPi - 2 * A)));
        out.kept.push_back(normalize_angle(phi - (kPi - 2 * A)));
    }
    return out;
}

struct DiskNodes {
    int k = 0;                  // vicinity center count
    int r = 0;                  // ring ladder length per half (0 for w=0)
    int placed_per_vicinity = 0;
    int kept_ring = 0;          // annulus survivors before dedup, all vicinities
    std::vector<SteinerNode> nodes;  // deduplicated, sorted by angle
};

struct SteinerSet {
    double epsilon = 0.0;
    std::vector<DiskNodes> per_disk;

    size_t total() const {
        size_t n = 0;
        for (const auto& d : per_disk) n += d.nodes.size();
        return n;
    }
};

// Merge nodes closer than arc distance tau along the boundary; a
// cluster containing a vicinity center survives as that center.
inline std::vector<SteinerNode> dedup_nodes(std::vector<SteinerNode> nodes, double radius,
                                            double tau) {
    if (nodes.size() < 2) return nodes;
    std::sort(nodes.begin(), nodes.end(), [](const SteinerNode& a, const SteinerNode& b) {
        return a.angle < b.angle || (a.angle == b.angle && a.kind < b.kind);
    });
    double ang_tol = tau / radius;
    std::vector<std::vector<SteinerNode>> clusters;
    for (const SteinerNode& n : nodes) {
        if (!clusters.empty() && n.angle - clusters.back().back().angle < ang_tol) {
            clusters.back().push_back(n);
        } else {
            clusters.push_back({n});
        }
    }
    // The boundary is circular: the last cluster may wrap onto the first.
    if (clusters.size() > 1 &&
        clusters.front().front().angle + 2 * kPi - clusters.back().back().angle < ang_tol) {
        auto& first = clusters.front();
        first.insert(first.end(), clusters.back().begin(), clusters.back().end());
        clusters.pop_back();
    }
    std::vector<SteinerNode> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) {
        const SteinerNode* pick = &c.front();
        for (const SteinerNode& n : c) {
            if (n.kind == NodeKind::vicinity_center && pick->kind != NodeKind::vicinity_center) {
                pick = &n;
            }
        }
        out.push_back(*pick);
    }
    std::sort(out.begin(), out.end(),
              [](const SteinerNode& a, const SteinerNode& b) { return a.angle < b.angle; });
    return out;
}

inline SteinerSet build_steiner_set(const Scene& scene, double eps) {
    if (!(eps > 0) || eps > 1) {
        throw ValidationError(ValidationError::Kind::bad_parameter,
                              "epsilon must lie in (0, 1]");
    }
    validate(scene);
    SteinerSet set;
    set.epsilon = eps;
    set.per_disk.resize(scene.disks.size());
    for (size_t i = 0; i < scene.disks.size(); ++i) {
        const Disk& disk = scene.disks[i];
        DiskNodes& dn = set.per_disk[i];
        std::vector<double> centers = vicinity_centers(scene, i, eps);
        dn.k = static_cast<int>(centers.size());
        std::vector<SteinerNode> raw;
        for (int j = 0; j < dn.k; ++j) {
            raw.push_back({disk.id, centers[j], NodeKind::vicinity_center, j});
        }
        if (disk.weight > 0) {
            for (int j = 0; j < dn.k; ++j) {
                RingPlacement rp = ring_points(scene, i, eps, centers[j]);
                dn.r = rp.r;
                dn.placed_per_vicinity = rp.placed;
                dn.kept_ring += static_cast<int>(rp.kept.size());
                for (double ang : rp.kept) {
                    raw.push_back({disk.id, ang, NodeKind::ring_point, j});
                }
            }
        }
        dn.nodes = dedup_nodes(std::move(raw), disk.radius, scene.tol());
    }
    return set;
}

// Closed-form count bounds the construction is supposed to respect.
struct CountBounds {
    struct PerDisk {
        double per_vicinity = kInf;  // bound on ring points per vicinity ladder
        double per_disk = kInf;      // bound on centers + kept ring points
    };
    std::vector<PerDisk> per_disk;
    double big_c = 0.0;       // the scene constant C
    double total = 0.0;       // C * n / eps
};

inline CountBounds predicted_counts(const Scene& scene, double eps) {
    CountBounds out;
    out.per_disk.resize(scene.disks.size());
    double a = global_constants(scene).a;
    double max_r = 0, min_r = kInf, min_d = kInf, min_w = 1.0;
    for (size_t i = 0; i < scene.disks.size(); ++i) {
        const Disk& d = scene.disks[i];
        max_r = std::max(max_r, d.radius);
        min_r = std::min(min_r, d.radius);
        min_d = std::min(min_d, clearance(scene, i));
        if (d.weight > 0) min_w = std::min(min_w, d.effective_weight());
        if (d.weight > 0) {
            double alpha = weighted_angular_radius(scene, i);
            double q = ring_decay(scene, i, eps);
            out.per_disk[i].per_vicinity = 2 * (1 + std::log2(alpha / kPi)) / std::log2(q) + 1;
            out.per_disk[i].per_disk = (kPi / alpha) / std::log2(1 / q);
        }
    }
    double denom = std::min(1.0, min_w * min_w) *
                   std::min({1.0, min_d * min_d, min_r * min_r});
    out.big_c = 2 * a * kPi * kPi * kPi * (max_r + 1) / denom;
    out.total = out.big_c * static_cast<double>(scene.disks.size()) / eps;
    return out;
}

}  // namespace diskpaths
