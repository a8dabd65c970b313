#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "diskpaths/obstacle_exact.hpp"
#include "diskpaths/oracle.hpp"
#include "diskpaths/pathgraph.hpp"
#include "diskpaths/spanner.hpp"

namespace diskpaths {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

namespace verify_detail {

inline double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

inline unsigned suggested_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    if (hc == 0) hc = 1;
    return std::min(hc, 8u);
}

template <class Fn>
inline void parallel_for(size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    unsigned spawn = static_cast<unsigned>(std::min<size_t>(threads, count));
    for (unsigned i = 0; i < spawn; ++i) {
        pool.emplace_back([&] {
            for (size_t j; (j = next.fetch_add(1)) < count;) fn(j);
        });
    }
    for (auto& th : pool) th.join();
}

inline std::string fmt(const char* pattern, double a, double b = 0, double c = 0,
                       double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

struct SceneCase {
    Scene scene;
    Point s{};
    Point t{};
};

struct AuditItem {
    Scene scene;
    WeightedPath path;
    std::string source;
};

struct Suite {
    bool quick = false;
    unsigned threads = suggested_threads();
    std::vector<SceneCase> scenes3;
    std::vector<std::array<double, 2>> route3;  // route weight per (case, epsilon index)
    std::vector<AuditItem> audits;
};

inline Point polar(double r, double ang) { return {r * std::cos(ang), r * std::sin(ang)}; }

// Random non-overlapping scene: disks placed one by one, each anchored to
// an earlier disk at a sampled boundary gap, rejecting placements that
// crowd anyone else below gap_lo.
inline Scene random_scene(std::mt19937_64& rng, int n, double gap_lo, double gap_hi,
                          const std::vector<double>& weights) {
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    std::uniform_real_distribution<double> gap(gap_lo, gap_hi);
    std::uniform_real_distribution<double> angle(0, 2 * kPi);
    Scene sc;
    for (int i = 0; i < n; ++i) {
        Disk d;
        d.id = i;
        d.radius = radius(rng);
        d.weight = weights[rng() % weights.size()];
        if (i == 0) {
            d.center = {0, 0};
        } else {
            bool placed = false;
            for (int attempt = 0; attempt < 256 && !placed; ++attempt) {
                const Disk& anchor = sc.disks[rng() % sc.disks.size()];
                double reach = anchor.radius + gap(rng) + d.radius;
                d.center = anchor.center + polar(reach, angle(rng));
                placed = true;
                for (const Disk& o : sc.disks) {
                    if (dist(d.center, o.center) - d.radius - o.radius < gap_lo) {
                        placed = false;
                        break;
                    }
                }
            }
            if (!placed) d.center = {100.0 + 50.0 * i, 0};
        }
        sc.disks.push_back(d);
    }
    validate(sc);
    return sc;
}

// Uniform point in the scene's padded bounding box, at least `margin`
// outside every disk.
inline Point random_free_point(std::mt19937_64& rng, const Scene& sc, double margin) {
    double lo_x = kInf, lo_y = kInf, hi_x = -kInf, hi_y = -kInf;
    for (const Disk& d : sc.disks) {
        lo_x = std::min(lo_x, d.center.x - d.radius);
        lo_y = std::min(lo_y, d.center.y - d.radius);
        hi_x = std::max(hi_x, d.center.x + d.radius);
        hi_y = std::max(hi_y, d.center.y + d.radius);
    }
    std::uniform_real_distribution<double> ux(lo_x - 4, hi_x + 4);
    std::uniform_real_distribution<double> uy(lo_y - 4, hi_y + 4);
    for (;;) {
        Point p{ux(rng), uy(rng)};
        bool ok = true;
        for (const Disk& d : sc.disks) {
            if (d.signed_distance(p) < margin) {
                ok = false;
                break;
            }
        }
        if (ok) return p;
    }
}

inline CriterionResult run_criterion_1(Suite& su) {
    CriterionResult r{1, "obstacle exactness", false, "", 0};
    double t0 = now_seconds();
    Scene sc;
    sc.disks.push_back({0, {0, 0}, 1.0, kInf});
    validate(sc);
    Point s{-2, 0}, t{2, 0};
    double expected = 2 * std::sqrt(3.0) + kPi / 3;

    double e0 = now_seconds();
    WeightedPath path = exact_path(sc, s, t);
    double exact_seconds = now_seconds() - e0;

    double rel = std::abs(path.weight - expected) / expected;
    double ref = reference_optimum(sc, s, t, 1e-3);
    double grid_rel = std::abs(ref - expected) / expected;

    bool ok_value = rel <= 1e-9;
    bool ok_time = exact_seconds < 0.1;
    bool ok_grid = grid_rel <= 1e-4;
    r.pass = ok_value && ok_time && ok_grid;
    r.detail = fmt("weight %.12f vs 2sqrt(3)+pi/3 (rel %.2e), exact call %.4f s, ", path.weight,
                   rel, exact_seconds) +
               fmt("grid ref rel %.2e", grid_rel);
    su.audits.push_back({sc, path, "criterion 1 exact"});
    r.seconds = now_seconds() - t0;
    return r;
}

inline CriterionResult run_criterion_2(Suite& su) {
    CriterionResult r{2, "zero-weight closed form", false, "", 0};
    double t0 = now_seconds();
    Scene sc;
    sc.disks.push_back({0, {0, 0}, 1.0, 0.0});
    validate(sc);
    const Disk& disk = sc.disks[0];
    int samples = su.quick ? 5 : 20;
    const double eps_list[3] = {1.0, 0.5, 0.25};
    std::mt19937_64 rng(611953);
    std::uniform_real_distribution<double> uang(0, 2 * kPi);
    std::uniform_real_distribution<double> urad(2.0, 6.0);
    int bad_exact = 0, bad_route = 0;
    double worst_rel = 0, worst_ratio = 0;
    std::vector<Point> ss(samples), ts(samples);
    std::vector<double> expects(samples);
    for (int i = 0; i < samples; ++i) {
        ss[i] = disk.boundary_point(uang(rng));
        ts[i] = polar(urad(rng), uang(rng));
        expects[i] = dist(ts[i], disk.center) - disk.radius;
        double exact = single_disk_optimum(disk, ss[i], ts[i]);
        double rel = std::abs(exact - expects[i]) / expects[i];
        worst_rel = std::max(worst_rel, rel);
        if (rel > 1e-9) ++bad_exact;
    }
    // One complete graph per epsilon; each sample routes on a copy so
    // terminals never accumulate across samples.
    for (double eps : eps_list) {
        SteinerSet set = build_steiner_set(sc, eps);
        PathGraph base = build_graph(sc, set);
        for (int i = 0; i < samples; ++i) {
            PathGraph g = base;
            int si = insert_terminal(g, ss[i]);
            int ti = insert_terminal(g, ts[i]);
            WeightedPath route = shortest_path(g, si, ti);
            double ratio = route.weight / expects[i];
            worst_ratio = std::max(worst_ratio, ratio / (1 + eps));
            if (route.weight > (1 + eps) * expects[i] * (1 + 1e-12)) ++bad_route;
            su.audits.push_back({sc, route, fmt("criterion 2 sample %.0f eps %.2f", i, eps)});
        }
    }
    r.seconds = now_seconds() - t0;
    bool ok_time = r.seconds < 1.0;
    r.pass = bad_exact == 0 && bad_route == 0 && ok_time;
    r.detail = fmt("%.0f samples: closed-form worst rel %.2e, ", samples, worst_rel) +
               fmt("worst route/bound %.6f, %.2f s", worst_ratio, r.seconds);
    return r;
}

inline CriterionResult run_criterion_3(Suite& su) {
    CriterionResult r{3, "approximation ratio vs grid reference", false, "", 0};
    double t0 = now_seconds();
    int count = su.quick ? 10 : 50;
    const std::vector<double> palette{0.0, 0.3, 1.0, 1.4, kPi / 2};
    const double eps_list[2] = {0.5, 0.25};

    std::mt19937_64 rng(902117);
    su.scenes3.clear();
    for (int i = 0; i < count; ++i) {
        SceneCase cs;
        cs.scene = random_scene(rng, 1 + i % 3, 3.0, 6.0, palette);
        cs.s = random_free_point(rng, cs.scene, 0.2);
        cs.t = random_free_point(rng, cs.scene, 0.2);
        su.scenes3.push_back(std::move(cs));
    }
    su.route3.assign(count, {0, 0});

    struct CaseOut {
        bool ok = true;
        std::string note;
        double worst_slack = kInf;  // bound minus ratio, most negative is worst
        std::vector<AuditItem> audits;
    };
    std::vector<CaseOut> outs(count);
    parallel_for(count, su.threads, [&](size_t i) {
        CaseOut& co = outs[i];
        const SceneCase& cs = su.scenes3[i];
        try {
            for (int e = 0; e < 2; ++e) {
                double eps = eps_list[e];
                double h = eps / 100;
                WeightedPath route = approximate_route(cs.scene, eps, cs.s, cs.t);
                double ref = reference_optimum(cs.scene, cs.s, cs.t, h);
                double delta = grid_allowance(cs.scene, h, ref);
                double ratio = route.weight / ref;
                double bound = (1 + eps) * (1 + delta);
                co.worst_slack = std::min(co.worst_slack, bound - ratio);
                if (ratio > bound + 1e-12 || ratio < 1 - delta - 1e-12) {
                    co.ok = false;
                    co.note = fmt("case %.0f eps %.2f: ratio %.9f vs bound %.9f", i, eps,
                                  ratio, bound);
                }
                su.route3[i][e] = route.weight;
                co.audits.push_back(
                    {cs.scene, route, fmt("criterion 3 case %.0f eps %.2f", i, eps)});
            }
        } catch (const std::exception& ex) {
            co.ok = false;
            co.note = std::string("exception: ") + ex.what();
        }
    });

    int bad = 0;
    std::string first_bad;
    double worst_slack = kInf;
    for (CaseOut& co : outs) {
        if (!co.ok) {
            ++bad;
            if (first_bad.empty()) first_bad = co.note;
        }
        worst_slack = std::min(worst_slack, co.worst_slack);
        for (AuditItem& a : co.audits) su.audits.push_back(std::move(a));
    }
    r.seconds = now_seconds() - t0;
    bool ok_time = r.seconds < 300.0;
    r.pass = bad == 0 && ok_time;
    r.detail = fmt("%.0f scenes x 2 epsilons: ", count) +
               (bad ? first_bad + fmt(" (%.0f failing)", bad)
                    : fmt("all within bound, tightest slack %.6f", worst_slack)) +
               fmt(", %.1f s", r.seconds);
    return r;
}

inline CriterionResult run_criterion_4(Suite& su) {
    CriterionResult r{4, "node-count bounds", false, "", 0};
    double t0 = now_seconds();
    int count = su.quick ? 50 : 200;
    std::mt19937_64 rng(77003);
    std::uniform_real_distribution<double> uradius(0.5, 2.0);
    std::uniform_real_distribution<double> ugap(0.3, 8.0);
    std::uniform_real_distribution<double> uweight(0.05, kPi / 2);
    std::uniform_real_distribution<double> upick(0, 1);
    const double eps_list[3] = {1.0, 0.5, 0.25};

    int bad_vicinity = 0, bad_disk = 0, bad_total = 0;
    std::string example_vicinity, example_disk, example_total;
    for (int i = 0; i < count; ++i) {
        double radius = uradius(rng);
        double gap = ugap(rng);
        double pick = upick(rng);
        double w = pick < 0.2 ? 0.0 : pick < 0.8 ? uweight(rng) : pick < 0.9 ? kPi / 2 : kInf;
        double eps = eps_list[i % 3];
        Scene sc;
        sc.disks.push_back({0, {0, 0}, radius, w});
        sc.disks.push_back({1, {radius + gap + 1.0, 0}, 1.0, 1.0});
        validate(sc);
        SteinerSet set = build_steiner_set(sc, eps);
        CountBounds bounds = predicted_counts(sc, eps);
        const DiskNodes& dn = set.per_disk[0];
        if (w > 0) {
            if (dn.placed_per_vicinity > bounds.per_disk[0].per_vicinity) {
                ++bad_vicinity;
                if (example_vicinity.empty())
                    example_vicinity =
                        fmt("R=%.3f d=%.3f w=%.4f", radius, gap, w) +
                        fmt(" eps=%.2f: %.0f > %.6f", eps,
                            static_cast<double>(dn.placed_per_vicinity),
                            bounds.per_disk[0].per_vicinity);
            }
            int kept_ring = 0;
            for (const SteinerNode& sn : dn.nodes)
                if (sn.kind == NodeKind::ring_point) ++kept_ring;
            if (kept_ring > bounds.per_disk[0].per_disk) {
                ++bad_disk;
                if (example_disk.empty())
                    example_disk = fmt("R=%.3f d=%.3f w=%.4f", radius, gap, w) +
                                   fmt(" eps=%.2f: %.0f > %.6f", eps,
                                       static_cast<double>(kept_ring),
                                       bounds.per_disk[0].per_disk);
            }
        }
        if (static_cast<double>(set.total()) > bounds.total) {
            ++bad_total;
            if (example_total.empty())
                example_total = fmt("R=%.3f d=%.3f w=%.4f eps=%.2f", radius, gap, w, eps);
        }
    }
    r.seconds = now_seconds() - t0;
    bool ok_time = r.seconds < 10.0;
    r.pass = bad_vicinity == 0 && bad_disk == 0 && bad_total == 0 && ok_time;
    r.detail = fmt("%.0f configs: ", count) +
               fmt("per-vicinity %.0f, per-disk %.0f, total %.0f violations", bad_vicinity,
                   bad_disk, bad_total);
    if (!example_vicinity.empty()) r.detail += "; vicinity ex: " + example_vicinity;
    if (!example_disk.empty()) r.detail += "; per-disk ex: " + example_disk;
    if (!example_total.empty()) r.detail += "; total ex: " + example_total;
    r.detail += fmt(", %.2f s", r.seconds);
    return r;
}

inline CriterionResult run_criterion_5(Suite&) {
    CriterionResult r{5, "boundary-path numeric inequalities", false, "", 0};
    double t0 = now_seconds();
    int bad_a = 0, bad_b = 0;
    // (a) at weight pi/2 the shorter arc never loses to the weighted chord
    double w_half = kPi / 2;
    for (int i = 0; i <= 10000; ++i) {
        double theta = (kPi / 2) * i / 10000;
        double arc = kPi - 2 * theta;              // R (pi - 2 theta), R = 1
        double chord = 2 * w_half * std::cos(theta);
        if (arc > chord + 1e-12) ++bad_a;
    }
    // (b) leaving the boundary tangentially and coming back never beats
    // the better of the straight chord and the boundary arc
    for (int wi = 0; wi < 100; ++wi) {
        double w = 1.0 + (wi + 0.5) / 100 * (kPi / 2 - 1.0);
        for (int ti = 0; ti <= 100; ++ti) {
            double theta = (kPi / 2) * ti / 100;
            double bend = 2 * (std::sqrt(w * w - 1) + std::asin(1 / w) - theta);
            double direct = std::min(2 * w * std::cos(theta), kPi - 2 * theta);
            if (bend < direct - 1e-12) ++bad_b;
        }
    }
    r.seconds = now_seconds() - t0;
    r.pass = bad_a == 0 && bad_b == 0 && r.seconds < 1.0;
    r.detail = fmt("arc-vs-chord grid: %.0f violations; bending-path grid: %.0f violations",
                   bad_a, bad_b) +
               fmt(", %.3f s", r.seconds);
    return r;
}

inline CriterionResult run_criterion_6(Suite& su) {
    CriterionResult r{6, "cone spanner stretch", false, "", 0};
    double t0 = now_seconds();
    int count = su.quick ? 20 : 100;
    const std::vector<double> palette{0.0, 1.0, 1.4, kPi / 2};
    const int ks[3] = {4, 6, 8};

    std::mt19937_64 rng(430051);
    std::vector<SceneCase> cases;
    std::vector<double> eps_of(count);
    for (int i = 0; i < count; ++i) {
        SceneCase cs;
        int n = 1 + i % 4;
        cs.scene = random_scene(rng, n, 2.5, 5.0, palette);
        // The finer epsilon goes to the small scenes so the cubic
        // all-pairs audit stays inside the time budget.
        eps_of[i] = n <= 2 ? 0.25 : 0.5;
        cases.push_back(std::move(cs));
    }

    struct CaseOut {
        bool ok = true;
        std::string note;
        double worst_slack = kInf;
        size_t nodes = 0;
    };
    std::vector<CaseOut> outs(count);
    parallel_for(count, su.threads, [&](size_t i) {
        CaseOut& co = outs[i];
        try {
            const Scene& sc = cases[i].scene;
            SteinerSet set = build_steiner_set(sc, eps_of[i]);
            PathGraph g = build_graph(sc, set);
            co.nodes = g.nodes.size();
            for (int k : ks) {
                YaoGraph y = build_yao(sc, set, k);
                double ratio = spanning_audit(y, g);
                double bound = yao_stretch_bound(k) + 1e-9;
                co.worst_slack = std::min(co.worst_slack, bound - ratio);
                if (ratio > bound) {
                    co.ok = false;
                    co.note = fmt("case %.0f k=%.0f: ratio %.9f > bound %.9f", i, k, ratio,
                                  yao_stretch_bound(k));
                }
            }
        } catch (const std::exception& ex) {
            co.ok = false;
            co.note = std::string("exception: ") + ex.what();
        }
    });

    int bad = 0;
    std::string first_bad;
    double worst_slack = kInf;
    size_t max_nodes = 0;
    for (const CaseOut& co : outs) {
        if (!co.ok) {
            ++bad;
            if (first_bad.empty()) first_bad = co.note;
        }
        worst_slack = std::min(worst_slack, co.worst_slack);
        max_nodes = std::max(max_nodes, co.nodes);
    }
    r.seconds = now_seconds() - t0;
    bool ok_time = r.seconds < 120.0;
    r.pass = bad == 0 && ok_time;
    r.detail = fmt("%.0f scenes x k in {4,6,8}: ", count) +
               (bad ? first_bad + fmt(" (%.0f failing)", bad)
                    : fmt("all within bound, tightest slack %.6f", worst_slack)) +
               fmt(", max %.0f nodes, %.1f s", static_cast<double>(max_nodes), r.seconds);
    return r;
}

inline CriterionResult run_criterion_7(Suite& su) {
    CriterionResult r{7, "weight-clamp invariance", false, "", 0};
    double t0 = now_seconds();
    const double eps_list[2] = {0.5, 0.25};
    const double raises[2] = {2.0, kInf};

    struct Job {
        size_t case_idx;
        int eps_idx;
        double raise;
    };
    std::vector<Job> jobs;
    for (size_t i = 0; i < su.scenes3.size(); ++i) {
        bool any = false;
        for (const Disk& d : su.scenes3[i].scene.disks)
            if (d.weight >= kPi / 2) any = true;
        if (!any) continue;
        for (int e = 0; e < 2; ++e)
            for (double raise : raises) jobs.push_back({i, e, raise});
    }

    struct JobOut {
        bool ok = true;
        double rel = 0;
        std::string note;
    };
    std::vector<JobOut> outs(jobs.size());
    parallel_for(jobs.size(), su.threads, [&](size_t j) {
        JobOut& jo = outs[j];
        const Job& job = jobs[j];
        try {
            const SceneCase& cs = su.scenes3[job.case_idx];
            Scene variant = cs.scene;
            for (Disk& d : variant.disks)
                if (d.weight >= kPi / 2) d.weight = job.raise;
            WeightedPath route =
                approximate_route(variant, eps_list[job.eps_idx], cs.s, cs.t);
            double base = su.route3[job.case_idx][job.eps_idx];
            jo.rel = std::abs(route.weight - base) / std::max(1.0, base);
            if (jo.rel > 1e-9) {
                jo.ok = false;
                jo.note = fmt("case %.0f eps %.2f raise %.2f: rel %.3e",
                              static_cast<double>(job.case_idx), eps_list[job.eps_idx],
                              job.raise, jo.rel);
            }
        } catch (const std::exception& ex) {
            jo.ok = false;
            jo.note = std::string("exception: ") + ex.what();
        }
    });

    int bad = 0;
    std::string first_bad;
    double worst = 0;
    for (const JobOut& jo : outs) {
        if (!jo.ok) {
            ++bad;
            if (first_bad.empty()) first_bad = jo.note;
        }
        worst = std::max(worst, jo.rel);
    }
    r.seconds = now_seconds() - t0;
    r.pass = bad == 0;
    r.detail = fmt("%.0f raised-weight routes: ", static_cast<double>(jobs.size())) +
               (bad ? first_bad + fmt(" (%.0f failing)", bad)
                    : fmt("max weight change rel %.2e", worst)) +
               fmt(", %.1f s", r.seconds);
    return r;
}

inline CriterionResult run_criterion_8(Suite& su) {
    CriterionResult r{8, "independent path audit", false, "", 0};
    double t0 = now_seconds();
    int bad = 0;
    std::string first_bad;
    double worst = 0;
    for (const AuditItem& item : su.audits) {
        double audited = audit_path(item.scene, item.path);
        double rel = std::abs(audited - item.path.weight) / std::max(1.0, item.path.weight);
        worst = std::max(worst, rel);
        if (rel > 1e-7) {
            ++bad;
            if (first_bad.empty())
                first_bad = item.source + fmt(": audit %.12f vs %.12f", audited,
                                              item.path.weight);
        }
    }
    r.seconds = now_seconds() - t0;
    r.pass = bad == 0;
    r.detail = fmt("%.0f paths audited: ", static_cast<double>(su.audits.size())) +
               (bad ? first_bad + fmt(" (%.0f failing)", bad)
                    : fmt("max mismatch rel %.2e", worst)) +
               fmt(", %.2f s", r.seconds);
    return r;
}

}  // namespace verify_detail

// Runs the eight acceptance checks in order, streaming one line per
// criterion to `live` as each completes. Quick mode shrinks the random
// sample sizes but keeps every check.
inline std::vector<CriterionResult> run_acceptance(bool quick, std::ostream* live = nullptr) {
    using namespace verify_detail;
    Suite su;
    su.quick = quick;
    std::vector<CriterionResult> out;
    auto push = [&](CriterionResult r) {
        if (live) {
            (*live) << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  "
                    << r.name << "  [" << verify_detail::fmt("%.2f", r.seconds)
                    << " s]\n    " << r.detail << "\n";
            live->flush();
        }
        out.push_back(std::move(r));
    };
    auto guarded = [&](int id, const char* name, auto&& fn) {
        try {
            push(fn(su));
        } catch (const std::exception& ex) {
            push({id, name, false, std::string("exception: ") + ex.what(), 0});
        }
    };
    guarded(1, "obstacle exactness", run_criterion_1);
    guarded(2, "zero-weight closed form", run_criterion_2);
    guarded(3, "approximation ratio vs grid reference", run_criterion_3);
    guarded(4, "node-count bounds", run_criterion_4);
    guarded(5, "boundary-path numeric inequalities", run_criterion_5);
    guarded(6, "cone spanner stretch", run_criterion_6);
    guarded(7, "weight-clamp invariance", run_criterion_7);
    guarded(8, "independent path audit", run_criterion_8);
    return out;
}

}  // namespace diskpaths
