#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "diskpaths/discretize.hpp"
#include "diskpaths/path.hpp"
#include "diskpaths/scene.hpp"
#include "diskpaths/spanner.hpp"

namespace diskpaths {

namespace detail {

// Fixed decimal formatting keeps the output byte-identical across runs.
inline void svg_num(std::string& out, double x) {
    if (x == 0) x = 0;  // never print "-0.000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    out += buf;
}

struct SvgFrame {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    double size = 1;  // max dimension, used for stroke scaling

    double tx(double x) const { return x - min_x; }
    double ty(double y) const { return max_y - y; }  // SVG y grows downward

    void grow(Point p, double r = 0) {
        min_x = std::min(min_x, p.x - r);
        min_y = std::min(min_y, p.y - r);
        max_x = std::max(max_x, p.x + r);
        max_y = std::max(max_y, p.y + r);
    }
};

inline const char* disk_fill(double w) {
    if (w == 0) return "#dbeafe";
    if (w < 1) return "#dcfce7";
    if (w == 1) return "#fef9c3";
    if (w < kPi / 2) return "#fed7aa";
    return "#e5e7eb";
}

inline void svg_attr_point(std::string& out, const SvgFrame& f, const char* ax,
                           const char* ay, Point p) {
    out += ax;
    out += "=\"";
    svg_num(out, f.tx(p.x));
    out += "\" ";
    out += ay;
    out += "=\"";
    svg_num(out, f.ty(p.y));
    out += "\"";
}

inline void svg_line(std::string& out, const SvgFrame& f, Point a, Point b,
                     const char* style) {
    out += "<line ";
    svg_attr_point(out, f, "x1", "y1", a);
    out += " ";
    svg_attr_point(out, f, "x2", "y2", b);
    out += " ";
    out += style;
    out += "/>\n";
}

}  // namespace detail

// Renders the scene with optional overlays: a routed path, the Steiner
// discretization, and a sparse cone graph. Pure text assembly with fixed
// formatting; identical inputs produce identical bytes.
inline std::string render_svg(const Scene& scene, const WeightedPath* path = nullptr,
                              const SteinerSet* steiner = nullptr,
                              const YaoGraph* yao = nullptr) {
    using detail::svg_num;
    detail::SvgFrame f;
    bool any = false;
    auto seed = [&](Point p, double r) {
        if (!any) {
            f.min_x = p.x - r;
            f.min_y = p.y - r;
            f.max_x = p.x + r;
            f.max_y = p.y + r;
            any = true;
        } else {
            f.grow(p, r);
        }
    };
    for (const Disk& d : scene.disks) seed(d.center, d.radius);
    if (scene.query) {
        seed(scene.query->s, 0);
        seed(scene.query->t, 0);
    }
    if (path) {
        for (const Piece& pc : path->pieces) {
            seed(pc.a, 0);
            seed(pc.b, 0);
        }
    }
    if (!any) seed({0, 0}, 1);
    double pad = 0.08 * std::max({f.max_x - f.min_x, f.max_y - f.min_y, 1.0});
    f.min_x -= pad;
    f.min_y -= pad;
    f.max_x += pad;
    f.max_y += pad;
    double w = f.max_x - f.min_x;
    double h = f.max_y - f.min_y;
    f.size = std::max(w, h);

    std::string out;
    out.reserve(4096);
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 ";
    svg_num(out, w);
    out += " ";
    svg_num(out, h);
    out += "\" width=\"900\" height=\"";
    char hb[32];
    std::snprintf(hb, sizeof hb, "%d", static_cast<int>(900 * h / w + 0.5));
    out += hb;
    out += "\">\n<rect x=\"0\" y=\"0\" width=\"";
    svg_num(out, w);
    out += "\" height=\"";
    svg_num(out, h);
    out += "\" fill=\"#ffffff\"/>\n";

    char style[256];
    double lw = 0.0025 * f.size;

    for (const Disk& d : scene.disks) {
        out += "<circle ";
        detail::svg_attr_point(out, f, "cx", "cy", d.center);
        out += " r=\"";
        svg_num(out, d.radius);
        out += "\" fill=\"";
        out += detail::disk_fill(d.weight);
        out += "\" stroke=\"#475569\" stroke-width=\"";
        svg_num(out, lw);
        out += "\"><title>disk ";
        std::snprintf(hb, sizeof hb, "%d", d.id);
        out += hb;
        out += " w=";
        out += format_double(d.weight);
        out += "</title></circle>\n";
    }

    if (yao) {
        std::snprintf(style, sizeof style,
                      "stroke=\"#94a3b8\" stroke-width=\"%.6f\"", 0.6 * lw);
        for (size_t u = 0; u < yao->adj.size(); ++u) {
            for (const GraphEdge& e : yao->adj[u]) {
                if (e.to <= static_cast<int>(u)) continue;
                detail::svg_line(out, f, yao->nodes[u].p, yao->nodes[e.to].p, style);
            }
        }
    }

    if (steiner) {
        double r_dot = 0.004 * f.size;
        for (size_t i = 0; i < steiner->per_disk.size(); ++i) {
            const Disk& d = scene.disks[i];
            for (const SteinerNode& sn : steiner->per_disk[i].nodes) {
                out += "<circle ";
                detail::svg_attr_point(out, f, "cx", "cy", d.boundary_point(sn.angle));
                out += " r=\"";
                svg_num(out, sn.kind == NodeKind::vicinity_center ? 1.5 * r_dot : r_dot);
                out += sn.kind == NodeKind::vicinity_center ? "\" fill=\"#0f172a\"/>\n"
                                                            : "\" fill=\"#64748b\"/>\n";
            }
        }
    }

    if (path) {
        for (const Piece& pc : path->pieces) {
            if (pc.kind == Piece::Kind::arc) {
                const Disk& d = scene.disks[pc.disk];
                double sweep = pc.ccw ? ccw_delta(pc.ang_a, pc.ang_b)
                                      : ccw_delta(pc.ang_b, pc.ang_a);
                out += "<path d=\"M ";
                svg_num(out, f.tx(pc.a.x));
                out += " ";
                svg_num(out, f.ty(pc.a.y));
                out += " A ";
                svg_num(out, d.radius);
                out += " ";
                svg_num(out, d.radius);
                // math-ccw appears as sweep 0 once y is flipped
                out += sweep > kPi ? " 0 1 " : " 0 0 ";
                out += pc.ccw ? "0 " : "1 ";
                svg_num(out, f.tx(pc.b.x));
                out += " ";
                svg_num(out, f.ty(pc.b.y));
                out += "\" fill=\"none\" stroke=\"#2563eb\" stroke-width=\"";
                svg_num(out, 2.2 * lw);
                out += "\"/>\n";
            } else if (pc.mult == 0 && pc.disk >= 0) {
                std::snprintf(style, sizeof style,
                              "stroke=\"#0ea5e9\" stroke-width=\"%.6f\" "
                              "stroke-dasharray=\"%.6f %.6f\"",
                              2.2 * lw, 3 * lw, 3 * lw);
                detail::svg_line(out, f, pc.a, pc.b, style);
            } else {
                std::snprintf(style, sizeof style,
                              "stroke=\"#2563eb\" stroke-width=\"%.6f\"", 2.2 * lw);
                detail::svg_line(out, f, pc.a, pc.b, style);
            }
        }
    }

    Point s{}, t{};
    bool have_ends = false;
    if (path && !path->pieces.empty()) {
        s = path->pieces.front().a;
        t = path->pieces.back().b;
        have_ends = true;
    } else if (scene.query) {
        s = scene.query->s;
        t = scene.query->t;
        have_ends = true;
    }
    if (have_ends) {
        const char* colors[2] = {"#dc2626", "#16a34a"};
        const char* labels[2] = {"S", "T"};
        Point pts[2] = {s, t};
        for (int i = 0; i < 2; ++i) {
            out += "<circle ";
            detail::svg_attr_point(out, f, "cx", "cy", pts[i]);
            out += " r=\"";
            svg_num(out, 0.008 * f.size);
            out += "\" fill=\"";
            out += colors[i];
            out += "\"/>\n<text x=\"";
            svg_num(out, f.tx(pts[i].x) + 0.012 * f.size);
            out += "\" y=\"";
            svg_num(out, f.ty(pts[i].y) - 0.012 * f.size);
            out += "\" font-family=\"monospace\" font-size=\"";
            svg_num(out, 0.03 * f.size);
            out += "\" fill=\"";
            out += colors[i];
            out += "\">";
            out += labels[i];
            out += "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace diskpaths
