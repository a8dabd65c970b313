#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diskpaths/obstacle_exact.hpp"
#include "diskpaths/oracle.hpp"
#include "diskpaths/pathgraph.hpp"
#include "diskpaths/scene.hpp"
#include "diskpaths/spanner.hpp"
#include "diskpaths/svg.hpp"
#include "diskpaths/verify.hpp"

namespace {

using namespace diskpaths;

Point parse_point_arg(const std::string& text) {
    std::istringstream in(text);
    Point p;
    char comma = 0;
    if (!(in >> p.x >> comma >> p.y) || comma != ',')
        throw ParseError("expected point as \"x,y\", got \"" + text + "\"");
    return p;
}

// Resolves terminals from flags, falling back to the scene's stored query.
std::pair<Point, Point> resolve_terminals(const Scene& scene, const std::string& s_arg,
                                          const std::string& t_arg) {
    if (!s_arg.empty() && !t_arg.empty())
        return {parse_point_arg(s_arg), parse_point_arg(t_arg)};
    if (scene.query && s_arg.empty() && t_arg.empty())
        return {scene.query->s, scene.query->t};
    throw ValidationError(ValidationError::Kind::bad_query,
                          "terminals required: pass both --s and --t, or store a query "
                          "in the scene file");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError(ValidationError::Kind::bad_parameter,
                                    "cannot open output file " + path);
    out << content;
}

void json_point(std::string& out, Point p) {
    out += "[";
    out += format_double(p.x);
    out += ", ";
    out += format_double(p.y);
    out += "]";
}

std::string path_json(const WeightedPath& p) {
    std::string out = "{\n  \"weight\": " + format_double(p.weight) +
                      ",\n  \"euclidean\": " + format_double(p.euclidean) +
                      ",\n  \"pieces\": [";
    for (size_t i = 0; i < p.pieces.size(); ++i) {
        const Piece& pc = p.pieces[i];
        out += i ? ",\n    " : "\n    ";
        out += "{\"type\": ";
        if (pc.kind == Piece::Kind::arc) {
            out += "\"arc\", \"disk\": " + std::to_string(pc.disk) +
                   ", \"from_angle\": " + format_double(pc.ang_a) +
                   ", \"to_angle\": " + format_double(pc.ang_b) +
                   ", \"ccw\": " + (pc.ccw ? std::string("true") : std::string("false"));
        } else {
            out += "\"segment\", \"disk\": " + std::to_string(pc.disk);
        }
        out += ", \"from\": ";
        json_point(out, pc.a);
        out += ", \"to\": ";
        json_point(out, pc.b);
        out += ", \"multiplier\": " + format_double(pc.mult) +
               ", \"length\": " + format_double(pc.length) + "}";
    }
    out += p.pieces.empty() ? "]" : "\n  ]";
    out += "\n}\n";
    return out;
}

Scene load_with_tolerance(const std::string& path, double tolerance) {
    Scene sc = load_scene(path);
    if (tolerance > 0) sc.tolerance_override = tolerance;
    validate(sc);
    return sc;
}

int cmd_route(const std::string& scene_path, double tolerance, double epsilon,
              const std::string& s_arg, const std::string& t_arg,
              const std::string& format, const std::string& out_path) {
    Scene sc = load_with_tolerance(scene_path, tolerance);
    auto [s, t] = resolve_terminals(sc, s_arg, t_arg);
    RouteStats stats;
    WeightedPath path = approximate_route(sc, epsilon, s, t, &stats);
    if (format == "svg") {
        SteinerSet set = build_steiner_set(sc, epsilon);
        sc.query = Query{s, t};
        write_output(out_path, render_svg(sc, &path, &set));
    } else {
        std::string body = path_json(path);
        body.erase(body.size() - 3);  // reopen the object to add stats
        body += ",\n  \"graph_nodes\": " + std::to_string(stats.graph_nodes) +
                ",\n  \"dense_mode\": " + (stats.dense ? "true" : "false") + "\n}\n";
        write_output(out_path, body);
    }
    return 0;
}

int cmd_exact(const std::string& scene_path, double tolerance, const std::string& s_arg,
              const std::string& t_arg, const std::string& format,
              const std::string& out_path) {
    Scene sc = load_with_tolerance(scene_path, tolerance);
    auto [s, t] = resolve_terminals(sc, s_arg, t_arg);
    WeightedPath path = exact_path(sc, s, t);
    if (format == "svg") {
        sc.query = Query{s, t};
        write_output(out_path, render_svg(sc, &path));
    } else {
        write_output(out_path, path_json(path));
    }
    return 0;
}

int cmd_discretize(const std::string& scene_path, double tolerance, double epsilon,
                   const std::string& format, const std::string& out_path) {
    Scene sc = load_with_tolerance(scene_path, tolerance);
    SteinerSet set = build_steiner_set(sc, epsilon);
    if (format == "svg") {
        write_output(out_path, render_svg(sc, nullptr, &set));
        return 0;
    }
    std::string out = "[";
    bool first = true;
    for (const DiskNodes& dn : set.per_disk) {
        for (const SteinerNode& sn : dn.nodes) {
            out += first ? "\n" : ",\n";
            first = false;
            out += "  {\"disk\": " + std::to_string(sn.disk) +
                   ", \"angle\": " + format_double(sn.angle) + ", \"kind\": \"" +
                   node_kind_name(sn.kind) + "\"}";
        }
    }
    out += first ? "]\n" : "\n]\n";
    write_output(out_path, out);
    return 0;
}

int cmd_spanner(const std::string& scene_path, double tolerance, double epsilon, int k,
                const std::string& format, const std::string& out_path) {
    Scene sc = load_with_tolerance(scene_path, tolerance);
    SteinerSet set = build_steiner_set(sc, epsilon);
    YaoGraph yao = build_yao(sc, set, k);
    if (format == "svg") {
        write_output(out_path, render_svg(sc, nullptr, &set, &yao));
        return 0;
    }
    PathGraph g = build_graph(sc, set);
    double ratio = spanning_audit(yao, g);
    std::string out = "{\n  \"k\": " + std::to_string(k) +
                      ",\n  \"nodes\": " + std::to_string(yao.nodes.size()) +
                      ",\n  \"edge_count\": " + std::to_string(yao.edge_count) +
                      ",\n  \"audit_ratio\": " + format_double(ratio) +
                      ",\n  \"stretch_bound\": " + format_double(yao_stretch_bound(k)) +
                      ",\n  \"edges\": [";
    bool first = true;
    for (size_t u = 0; u < yao.adj.size(); ++u) {
        for (const GraphEdge& e : yao.adj[u]) {
            if (e.to <= static_cast<int>(u)) continue;
            out += first ? "\n" : ",\n";
            first = false;
            out += "    [" + std::to_string(u) + ", " + std::to_string(e.to) + ", " +
                   format_double(e.w) + ", \"" + edge_class_name(e.cls) + "\"]";
        }
    }
    out += first ? "]\n}\n" : "\n  ]\n}\n";
    write_output(out_path, out);
    return 0;
}

int cmd_render(const std::string& scene_path, double tolerance, double epsilon, int k,
               const std::string& s_arg, const std::string& t_arg,
               const std::string& out_path) {
    Scene sc = load_with_tolerance(scene_path, tolerance);
    SteinerSet set;
    const SteinerSet* set_ptr = nullptr;
    if (epsilon > 0) {
        set = build_steiner_set(sc, epsilon);
        set_ptr = &set;
    }
    YaoGraph yao;
    const YaoGraph* yao_ptr = nullptr;
    if (k > 0) {
        if (!set_ptr)
            throw ValidationError(ValidationError::Kind::bad_parameter,
                                  "--k requires --epsilon");
        yao = build_yao(sc, set, k);
        yao_ptr = &yao;
    }
    WeightedPath path;
    const WeightedPath* path_ptr = nullptr;
    if (!s_arg.empty() || !t_arg.empty() || sc.query) {
        auto [s, t] = resolve_terminals(sc, s_arg, t_arg);
        if (epsilon > 0) {
            path = approximate_route(sc, epsilon, s, t);
        } else {
            path = exact_path(sc, s, t);
        }
        sc.query = Query{s, t};
        path_ptr = &path;
    }
    write_output(out_path, render_svg(sc, path_ptr, set_ptr, yao_ptr));
    return 0;
}

int cmd_bench(const std::string& scene_path, double tolerance,
              const std::string& eps_arg, const std::string& out_path) {
    Scene sc = load_with_tolerance(scene_path, tolerance);
    std::vector<double> epsilons;
    std::istringstream in(eps_arg);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            epsilons.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ParseError("bad epsilon list entry \"" + tok + "\"");
        }
    }
    if (epsilons.empty()) throw ParseError("empty epsilon list");
    std::string csv =
        "epsilon,disk,weight,centers_k,ring_ladder_r,placed_per_vicinity,"
        "per_vicinity_bound,kept_ring,per_disk_bound,disk_nodes,total_nodes,"
        "total_bound,within_bounds,build_ms\n";
    char line[512];
    for (double eps : epsilons) {
        auto t0 = std::chrono::steady_clock::now();
        SteinerSet set = build_steiner_set(sc, eps);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        CountBounds bounds = predicted_counts(sc, eps);
        for (size_t i = 0; i < set.per_disk.size(); ++i) {
            const DiskNodes& dn = set.per_disk[i];
            int kept_ring = 0;
            for (const SteinerNode& sn : dn.nodes)
                if (sn.kind == NodeKind::ring_point) ++kept_ring;
            bool within = static_cast<double>(set.total()) <= bounds.total &&
                          dn.placed_per_vicinity <= bounds.per_disk[i].per_vicinity &&
                          (sc.disks[i].weight == 0 ||
                           kept_ring <= bounds.per_disk[i].per_disk);
            std::snprintf(line, sizeof line,
                          "%g,%zu,%s,%d,%d,%d,%.6f,%d,%.6f,%zu,%zu,%.6f,%s,%.3f\n", eps,
                          i, format_double(sc.disks[i].weight).c_str(), dn.k, dn.r,
                          dn.placed_per_vicinity, bounds.per_disk[i].per_vicinity,
                          kept_ring, bounds.per_disk[i].per_disk, dn.nodes.size(),
                          set.total(), bounds.total, within ? "yes" : "no", ms);
            csv += line;
        }
    }
    write_output(out_path, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate and exact shortest paths amid weighted disks"};
    app.require_subcommand(1);
    double tolerance = 0;
    app.add_option("--tolerance", tolerance,
                   "override the scene's geometric tolerance (absolute)");

    std::string scene_path, s_arg, t_arg, format = "json", out_path;
    double epsilon = 0;
    int k = 0;
    std::string eps_list = "1,0.5,0.25";
    bool quick = false;

    CLI::App* route = app.add_subcommand("route", "approximate shortest path");
    route->add_option("--scene", scene_path, "scene JSON file")->required();
    route->add_option("--epsilon", epsilon, "approximation parameter in (0,1]")->required();
    route->add_option("--s", s_arg, "start point \"x,y\"");
    route->add_option("--t", t_arg, "end point \"x,y\"");
    route->add_option("--format", format, "json or svg");
    route->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* exact = app.add_subcommand(
        "exact-obstacles", "exact shortest path; weights must be 0 or >= pi/2");
    exact->add_option("--scene", scene_path, "scene JSON file")->required();
    exact->add_option("--s", s_arg, "start point \"x,y\"");
    exact->add_option("--t", t_arg, "end point \"x,y\"");
    exact->add_option("--format", format, "json or svg");
    exact->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* discretize = app.add_subcommand("discretize", "emit Steiner nodes");
    discretize->add_option("--scene", scene_path, "scene JSON file")->required();
    discretize->add_option("--epsilon", epsilon, "approximation parameter")->required();
    discretize->add_option("--format", format, "json or svg");
    discretize->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* spanner = app.add_subcommand("spanner", "sparse cone graph and its audit");
    spanner->add_option("--scene", scene_path, "scene JSON file")->required();
    spanner->add_option("--epsilon", epsilon, "approximation parameter")->required();
    spanner->add_option("--k", k, "cone parameter, >= 4")->required();
    spanner->add_option("--format", format, "json or svg");
    spanner->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_flag("--quick", quick, "smaller random samples");

    CLI::App* render = app.add_subcommand("render", "scene SVG with optional overlays");
    render->add_option("--scene", scene_path, "scene JSON file")->required();
    render->add_option("--epsilon", epsilon, "draw Steiner nodes for this epsilon");
    render->add_option("--k", k, "draw the cone graph for this k (needs --epsilon)");
    render->add_option("--s", s_arg, "route start \"x,y\"");
    render->add_option("--t", t_arg, "route end \"x,y\"");
    render->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* bench = app.add_subcommand("bench", "node counts vs predicted bounds, CSV");
    bench->add_option("--scene", scene_path, "scene JSON file")->required();
    bench->add_option("--epsilons", eps_list, "comma-separated epsilon values");
    bench->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (route->parsed())
            return cmd_route(scene_path, tolerance, epsilon, s_arg, t_arg, format, out_path);
        if (exact->parsed())
            return cmd_exact(scene_path, tolerance, s_arg, t_arg, format, out_path);
        if (discretize->parsed())
            return cmd_discretize(scene_path, tolerance, epsilon, format, out_path);
        if (spanner->parsed())
            return cmd_spanner(scene_path, tolerance, epsilon, k, format, out_path);
        if (verify->parsed()) {
            auto results = run_acceptance(quick, &std::cout);
            int failed = 0;
            for (const CriterionResult& r : results)
                if (!r.pass) ++failed;
            std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 8 criteria\n"
                                 : "all 8 criteria passed\n");
            return failed ? 3 : 0;
        }
        if (render->parsed())
            return cmd_render(scene_path, tolerance, epsilon, k, s_arg, t_arg, out_path);
        if (bench->parsed()) return cmd_bench(scene_path, tolerance, eps_list, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
