#pragma once

// Scene model: a set of non-overlapping weighted disks, an optional
// source/target query, JSON round-tripping and the derived quantities
// (clearances, angular radii, the global constants c and a) that the
// discretization is built from.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "diskpaths/geometry.hpp"

namespace diskpaths {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    enum class Kind {
        nonpositive_radius,
        negative_weight,
        overlap,
        bad_query,
        unsupported_weight,
        bad_parameter,
    };
    Kind kind;
    int disk_a = -1;
    int disk_b = -1;

    ValidationError(Kind k, const std::string& msg, int a = -1, int b = -1)
        : std::runtime_error(msg), kind(k), disk_a(a), disk_b(b) {}
};

struct TerminalInsideObstacle : ValidationError {
    explicit TerminalInsideObstacle(int disk)
        : ValidationError(Kind::bad_query,
                          "terminal lies strictly inside an impassable disk " +
                              std::to_string(disk),
                          disk) {}
};

struct Query {
    Point s{};
    Point t{};
};

struct Scene {
    std::vector<Disk> disks;
    std::optional<Query> query;
    // 0 means "derive from the scene diameter"; anything positive is an
    // absolute override (CLI --tolerance).
    double tolerance_override = 0.0;

    // Diameter of the bounding box of all disk extents and query points.
    double diameter() const {
        if (disks.empty() && !query) return 1.0;
        double lo_x = kInf, lo_y = kInf, hi_x = -kInf, hi_y = -kInf;
        auto take = [&](double x, double y) {
            lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
            lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
        };
        for (const Disk& d : disks) {
            take(d.center.x - d.radius, d.center.y - d.radius);
            take(d.center.x + d.radius, d.center.y + d.radius);
        }
        if (query) take(query->s.x, query->s.y), take(query->t.x, query->t.y);
        return std::max(std::hypot(hi_x - lo_x, hi_y - lo_y), 1e-300);
    }

    // Geometric slack used by every incidence test in the pipeline.
    double tol() const {
        return tolerance_override > 0 ? tolerance_override : 1e-9 * diameter();
    }
};

inline void validate(const Scene& scene) {
    double tau = scene.tol();
    for (const Disk& d : scene.disks) {
        if (!(d.radius > 0)) {
            throw ValidationError(ValidationError::Kind::nonpositive_radius,
                                  "disk " + std::to_string(d.id) + " has non-positive radius",
                                  d.id);
        }
        if (std::isnan(d.weight) || d.weight < 0) {
            throw ValidationError(ValidationError::Kind::negative_weight,
                                  "disk " + std::to_string(d.id) + " has negative weight", d.id);
        }
    }
    for (size_t i = 0; i < scene.disks.size(); ++i) {
        for (size_t j = i + 1; j < scene.disks.size(); ++j) {
            const Disk& a = scene.disks[i];
            const Disk& b = scene.disks[j];
            if (dist(a.center, b.center) - (a.radius + b.radius) <= tau) {
                throw ValidationError(ValidationError::Kind::overlap,
                                      "disks " + std::to_string(a.id) + " and " +
                                          std::to_string(b.id) + " overlap",
                                      a.id, b.id);
            }
        }
    }
}

// Clearance of disk i: distance from its boundary to the nearest other
// disk. A lone disk uses its own radius so the formulas stay defined.
inline double clearance(const Scene& scene, size_t i) {
    const Disk& d = scene.disks[i];
    double best = kInf;
    for (size_t j = 0; j < scene.disks.size(); ++j) {
        if (j == i) continue;
        const Disk& o = scene.disks[j];
        best = std::min(best, dist(d.center, o.center) - d.radius - o.radius);
    }
    return best == kInf ? d.radius : best;
}

// Half-angle of the vicinity cones on a positive-weight disk. The
// argument of arcsin is at most 1/4 by construction, so alpha_i is at
// most arcsin(1/4) regardless of the weight.
inline double weighted_angular_radius(const Scene& scene, size_t i) {
    const Disk& d = scene.disks[i];
    if (d.weight <= 0) {
        throw ValidationError(ValidationError::Kind::bad_parameter,
                              "angular radius undefined for zero-weight disk", d.id);
    }
    double w = d.effective_weight();
    double di = clearance(scene, i);
    double num = std::min(di, d.radius) * std::min(1.0, w);
    double den = 4 * d.radius * std::max(1.0, w);
    return std::asin(num / den);
}

struct SceneConstants {
    double c = 0.0;  // (pi/2) * max radius / min clearance
    double a = 0.0;  // (1 + 3c + sqrt(9c^2 + 10c + 1)) / 2
};

inline SceneConstants global_constants(const Scene& scene) {
    if (scene.disks.empty()) {
        throw ValidationError(ValidationError::Kind::bad_parameter,
                              "constants undefined for an empty scene");
    }
    double max_r = 0.0, min_d = kInf;
    for (size_t i = 0; i < scene.disks.size(); ++i) {
        max_r = std::max(max_r, scene.disks[i].radius);
        min_d = std::min(min_d, clearance(scene, i));
    }
    SceneConstants k;
    k.c = (kPi / 2) * max_r / min_d;
    k.a = (1 + 3 * k.c + std::sqrt(9 * k.c * k.c + 10 * k.c + 1)) / 2;
    return k;
}

// --- JSON ------------------------------------------------------------

inline std::string format_double(double v) {
    if (v == kInf) return "\"inf\"";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double parse_weight(const nlohmann::json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf" || s == "Infinity" || s == "+inf") return kInf;
        throw ParseError("unrecognized weight string \"" + s + "\"");
    }
    if (!j.is_number()) throw ParseError("weight must be a number or \"inf\"");
    return j.get<double>();
}

inline Scene scene_from_json(const nlohmann::json& j) {
    Scene scene;
    if (!j.is_object() || !j.contains("disks") || !j["disks"].is_array()) {
        throw ParseError("scene must be an object with a \"disks\" array");
    }
    int next_id = 0;
    for (const auto& dj : j["disks"]) {
        Disk d;
        d.id = dj.contains("id") ? dj.at("id").get<int>() : next_id;
        next_id = d.id + 1;
        try {
            d.center = {dj.at("cx").get<double>(), dj.at("cy").get<double>()};
            d.radius = dj.at("r").get<double>();
            d.weight = parse_weight(dj.at("w"));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad disk entry: ") + e.what());
        }
        scene.disks.push_back(d);
    }
    if (j.contains("query")) {
        const auto& q = j["query"];
        try {
            scene.query = Query{{q.at("s").at(0).get<double>(), q.at("s").at(1).get<double>()},
                                {q.at("t").at(0).get<double>(), q.at("t").at(1).get<double>()}};
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad query entry: ") + e.what());
        }
    }
    if (j.contains("tolerance")) scene.tolerance_override = j["tolerance"].get<double>();
    return scene;
}

inline Scene load_scene_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return scene_from_json(j);
}

inline Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scene file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_scene_text(ss.str());
}

// Hand-rolled writer so numbers always serialize as %.17g and field
// order stays stable across runs.
inline std::string scene_to_json(const Scene& scene) {
    std::string out = "{\n  \"disks\": [";
    for (size_t i = 0; i < scene.disks.size(); ++i) {
        const Disk& d = scene.disks[i];
        out += i ? ",\n    " : "\n    ";
        out += "{\"id\": " + std::to_string(d.id) + ", \"cx\": " + format_double(d.center.x) +
               ", \"cy\": " + format_double(d.center.y) + ", \"r\": " + format_double(d.radius) +
               ", \"w\": " + format_double(d.weight) + "}";
    }
    out += "\n  ]";
    if (scene.query) {
        out += ",\n  \"query\": {\"s\": [" + format_double(scene.query->s.x) + ", " +
               format_double(scene.query->s.y) + "], \"t\": [" + format_double(scene.query->t.x) +
               ", " + format_double(scene.query->t.y) + "]}";
    }
    if (scene.tolerance_override > 0) {
        out += ",\n  \"tolerance\": " + format_double(scene.tolerance_override);
    }
    out += "\n}\n";
    return out;
}

inline void save_scene(const Scene& scene, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write scene file: " + path);
    out << scene_to_json(scene);
}

}  // namespace diskpaths
