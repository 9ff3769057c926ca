#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "graph.hpp"
#include "model.hpp"

namespace dpg {

// Geometric inputs: equal caps on a sphere, equal arcs on the circle, unit
// disks in the plane. Intersection is closed; comparisons against the shared
// size parameter get the same boundary band as float model verification.

struct CapSet {
    int k = 1;        // centres live on S^k inside R^{k+1}
    double theta = 0; // common angular diameter, in [0, pi/2)
    std::vector<std::string> labels;
    std::vector<std::vector<double>> centres;

    // Centres must be within 1e-6 of unit length; they are renormalized so
    // later dot products see exactly-unit vectors.
    static CapSet make(double theta, std::vector<std::pair<std::string, std::vector<double>>> entries) {
        if (!(theta >= 0) || !(theta < std::numbers::pi / 2))
            throw DomainError("cap diameter must lie in [0, pi/2), got " + std::to_string(theta));
        if (entries.empty()) throw DomainError("cap set needs at least one cap");
        CapSet c;
        c.theta = theta;
        c.k = static_cast<int>(entries.front().second.size()) - 1;
        if (c.k < 1) throw DomainError("cap centres need at least 2 coordinates");
        for (auto& [label, centre] : entries) {
            if (static_cast<int>(centre.size()) != c.k + 1)
                throw DomainError("cap '" + label + "' has " + std::to_string(centre.size()) +
                                  " coordinates, expected " + std::to_string(c.k + 1));
            double norm2 = 0;
            for (double x : centre) {
                if (!std::isfinite(x)) throw DomainError("cap '" + label + "' has a non-finite coordinate");
                norm2 += x * x;
            }
            const double norm = std::sqrt(norm2);
            if (!(std::abs(norm - 1.0) <= 1e-6))
                throw DomainError("cap centre '" + label + "' is not a unit vector (norm " +
                                  std::to_string(norm) + ")");
            for (double& x : centre) x /= norm;
            for (const auto& seen : c.labels)
                if (seen == label) throw DomainError("duplicate cap label '" + label + "'");
            c.labels.push_back(label);
            c.centres.push_back(std::move(centre));
        }
        return c;
    }
};

struct ArcSet {
    double width = 0; // common angular width, in (0, 2pi)
    std::vector<std::string> labels;
    std::vector<double> angles; // centre angles, reduced into [0, 2pi)

    static ArcSet make(double width, std::vector<std::pair<std::string, double>> entries) {
        if (!(width > 0) || !(width < 2 * std::numbers::pi))
            throw DomainError("arc width must lie in (0, 2pi), got " + std::to_string(width));
        if (entries.empty()) throw DomainError("arc set needs at least one arc");
        ArcSet a;
        a.width = width;
        for (auto& [label, angle] : entries) {
            if (!std::isfinite(angle)) throw DomainError("arc '" + label + "' has a non-finite angle");
            double r = std::fmod(angle, 2 * std::numbers::pi);
            if (r < 0) r += 2 * std::numbers::pi;
            for (const auto& seen : a.labels)
                if (seen == label) throw DomainError("duplicate arc label '" + label + "'");
            a.labels.push_back(label);
            a.angles.push_back(r);
        }
        return a;
    }
};

struct DiskSet {
    std::vector<std::string> labels;
    std::vector<std::pair<double, double>> centres;

    static DiskSet make(std::vector<std::pair<std::string, std::pair<double, double>>> entries) {
        if (entries.empty()) throw DomainError("disk set needs at least one disk");
        DiskSet d;
        for (auto& [label, centre] : entries) {
            if (!std::isfinite(centre.first) || !std::isfinite(centre.second))
                throw DomainError("disk '" + label + "' has a non-finite coordinate");
            for (const auto& seen : d.labels)
                if (seen == label) throw DomainError("duplicate disk label '" + label + "'");
            d.labels.push_back(label);
            d.centres.push_back(centre);
        }
        return d;
    }
};

namespace detail {

inline double dot_dd(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double angle_between_units(const std::vector<double>& a, const std::vector<double>& b) {
    return std::acos(std::clamp(dot_dd(a, b), -1.0, 1.0));
}

inline double circular_distance(double a, double b) {
    double d = std::abs(a - b);
    d = std::fmod(d, 2 * std::numbers::pi);
    return std::min(d, 2 * std::numbers::pi - d);
}

inline Graph pairwise_graph(const std::vector<std::string>& labels, auto&& touches) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (touches(i, j)) edges.emplace_back(labels[i], labels[j]);
    return Graph("", labels, edges);
}

} // namespace detail

// Caps intersect iff the angle between their centres is at most theta; the
// band keeps knife-edge inputs (centre distance equal to theta) on the
// touching side regardless of rounding.
inline Graph caps_intersection_graph(const CapSet& c) {
    return detail::pairwise_graph(c.labels, [&](std::size_t i, std::size_t j) {
        return detail::angle_between_units(c.centres[i], c.centres[j]) <= c.theta + kBoundaryBand;
    });
}

inline Graph arcs_intersection_graph(const ArcSet& a) {
    return detail::pairwise_graph(a.labels, [&](std::size_t i, std::size_t j) {
        return detail::circular_distance(a.angles[i], a.angles[j]) <= a.width + kBoundaryBand;
    });
}

// Unit disks intersect iff their centres are at distance at most 2. Squared
// distances keep integer-coordinate instances exact.
inline Graph disks_intersection_graph(const DiskSet& d) {
    return detail::pairwise_graph(d.labels, [&](std::size_t i, std::size_t j) {
        const double dx = d.centres[i].first - d.centres[j].first;
        const double dy = d.centres[i].second - d.centres[j].second;
        return dx * dx + dy * dy <= 4.0;
    });
}

// a_i = c_i / sqrt(cos theta), t = 1: then a_i . a_j >= 1 iff the centre angle
// is at most theta, so the induced graph is the cap intersection graph (up to
// pairs inside the float boundary band).
inline FloatModel caps_to_model(const CapSet& c) {
    const double ct = std::cos(c.theta);
    if (!(ct > 0)) throw DomainError("cap diameter must stay below pi/2");
    const double scale = 1.0 / std::sqrt(ct);
    std::vector<std::pair<std::string, std::vector<double>>> entries;
    entries.reserve(c.labels.size());
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
        std::vector<double> row = c.centres[i];
        for (double& x : row) x *= scale;
        entries.emplace_back(c.labels[i], std::move(row));
    }
    return FloatModel::make(c.k + 1, 1.0, std::move(entries));
}

// An arc of width w is a cap of diameter w on S^1, so this defers to
// caps_to_model. Only narrow arcs convert: each must cover at most a quarter
// of the circle, which is exactly when cos w has the sign the cap scaling
// needs.
inline FloatModel arcs_to_model(const ArcSet& a) {
    if (!(a.width < std::numbers::pi / 2))
        throw DomainError("arc width must stay below pi/2 (each arc may cover at most a quarter of the circle), got " +
                          std::to_string(a.width));
    std::vector<std::pair<std::string, std::vector<double>>> entries;
    entries.reserve(a.labels.size());
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        entries.emplace_back(a.labels[i], std::vector<double>{std::cos(a.angles[i]), std::sin(a.angles[i])});
    return caps_to_model(CapSet::make(a.width, std::move(entries)));
}

// Lifts the plane onto S^2 by inverse stereographic projection at scale eps,
// then converts the image to caps. eps halves from 1 until the largest edge
// angle separates strictly from the smallest non-edge angle and their midpoint
// (the cap diameter) drops below pi/2; shrinking eps contracts the whole
// picture toward a pole, so this terminates whenever no non-edge is tangent.
inline FloatModel disks_to_model(const DiskSet& d) {
    const Graph g = disks_intersection_graph(d);
    const int n = g.n();

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double dx = d.centres[static_cast<std::size_t>(i)].first - d.centres[static_cast<std::size_t>(j)].first;
            const double dy = d.centres[static_cast<std::size_t>(i)].second - d.centres[static_cast<std::size_t>(j)].second;
            if (!g.adjacent(i, j) && dx * dx + dy * dy - 4.0 < 1e-12)
                throw DomainError("disks '" + g.label(i) + "' and '" + g.label(j) +
                                  "' are tangent within tolerance; no classifiable scale exists");
        }

    for (double eps = 1.0; eps >= std::ldexp(1.0, -40); eps /= 2) {
        std::vector<std::vector<double>> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double x = eps * d.centres[static_cast<std::size_t>(i)].first;
            const double y = eps * d.centres[static_cast<std::size_t>(i)].second;
            const double r2 = x * x + y * y;
            pts.push_back({2 * x / (r2 + 1), 2 * y / (r2 + 1), (r2 - 1) / (r2 + 1)});
        }
        // Chord lengths order the same way as angles and are better
        // conditioned near zero; only the two extremes become angles.
        double max_edge_chord2 = -1.0, min_nonedge_chord2 = -1.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double c2 = 0;
                for (int k = 0; k < 3; ++k) {
                    const double diff = pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
                                        pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                    c2 += diff * diff;
                }
                if (g.adjacent(i, j))
                    max_edge_chord2 = std::max(max_edge_chord2, c2);
                else if (min_nonedge_chord2 < 0 || c2 < min_nonedge_chord2)
                    min_nonedge_chord2 = c2;
            }
        const double max_edge_angle =
            max_edge_chord2 < 0 ? 0.0 : 2 * std::asin(std::min(1.0, std::sqrt(max_edge_chord2) / 2));
        const double min_nonedge_angle =
            min_nonedge_chord2 < 0 ? std::numbers::pi / 2
                                   : 2 * std::asin(std::min(1.0, std::sqrt(min_nonedge_chord2) / 2));
        if (!(max_edge_angle < min_nonedge_angle)) continue;
        const double theta = (max_edge_angle + min_nonedge_angle) / 2;
        if (!(theta < std::numbers::pi / 2)) continue;

        std::vector<std::pair<std::string, std::vector<double>>> entries;
        entries.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) entries.emplace_back(g.label(i), pts[static_cast<std::size_t>(i)]);
        return caps_to_model(CapSet::make(theta, std::move(entries)));
    }
    throw DomainError("disk scale selection failed: no scale separates edges from non-edges");
}

// --- file format -----------------------------------------------------------
//
// {"kind": "caps",  "theta": 0.7, "centres": {"a": [1.0, 0.0], ...}}
// {"kind": "arcs",  "width": 0.9, "angles":  {"a": 0.0, ...}}
// {"kind": "disks",               "centres": {"a": [0.0, 0.0], ...}}

using GeometricSet = std::variant<CapSet, ArcSet, DiskSet>;

namespace detail {

inline double geom_number(const nlohmann::json& x, const std::string& where) {
    if (!x.is_number()) throw ParseError("geometry field '" + where + "' must be a number");
    return x.get<double>();
}

inline std::vector<double> geom_coords(const nlohmann::json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError("geometry field '" + where + "' must be an array");
    std::vector<double> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(geom_number(arr[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace detail

inline nlohmann::ordered_json geometry_to_json(const GeometricSet& gs) {
    nlohmann::ordered_json j;
    if (const auto* c = std::get_if<CapSet>(&gs)) {
        j["kind"] = "caps";
        j["theta"] = c->theta;
        auto centres = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < c->labels.size(); ++i) centres[c->labels[i]] = c->centres[i];
        j["centres"] = std::move(centres);
    } else if (const auto* a = std::get_if<ArcSet>(&gs)) {
        j["kind"] = "arcs";
        j["width"] = a->width;
        auto angles = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < a->labels.size(); ++i) angles[a->labels[i]] = a->angles[i];
        j["angles"] = std::move(angles);
    } else {
        const auto& d = std::get<DiskSet>(gs);
        j["kind"] = "disks";
        auto centres = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < d.labels.size(); ++i)
            centres[d.labels[i]] = std::vector<double>{d.centres[i].first, d.centres[i].second};
        j["centres"] = std::move(centres);
    }
    return j;
}

inline GeometricSet geometry_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object()) throw ParseError("geometry document must be a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("geometry field 'kind' must be one of \"caps\", \"arcs\", \"disks\"");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "caps") {
            if (!j.contains("theta")) throw ParseError("geometry field 'theta' missing");
            if (!j.contains("centres") || !j.at("centres").is_object())
                throw ParseError("geometry field 'centres' must be an object");
            std::vector<std::pair<std::string, std::vector<double>>> entries;
            for (const auto& [label, arr] : j.at("centres").items())
                entries.emplace_back(label, detail::geom_coords(arr, "centres." + label));
            return CapSet::make(detail::geom_number(j.at("theta"), "theta"), std::move(entries));
        }
        if (kind == "arcs") {
            if (!j.contains("width")) throw ParseError("geometry field 'width' missing");
            if (!j.contains("angles") || !j.at("angles").is_object())
                throw ParseError("geometry field 'angles' must be an object");
            std::vector<std::pair<std::string, double>> entries;
            for (const auto& [label, x] : j.at("angles").items())
                entries.emplace_back(label, detail::geom_number(x, "angles." + label));
            return ArcSet::make(detail::geom_number(j.at("width"), "width"), std::move(entries));
        }
        if (kind == "disks") {
            if (!j.contains("centres") || !j.at("centres").is_object())
                throw ParseError("geometry field 'centres' must be an object");
            std::vector<std::pair<std::string, std::pair<double, double>>> entries;
            for (const auto& [label, arr] : j.at("centres").items()) {
                auto xy = detail::geom_coords(arr, "centres." + label);
                if (xy.size() != 2)
                    throw ParseError("geometry field 'centres." + label + "' must have exactly 2 coordinates");
                entries.emplace_back(label, std::make_pair(xy[0], xy[1]));
            }
            return DiskSet::make(std::move(entries));
        }
    } catch (const DomainError& e) {
        throw ParseError(std::string("bad geometry document: ") + e.what());
    }
    throw ParseError("geometry field 'kind' must be one of \"caps\", \"arcs\", \"disks\", got \"" + kind + "\"");
}

inline GeometricSet load_geometry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open geometry file '" + path + "'");
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("geometry file '" + path + "': " + e.what());
    }
    return geometry_from_json(j);
}

inline void save_geometry(const std::string& path, const GeometricSet& gs) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open geometry file '" + path + "' for writing");
    out << geometry_to_json(gs).dump(2) << '\n';
}

// Arc realizations of paths and cycles at spacing pi/n (paths) or 2pi/n
// (cycles) and width 1.5x the spacing: consecutive arcs overlap with slack,
// all other pairs stay clear by half a spacing.
inline ArcSet arcs_path(int n) {
    if (n < 1) throw DomainError("arc path needs n >= 1");
    const double spacing = std::numbers::pi / std::max(n, 4);
    std::vector<std::pair<std::string, double>> entries;
    for (int i = 0; i < n; ++i) entries.emplace_back("p" + std::to_string(i + 1), i * spacing);
    return ArcSet::make(1.5 * spacing, std::move(entries));
}

inline ArcSet arcs_cycle(int n) {
    if (n < 7) throw DomainError("arc cycle needs n >= 7 to keep the width below pi/2, got " +
                                 std::to_string(n));
    const double spacing = 2 * std::numbers::pi / n;
    std::vector<std::pair<std::string, double>> entries;
    for (int i = 0; i < n; ++i) entries.emplace_back("c" + std::to_string(i + 1), i * spacing);
    return ArcSet::make(1.5 * spacing, std::move(entries));
}

} // namespace dpg
