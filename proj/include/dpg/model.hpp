#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace dpg {

// Pairs whose dot product sits within this band of the threshold are flagged
// as boundary-ambiguous in float mode instead of being silently classified.
inline constexpr double kBoundaryBand = 1e-9;

// Assignment of a d-vector to every vertex plus a positive threshold t.
// Edge rule is closed: uv is an edge iff dot(a^u, a^v) >= t.
template <class S>
struct VectorModel {
    int dim = 0;
    S t{};
    std::vector<std::string> labels;     // declaration order, preserved by IO
    std::vector<std::vector<S>> rows;    // parallel to labels
    std::unordered_map<std::string, int> index;

    static VectorModel make(int dim, S t,
                            std::vector<std::pair<std::string, std::vector<S>>> entries) {
        if (dim < 1) throw DomainError("model field 'dim' must be >= 1");
        if (!(t > 0)) throw DomainError("model field 't' must be positive");
        if (entries.empty()) throw DomainError("model field 'vectors' must be nonempty");
        VectorModel m;
        m.dim = dim;
        m.t = std::move(t);
        for (auto& [label, vec] : entries) {
            if (label.empty()) throw DomainError("model field 'vectors' has an empty label");
            if (static_cast<int>(vec.size()) != dim)
                throw DomainError("model vector '" + label + "' has length " +
                                  std::to_string(vec.size()) + ", expected " + std::to_string(dim));
            if constexpr (!is_exact_scalar_v<S>) {
                for (const S& x : vec)
                    if (!std::isfinite(x))
                        throw DomainError("model vector '" + label + "' has a non-finite entry");
            }
            if (!m.index.emplace(label, static_cast<int>(m.labels.size())).second)
                throw DomainError("duplicate model label '" + label + "'");
            m.labels.push_back(label);
            m.rows.push_back(std::move(vec));
        }
        if constexpr (!is_exact_scalar_v<S>) {
            if (!std::isfinite(m.t)) throw DomainError("model field 't' must be finite");
        }
        return m;
    }

    int n() const { return static_cast<int>(labels.size()); }

    int index_of(const std::string& v) const {
        const auto it = index.find(v);
        if (it == index.end()) throw DomainError("model has no vertex '" + v + "'");
        return it->second;
    }

    const std::vector<S>& vec(const std::string& v) const {
        return rows[static_cast<std::size_t>(index_of(v))];
    }

    S dot(int i, int j) const {
        const auto& a = rows[static_cast<std::size_t>(i)];
        const auto& b = rows[static_cast<std::size_t>(j)];
        S acc{};
        for (int k = 0; k < dim; ++k)
            acc += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
        return acc;
    }
};

using RationalModel = VectorModel<Rational>;
using FloatModel    = VectorModel<double>;
using AnyModel      = std::variant<RationalModel, FloatModel>;

enum class Verdict { Accept, Reject, BoundaryAmbiguous };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Accept: return "accept";
        case Verdict::Reject: return "reject";
        case Verdict::BoundaryAmbiguous: return "boundary-ambiguous";
    }
    return "?";
}

template <class S>
struct PairReport {
    std::string u, v;
    bool expected_edge = false;
    S dot{};
};

template <class S>
struct VerificationReport {
    Verdict verdict = Verdict::Accept;
    std::vector<PairReport<S>> violations;
    std::vector<PairReport<S>> boundary;              // float mode only
    std::optional<S> min_edge_margin;                  // min over edges of dot - t
    std::optional<S> min_nonedge_deficit;              // min over non-edges of t - dot
    std::optional<std::pair<std::string, std::string>> min_edge_pair;
    std::optional<std::pair<std::string, std::string>> min_nonedge_pair;

    bool accepted() const { return verdict == Verdict::Accept; }
};

template <class S>
struct InducedResult {
    Graph graph;
    // Pairs with |dot - t| < band (float mode); classified by the closed rule
    // but reported here so callers never mistake a knife-edge for a fact.
    std::vector<std::pair<std::string, std::string>> boundary;
};

template <class S>
InducedResult<S> induced_graph(const VectorModel<S>& m, double band = kBoundaryBand) {
    std::vector<std::pair<std::string, std::string>> edge_list;
    std::vector<std::pair<std::string, std::string>> boundary;
    for (int i = 0; i < m.n(); ++i)
        for (int j = i + 1; j < m.n(); ++j) {
            const S d = m.dot(i, j);
            if (d >= m.t) edge_list.emplace_back(m.labels[static_cast<std::size_t>(i)],
                                                 m.labels[static_cast<std::size_t>(j)]);
            if constexpr (!is_exact_scalar_v<S>) {
                if (std::abs(d - m.t) < band)
                    boundary.emplace_back(m.labels[static_cast<std::size_t>(i)],
                                          m.labels[static_cast<std::size_t>(j)]);
            }
        }
    return {Graph("", m.labels, edge_list), std::move(boundary)};
}

// Checks M against G pair by pair. Vertex sets must coincide. In float mode a
// pair inside the boundary band is not judged either way: it goes to the
// boundary list and forces the boundary-ambiguous verdict.
template <class S>
VerificationReport<S> verify_model(const VectorModel<S>& m, const Graph& g,
                                   double band = kBoundaryBand) {
    if (m.n() != g.n())
        throw DomainError("vertex sets differ: model has " + std::to_string(m.n()) +
                          " vertices, graph has " + std::to_string(g.n()));
    for (const auto& v : g.vertices())
        if (!m.index.count(v)) throw DomainError("vertex sets differ: model lacks '" + v + "'");

    VerificationReport<S> rep;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) {
            const std::string& u = g.label(i);
            const std::string& v = g.label(j);
            const S d = m.dot(m.index_of(u), m.index_of(v));
            const bool expected = g.adjacent(i, j);
            if (expected) {
                const S margin = d - m.t;
                if (!rep.min_edge_margin || margin < *rep.min_edge_margin) {
                    rep.min_edge_margin = margin;
                    rep.min_edge_pair = {{u, v}};
                }
            } else {
                const S deficit = m.t - d;
                if (!rep.min_nonedge_deficit || deficit < *rep.min_nonedge_deficit) {
                    rep.min_nonedge_deficit = deficit;
                    rep.min_nonedge_pair = {{u, v}};
                }
            }
            if constexpr (!is_exact_scalar_v<S>) {
                if (std::abs(d - m.t) < band) {
                    rep.boundary.push_back({u, v, expected, d});
                    continue;
                }
            }
            const bool actual = d >= m.t;
            if (actual != expected) rep.violations.push_back({u, v, expected, d});
        }
    if (!rep.boundary.empty())
        rep.verdict = Verdict::BoundaryAmbiguous;
    else
        rep.verdict = rep.violations.empty() ? Verdict::Accept : Verdict::Reject;
    return rep;
}

// Same induced graph for every lambda > 0: dots scale by lambda^2, as does t.
template <class S>
VectorModel<S> scale_model(const VectorModel<S>& m, const S& lambda) {
    if (!(lambda > 0)) throw DomainError("scale_model needs lambda > 0");
    VectorModel<S> out = m;
    out.t = m.t * lambda * lambda;
    for (auto& row : out.rows)
        for (auto& x : row) x = x * lambda;
    return out;
}

// ---- model file format -----------------------------------------------------
// {"dim": d, "t": <scalar>, "vectors": {label: [<scalar>...], ...}}
// Exact mode writes every scalar as a "p/q" (or integer "p") string; float
// mode writes JSON numbers. The two never mix in one document.

namespace detail {

inline nlohmann::ordered_json scalar_to_json(const Rational& q) { return rational_to_string(q); }
inline nlohmann::ordered_json scalar_to_json(double x) { return x; }

enum class ScalarMode { Unknown, Exact, Float };

inline void note_mode(ScalarMode& mode, const nlohmann::json& x, const std::string& where) {
    ScalarMode here;
    if (x.is_string())
        here = ScalarMode::Exact;
    else if (x.is_number())
        here = ScalarMode::Float;
    else
        throw ParseError("model field '" + where + "' must be a number or a \"p/q\" string");
    if (mode == ScalarMode::Unknown) mode = here;
    else if (mode != here)
        throw ParseError("mixed scalar modes: field '" + where + "' does not match the rest of the document");
}

} // namespace detail

template <class S>
nlohmann::ordered_json model_to_json(const VectorModel<S>& m) {
    nlohmann::ordered_json j;
    j["dim"] = m.dim;
    j["t"] = detail::scalar_to_json(m.t);
    auto vecs = nlohmann::ordered_json::object();
    for (int i = 0; i < m.n(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (const S& x : m.rows[static_cast<std::size_t>(i)]) row.push_back(detail::scalar_to_json(x));
        vecs[m.labels[static_cast<std::size_t>(i)]] = std::move(row);
    }
    j["vectors"] = std::move(vecs);
    return j;
}

inline AnyModel model_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object()) throw ParseError("model document must be a JSON object");
    for (const char* field : {"dim", "t", "vectors"})
        if (!j.contains(field)) throw ParseError(std::string("model field '") + field + "' missing");
    if (!j.at("dim").is_number_integer()) throw ParseError("model field 'dim' must be an integer");
    const int dim = j.at("dim").get<int>();
    const auto& jv = j.at("vectors");
    if (!jv.is_object()) throw ParseError("model field 'vectors' must be an object");

    using detail::ScalarMode;
    ScalarMode mode = ScalarMode::Unknown;
    detail::note_mode(mode, j.at("t"), "t");
    for (const auto& [label, arr] : jv.items()) {
        if (!arr.is_array())
            throw ParseError("model field 'vectors." + label + "' must be an array");
        for (std::size_t k = 0; k < arr.size(); ++k)
            detail::note_mode(mode, arr[k], "vectors." + label + "[" + std::to_string(k) + "]");
    }

    auto build = [&](auto decode) -> AnyModel {
        using S = decltype(decode(j.at("t"), std::string{}));
        std::vector<std::pair<std::string, std::vector<S>>> entries;
        for (const auto& [label, arr] : jv.items()) {
            std::vector<S> row;
            for (std::size_t k = 0; k < arr.size(); ++k)
                row.push_back(decode(arr[k], "vectors." + label + "[" + std::to_string(k) + "]"));
            entries.emplace_back(label, std::move(row));
        }
        try {
            return VectorModel<S>::make(dim, decode(j.at("t"), "t"), std::move(entries));
        } catch (const DomainError& e) {
            throw ParseError(std::string("bad model document: ") + e.what());
        }
    };

    if (mode == ScalarMode::Exact)
        return build([](const nlohmann::ordered_json& x, const std::string&) {
            return parse_rational(x.get<std::string>());
        });
    return build([](const nlohmann::ordered_json& x, const std::string& where) {
        const double v = x.get<double>();
        if (!std::isfinite(v)) throw ParseError("model field '" + where + "' is not finite");
        return v;
    });
}

inline AnyModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file '" + path + "'");
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("model file '" + path + "': " + e.what());
    }
    return model_from_json(j);
}

template <class S>
void save_model(const VectorModel<S>& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write model file '" + path + "'");
    out << model_to_json(m).dump(2) << "\n";
}

} // namespace dpg
