#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace dpg {

// Finite simple undirected graph with string vertex labels.
// Vertex declaration order is preserved; equality is on label and edge sets.
class Graph {
public:
    Graph() = default;

    Graph(std::string name, std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edge_list)
        : name_(std::move(name)), labels_(std::move(vertices)) {
        index_.reserve(labels_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i].empty()) throw DomainError("empty vertex label");
            if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
                throw DomainError("duplicate vertex label '" + labels_[i] + "'");
        }
        adj_.assign(labels_.size(), std::vector<bool>(labels_.size(), false));
        for (const auto& [a, b] : edge_list) {
            const int u = index_of(a);
            const int v = index_of(b);
            if (u == v) throw DomainError("self-loop at vertex '" + a + "'");
            if (adj_[u][v]) throw DomainError("duplicate edge {" + a + "," + b + "}");
            adj_[u][v] = adj_[v][u] = true;
            ++m_;
        }
    }

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    int n() const { return static_cast<int>(labels_.size()); }
    int m() const { return m_; }

    const std::vector<std::string>& vertices() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

    bool has_vertex(const std::string& v) const { return index_.count(v) != 0; }

    int index_of(const std::string& v) const {
        const auto it = index_.find(v);
        if (it == index_.end()) throw DomainError("unknown vertex '" + v + "'");
        return it->second;
    }

    bool adjacent(int u, int v) const { return adj_[u][v]; }
    bool adjacent(const std::string& u, const std::string& v) const {
        return adj_[index_of(u)][index_of(v)];
    }

    int degree(int u) const {
        int d = 0;
        for (int v = 0; v < n(); ++v) d += adj_[u][v] ? 1 : 0;
        return d;
    }

    std::vector<int> neighbors(int u) const {
        std::vector<int> out;
        for (int v = 0; v < n(); ++v)
            if (adj_[u][v]) out.push_back(v);
        return out;
    }

    // Edges in canonical order: pairs (i, j) with i < j by declaration index.
    std::vector<std::pair<std::string, std::string>> edges() const {
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (adj_[i][j]) out.emplace_back(labels_[i], labels_[j]);
        return out;
    }

    bool operator==(const Graph& other) const {
        if (n() != other.n() || m() != other.m()) return false;
        std::vector<std::string> a = labels_, b = other.labels_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
        for (const auto& [u, v] : edges())
            if (!other.adjacent(u, v)) return false;
        return true;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

    std::string id() const {
        if (!name_.empty()) return name_;
        return "graph(n=" + std::to_string(n()) + ",m=" + std::to_string(m_) + ")";
    }

    // Format: {"vertices": [...], "edges": [[u,v],...]}, optional "name".
    // Order-insensitive on load; duplicate edges (either orientation) rejected.
    static Graph from_json(const nlohmann::json& j) {
        if (!j.is_object()) throw ParseError("graph document must be a JSON object");
        if (!j.contains("vertices")) throw ParseError("graph field 'vertices' missing");
        if (!j.contains("edges")) throw ParseError("graph field 'edges' missing");
        const auto& jv = j.at("vertices");
        const auto& je = j.at("edges");
        if (!jv.is_array()) throw ParseError("graph field 'vertices' must be an array");
        if (!je.is_array()) throw ParseError("graph field 'edges' must be an array");
        std::string name;
        if (j.contains("name")) {
            if (!j.at("name").is_string()) throw ParseError("graph field 'name' must be a string");
            name = j.at("name").get<std::string>();
        }
        std::vector<std::string> vertices;
        for (const auto& x : jv) {
            if (!x.is_string()) throw ParseError("graph field 'vertices' must contain strings");
            vertices.push_back(x.get<std::string>());
        }
        std::vector<std::pair<std::string, std::string>> edge_list;
        for (const auto& e : je) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("graph field 'edges' entries must be [u, v] label pairs");
            edge_list.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        try {
            return Graph(std::move(name), std::move(vertices), edge_list);
        } catch (const DomainError& e) {
            throw ParseError(std::string("bad graph document: ") + e.what());
        }
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        if (!name_.empty()) j["name"] = name_;
        j["vertices"] = labels_;
        auto e = nlohmann::ordered_json::array();
        for (const auto& [u, v] : edges()) e.push_back({u, v});
        j["edges"] = std::move(e);
        return j;
    }

    static Graph load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open graph file '" + path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("graph file '" + path + "': " + e.what());
        }
        return from_json(j);
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw ParseError("cannot write graph file '" + path + "'");
        out << to_json().dump(2) << "\n";
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<bool>> adj_;
    int m_ = 0;
};

inline Graph complement(const Graph& g) {
    std::vector<std::pair<std::string, std::string>> edge_list;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!g.adjacent(i, j)) edge_list.emplace_back(g.label(i), g.label(j));
    std::string name = g.name().empty() ? std::string{} : "complement(" + g.name() + ")";
    return Graph(std::move(name), g.vertices(), edge_list);
}

// Keeps vertices in the graph's declaration order, filtered to `keep`.
inline Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep) {
    std::vector<bool> in(static_cast<std::size_t>(g.n()), false);
    for (const auto& v : keep) in[static_cast<std::size_t>(g.index_of(v))] = true;
    std::vector<std::string> vertices;
    for (int i = 0; i < g.n(); ++i)
        if (in[static_cast<std::size_t>(i)]) vertices.push_back(g.label(i));
    std::vector<std::pair<std::string, std::string>> edge_list;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (in[static_cast<std::size_t>(i)] && in[static_cast<std::size_t>(j)] && g.adjacent(i, j))
                edge_list.emplace_back(g.label(i), g.label(j));
    return Graph("", std::move(vertices), edge_list);
}

// Connected components as label groups, in order of first appearance.
inline std::vector<std::vector<std::string>> components(const Graph& g) {
    std::vector<std::vector<std::string>> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> group;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            group.push_back(u);
            for (int v = 0; v < g.n(); ++v)
                if (g.adjacent(u, v) && !seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    q.push(v);
                }
        }
        std::sort(group.begin(), group.end());
        std::vector<std::string> labels;
        for (int u : group) labels.push_back(g.label(u));
        out.push_back(std::move(labels));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.n() <= 1 || components(g).size() == 1;
}

inline bool is_triangle_free(const Graph& g) {
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) {
            if (!g.adjacent(i, j)) continue;
            for (int k = j + 1; k < g.n(); ++k)
                if (g.adjacent(i, k) && g.adjacent(j, k)) return false;
        }
    return true;
}

// True iff the graph is connected and is a simple path (including a single
// vertex) or a simple cycle on at least three vertices.
inline bool is_path_or_cycle(const Graph& g) {
    if (g.n() == 0) return false;
    if (!is_connected(g)) return false;
    int max_deg = 0;
    for (int i = 0; i < g.n(); ++i) max_deg = std::max(max_deg, g.degree(i));
    if (max_deg > 2) return false;
    if (g.m() == g.n() - 1) return true;            // path
    return g.m() == g.n() && g.n() >= 3;            // cycle: all degrees 2 given connected + m == n
}

namespace detail {

// Maximal cliques of the mask-encoded graph; tracks the minimum clique size.
inline void bron_kerbosch_min(const std::vector<std::uint32_t>& adj, std::uint32_t r,
                              std::uint32_t p, std::uint32_t x, int& best) {
    if (p == 0 && x == 0) {
        best = std::min(best, std::popcount(r));
        return;
    }
    if (std::popcount(r) >= best) return; // any completion is at least this large
    const std::uint32_t px = p | x;
    int pivot = std::countr_zero(px);
    int pivot_score = -1;
    for (std::uint32_t rest = px; rest;) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        const int score = std::popcount(p & adj[static_cast<std::size_t>(u)]);
        if (score > pivot_score) {
            pivot_score = score;
            pivot = u;
        }
    }
    std::uint32_t cand = p & ~adj[static_cast<std::size_t>(pivot)];
    while (cand) {
        const int v = std::countr_zero(cand);
        const std::uint32_t bit = 1u << v;
        cand &= cand - 1;
        bron_kerbosch_min(adj, r | bit, p & adj[static_cast<std::size_t>(v)],
                          x & adj[static_cast<std::size_t>(v)], best);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace detail

// Size of a smallest maximal independent set. Exhaustive; capped at 24 vertices.
inline int min_maximal_independent_set_size(const Graph& g) {
    if (g.n() > 24)
        throw SizeLimitError("instance too large: min_maximal_independent_set_size supports |V| <= 24, got " +
                             std::to_string(g.n()));
    if (g.n() == 0) return 0;
    // maximal independent sets of g = maximal cliques of its complement
    std::vector<std::uint32_t> co_adj(static_cast<std::size_t>(g.n()), 0);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (i != j && !g.adjacent(i, j)) co_adj[static_cast<std::size_t>(i)] |= 1u << j;
    int best = g.n() + 1;
    const std::uint32_t all = (g.n() == 32) ? ~0u : ((1u << g.n()) - 1);
    detail::bron_kerbosch_min(co_adj, 0, all, 0, best);
    return best;
}

// True iff the complement is bipartite, i.e. V splits into at most two cliques.
inline bool is_cobipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v = 0; v < g.n(); ++v) {
                if (u == v || g.adjacent(u, v)) continue; // complement edge = non-adjacent
                auto& cv = color[static_cast<std::size_t>(v)];
                if (cv == -1) {
                    cv = 1 - color[static_cast<std::size_t>(u)];
                    q.push(v);
                } else if (cv == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Vertex-disjoint union; label collisions are the caller's responsibility.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::string> vertices = a.vertices();
    vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
    auto edge_list = a.edges();
    const auto eb = b.edges();
    edge_list.insert(edge_list.end(), eb.begin(), eb.end());
    return Graph("", std::move(vertices), edge_list);
}

inline Graph relabel_prefix(const Graph& g, const std::string& prefix) {
    std::vector<std::string> vertices;
    for (const auto& v : g.vertices()) vertices.push_back(prefix + v);
    std::vector<std::pair<std::string, std::string>> edge_list;
    for (const auto& [u, v] : g.edges()) edge_list.emplace_back(prefix + u, prefix + v);
    return Graph(g.name(), std::move(vertices), edge_list);
}

} // namespace dpg
