#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace dpg {

// Dot product dimension at most 1 means: a disjoint union of at most two
// threshold graphs. Isolated vertices can join either side, so the decision
// reduces to "at most two components contain edges, and every component peels
// down to nothing by repeatedly removing a vertex that is isolated or
// dominating within what remains".

struct Dimension1Report {
    bool at_most_1 = false;
    // The two-part split witnessing the decomposition; isolated vertices land
    // in the first part. Meaningful only when at_most_1.
    std::vector<std::string> part_a, part_b;
    std::string reason; // set when !at_most_1
};

namespace detail {

// Threshold test by peeling. Removal order cannot matter: in a threshold
// graph every induced subgraph again has an isolated or dominating vertex.
inline bool is_threshold(const Graph& g, const std::vector<std::string>& comp) {
    std::vector<int> alive;
    alive.reserve(comp.size());
    for (const auto& v : comp) alive.push_back(g.index_of(v));
    while (!alive.empty()) {
        int pick = -1;
        for (std::size_t i = 0; i < alive.size() && pick < 0; ++i) {
            int deg = 0;
            for (std::size_t j = 0; j < alive.size(); ++j)
                if (i != j && g.adjacent(alive[i], alive[j])) ++deg;
            if (deg == 0 || deg == static_cast<int>(alive.size()) - 1) pick = static_cast<int>(i);
        }
        if (pick < 0) return false; // peeling stalls
        alive.erase(alive.begin() + pick);
    }
    return true;
}

} // namespace detail

inline Dimension1Report dot_dimension_at_most_1(const Graph& g) {
    Dimension1Report rep;
    std::vector<std::vector<std::string>> with_edges;
    std::vector<std::string> isolated;

    for (const auto& comp : components(g)) {
        if (!detail::is_threshold(g, comp)) {
            rep.at_most_1 = false;
            rep.reason = "component containing '" + comp.front() +
                         "' is not a threshold graph: peeling stalls with no isolated or dominating vertex";
            return rep;
        }
        if (comp.size() == 1)
            isolated.push_back(comp.front());
        else
            with_edges.push_back(comp);
    }
    if (with_edges.size() > 2) {
        rep.at_most_1 = false;
        rep.reason = std::to_string(with_edges.size()) +
                     " components contain edges; a union of at most two threshold graphs has at most two";
        return rep;
    }

    rep.at_most_1 = true;
    if (!with_edges.empty())
        rep.part_a.insert(rep.part_a.end(), with_edges[0].begin(), with_edges[0].end());
    rep.part_a.insert(rep.part_a.end(), isolated.begin(), isolated.end());
    if (with_edges.size() == 2)
        rep.part_b.insert(rep.part_b.end(), with_edges[1].begin(), with_edges[1].end());
    return rep;
}

} // namespace dpg
