#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace dpg {

// Corpus graph generators. Label schemes are fixed so models and geometric
// realizations elsewhere in the library can address vertices by name.

inline Graph gen_cycle(int n) {
    if (n < 3) throw DomainError("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= n; ++i) vs.push_back("c" + std::to_string(i));
    for (int i = 0; i < n; ++i) es.emplace_back(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>((i + 1) % n)]);
    return Graph("cycle(" + std::to_string(n) + ")", std::move(vs), es);
}

inline Graph gen_path(int n) {
    if (n < 1) throw DomainError("path needs n >= 1, got " + std::to_string(n));
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= n; ++i) vs.push_back("p" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(i + 1)]);
    return Graph("path(" + std::to_string(n) + ")", std::move(vs), es);
}

// n total vertices: hub "h" dominating a cycle r1..r_{n-1}.
inline Graph gen_wheel(int n) {
    if (n < 4) throw DomainError("wheel needs n >= 4 total vertices, got " + std::to_string(n));
    std::vector<std::string> vs{"h"};
    std::vector<std::pair<std::string, std::string>> es;
    const int rim = n - 1;
    for (int i = 1; i <= rim; ++i) vs.push_back("r" + std::to_string(i));
    for (int i = 1; i <= rim; ++i) {
        es.emplace_back("r" + std::to_string(i), "r" + std::to_string(i % rim + 1));
        es.emplace_back("h", "r" + std::to_string(i));
    }
    return Graph("wheel(" + std::to_string(n) + ")", std::move(vs), es);
}

// n total vertices: hub "h" dominating a path p1..p_{n-1}.
inline Graph gen_fan(int n) {
    if (n < 2) throw DomainError("fan needs n >= 2 total vertices, got " + std::to_string(n));
    std::vector<std::string> vs{"h"};
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= n - 1; ++i) {
        vs.push_back("p" + std::to_string(i));
        es.emplace_back("h", "p" + std::to_string(i));
        if (i > 1) es.emplace_back("p" + std::to_string(i - 1), "p" + std::to_string(i));
    }
    return Graph("fan(" + std::to_string(n) + ")", std::move(vs), es);
}

// rows x cols rectangular grid, labels g{row}_{col}, 1-based.
inline Graph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw DomainError("grid needs rows, cols >= 1, got " + std::to_string(rows) + "x" + std::to_string(cols));
    auto lab = [](int r, int c) { return "g" + std::to_string(r) + "_" + std::to_string(c); };
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) {
            vs.push_back(lab(r, c));
            if (c > 1) es.emplace_back(lab(r, c - 1), lab(r, c));
            if (r > 1) es.emplace_back(lab(r - 1, c), lab(r, c));
        }
    return Graph("grid(" + std::to_string(rows) + "," + std::to_string(cols) + ")", std::move(vs), es);
}

inline Graph gen_claw() {
    return Graph("claw", {"c", "l1", "l2", "l3"},
                 {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}});
}

// 4-cycle r1r2r3r4 plus two non-adjacent dominating vertices h1, h2 (octahedron).
inline Graph gen_bi4wheel() {
    std::vector<std::string> vs{"h1", "h2", "r1", "r2", "r3", "r4"};
    std::vector<std::pair<std::string, std::string>> es{
        {"r1", "r2"}, {"r2", "r3"}, {"r3", "r4"}, {"r4", "r1"}};
    for (int i = 1; i <= 4; ++i) {
        es.emplace_back("h1", "r" + std::to_string(i));
        es.emplace_back("h2", "r" + std::to_string(i));
    }
    return Graph("bi4wheel", std::move(vs), es);
}

// 4-regular graph on two 4-cycles s-t-u-v and w-x-y-z with eight cross edges.
inline Graph gen_J() {
    return Graph("J", {"s", "t", "u", "v", "w", "x", "y", "z"},
                 {{"s", "t"}, {"t", "u"}, {"u", "v"}, {"v", "s"},
                  {"w", "x"}, {"x", "y"}, {"y", "z"}, {"z", "w"},
                  {"s", "w"}, {"s", "z"}, {"t", "w"}, {"t", "x"},
                  {"u", "x"}, {"u", "y"}, {"v", "y"}, {"v", "z"}});
}

// Clique {a,b,c,d} plus independent set {u,v,w,x,y,z}, each of degree 2.
inline Graph gen_K() {
    std::vector<std::string> vs{"a", "b", "c", "d", "u", "v", "w", "x", "y", "z"};
    std::vector<std::pair<std::string, std::string>> es{
        {"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"},
        {"y", "b"}, {"y", "c"}, {"v", "b"}, {"v", "d"}, {"w", "c"}, {"w", "d"},
        {"u", "a"}, {"u", "c"}, {"x", "a"}, {"x", "d"}, {"z", "a"}, {"z", "b"}};
    return Graph("K", std::move(vs), es);
}

// A_{2n}: complement of the 2n-cycle on v1..vn, w1..wn. Non-edges are exactly
//   v1: {w1, w2}        vn: {w_{n-1}, wn}
//   vi: {w_{i-1}, w_{i+1}} and wi: {v_{i-1}, v_{i+1}} for 1 < i < n,
// mirrored for w1/wn, which nests the two halves against each other.
inline Graph gen_anticycle(int n) {
    if (n < 3) throw DomainError("anticycle needs n >= 3 (graph A_{2n}), got " + std::to_string(n));
    auto v = [](int i) { return "v" + std::to_string(i); };
    auto w = [](int i) { return "w" + std::to_string(i); };
    std::vector<std::string> vs;
    for (int i = 1; i <= n; ++i) vs.push_back(v(i));
    for (int i = 1; i <= n; ++i) vs.push_back(w(i));

    std::vector<std::pair<std::string, std::string>> non_edges{
        {v(1), w(1)}, {v(1), w(2)}, {v(2), w(1)},
        {v(n - 1), w(n)}, {v(n), w(n)}, {v(n), w(n - 1)}};
    for (int i = 2; i <= n - 1; ++i) {
        non_edges.emplace_back(v(i), w(i - 1));
        non_edges.emplace_back(v(i), w(i + 1));
        non_edges.emplace_back(w(i), v(i - 1));
        non_edges.emplace_back(w(i), v(i + 1));
    }
    auto is_non_edge = [&](const std::string& a, const std::string& b) {
        for (const auto& [x, y] : non_edges)
            if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
    };
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!is_non_edge(vs[i], vs[j])) es.emplace_back(vs[i], vs[j]);
    return Graph("anticycle(" + std::to_string(n) + ")", std::move(vs), es);
}

// K_n minus a k-matching: v1..vk, w1..wk matched (non-adjacent), u1.. extras.
inline Graph gen_complete_minus_matching(int n, int k) {
    if (n < 1 || k < 0 || 2 * k > n)
        throw DomainError("complete-minus-matching needs 0 <= 2k <= n, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
    std::vector<std::string> vs;
    for (int i = 1; i <= k; ++i) vs.push_back("v" + std::to_string(i));
    for (int i = 1; i <= k; ++i) vs.push_back("w" + std::to_string(i));
    for (int i = 1; i <= n - 2 * k; ++i) vs.push_back("u" + std::to_string(i));
    auto matched = [&](std::size_t a, std::size_t b) {
        const std::size_t kk = static_cast<std::size_t>(k);
        return b >= kk && b < 2 * kk && a + kk == b; // (v_{a+1}, w_{a+1})
    };
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!matched(i, j)) es.emplace_back(vs[i], vs[j]);
    return Graph("complete-minus-matching(" + std::to_string(n) + "," + std::to_string(k) + ")",
                 std::move(vs), es);
}

// Dispatcher for the CLI and file-driven callers.
inline Graph gen_named(const std::string& name, const std::vector<int>& params = {}) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw DomainError("'" + name + "' takes " + std::to_string(k) + " parameter(s), got " +
                              std::to_string(params.size()));
    };
    if (name == "claw") { want(0); return gen_claw(); }
    if (name == "bi4wheel") { want(0); return gen_bi4wheel(); }
    if (name == "J") { want(0); return gen_J(); }
    if (name == "K") { want(0); return gen_K(); }
    if (name == "cycle") { want(1); return gen_cycle(params[0]); }
    if (name == "path") { want(1); return gen_path(params[0]); }
    if (name == "wheel") { want(1); return gen_wheel(params[0]); }
    if (name == "fan") { want(1); return gen_fan(params[0]); }
    if (name == "anticycle") { want(1); return gen_anticycle(params[0]); }
    if (name == "grid") { want(2); return gen_grid(params[0], params[1]); }
    if (name == "complete-minus-matching") { want(2); return gen_complete_minus_matching(params[0], params[1]); }
    throw DomainError("unknown graph name '" + name + "'");
}

} // namespace dpg
