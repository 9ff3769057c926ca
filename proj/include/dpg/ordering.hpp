#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"

namespace dpg {

// Constraints a total left-to-right order must satisfy if it is the angular
// order of a genuine 2-d representation with all vectors in a closed
// half-plane. "Between" always means strictly inside the interval of
// positions. The violation kinds:
//
//   L1              edges ad, bc and non-edges ac, bd with b and c both
//                   between a and d; no order admits this.
//   L4              an induced 4-cycle placed so that its two non-adjacent
//                   pairs are not {outermost, outermost} and {inner, inner}.
//   L3              a pair each of which is forced to be strictly shorter
//                   than the other (a 2-cycle of magnitude constraints).
//   MAGNITUDE_CYCLE a longer cycle of forced strict magnitude decreases;
//                   each step b > c comes from a triple (a, b, c) with c
//                   between a and b, edge ab and non-edge ac.
//   NESTED          an anticycle ordering that breaks the nesting template
//                   (reported by check_nested, never by ordering_violations).

enum class ViolationKind { L1, L3, L4, MagnitudeCycle, Nested };

inline const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::L1: return "L1";
        case ViolationKind::L3: return "L3";
        case ViolationKind::L4: return "L4";
        case ViolationKind::MagnitudeCycle: return "MAGNITUDE_CYCLE";
        case ViolationKind::Nested: return "NESTED";
    }
    return "?";
}

// One forced strict decrease |a^longer| > |a^shorter|, witnessed by the triple
// (via, longer, shorter).
struct MagnitudeArc {
    std::string longer, shorter, via;
};

struct OrderingViolation {
    ViolationKind kind = ViolationKind::L1;
    // L1: (a, b, c, d). L4: the 4-cycle vertices in position order.
    // L3 / MAGNITUDE_CYCLE: the cycle vertices. NESTED: the offending pair.
    std::vector<std::string> witness;
    std::vector<MagnitudeArc> chain; // magnitude cycles only, closed
    std::string note;                // NESTED only: which template condition failed
};

namespace detail {

// Positions of the ordering's labels by graph index; throws unless pi is a
// permutation of V(g).
inline std::vector<int> position_of(const Graph& g, const std::vector<std::string>& pi) {
    if (static_cast<int>(pi.size()) != g.n())
        throw DomainError("ordering has " + std::to_string(pi.size()) + " entries for a graph on " +
                          std::to_string(g.n()) + " vertices");
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    for (int p = 0; p < g.n(); ++p) {
        const int u = g.index_of(pi[static_cast<std::size_t>(p)]);
        if (pos[static_cast<std::size_t>(u)] != -1)
            throw DomainError("ordering repeats vertex '" + pi[static_cast<std::size_t>(p)] + "'");
        pos[static_cast<std::size_t>(u)] = p;
    }
    return pos;
}

inline bool strictly_between(int p, int q, int r) {
    // q strictly inside the interval spanned by p and r
    return (std::min(p, r) < q) && (q < std::max(p, r));
}

// The two non-adjacent pairs of an induced 4-cycle on {i, j, k, l}, or false.
inline bool induced_c4_nonedges(const Graph& g, int a, int b, int c, int d,
                                std::pair<int, int>& n1, std::pair<int, int>& n2) {
    const int v[4] = {a, b, c, d};
    std::vector<std::pair<int, int>> non;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!g.adjacent(v[i], v[j])) non.emplace_back(v[i], v[j]);
    if (non.size() != 2) return false;
    if (non[0].first == non[1].first || non[0].first == non[1].second ||
        non[0].second == non[1].first || non[0].second == non[1].second)
        return false; // shares a vertex: paw/diamond shape, not a 4-cycle
    n1 = non[0];
    n2 = non[1];
    return true;
}

} // namespace detail

// All order constraints violated by pi, scanned exhaustively. Magnitude
// cycles: every 2-cycle is listed (as L3); when there is none but the
// magnitude digraph is still cyclic, one shortest cycle is reported.
inline std::vector<OrderingViolation> ordering_violations(const Graph& g,
                                                          const std::vector<std::string>& pi) {
    const int n = g.n();
    const std::vector<int> pos = detail::position_of(g, pi);
    std::vector<int> at(static_cast<std::size_t>(n)); // position -> graph index
    for (int u = 0; u < n; ++u) at[static_cast<std::size_t>(pos[static_cast<std::size_t>(u)])] = u;

    std::vector<OrderingViolation> out;

    // L1, scanned over positions with pos(a) < pos(d); the reversed tuple
    // describes the same instance, so this emits each exactly once.
    for (int pa = 0; pa < n; ++pa)
        for (int pd = pa + 3; pd < n; ++pd) {
            const int a = at[static_cast<std::size_t>(pa)], d = at[static_cast<std::size_t>(pd)];
            if (!g.adjacent(a, d)) continue;
            for (int pb = pa + 1; pb < pd; ++pb)
                for (int pc = pa + 1; pc < pd; ++pc) {
                    if (pb == pc) continue;
                    const int b = at[static_cast<std::size_t>(pb)], c = at[static_cast<std::size_t>(pc)];
                    if (g.adjacent(b, c) && !g.adjacent(a, c) && !g.adjacent(b, d))
                        out.push_back({ViolationKind::L1,
                                       {g.label(a), g.label(b), g.label(c), g.label(d)},
                                       {},
                                       {}});
                }
        }

    // L4 over position-sorted 4-sets.
    for (int p1 = 0; p1 < n; ++p1)
        for (int p2 = p1 + 1; p2 < n; ++p2)
            for (int p3 = p2 + 1; p3 < n; ++p3)
                for (int p4 = p3 + 1; p4 < n; ++p4) {
                    const int a = at[static_cast<std::size_t>(p1)], b = at[static_cast<std::size_t>(p2)];
                    const int c = at[static_cast<std::size_t>(p3)], d = at[static_cast<std::size_t>(p4)];
                    std::pair<int, int> n1, n2;
                    if (!detail::induced_c4_nonedges(g, a, b, c, d, n1, n2)) continue;
                    const bool aligned = !g.adjacent(a, d) && !g.adjacent(b, c);
                    if (!aligned)
                        out.push_back({ViolationKind::L4,
                                       {g.label(a), g.label(b), g.label(c), g.label(d)},
                                       {},
                                       {}});
                }

    // Magnitude digraph: arc b -> c with the first witnessing via.
    std::vector<std::vector<int>> via(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !g.adjacent(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b || g.adjacent(a, c)) continue;
                if (!detail::strictly_between(pos[static_cast<std::size_t>(a)],
                                              pos[static_cast<std::size_t>(c)],
                                              pos[static_cast<std::size_t>(b)]))
                    continue;
                if (via[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] == -1)
                    via[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = a;
            }
        }
    auto arc = [&](int x, int y) { return via[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != -1; };
    auto arc_of = [&](int x, int y) {
        return MagnitudeArc{g.label(x), g.label(y),
                            g.label(via[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])};
    };

    bool have_two_cycle = false;
    for (int b = 0; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
            if (arc(b, c) && arc(c, b)) {
                have_two_cycle = true;
                out.push_back({ViolationKind::L3,
                               {g.label(b), g.label(c)},
                               {arc_of(b, c), arc_of(c, b)},
                               {}});
            }

    if (!have_two_cycle) {
        // Shortest directed cycle by BFS from each start vertex.
        std::vector<int> best_cycle;
        for (int s = 0; s < n; ++s) {
            std::vector<int> parent(static_cast<std::size_t>(n), -2);
            std::deque<int> q{s};
            parent[static_cast<std::size_t>(s)] = -1;
            while (!q.empty()) {
                const int x = q.front();
                q.pop_front();
                for (int y = 0; y < n; ++y) {
                    if (!arc(x, y)) continue;
                    if (y == s) {
                        std::vector<int> cyc{x};
                        for (int t = x; parent[static_cast<std::size_t>(t)] >= 0;
                             t = parent[static_cast<std::size_t>(t)])
                            cyc.push_back(parent[static_cast<std::size_t>(t)]);
                        std::reverse(cyc.begin(), cyc.end());
                        if (best_cycle.empty() || cyc.size() < best_cycle.size()) best_cycle = cyc;
                        q.clear();
                        break;
                    }
                    if (parent[static_cast<std::size_t>(y)] == -2) {
                        parent[static_cast<std::size_t>(y)] = x;
                        q.push_back(y);
                    }
                }
            }
        }
        if (!best_cycle.empty()) {
            OrderingViolation v;
            v.kind = ViolationKind::MagnitudeCycle;
            const int len = static_cast<int>(best_cycle.size());
            for (int i = 0; i < len; ++i) {
                const int x = best_cycle[static_cast<std::size_t>(i)];
                const int y = best_cycle[static_cast<std::size_t>((i + 1) % len)];
                v.witness.push_back(g.label(x));
                v.chain.push_back(arc_of(x, y));
            }
            out.push_back(std::move(v));
        }
    }

    return out;
}

// Confirms a reported violation directly against the graph and ordering,
// sharing nothing with the scanners above beyond the pattern definitions.
// Accepts a prefix of an ordering too (refutation samples carry prefixes);
// every witness vertex must appear in it.
inline bool revalidate_violation(const Graph& g, const std::vector<std::string>& pi,
                                 const OrderingViolation& v) {
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t p = 0; p < pi.size(); ++p) {
        if (!g.has_vertex(pi[p])) return false;
        const auto u = static_cast<std::size_t>(g.index_of(pi[p]));
        if (pos[u] != -1) return false;
        pos[u] = static_cast<int>(p);
    }
    bool witness_placed = true;
    auto P = [&](const std::string& label) {
        const int p = pos[static_cast<std::size_t>(g.index_of(label))];
        if (p < 0) witness_placed = false;
        return p;
    };
    auto distinct = [](std::vector<std::string> w) {
        std::sort(w.begin(), w.end());
        return std::adjacent_find(w.begin(), w.end()) == w.end();
    };
    auto arc_ok = [&](const MagnitudeArc& e) {
        // triple (via, longer, shorter): shorter between via and longer,
        // edge via-longer, non-edge via-shorter
        if (!g.has_vertex(e.via) || !g.has_vertex(e.longer) || !g.has_vertex(e.shorter)) return false;
        if (e.via == e.longer || e.via == e.shorter || e.longer == e.shorter) return false;
        return detail::strictly_between(P(e.via), P(e.shorter), P(e.longer)) &&
               g.adjacent(e.via, e.longer) && !g.adjacent(e.via, e.shorter);
    };

    try {
        switch (v.kind) {
            case ViolationKind::L1: {
                if (v.witness.size() != 4 || !distinct(v.witness)) return false;
                const auto& a = v.witness[0];
                const auto& b = v.witness[1];
                const auto& c = v.witness[2];
                const auto& d = v.witness[3];
                const bool ok = g.adjacent(a, d) && g.adjacent(b, c) && !g.adjacent(a, c) &&
                                !g.adjacent(b, d) && detail::strictly_between(P(a), P(b), P(d)) &&
                                detail::strictly_between(P(a), P(c), P(d));
                return ok && witness_placed;
            }
            case ViolationKind::L4: {
                if (v.witness.size() != 4 || !distinct(v.witness)) return false;
                for (int i = 0; i + 1 < 4; ++i)
                    if (P(v.witness[static_cast<std::size_t>(i)]) >=
                        P(v.witness[static_cast<std::size_t>(i + 1)]))
                        return false;
                if (!witness_placed) return false;
                std::pair<int, int> n1, n2;
                if (!detail::induced_c4_nonedges(g, g.index_of(v.witness[0]), g.index_of(v.witness[1]),
                                                 g.index_of(v.witness[2]), g.index_of(v.witness[3]), n1,
                                                 n2))
                    return false;
                return g.adjacent(v.witness[0], v.witness[3]) || g.adjacent(v.witness[1], v.witness[2]);
            }
            case ViolationKind::L3:
            case ViolationKind::MagnitudeCycle: {
                const std::size_t len = v.chain.size();
                if (len < 2 || v.witness.size() != len || !distinct(v.witness)) return false;
                for (std::size_t i = 0; i < len; ++i) {
                    const auto& e = v.chain[i];
                    if (e.longer != v.witness[i] || e.shorter != v.witness[(i + 1) % len]) return false;
                    if (!arc_ok(e)) return false;
                }
                if (!witness_placed) return false;
                return v.kind == ViolationKind::L3 ? len == 2 : true;
            }
            case ViolationKind::Nested: {
                if (v.witness.size() != 2 || v.witness[0] == v.witness[1]) return false;
                P(v.witness[0]);
                P(v.witness[1]);
                return witness_placed && g.adjacent(v.witness[0], v.witness[1]);
            }
        }
    } catch (const DomainError&) {
        return false; // witness mentions a vertex the graph does not have
    }
    return false;
}

struct NestednessReport {
    bool nested = false;
    std::optional<OrderingViolation> failure; // kind NESTED, note names the condition
};

// Reads pi as the template slots v_1 .. v_n w_n .. w_1 of the anticycle on 2n
// vertices and checks that every pair the template forbids really is a
// non-edge. The template pins all 2n non-edges, so passing it identifies the
// edge set exactly. The conditions, as 1-based slot pairs:
//   N1  (1, 2n) (1, 2n-1) (2, 2n)
//   N2  (i, 2n+2-i) (i, 2n-i) (2n+1-i, i-1) (2n+1-i, i+1)   for 2 <= i <= n-1
//   N3  (n-1, n+1) (n, n+1) (n, n+2)
inline NestednessReport check_nested(int n, const std::vector<std::string>& pi) {
    if (n < 3) throw DomainError("nestedness is defined for anticycles with n >= 3");
    const Graph g = gen_anticycle(n);
    detail::position_of(g, pi); // validates the vertex set

    auto fail = [&](int p, int q, const char* cond) {
        NestednessReport r;
        r.nested = false;
        OrderingViolation v;
        v.kind = ViolationKind::Nested;
        v.witness = {pi[static_cast<std::size_t>(p - 1)], pi[static_cast<std::size_t>(q - 1)]};
        v.note = cond;
        r.failure = std::move(v);
        return r;
    };
    auto edge = [&](int p, int q) {
        return g.adjacent(pi[static_cast<std::size_t>(p - 1)], pi[static_cast<std::size_t>(q - 1)]);
    };

    if (edge(1, 2 * n)) return fail(1, 2 * n, "N1");
    if (edge(1, 2 * n - 1)) return fail(1, 2 * n - 1, "N1");
    if (edge(2, 2 * n)) return fail(2, 2 * n, "N1");
    for (int i = 2; i <= n - 1; ++i) {
        if (edge(i, 2 * n + 2 - i)) return fail(i, 2 * n + 2 - i, "N2");
        if (edge(i, 2 * n - i)) return fail(i, 2 * n - i, "N2");
        if (edge(2 * n + 1 - i, i - 1)) return fail(2 * n + 1 - i, i - 1, "N2");
        if (edge(2 * n + 1 - i, i + 1)) return fail(2 * n + 1 - i, i + 1, "N2");
    }
    if (edge(n - 1, n + 1)) return fail(n - 1, n + 1, "N3");
    if (edge(n, n + 1)) return fail(n, n + 1, "N3");
    if (edge(n, n + 2)) return fail(n, n + 2, "N3");

    return {true, std::nullopt};
}

} // namespace dpg
