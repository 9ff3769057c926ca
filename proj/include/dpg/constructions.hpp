#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "model.hpp"
#include "rational.hpp"

namespace dpg {

// Hand-fixed rational representations. Every margin below is stated in the
// comments and pinned by tests; all arithmetic is exact.

struct Construction {
    Graph graph;
    RationalModel model;
};

namespace detail {

using Entries = std::vector<std::pair<std::string, std::vector<Rational>>>;

} // namespace detail

// K_{2m+e} minus a perfect matching on the first 2m vertices. Magnitudes run
// over powers of 3:
//   a^{v_i} = (3^-i, 3^{i-1}),  a^{w_i} = (3^{i-1}, 3^-i),  extras at (1, 1),  t = 1.
// Matched pairs sit at exactly 2/3. Unmatched pairs: v_i v_j gives
// 3^{-i-j} + 3^{i+j-2} > 1 (i + j >= 3), v_i w_j gives 3^{d-1} + 3^{-d-1} >= 1
// for d = |i - j| >= 1, and extras contribute a coordinate of at least 1.
inline Construction rep_matching(int m, int extra = 0) {
    if (m < 1) throw DomainError("matching size must be at least 1, got " + std::to_string(m));
    if (extra < 0) throw DomainError("extra vertex count must be nonnegative, got " + std::to_string(extra));
    Graph g = gen_complete_minus_matching(2 * m + extra, m);
    detail::Entries e;
    for (int i = 1; i <= m; ++i)
        e.emplace_back("v" + std::to_string(i),
                       std::vector<Rational>{make_rational(1, pow_int(3, static_cast<unsigned>(i))),
                                             Rational(pow_int(3, static_cast<unsigned>(i - 1)))});
    for (int i = 1; i <= m; ++i)
        e.emplace_back("w" + std::to_string(i),
                       std::vector<Rational>{Rational(pow_int(3, static_cast<unsigned>(i - 1))),
                                             make_rational(1, pow_int(3, static_cast<unsigned>(i)))});
    for (int i = 1; i <= extra; ++i)
        e.emplace_back("u" + std::to_string(i), std::vector<Rational>{Rational(1), Rational(1)});
    return {std::move(g), RationalModel::make(2, Rational(1), std::move(e))};
}

// Base-2 variant of rep_matching, with b(k) = 2^k - 1:
//   a^{v_i} = (1/b(i), b(i-1)),  a^{w_i} = (b(i-1), 1/b(i)),  extras at (1, 1),  t = 1.
// Matched pairs land at 2 b(i-1)/b(i) < 1 as intended, but the construction is
// sound only for m = 1: from m = 2 on, the edge v_1 v_j has dot product
// 1/b(j) < 1 (and w_1 w_j likewise), so verification rejects it. Kept callable
// so the failure and its witness pairs can be demonstrated.
inline Construction rep_matching_base2(int m, int extra = 0) {
    if (m < 1) throw DomainError("matching size must be at least 1, got " + std::to_string(m));
    if (extra < 0) throw DomainError("extra vertex count must be nonnegative, got " + std::to_string(extra));
    auto b = [](int k) { return BigInt(pow_int(2, static_cast<unsigned>(k)) - 1); };
    Graph g = gen_complete_minus_matching(2 * m + extra, m);
    detail::Entries e;
    for (int i = 1; i <= m; ++i)
        e.emplace_back("v" + std::to_string(i),
                       std::vector<Rational>{make_rational(1, b(i)), Rational(b(i - 1))});
    for (int i = 1; i <= m; ++i)
        e.emplace_back("w" + std::to_string(i),
                       std::vector<Rational>{Rational(b(i - 1)), make_rational(1, b(i))});
    for (int i = 1; i <= extra; ++i)
        e.emplace_back("u" + std::to_string(i), std::vector<Rational>{Rational(1), Rational(1)});
    return {std::move(g), RationalModel::make(2, Rational(1), std::move(e))};
}

// A_6 in the plane, t = 1. The edge v_2 w_2 is tight (dot exactly 1); the
// closest non-edges sit at 5/6, so the margins are 0 and 1/6.
inline Construction rep_anticycle6() {
    Graph g = gen_anticycle(3);
    detail::Entries e{
        {"v1", {Rational(5), Rational(0)}},
        {"v2", {Rational(3), make_rational(1, 6)}},
        {"v3", {make_rational(1, 2), make_rational(1, 4)}},
        {"w1", {Rational(0), Rational(5)}},
        {"w2", {make_rational(1, 6), Rational(3)}},
        {"w3", {make_rational(1, 4), make_rational(1, 2)}},
    };
    return {std::move(g), RationalModel::make(2, Rational(1), std::move(e))};
}

// The claw with threshold 3: hub at (2,2), leaves at (1,1). Hub-leaf pairs sit
// at 4, leaf pairs at 2, so both margins equal 1.
inline Construction rep_claw() {
    Graph g = gen_claw();
    detail::Entries e{
        {"c", {Rational(2), Rational(2)}},
        {"l1", {Rational(1), Rational(1)}},
        {"l2", {Rational(1), Rational(1)}},
        {"l3", {Rational(1), Rational(1)}},
    };
    return {std::move(g), RationalModel::make(2, Rational(3), std::move(e))};
}

// The octahedron (4-cycle plus two nonadjacent hubs), t = 1. The hubs sit on
// the axes, the rim fans between them; h1 r3 and h2 r1 are tight at exactly 1,
// and the non-edges top out at 4/5.
inline Construction rep_bi4wheel() {
    Graph g = gen_bi4wheel();
    detail::Entries e{
        {"h1", {Rational(0), Rational(5)}},
        {"h2", {Rational(5), Rational(0)}},
        {"r1", {make_rational(1, 5), Rational(2)}},
        {"r2", {make_rational(1, 2), make_rational(1, 2)}},
        {"r3", {Rational(2), make_rational(1, 5)}},
        {"r4", {make_rational(1, 2), make_rational(1, 2)}},
    };
    return {std::move(g), RationalModel::make(2, Rational(1), std::move(e))};
}

// J in three dimensions, t = 1: the outer cycle on (+-2, 0, 1)/(0, +-2, 1),
// the inner cycle on (+-1, +-1, -1). Every edge lands at exactly 1 and every
// non-edge at -1 or -3, so the representation is tight on all sixteen edges.
inline Construction rep_J_3d() {
    Graph g = gen_J();
    detail::Entries e{
        {"s", {Rational(2), Rational(0), Rational(1)}},
        {"t", {Rational(0), Rational(2), Rational(1)}},
        {"u", {Rational(-2), Rational(0), Rational(1)}},
        {"v", {Rational(0), Rational(-2), Rational(1)}},
        {"w", {Rational(1), Rational(1), Rational(-1)}},
        {"x", {Rational(-1), Rational(1), Rational(-1)}},
        {"y", {Rational(-1), Rational(-1), Rational(-1)}},
        {"z", {Rational(1), Rational(-1), Rational(-1)}},
    };
    return {std::move(g), RationalModel::make(3, Rational(1), std::move(e))};
}

} // namespace dpg
