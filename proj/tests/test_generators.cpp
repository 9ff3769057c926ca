#include <dpg/generators.hpp>
#include <dpg/graph.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace dpg;

TEST_CASE("cycle and path basics") {
    const Graph c5 = gen_cycle(5);
    CHECK(c5.n() == 5);
    CHECK(c5.m() == 5);
    for (int i = 0; i < 5; ++i) CHECK(c5.degree(i) == 2);
    CHECK(c5.adjacent("c1", "c5"));

    const Graph p4 = gen_path(4);
    CHECK(p4.n() == 4);
    CHECK(p4.m() == 3);
    CHECK(p4.adjacent("p1", "p2"));
    CHECK_FALSE(p4.adjacent("p1", "p4"));

    CHECK_THROWS_AS(gen_cycle(2), DomainError);
    CHECK_THROWS_AS(gen_path(0), DomainError);
    CHECK(gen_path(1).n() == 1);
}

TEST_CASE("wheel, fan, grid shapes") {
    const Graph w6 = gen_wheel(6);
    CHECK(w6.n() == 6);
    CHECK(w6.m() == 10);
    CHECK(w6.degree(w6.index_of("h")) == 5);

    const Graph f5 = gen_fan(5); // hub plus a 4-path
    CHECK(f5.n() == 5);
    CHECK(f5.m() == 7);
    CHECK(f5.degree(f5.index_of("h")) == 4);

    const Graph g = gen_grid(3, 3);
    CHECK(g.n() == 9);
    CHECK(g.m() == 12);
    CHECK(g.adjacent("g1_1", "g1_2"));
    CHECK(g.adjacent("g1_1", "g2_1"));
    CHECK_FALSE(g.adjacent("g1_1", "g2_2"));
    CHECK_THROWS_AS(gen_wheel(3), DomainError);
    CHECK_THROWS_AS(gen_grid(0, 3), DomainError);
}

TEST_CASE("claw and bi4wheel") {
    const Graph claw = gen_claw();
    CHECK(claw.n() == 4);
    CHECK(claw.m() == 3);
    CHECK(claw.degree(claw.index_of("c")) == 3);

    const Graph b = gen_bi4wheel();
    CHECK(b.n() == 6);
    CHECK(b.m() == 12);
    CHECK(b.degree(b.index_of("h1")) == 4);
    CHECK(b.degree(b.index_of("h2")) == 4);
    CHECK_FALSE(b.adjacent("h1", "h2"));
    CHECK(b.adjacent("r1", "r2"));
    CHECK_FALSE(b.adjacent("r1", "r3"));
}

TEST_CASE("anticycle complements the even cycle") {
    const Graph a6 = gen_anticycle(3);
    CHECK(a6.n() == 6);
    const Graph co6 = complement(a6);
    CHECK(is_path_or_cycle(co6));
    CHECK(co6.m() == 6); // a 6-cycle, not a path
    const Graph co10 = complement(gen_anticycle(5));
    CHECK(is_path_or_cycle(co10)); // connected, so a single 10-cycle
    CHECK(co10.m() == 10);

    // Non-edges form the complementary cycle, two per vertex: degree 2n - 3.
    const Graph a10 = gen_anticycle(5);
    for (int i = 0; i < a10.n(); ++i) CHECK(a10.degree(i) == 2 * 5 - 3);
    CHECK_FALSE(a10.adjacent("v2", "w1"));
    CHECK_FALSE(a10.adjacent("v2", "w3"));
    CHECK(a10.adjacent("v2", "w2"));
    CHECK(a10.adjacent("v2", "w4"));
    CHECK(a10.adjacent("v2", "v1"));
    CHECK_THROWS_AS(gen_anticycle(2), DomainError);
}

TEST_CASE("J is 4-regular with the fixed edge table") {
    const Graph j = gen_J();
    CHECK(j.n() == 8);
    CHECK(j.m() == 16);
    for (int i = 0; i < j.n(); ++i) CHECK(j.degree(i) == 4);
    const std::set<std::pair<std::string, std::string>> expect{
        {"s", "t"}, {"t", "u"}, {"u", "v"}, {"s", "v"}, {"w", "x"}, {"x", "y"},
        {"y", "z"}, {"w", "z"}, {"s", "w"}, {"s", "z"}, {"t", "w"}, {"t", "x"},
        {"u", "x"}, {"u", "y"}, {"v", "y"}, {"v", "z"}};
    std::set<std::pair<std::string, std::string>> got;
    for (auto [a, b] : j.edges()) {
        if (b < a) std::swap(a, b);
        got.insert({a, b});
    }
    CHECK(got == expect);
    CHECK_FALSE(is_triangle_free(j)); // s, w, z form a triangle
}

TEST_CASE("K glues a 4-clique to six degree-2 vertices") {
    const Graph k = gen_K();
    CHECK(k.n() == 10);
    CHECK(k.m() == 18);
    for (const char* c : {"a", "b", "c", "d"}) CHECK(k.degree(k.index_of(c)) == 6);
    for (const char* i : {"u", "v", "w", "x", "y", "z"}) CHECK(k.degree(k.index_of(i)) == 2);
    CHECK(k.adjacent("a", "b"));
    CHECK_FALSE(k.adjacent("u", "v"));
    CHECK(k.adjacent("y", "b"));
    CHECK(k.adjacent("y", "c"));
}

TEST_CASE("complete minus matching") {
    const Graph k5 = gen_complete_minus_matching(5, 0);
    CHECK(k5.m() == 10);
    const Graph g = gen_complete_minus_matching(6, 2);
    CHECK(g.n() == 6);
    CHECK(g.m() == 13);
    CHECK_FALSE(g.adjacent("v1", "w1"));
    CHECK_FALSE(g.adjacent("v2", "w2"));
    CHECK(g.adjacent("v1", "w2"));
    CHECK(g.adjacent("u1", "u2"));
    CHECK_THROWS_AS(gen_complete_minus_matching(3, 2), DomainError);
}

TEST_CASE("gen_named dispatches and validates") {
    CHECK(gen_named("cycle", {6}) == gen_cycle(6));
    CHECK(gen_named("anticycle", {4}) == gen_anticycle(4));
    CHECK(gen_named("claw") == gen_claw());
    CHECK(gen_named("J") == gen_J());
    CHECK(gen_named("grid", {2, 3}) == gen_grid(2, 3));
    CHECK(gen_named("complete-minus-matching", {6, 3}) == gen_complete_minus_matching(6, 3));
    CHECK_THROWS_AS(gen_named("nope"), DomainError);
    CHECK_THROWS_AS(gen_named("cycle"), DomainError);
    CHECK_THROWS_AS(gen_named("cycle", {4, 4}), DomainError);
    CHECK_THROWS_AS(gen_named("claw", {1}), DomainError);
}
