#include <dpg/generators.hpp>
#include <dpg/graph.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <random>

using namespace dpg;

TEST_CASE("construction validates labels and edges") {
    CHECK_THROWS_AS(Graph("g", {"a", "a"}, {}), DomainError);
    CHECK_THROWS_AS(Graph("g", {"a", ""}, {}), DomainError);
    CHECK_THROWS_AS(Graph("g", {"a", "b"}, {{"a", "a"}}), DomainError);
    CHECK_THROWS_AS(Graph("g", {"a", "b"}, {{"a", "b"}, {"b", "a"}}), DomainError);
    CHECK_THROWS_AS(Graph("g", {"a", "b"}, {{"a", "c"}}), DomainError);

    const Graph g("g", {"a", "b", "c"}, {{"a", "b"}});
    CHECK(g.n() == 3);
    CHECK(g.m() == 1);
    CHECK(g.adjacent("a", "b"));
    CHECK(g.adjacent("b", "a"));
    CHECK_FALSE(g.adjacent("a", "c"));
    CHECK(g.degree(g.index_of("a")) == 1);
    CHECK(g.degree(g.index_of("c")) == 0);
    CHECK_THROWS_AS(g.index_of("z"), DomainError);
    CHECK(g.has_vertex("c"));
    CHECK_FALSE(g.has_vertex("z"));
}

TEST_CASE("equality ignores vertex order and name") {
    const Graph a("one", {"x", "y", "z"}, {{"x", "y"}});
    const Graph b("two", {"z", "y", "x"}, {{"y", "x"}});
    CHECK(a == b);
    const Graph c("one", {"x", "y", "z"}, {{"x", "z"}});
    CHECK_FALSE(a == c);
    const Graph d("one", {"x", "y"}, {{"x", "y"}});
    CHECK_FALSE(a == d);
}

TEST_CASE("complement is an involution and pairs C4 with 2K2") {
    const Graph c4 = gen_cycle(4);
    const Graph co = complement(c4);
    CHECK(co.m() == 2);
    CHECK(co.adjacent("c1", "c3"));
    CHECK(co.adjacent("c2", "c4"));
    CHECK(complement(co) == c4);

    // complement of the 6-vertex anticycle is a single 6-cycle (up to labels)
    const Graph coa6 = complement(gen_anticycle(3));
    CHECK(coa6.m() == 6);
    CHECK(is_connected(coa6));
    CHECK(is_path_or_cycle(coa6));
}

TEST_CASE("components finds connected pieces") {
    const Graph g("g", {"a", "b", "c", "d", "e"}, {{"a", "b"}, {"c", "d"}});
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    std::size_t sizes[3] = {comps[0].size(), comps[1].size(), comps[2].size()};
    std::sort(sizes, sizes + 3);
    CHECK(sizes[0] == 1);
    CHECK(sizes[1] == 2);
    CHECK(sizes[2] == 2);
    CHECK(is_connected(gen_cycle(5)));
    CHECK_FALSE(is_connected(g));
}

TEST_CASE("shape predicates") {
    CHECK(is_triangle_free(gen_cycle(4)));
    CHECK_FALSE(is_triangle_free(gen_wheel(6)));
    CHECK(is_path_or_cycle(gen_path(7)));
    CHECK(is_path_or_cycle(gen_cycle(7)));
    CHECK_FALSE(is_path_or_cycle(gen_claw()));
    CHECK_FALSE(is_path_or_cycle(gen_wheel(5)));
}

TEST_CASE("minimum maximal independent set matches brute force") {
    std::mt19937_64 rng(20260815);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> nd(1, 9);
        std::uniform_real_distribution<double> pd(0.1, 0.9);
        const Graph g = testsupport::random_graph(rng, nd(rng), pd(rng));
        CHECK(min_maximal_independent_set_size(g) == testsupport::brute_min_maximal_independent_set(g));
    }
}

TEST_CASE("minimum maximal independent set on known graphs") {
    CHECK(min_maximal_independent_set_size(gen_path(7)) == 3);
    CHECK(min_maximal_independent_set_size(gen_cycle(6)) == 2);
    CHECK(min_maximal_independent_set_size(gen_complete_minus_matching(4, 0)) == 1);
    CHECK(min_maximal_independent_set_size(gen_claw()) == 1); // the hub dominates
    CHECK(min_maximal_independent_set_size(gen_anticycle(5)) == 2);
    CHECK(min_maximal_independent_set_size(Graph("empty5", {"a", "b", "c", "d", "e"}, {})) == 5);
}

TEST_CASE("co-bipartite detection") {
    CHECK(is_cobipartite(gen_anticycle(4)));
    CHECK(is_cobipartite(gen_anticycle(6)));
    CHECK(is_cobipartite(gen_cycle(4)));
    CHECK(is_cobipartite(gen_complete_minus_matching(6, 2)));
    CHECK(is_cobipartite(gen_path(4))); // P4 is self-complementary
    CHECK_FALSE(is_cobipartite(gen_cycle(6)));
    CHECK_FALSE(is_cobipartite(gen_claw()));
    CHECK_FALSE(is_cobipartite(gen_path(6))); // p1 p3 p5 is a co-triangle
}

TEST_CASE("disjoint_union and relabel_prefix") {
    const Graph u = disjoint_union(relabel_prefix(gen_path(2), "a_"), relabel_prefix(gen_path(3), "b_"));
    CHECK(u.n() == 5);
    CHECK(u.m() == 3);
    CHECK(u.adjacent("a_p1", "a_p2"));
    CHECK(u.adjacent("b_p1", "b_p2"));
    CHECK_FALSE(u.adjacent("a_p1", "b_p1"));
    CHECK_THROWS_AS(disjoint_union(gen_path(2), gen_path(2)), DomainError); // label clash
}

TEST_CASE("induced_subgraph keeps exactly the chosen vertices") {
    const Graph w = gen_wheel(6);
    const Graph sub = induced_subgraph(w, {"r1", "r2", "r3", "h"});
    CHECK(sub.n() == 4);
    CHECK(sub.adjacent("r1", "r2"));
    CHECK(sub.adjacent("h", "r3"));
    CHECK_FALSE(sub.adjacent("r1", "r3"));
    CHECK(induced_subgraph(w, {"r2", "r2", "h"}) == induced_subgraph(w, {"h", "r2"}));
    CHECK_THROWS_AS(induced_subgraph(w, {"nope"}), DomainError);
}

TEST_CASE("JSON round-trip preserves the graph") {
    const Graph g = gen_J();
    const Graph back = Graph::from_json(g.to_json());
    CHECK(back == g);
    CHECK(back.name() == g.name());

    const Graph anon("", {"a"}, {});
    CHECK_FALSE(anon.to_json().contains("name"));
}

TEST_CASE("from_json rejects malformed documents") {
    using nlohmann::json;
    CHECK_THROWS_AS(Graph::from_json(json::array()), ParseError);
    CHECK_THROWS_AS(Graph::from_json(json{{"edges", json::array()}}), ParseError);
    CHECK_THROWS_AS(Graph::from_json(json{{"vertices", json::array()}}), ParseError);
    CHECK_THROWS_AS(Graph::from_json(json{{"vertices", "a"}, {"edges", json::array()}}), ParseError);
    CHECK_THROWS_AS(Graph::from_json(json{{"vertices", {"a", "b"}}, {"edges", {{"a"}}}}), ParseError);
    CHECK_THROWS_AS(Graph::from_json(json{{"vertices", {"a", "a"}}, {"edges", json::array()}}),
                    ParseError);
    CHECK_THROWS_AS(Graph::from_json(json{{"vertices", {"a", "b"}}, {"edges", {{"a", "c"}}}}),
                    ParseError);
}

TEST_CASE("save and load through a file") {
    testsupport::TempDir dir;
    const Graph g = gen_K();
    g.save(dir.file("k.graph.json"));
    CHECK(Graph::load(dir.file("k.graph.json")) == g);
    CHECK_THROWS_AS(Graph::load(dir.file("missing.json")), ParseError);

    std::ofstream bad(dir.file("bad.json"));
    bad << "{not json";
    bad.close();
    CHECK_THROWS_AS(Graph::load(dir.file("bad.json")), ParseError);
}
