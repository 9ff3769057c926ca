#include <dpg/constructions.hpp>
#include <dpg/generators.hpp>
#include <dpg/model.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace dpg;

namespace {

Rational dot_of(const RationalModel& m, const std::string& a, const std::string& b) {
    return m.dot(m.index_of(a), m.index_of(b));
}

} // namespace

TEST_CASE("anticycle model hits the pinned dot products") {
    const Construction c = rep_anticycle6();
    CHECK(c.graph == gen_anticycle(3));
    CHECK(c.model.t == Rational(1));
    CHECK(dot_of(c.model, "v1", "w1") == Rational(0));
    CHECK(dot_of(c.model, "v1", "w2") == Rational(5, 6));
    CHECK(dot_of(c.model, "v2", "w2") == Rational(1)); // tight edge
    CHECK(dot_of(c.model, "v3", "w3") == Rational(1, 4));
    CHECK(dot_of(c.model, "v1", "v2") == Rational(15));
    CHECK(dot_of(c.model, "v2", "v3") == Rational(37, 24));
    CHECK(dot_of(c.model, "v1", "w3") == Rational(5, 4));

    const auto rep = verify_model(c.model, c.graph);
    CHECK(rep.accepted());
    CHECK(*rep.min_edge_margin == Rational(0));
    CHECK(*rep.min_nonedge_deficit == Rational(1, 6));
    CHECK(induced_graph(c.model).graph == c.graph);
}

TEST_CASE("claw model") {
    const Construction c = rep_claw();
    CHECK(c.graph == gen_claw());
    CHECK(c.model.t == Rational(3));
    CHECK(dot_of(c.model, "c", "l1") == Rational(4));
    CHECK(dot_of(c.model, "l1", "l2") == Rational(2));
    const auto rep = verify_model(c.model, c.graph);
    CHECK(rep.accepted());
    CHECK(*rep.min_edge_margin == Rational(1));
    CHECK(*rep.min_nonedge_deficit == Rational(1));
}

TEST_CASE("bi4wheel model") {
    const Construction c = rep_bi4wheel();
    CHECK(c.graph == gen_bi4wheel());
    CHECK(dot_of(c.model, "h1", "r3") == Rational(1)); // tight
    CHECK(dot_of(c.model, "h2", "r1") == Rational(1)); // tight
    CHECK(dot_of(c.model, "r1", "r2") == Rational(11, 10));
    CHECK(dot_of(c.model, "h1", "h2") == Rational(0));
    CHECK(dot_of(c.model, "r1", "r3") == Rational(4, 5));
    CHECK(dot_of(c.model, "r2", "r4") == Rational(1, 2));
    const auto rep = verify_model(c.model, c.graph);
    CHECK(rep.accepted());
    CHECK(*rep.min_edge_margin == Rational(0));
    CHECK(*rep.min_nonedge_deficit == Rational(1, 5));
}

TEST_CASE("three-dimensional J model is tight on every edge") {
    const Construction c = rep_J_3d();
    CHECK(c.graph == gen_J());
    CHECK(c.model.dim == 3);
    const auto rep = verify_model(c.model, c.graph);
    CHECK(rep.accepted());
    CHECK(*rep.min_edge_margin == Rational(0));
    for (const auto& [u, v] : c.graph.edges()) CHECK(dot_of(c.model, u, v) == Rational(1));
    std::set<Rational> nonedge_dots;
    for (int i = 0; i < c.graph.n(); ++i)
        for (int j = i + 1; j < c.graph.n(); ++j)
            if (!c.graph.adjacent(i, j)) nonedge_dots.insert(c.model.dot(i, j));
    CHECK(nonedge_dots == std::set<Rational>{Rational(-1), Rational(-3)});
}

TEST_CASE("matching construction verifies for a range of sizes") {
    for (int m = 1; m <= 6; ++m) {
        for (int extra : {0, 1, 3}) {
            const Construction c = rep_matching(m, extra);
            CHECK(c.graph.n() == 2 * m + extra);
            CHECK(verify_model(c.model, c.graph).accepted());
            CHECK(induced_graph(c.model).graph == c.graph);
        }
    }
    // Matched pairs sit at exactly 2/3.
    const Construction c = rep_matching(4, 0);
    for (int i = 1; i <= 4; ++i)
        CHECK(dot_of(c.model, "v" + std::to_string(i), "w" + std::to_string(i)) == Rational(2, 3));
    const auto rep = verify_model(c.model, c.graph);
    CHECK(*rep.min_nonedge_deficit == Rational(1, 3));

    // m = 2: the tightest edge is v1 w2 (and mirrors) at 3^{d-1} + 3^{-d-1}
    // with d = 1, i.e. 10/9.
    const Construction c2 = rep_matching(2, 0);
    CHECK(dot_of(c2.model, "v1", "w2") == Rational(10, 9));
    CHECK(*verify_model(c2.model, c2.graph).min_edge_margin == Rational(1, 9));

    CHECK_THROWS_AS(rep_matching(0), DomainError);
    CHECK_THROWS_AS(rep_matching(2, -1), DomainError);
}

TEST_CASE("base-2 variant works only for a single matched pair") {
    const Construction ok = rep_matching_base2(1, 0);
    CHECK(verify_model(ok.model, ok.graph).accepted());
    const Construction ok2 = rep_matching_base2(1, 4);
    CHECK(verify_model(ok2.model, ok2.graph).accepted());

    const Construction bad2 = rep_matching_base2(2, 0);
    const auto rep2 = verify_model(bad2.model, bad2.graph);
    CHECK(rep2.verdict == Verdict::Reject);
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& v : rep2.violations) pairs.insert({v.u, v.v});
    CHECK(pairs == std::set<std::pair<std::string, std::string>>{{"v1", "v2"}, {"w1", "w2"}});
    CHECK(dot_of(bad2.model, "v1", "v2") == Rational(1, 3));

    const Construction bad3 = rep_matching_base2(3, 0);
    const auto rep3 = verify_model(bad3.model, bad3.graph);
    CHECK(rep3.verdict == Verdict::Reject);
    std::set<Rational> dots;
    for (const auto& v : rep3.violations) {
        CHECK((v.u == "v1" || v.u == "w1")); // every failure touches the first pair
        dots.insert(v.dot);
    }
    CHECK(dots == std::set<Rational>{Rational(1, 3), Rational(1, 7)});
}
