#include <dpg/constructions.hpp>
#include <dpg/generators.hpp>
#include <dpg/model.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace dpg;

namespace {

RationalModel tiny_model() {
    return RationalModel::make(2, Rational(1),
                               {{"a", {Rational(1), Rational(0)}},
                                {"b", {Rational(1), Rational(1)}},
                                {"c", {Rational(0), Rational(1)}}});
}

} // namespace

TEST_CASE("make validates shape") {
    CHECK_THROWS_AS(RationalModel::make(0, Rational(1), {{"a", {}}}), DomainError);
    CHECK_THROWS_AS(RationalModel::make(2, Rational(0), {{"a", {Rational(1), Rational(1)}}}),
                    DomainError);
    CHECK_THROWS_AS(RationalModel::make(2, Rational(-1), {{"a", {Rational(1), Rational(1)}}}),
                    DomainError);
    CHECK_THROWS_AS(RationalModel::make(2, Rational(1), {}), DomainError);
    CHECK_THROWS_AS(RationalModel::make(2, Rational(1), {{"a", {Rational(1)}}}), DomainError);
    CHECK_THROWS_AS(RationalModel::make(2, Rational(1),
                                        {{"a", {Rational(1), Rational(1)}},
                                         {"a", {Rational(1), Rational(1)}}}),
                    DomainError);
    CHECK_THROWS_AS(RationalModel::make(2, Rational(1), {{"", {Rational(1), Rational(1)}}}),
                    DomainError);
    CHECK_THROWS_AS(FloatModel::make(1, 1.0, {{"a", {std::nan("")}}}), DomainError);
    CHECK_THROWS_AS(FloatModel::make(1, std::numeric_limits<double>::infinity(), {{"a", {1.0}}}),
                    DomainError);

    const RationalModel m = tiny_model();
    CHECK(m.n() == 3);
    CHECK(m.dot(m.index_of("a"), m.index_of("b")) == Rational(1));
    CHECK(m.dot(m.index_of("a"), m.index_of("c")) == Rational(0));
    CHECK(m.vec("b")[1] == Rational(1));
    CHECK_THROWS_AS(m.index_of("zz"), DomainError);
}

TEST_CASE("induced_graph applies the closed threshold rule") {
    const auto r = induced_graph(tiny_model());
    CHECK(r.graph.adjacent("a", "b")); // dot exactly t counts as an edge
    CHECK(r.graph.adjacent("b", "c"));
    CHECK_FALSE(r.graph.adjacent("a", "c"));
    CHECK(r.boundary.empty()); // exact mode never reports boundaries

    // Constructions induce exactly their stated graphs.
    for (const Construction& c : {rep_anticycle6(), rep_claw(), rep_bi4wheel(), rep_J_3d(),
                                  rep_matching(3, 2), rep_matching_base2(1, 0)}) {
        CHECK(induced_graph(c.model).graph == c.graph);
    }
}

TEST_CASE("float induced_graph reports knife-edge pairs") {
    const FloatModel m = FloatModel::make(1, 1.0, {{"a", {1.0}}, {"b", {1.0 + 1e-12}}, {"c", {-1.0}}});
    const auto r = induced_graph(m);
    REQUIRE(r.boundary.size() == 1);
    CHECK(r.boundary[0] == std::pair<std::string, std::string>{"a", "b"});
    CHECK(r.graph.adjacent("a", "b")); // classified by the closed rule regardless

    const auto strict = induced_graph(m, 0.0);
    CHECK(strict.boundary.empty());
}

TEST_CASE("verify_model accepts, rejects, and flags ambiguity") {
    const Construction a6 = rep_anticycle6();
    const auto ok = verify_model(a6.model, a6.graph);
    CHECK(ok.verdict == Verdict::Accept);
    CHECK(ok.accepted());
    CHECK(*ok.min_edge_margin == Rational(0));
    CHECK(ok.min_edge_pair == std::pair<std::string, std::string>{"v2", "w2"});
    CHECK(*ok.min_nonedge_deficit == Rational(1, 6));

    // Same model against the wrong graph: the tight pairs flip to violations.
    const auto bad = verify_model(a6.model, complement(a6.graph));
    CHECK(bad.verdict == Verdict::Reject);
    CHECK(bad.violations.size() == static_cast<std::size_t>(a6.graph.m() + complement(a6.graph).m()));

    const FloatModel knife =
        FloatModel::make(1, 1.0, {{"a", {1.0}}, {"b", {1.0 + 1e-12}}, {"c", {-1.0}}});
    const auto amb = verify_model(knife, induced_graph(knife).graph);
    CHECK(amb.verdict == Verdict::BoundaryAmbiguous);
    REQUIRE(amb.boundary.size() == 1);
    CHECK(amb.boundary[0].u == "a");
    CHECK(amb.boundary[0].v == "b");
    CHECK_FALSE(amb.accepted());

    CHECK_THROWS_AS(verify_model(a6.model, gen_cycle(6)), DomainError);  // label mismatch
    CHECK_THROWS_AS(verify_model(a6.model, gen_cycle(5)), DomainError);  // size mismatch
}

TEST_CASE("scale_model preserves the induced graph") {
    const Construction c = rep_bi4wheel();
    for (const Rational& lambda : {Rational(2), Rational(1, 3), Rational(7, 5)}) {
        const RationalModel s = scale_model(c.model, lambda);
        CHECK(s.t == c.model.t * lambda * lambda);
        CHECK(induced_graph(s).graph == c.graph);
        CHECK(verify_model(s, c.graph).accepted());
    }
    CHECK_THROWS_AS(scale_model(c.model, Rational(0)), DomainError);
    CHECK_THROWS_AS(scale_model(c.model, Rational(-1)), DomainError);
}

TEST_CASE("exact JSON round-trip") {
    const RationalModel m = rep_anticycle6().model;
    const AnyModel back = model_from_json(model_to_json(m));
    REQUIRE(std::holds_alternative<RationalModel>(back));
    const auto& r = std::get<RationalModel>(back);
    CHECK(r.dim == m.dim);
    CHECK(r.t == m.t);
    CHECK(r.labels == m.labels);
    CHECK(r.rows == m.rows);
}

TEST_CASE("float JSON round-trip") {
    const FloatModel m = FloatModel::make(2, 0.5, {{"a", {0.25, -1.75}}, {"b", {3.0, 0.0625}}});
    const AnyModel back = model_from_json(model_to_json(m));
    REQUIRE(std::holds_alternative<FloatModel>(back));
    const auto& f = std::get<FloatModel>(back);
    CHECK(f.t == 0.5);
    CHECK(f.rows == m.rows); // dyadic values survive exactly
}

TEST_CASE("model_from_json rejects malformed and mixed documents") {
    using nlohmann::ordered_json;
    auto base = []() {
        return ordered_json{{"dim", 1}, {"t", "1"}, {"vectors", {{"a", {"1"}}}}};
    };
    CHECK(std::holds_alternative<RationalModel>(model_from_json(base())));

    auto j = base();
    j.erase("dim");
    CHECK_THROWS_AS(model_from_json(j), ParseError);
    j = base();
    j.erase("t");
    CHECK_THROWS_AS(model_from_json(j), ParseError);
    j = base();
    j.erase("vectors");
    CHECK_THROWS_AS(model_from_json(j), ParseError);
    j = base();
    j["dim"] = "1";
    CHECK_THROWS_AS(model_from_json(j), ParseError);
    j = base();
    j["vectors"]["a"] = {1.0}; // float row under an exact t
    CHECK_THROWS_AS(model_from_json(j), ParseError);
    j = base();
    j["t"] = 1.0; // float t over an exact row
    CHECK_THROWS_AS(model_from_json(j), ParseError);
    j = base();
    j["vectors"]["a"] = {"1/0"};
    CHECK_THROWS_AS(model_from_json(j), ParseError);
    j = base();
    j["vectors"]["a"] = {true};
    CHECK_THROWS_AS(model_from_json(j), ParseError);
    j = base();
    j["vectors"] = ordered_json::array();
    CHECK_THROWS_AS(model_from_json(j), ParseError);
    j = base();
    j["dim"] = 2; // row length disagrees with dim
    CHECK_THROWS_AS(model_from_json(j), ParseError);
    CHECK_THROWS_AS(model_from_json(ordered_json::array()), ParseError);
}

TEST_CASE("model save and load") {
    testsupport::TempDir dir;
    const RationalModel m = rep_claw().model;
    save_model(m, dir.file("claw.model.json"));
    const AnyModel back = load_model(dir.file("claw.model.json"));
    REQUIRE(std::holds_alternative<RationalModel>(back));
    CHECK(std::get<RationalModel>(back).rows == m.rows);
    CHECK(std::get<RationalModel>(back).t == Rational(3));
    CHECK_THROWS_AS(load_model(dir.file("absent.json")), ParseError);
}
