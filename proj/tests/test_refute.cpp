#include <dpg/generators.hpp>
#include <dpg/ordering.hpp>
#include <dpg/refute.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace dpg;

namespace {

std::set<std::vector<std::string>> survivor_set(const RefutationCertificate& c) {
    return {c.survivors.begin(), c.survivors.end()};
}

} // namespace

TEST_CASE("the 4-cycle survives in exactly the interleaved classes") {
    const RefutationCertificate c = refute_2dpr(gen_cycle(4));
    CHECK(c.verdict == "SURVIVORS");
    CHECK(c.n == 4);
    CHECK(c.orderings_examined == 24);
    CHECK(c.survivors_total == 4);
    CHECK_FALSE(c.survivors_truncated);
    CHECK(survivor_set(c) == std::set<std::vector<std::string>>{{"c1", "c2", "c4", "c3"},
                                                                {"c1", "c4", "c2", "c3"},
                                                                {"c2", "c1", "c3", "c4"},
                                                                {"c2", "c3", "c1", "c4"}});
    // Survivors really are violation-free.
    for (const auto& s : c.survivors) CHECK(ordering_violations(gen_cycle(4), s).empty());
}

TEST_CASE("the 6-vertex anticycle survives in exactly the nested classes") {
    const RefutationCertificate c = refute_2dpr(gen_anticycle(3));
    CHECK(c.verdict == "SURVIVORS");
    CHECK(c.orderings_examined == 720);
    CHECK(c.survivors_total == 6);
    CHECK(survivor_set(c) == std::set<std::vector<std::string>>{
                                 {"v1", "v2", "v3", "w3", "w2", "w1"},
                                 {"v1", "v3", "v2", "w3", "w1", "w2"},
                                 {"v2", "v1", "v3", "w2", "w3", "w1"},
                                 {"v2", "v3", "v1", "w2", "w1", "w3"},
                                 {"v3", "v1", "v2", "w1", "w3", "w2"},
                                 {"v3", "v2", "v1", "w1", "w2", "w3"}});
    for (const auto& s : c.survivors) CHECK(check_nested(3, s).nested);
}

TEST_CASE("the 8-vertex anticycle is refuted with the pinned search counts") {
    const RefutationCertificate c = refute_2dpr(gen_anticycle(4));
    CHECK(c.verdict == "REFUTED");
    CHECK(c.survivors_total == 0);
    CHECK(c.survivors.empty());
    CHECK(c.orderings_examined == 40320);
    CHECK(c.nodes_visited == 19376);
    CHECK(c.prefixes_pruned == 12960);
    CHECK(c.semantics_note.find("unconditional") != std::string::npos);
    CHECK_FALSE(c.samples.empty());
    for (const auto& s : c.samples) {
        CHECK_FALSE(s.prefix.empty());
        CHECK(revalidate_violation(gen_anticycle(4), s.prefix, s.violation));
    }
}

TEST_CASE("J is refuted and the note stays conditional") {
    const RefutationCertificate c = refute_2dpr(gen_J());
    CHECK(c.verdict == "REFUTED");
    CHECK(c.orderings_examined == 40320);
    CHECK(c.nodes_visited == 14752);
    CHECK_FALSE(is_cobipartite(gen_J()));
    CHECK(c.semantics_note.find("out of scope") != std::string::npos);
    for (const auto& s : c.samples) CHECK(revalidate_violation(gen_J(), s.prefix, s.violation));
}

TEST_CASE("a complete graph has no patterns to violate") {
    const RefutationCertificate c = refute_2dpr(gen_complete_minus_matching(5, 0));
    CHECK(c.verdict == "SURVIVORS");
    CHECK(c.survivors_total == 60); // 5!/2 reversal classes, none killable
    CHECK(c.orderings_examined == 120);
}

TEST_CASE("small edge cases") {
    const Graph k1("one", {"a"}, {});
    const RefutationCertificate c1 = refute_2dpr(k1);
    CHECK(c1.verdict == "SURVIVORS");
    CHECK(c1.survivors_total == 1);
    CHECK(c1.orderings_examined == 1);
    CHECK(c1.survivors == std::vector<std::vector<std::string>>{{"a"}});

    const RefutationCertificate c3 = refute_2dpr(gen_path(3));
    CHECK(c3.verdict == "SURVIVORS");
    CHECK(c3.survivors_total == 3);
    CHECK(c3.orderings_examined == 6);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(refute_2dpr(gen_anticycle(6)), SizeLimitError); // 12 vertices
    CHECK_THROWS_AS(refute_2dpr(Graph()), DomainError);
    RefuteOptions bad;
    bad.workers = 0;
    CHECK_THROWS_AS(refute_2dpr(gen_cycle(4), bad), DomainError);
}

TEST_CASE("worker count does not change the certificate") {
    for (const Graph& g : {gen_anticycle(4), gen_cycle(5), gen_J()}) {
        RefuteOptions one, four;
        one.workers = 1;
        four.workers = 4;
        one.collect_log = four.collect_log = true;
        const RefutationCertificate a = refute_2dpr(g, one);
        const RefutationCertificate b = refute_2dpr(g, four);
        CHECK(certificate_to_text(a) == certificate_to_text(b));
    }
}

TEST_CASE("caps truncate listings without touching totals") {
    RefuteOptions opt;
    opt.survivor_cap = 2;
    opt.sample_cap = 3;
    const RefutationCertificate c = refute_2dpr(gen_cycle(4), opt);
    CHECK(c.survivors_total == 4);
    CHECK(c.survivors.size() == 2);
    CHECK(c.survivors_truncated);

    const RefutationCertificate r = refute_2dpr(gen_anticycle(4), opt);
    CHECK(r.samples.size() == 3);
}

TEST_CASE("the log records one line per pruned prefix") {
    RefuteOptions opt;
    opt.collect_log = true;
    const RefutationCertificate c = refute_2dpr(gen_anticycle(4), opt);
    CHECK(c.log.size() == c.prefixes_pruned);
    const RefutationCertificate quiet = refute_2dpr(gen_anticycle(4));
    CHECK(quiet.log.empty());
}

TEST_CASE("certificate text carries every section") {
    RefuteOptions opt;
    opt.collect_log = true;
    const RefutationCertificate c = refute_2dpr(gen_anticycle(4), opt);
    const std::string text = certificate_to_text(c);
    for (const char* needle :
         {"graph: anticycle(4)", "vertices: 8", "verdict: REFUTED", "orderings-examined: 40320",
          "nodes-visited: 19376", "prefixes-pruned: 12960", "survivors-total: 0",
          "semantics-note: ", "sampled-violations: ", "survivors-listed: 0", "log-lines: "}) {
        INFO(needle);
        CHECK(text.find(needle) != std::string::npos);
    }

    const std::string sv = certificate_to_text(refute_2dpr(gen_cycle(4)));
    CHECK(sv.find("verdict: SURVIVORS") != std::string::npos);
    CHECK(sv.find("survivors-listed: 4") != std::string::npos);
    CHECK(sv.find("c1 c2 c4 c3") != std::string::npos);
}
