// Command-line front-end. Exit codes: 0 success/accept, 2 verification
// reject, 3 refuted, 4 inconclusive, 5 input error. All randomness flows from
// --seed, so identical invocations write byte-identical files.

#include <CLI11.hpp>
#include <dpg/dpg.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 2;
constexpr int kExitRefuted = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitInputError = 5;

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dpg::ParseError("cannot open '" + path + "' for writing");
    out << text << "\n";
}

void emit_graph(const dpg::Graph& g, const std::string& path) {
    write_or_print(g.to_json().dump(2), path);
}

template <class S>
void emit_model(const dpg::VectorModel<S>& m, const std::string& path) {
    write_or_print(dpg::model_to_json(m).dump(2), path);
}

template <class S>
std::string scalar_str(const S& x) {
    if constexpr (dpg::is_exact_scalar_v<S>) {
        return dpg::rational_to_string(x);
    } else {
        std::ostringstream os;
        os.precision(17);
        os << x;
        return os.str();
    }
}

template <class S>
void print_verification(const dpg::VerificationReport<S>& rep) {
    std::cout << "verdict: " << dpg::verdict_name(rep.verdict) << "\n";
    if (rep.min_edge_margin)
        std::cout << "min-edge-margin: " << scalar_str(*rep.min_edge_margin) << " at ("
                  << rep.min_edge_pair->first << "," << rep.min_edge_pair->second << ")\n";
    if (rep.min_nonedge_deficit)
        std::cout << "min-nonedge-deficit: " << scalar_str(*rep.min_nonedge_deficit) << " at ("
                  << rep.min_nonedge_pair->first << "," << rep.min_nonedge_pair->second << ")\n";
    for (const auto& v : rep.violations)
        std::cout << "violation: (" << v.u << "," << v.v << ") expected "
                  << (v.expected_edge ? "edge" : "non-edge") << ", dot = " << scalar_str(v.dot)
                  << "\n";
    for (const auto& b : rep.boundary)
        std::cout << "boundary: (" << b.u << "," << b.v << ") dot = " << scalar_str(b.dot)
                  << "\n";
}

int verdict_exit(dpg::Verdict v) {
    switch (v) {
        case dpg::Verdict::Accept: return kExitAccept;
        case dpg::Verdict::Reject: return kExitReject;
        default: return kExitInconclusive;
    }
}

struct GenArgs {
    std::string name;
    std::vector<int> params;
    std::string out;
};

struct ConstructArgs {
    std::string kind;
    std::string arg; // m for the matching kinds, geometry path for caps/arcs/disks
    int extra = 0;
    std::string out;
};

struct InduceArgs {
    std::string model;
    std::string out;
    double band = dpg::kBoundaryBand;
};

struct VerifyArgs {
    std::string model, graph;
    double band = dpg::kBoundaryBand;
};

struct RecognizeArgs {
    std::string graph;
    bool dim1 = false;
};

struct SearchArgs {
    std::string graph;
    int dim = 2;
    std::uint64_t seed = 0;
    int restarts = 100, iters = 5000, workers = 1;
    std::string out;
};

struct RefuteArgs {
    std::string graph;
    int max_n = 11;
    bool log = false;
    int workers = 1;
    std::size_t cap = 100000;
    std::string out;
};

int run_gen(const GenArgs& a) {
    emit_graph(dpg::gen_named(a.name, a.params), a.out);
    return kExitAccept;
}

int require_int_arg(const std::string& kind, const std::string& arg) {
    if (arg.empty())
        throw dpg::DomainError("construct " + kind + " needs a size argument");
    try {
        std::size_t pos = 0;
        int v = std::stoi(arg, &pos);
        if (pos != arg.size()) throw std::invalid_argument(arg);
        return v;
    } catch (const std::exception&) {
        throw dpg::DomainError("construct " + kind + ": '" + arg + "' is not an integer");
    }
}

int run_construct(const ConstructArgs& a) {
    using namespace dpg;
    if (a.kind == "caps" || a.kind == "arcs" || a.kind == "disks") {
        if (a.arg.empty())
            throw DomainError("construct " + a.kind + " needs a geometry file argument");
        GeometricSet gs = load_geometry(a.arg);
        auto [model, oracle] = std::visit(
            [&](const auto& set) -> std::pair<FloatModel, Graph> {
                using T = std::decay_t<decltype(set)>;
                if constexpr (std::is_same_v<T, CapSet>) {
                    if (a.kind != "caps") throw DomainError("'" + a.arg + "' holds a cap set");
                    return {caps_to_model(set), caps_intersection_graph(set)};
                } else if constexpr (std::is_same_v<T, ArcSet>) {
                    if (a.kind != "arcs") throw DomainError("'" + a.arg + "' holds an arc set");
                    return {arcs_to_model(set), arcs_intersection_graph(set)};
                } else {
                    if (a.kind != "disks") throw DomainError("'" + a.arg + "' holds a disk set");
                    return {disks_to_model(set), disks_intersection_graph(set)};
                }
            },
            gs);
        VerificationReport<double> rep = verify_model(model, oracle);
        if (rep.verdict != Verdict::Accept) {
            print_verification(rep);
            return verdict_exit(rep.verdict);
        }
        emit_model(model, a.out);
        return kExitAccept;
    }

    Construction c = [&]() -> Construction {
        if (a.kind == "matching") return rep_matching(require_int_arg(a.kind, a.arg), a.extra);
        if (a.kind == "matching-paper") return rep_matching_base2(require_int_arg(a.kind, a.arg));
        if (a.kind == "a6") return rep_anticycle6();
        if (a.kind == "claw") return rep_claw();
        if (a.kind == "bi4wheel") return rep_bi4wheel();
        if (a.kind == "j3d") return rep_J_3d();
        throw DomainError("unknown construct kind '" + a.kind + "'");
    }();
    VerificationReport<Rational> rep = verify_model(c.model, c.graph);
    if (rep.verdict != Verdict::Accept) {
        std::cout << "self-verification failed for '" << a.kind << "'\n";
        print_verification(rep);
        return kExitReject;
    }
    emit_model(c.model, a.out);
    return kExitAccept;
}

int run_induce(const InduceArgs& a) {
    dpg::AnyModel m = dpg::load_model(a.model);
    return std::visit(
        [&](const auto& model) {
            auto result = dpg::induced_graph(model, a.band);
            for (const auto& [u, v] : result.boundary)
                std::cerr << "warning: (" << u << "," << v
                          << ") sits inside the boundary band; classified by the closed rule\n";
            emit_graph(result.graph, a.out);
            return kExitAccept;
        },
        m);
}

int run_verify(const VerifyArgs& a) {
    dpg::AnyModel m = dpg::load_model(a.model);
    dpg::Graph g = dpg::Graph::load(a.graph);
    return std::visit(
        [&](const auto& model) {
            auto rep = dpg::verify_model(model, g, a.band);
            print_verification(rep);
            return verdict_exit(rep.verdict);
        },
        m);
}

int run_recognize(const RecognizeArgs& a) {
    if (!a.dim1) throw dpg::DomainError("recognize currently supports only --dim1");
    dpg::Graph g = dpg::Graph::load(a.graph);
    dpg::Dimension1Report rep = dpg::dot_dimension_at_most_1(g);
    if (!rep.at_most_1) {
        std::cout << "dot dimension <= 1: no\n";
        std::cout << "reason: " << rep.reason << "\n";
        return kExitReject;
    }
    std::cout << "dot dimension <= 1: yes\n";
    auto part = [](const std::vector<std::string>& vs) {
        std::string s;
        for (const auto& v : vs) s += (s.empty() ? "" : ",") + v;
        return s.empty() ? std::string("-") : s;
    };
    std::cout << "part-a: " << part(rep.part_a) << "\n";
    std::cout << "part-b: " << part(rep.part_b) << "\n";
    return kExitAccept;
}

int run_search(const SearchArgs& a) {
    dpg::Graph g = dpg::Graph::load(a.graph);
    dpg::SearchBudget budget{a.restarts, a.iters};
    dpg::SearchResult r = dpg::search_dpr(g, a.dim, a.seed, budget, a.workers);
    if (!r.found) {
        std::cout << "NOT_FOUND after " << r.restarts_used
                  << " restarts; best residual " << r.best_residual << "\n";
        return kExitInconclusive;
    }
    std::cout << "found at restart " << r.found_restart << "\n";
    emit_model(*r.model, a.out);
    return kExitAccept;
}

int run_refute(const RefuteArgs& a) {
    if (a.max_n < 1 || a.max_n > 11)
        throw dpg::DomainError("--max-n must lie in 1..11, got " + std::to_string(a.max_n));
    dpg::Graph g = dpg::Graph::load(a.graph);
    if (g.n() > a.max_n)
        throw dpg::SizeLimitError("graph has " + std::to_string(g.n()) +
                                  " vertices, over the requested cap " + std::to_string(a.max_n));
    dpg::RefuteOptions opt;
    opt.workers = a.workers;
    opt.survivor_cap = a.cap;
    opt.collect_log = a.log;
    dpg::RefutationCertificate cert = dpg::refute_2dpr(g, opt);
    write_or_print(dpg::certificate_to_text(cert), a.out);
    return cert.verdict == "REFUTED" ? kExitRefuted : kExitAccept;
}

int run_corpus_check(int workers) {
    bool all = true;
    for (int i = 1; i <= 9; ++i) {
        dpg::CriterionResult r = dpg::run_criterion(i, workers);
        all = all && r.pass;
        std::cout << "criterion " << i << ": " << (r.pass ? "PASS" : "FAIL") << " - " << r.detail
                  << "\n"
                  << std::flush;
    }
    std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
    return all ? kExitAccept : kExitReject;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dot product graph toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "write a corpus graph");
    cmd_gen->add_option("name", gen.name, "graph family name")->required();
    cmd_gen->add_option("params", gen.params, "family parameters");
    cmd_gen->add_option("-o,--out", gen.out, "output path (stdout when absent)");

    ConstructArgs cons;
    auto* cmd_cons = app.add_subcommand("construct", "write a hand-built or converted model");
    cmd_cons->add_option("kind", cons.kind,
                         "matching | matching-paper | a6 | claw | bi4wheel | j3d | caps | arcs | disks")
        ->required();
    cmd_cons->add_option("arg", cons.arg, "matching size or geometry file");
    cmd_cons->add_option("--extra", cons.extra, "extra all-ones vertices (matching only)");
    cmd_cons->add_option("-o,--out", cons.out, "output path (stdout when absent)");

    InduceArgs ind;
    auto* cmd_ind = app.add_subcommand("induce", "write the graph a model induces");
    cmd_ind->add_option("model", ind.model, "model file")->required();
    cmd_ind->add_option("-o,--out", ind.out, "output path (stdout when absent)");
    cmd_ind->add_option("--band", ind.band, "float boundary band");

    VerifyArgs ver;
    auto* cmd_ver = app.add_subcommand("verify", "check a model against a graph");
    cmd_ver->add_option("model", ver.model, "model file")->required();
    cmd_ver->add_option("graph", ver.graph, "graph file")->required();
    cmd_ver->add_option("--band", ver.band, "float boundary band");

    RecognizeArgs rec;
    auto* cmd_rec = app.add_subcommand("recognize", "dimension recognition");
    cmd_rec->add_flag("--dim1", rec.dim1, "test dot dimension <= 1");
    cmd_rec->add_option("graph", rec.graph, "graph file")->required();

    SearchArgs sea;
    auto* cmd_sea = app.add_subcommand("search", "random-restart feasibility search");
    cmd_sea->add_option("graph", sea.graph, "graph file")->required();
    cmd_sea->add_option("--dim", sea.dim, "target dimension")->required();
    cmd_sea->add_option("--seed", sea.seed, "random seed");
    cmd_sea->add_option("--restarts", sea.restarts, "restart budget");
    cmd_sea->add_option("--iters", sea.iters, "iterations per restart");
    cmd_sea->add_option("--workers", sea.workers, "parallel workers");
    cmd_sea->add_option("-o,--out", sea.out, "output path (stdout when absent)");

    RefuteArgs ref;
    auto* cmd_ref = app.add_subcommand("refute", "ordering-enumeration refutation");
    cmd_ref->add_option("graph", ref.graph, "graph file")->required();
    cmd_ref->add_option("--max-n", ref.max_n, "vertex cap (at most 11)");
    cmd_ref->add_flag("--log", ref.log, "include one line per pruned prefix");
    cmd_ref->add_option("--workers", ref.workers, "parallel workers");
    cmd_ref->add_option("--cap", ref.cap, "survivor listing cap");
    cmd_ref->add_option("-o,--out", ref.out, "output path (stdout when absent)");

    int corpus_workers = 4;
    auto* cmd_cor = app.add_subcommand("corpus-check", "run the acceptance suite");
    cmd_cor->add_option("--workers", corpus_workers, "parallel workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_cons->parsed()) return run_construct(cons);
        if (cmd_ind->parsed()) return run_induce(ind);
        if (cmd_ver->parsed()) return run_verify(ver);
        if (cmd_rec->parsed()) return run_recognize(rec);
        if (cmd_sea->parsed()) return run_search(sea);
        if (cmd_ref->parsed()) return run_refute(ref);
        if (cmd_cor->parsed()) return run_corpus_check(corpus_workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
