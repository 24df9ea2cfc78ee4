// nullcore: nullspace vertex partition toolkit.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 precondition failed, 4 counterexample found.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nullcore/analysis.hpp"
#include "nullcore/graph.hpp"
#include "nullcore/mc.hpp"
#include "nullcore/perturbation.hpp"
#include "nullcore/report_json.hpp"
#include "nullcore/tree.hpp"
#include "nullcore/verify.hpp"

namespace {

using namespace nullcore;
using nlohmann::json;

enum ExitCode { ok = 0, usage = 1, parse_failure = 2, precondition = 3, counterexample = 4 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json &j) { std::cout << j.dump(2) << '\n'; }

Graph load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::pair<vertex, vertex> parse_edge_arg(const std::string &s) {
    vertex u = 0;
    vertex w = 0;
    char sep = 0;
    std::istringstream is(s);
    if (!(is >> u >> sep >> w) || sep != ',') throw usage_error("expected an edge as U,W; got '" + s + "'");
    return {u, w};
}

int cmd_analyze(const std::string &path, bool dot) {
    const Graph g = load(path);
    const AnalysisReport r = analyze(g);
    if (dot) {
        std::cout << to_dot(g, r.partition);
    } else {
        json out = to_json(r);
        out["core_graph"] = is_core_graph(g);
        out["half_core"] = is_half_core(g);
        out["slim"] = is_slim(g);
        emit(out);
    }
    return ok;
}

int cmd_reduce(const std::string &path, bool slim, bool pendant) {
    if (slim == pendant) throw usage_error("reduce needs exactly one of --slim or --pendant");
    const Graph g = load(path);
    json out;
    if (slim) {
        const SlimReduction s = slim_reduce(g);
        out = {{"mode", "slim"},
               {"edge_list", serialize_edge_list(s.graph)},
               {"provenance", to_json(s.provenance)},
               {"nullity_preserved", s.nullity_preserved},
               {"classes_preserved", s.classes_preserved}};
    } else {
        const ReductionTrace t = pendant_reduction(g);
        const auto [rest, prov] = induced_subgraph(g, t.isolated);
        out = {{"mode", "pendant"},
               {"edge_list", serialize_edge_list(rest)},
               {"provenance", to_json(prov)},
               {"trace", to_json(t)}};
    }
    emit(out);
    return ok;
}

int cmd_perturb(const std::string &path, const std::string &preserve_name, bool list, bool densify,
                const std::string &edge, const std::string &remove) {
    const auto preserve = parse_preserve(preserve_name);
    if (!preserve) throw usage_error("--preserve must be nullity, cv or nullspace");
    const int modes = int(list) + int(densify) + int(!edge.empty()) + int(!remove.empty());
    if (modes != 1) throw usage_error("perturb needs exactly one of --list, --densify, --edge, --delete");
    const Graph g = load(path);
    if (!edge.empty()) {
        const auto [u, w] = parse_edge_arg(edge);
        emit(to_json(apply_and_report(g, u, w)));
        return ok;
    }
    if (!remove.empty()) {
        const auto [u, w] = parse_edge_arg(remove);
        emit(to_json(delete_and_report(g, u, w)));
        return ok;
    }
    if (list) {
        json safe = json::array();
        for (const auto &e : safe_additions(g, *preserve)) safe.push_back(to_json(apply_and_report(g, e)));
        emit({{"preserve", to_string(*preserve)}, {"safe", safe}});
        return ok;
    }
    const Densification d = greedy_densify(g, *preserve);
    json added = json::array();
    for (const auto &e : d.added) added.push_back({e.u, e.w});
    emit({{"preserve", to_string(*preserve)},
          {"added", added},
          {"edge_list", serialize_edge_list(d.graph)},
          {"property_maintained", d.property_maintained}});
    return d.property_maintained ? ok : counterexample;
}

int cmd_mc(const std::string &path) {
    const Graph g = load(path);
    json out = to_json(is_minimal_configuration(g));
    if (is_tree(g)) {
        const McTreeReport t = is_mc_tree(g);
        out["tree"] = {{"is_mc_tree", t.is_mc_tree},
                       {"by_definition", t.by_definition},
                       {"by_subdivision", t.by_subdivision},
                       {"matching_number", t.matching_number},
                       {"ncv", t.ncv},
                       {"q_full_column_rank", t.q_full_column_rank}};
    }
    emit(out);
    return ok;
}

int cmd_gen(const std::string &kind, std::size_t n, std::uint64_t seed, const std::string &prob, std::size_t n2) {
    std::uint64_t num = 1;
    std::uint64_t den = 2;
    if (!prob.empty()) {
        char slash = 0;
        std::istringstream is(prob);
        if (!(is >> num >> slash >> den) || slash != '/') throw usage_error("--p expects NUM/DEN");
    }
    Graph g;
    if (kind == "path") g = gen_path(n);
    else if (kind == "cycle") g = gen_cycle(n);
    else if (kind == "star") g = gen_star(n);
    else if (kind == "complete") g = gen_complete(n);
    else if (kind == "tree") g = gen_random_tree(n, seed);
    else if (kind == "random") g = gen_random_graph(n, num, den, seed);
    else if (kind == "bipartite") g = gen_random_bipartite(n, n2, num, den, seed);
    else if (kind == "unicyclic") g = gen_random_unicyclic(n, seed);
    else throw usage_error("unknown generator '" + kind + "'");
    std::cout << serialize_edge_list(g);
    return ok;
}

int cmd_verify(SuiteConfig cfg, const std::string &out_dir, bool as_json) {
    const auto &names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) throw usage_error("unknown suite '" + cfg.suite + "'");
    if (cfg.max_n == 0 || cfg.trials == 0) throw usage_error("--max-n and --trials must be at least 1");
    cfg.threads = default_thread_count();
    const SuiteResult r = run_suite(cfg);
    if (!r.counterexamples.empty()) {
        std::filesystem::create_directories(out_dir);
        std::size_t k = 0;
        for (const auto &c : r.counterexamples) {
            const auto file = std::filesystem::path(out_dir) /
                              (c.suite + "_" + c.check + "_" + std::to_string(c.trial) + "_" + std::to_string(k++) + ".g");
            std::ofstream os(file, std::ios::binary);
            os << "# suite " << c.suite << " check " << c.check << " trial " << c.trial << '\n';
            os << "# " << c.detail.dump() << '\n';
            os << serialize_edge_list(c.graph);
        }
    }
    if (as_json) {
        emit(to_json(r));
    } else {
        for (const auto &[name, t] : r.tallies) {
            std::cout << (t.failed == 0 ? "PASS " : "FAIL ") << name << " passed=" << t.passed << " failed=" << t.failed
                      << " unmet=" << t.unmet << '\n';
        }
        std::cout << (r.ok() ? "all checks passed" : std::to_string(r.counterexamples.size()) + " counterexample(s) written to " + out_dir)
                  << '\n';
    }
    return r.ok() ? ok : counterexample;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"nullcore: nullspace vertex partition of graphs"};
    app.require_subcommand(1);

    std::string path;
    bool dot = false;
    bool json_flag = false;
    auto *analyze_cmd = app.add_subcommand("analyze", "classify vertices and check the block-matrix results");
    analyze_cmd->add_option("path", path, "edge-list file")->required();
    auto *dot_opt = analyze_cmd->add_flag("--dot", dot, "emit DOT with a part attribute per vertex");
    analyze_cmd->add_flag("--json", json_flag, "emit the JSON report (default)")->excludes(dot_opt);

    bool slim = false;
    bool pendant = false;
    auto *reduce_cmd = app.add_subcommand("reduce", "remove CFV_R (--slim) or pendant pairs (--pendant)");
    reduce_cmd->add_option("path", path, "edge-list file")->required();
    reduce_cmd->add_flag("--slim", slim);
    reduce_cmd->add_flag("--pendant", pendant);

    std::string preserve = "nullity";
    bool list = false;
    bool densify = false;
    std::string edge;
    std::string remove;
    auto *perturb_cmd = app.add_subcommand("perturb", "edge additions that keep nullity, CV or nullspace");
    perturb_cmd->add_option("path", path, "edge-list file")->required();
    perturb_cmd->add_option("--preserve", preserve, "nullity | cv | nullspace");
    perturb_cmd->add_flag("--list", list, "list safe single-edge additions");
    perturb_cmd->add_flag("--densify", densify, "greedily add safe edges until none remain");
    perturb_cmd->add_option("--edge", edge, "report adding edge U,W");
    perturb_cmd->add_option("--delete", remove, "report deleting edge U,W");

    auto *mc_cmd = app.add_subcommand("mc", "minimal configuration check");
    mc_cmd->add_option("path", path, "edge-list file")->required();

    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string prob;
    std::size_t n2 = 0;
    auto *gen_cmd = app.add_subcommand("gen", "generate a graph as an edge list");
    gen_cmd->add_option("kind", kind, "path | cycle | star | complete | tree | random | bipartite | unicyclic")->required();
    gen_cmd->add_option("n", n, "vertex count (first part size for bipartite)")->required();
    gen_cmd->add_option("seed", seed, "64-bit seed");
    gen_cmd->add_option("--p", prob, "edge probability NUM/DEN (random, bipartite)");
    gen_cmd->add_option("--n2", n2, "second part size (bipartite)");

    SuiteConfig cfg;
    std::string out_dir = "counterexamples";
    bool verify_json = false;
    auto *verify_cmd = app.add_subcommand("verify", "randomized check of the structural results");
    verify_cmd->add_option("--suite", cfg.suite, "trees | bipartite | subdivisions | perturbations | unicyclic | all");
    verify_cmd->add_option("--max-n", cfg.max_n, "largest vertex count sampled");
    verify_cmd->add_option("--trials", cfg.trials, "trials per suite");
    verify_cmd->add_option("--seed", cfg.seed, "64-bit seed");
    verify_cmd->add_option("--out", out_dir, "directory for counterexample edge lists");
    verify_cmd->add_flag("--json", verify_json, "emit a JSON summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(path, dot);
        if (*reduce_cmd) return cmd_reduce(path, slim, pendant);
        if (*perturb_cmd) return cmd_perturb(path, preserve, list, densify, edge, remove);
        if (*mc_cmd) return cmd_mc(path);
        if (*gen_cmd) return cmd_gen(kind, n, seed, prob, n2);
        if (*verify_cmd) return cmd_verify(cfg, out_dir, verify_json);
    } catch (const usage_error &e) {
        std::cerr << "usage: " << e.what() << '\n';
        return usage;
    } catch (const parse_error &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const non_independent_core &e) {
        std::cerr << "precondition: CV is not independent: " << e.what() << '\n';
        return precondition;
    } catch (const precondition_error &e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return precondition;
    } catch (const graph_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
