#include "nullcore/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "nullcore/analysis.hpp"
#include "nullcore/mc.hpp"
#include "nullcore/perturbation.hpp"
#include "nullcore/tree.hpp"

namespace nullcore {

namespace {

enum class Outcome { pass, fail, unmet };

struct Record {
    std::string check;
    Outcome outcome;
    nlohmann::json detail;
};

// Per-trial log of check outcomes against a single sampled graph.
class TrialLog {
   public:
    explicit TrialLog(const Graph &g) : graph_(g) {}

    void expect(const std::string &check, bool holds, nlohmann::json detail = nullptr) {
        records_.push_back({check, holds ? Outcome::pass : Outcome::fail, std::move(detail)});
    }
    void unmet(const std::string &check) { records_.push_back({check, Outcome::unmet, nullptr}); }
    void set_graph(const Graph &g) { graph_ = g; }

    const Graph &graph() const { return graph_; }
    const std::vector<Record> &records() const { return records_; }

   private:
    Graph graph_;
    std::vector<Record> records_;
};

std::uint64_t trial_seed(std::uint64_t seed, std::size_t suite_index, std::size_t trial) {
    SplitMix64 rng(seed ^ (0x51ed270b27a3c6f1ULL * (suite_index + 1)));
    for (std::size_t i = 0; i < 1 + trial % 4; ++i) rng.next();
    return rng.next() + trial * 0x9e3779b97f4a7c15ULL;
}

void run_block_checks(TrialLog &log, const Graph &g, const VertexPartition &p) {
    log.expect("no_vertex_with_exactly_one_core_neighbour", check_core_neighbour_count(g, p).holds);
    if (!p.independent_cv || p.nullity == 0) {
        log.unmet("block_theorems");
        return;
    }
    for (const auto &c : verify_block_theorems(g)) log.expect(c.name, c.holds, c.witness);
    const CoreLabelling l = core_labelling(g, p);
    log.expect("labelling_reassembles_adjacency", l.reassemble() == adjacency_matrix(g).submatrix(l.order, l.order));
}

void trees_trial(TrialLog &log, const SuiteConfig &cfg, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.below(cfg.max_n);
    const Graph t = gen_random_tree(n, rng.next());
    log.set_graph(t);
    const VertexPartition p = classify_vertices(t);

    const auto identity = tree_nullity_identity(t);
    log.expect("tree_nullity_three_ways", identity.all_equal,
               {{"reduction", identity.eta_reduction}, {"rank", identity.eta_rank}, {"n_minus_2t", identity.n_minus_2t}});
    log.expect("tree_has_independent_cv", p.independent_cv);
    log.expect("cv_support_matches_deletion", core_vertices_by_deletion(t) == p.cv);
    run_block_checks(log, t, p);

    for (vertex v = 0; v < t.order(); ++v) {
        if (t.degree(v) != 1) continue;
        const auto r = check_pendant_removal(t, v);
        log.expect("pendant_removal_preserves_nullity_and_classes", r.eta_before == r.eta_after && r.classes_preserved,
                   {{"end_vertex", v}, {"eta", {r.eta_before, r.eta_after}}});
    }
    if (p.nullity > 0) {
        // K1 is singular but has no end vertex.
        if (t.order() >= 2)
            log.expect("singular_tree_has_two_core_end_vertices", end_vertex_core_vertices(t).vertices.size() >= 2);
        else
            log.unmet("singular_tree_has_two_core_end_vertices");
        log.expect("cfvr_forest_has_perfect_matching", cfvr_perfect_matching(t).has_value());
        const auto slim = slim_reduce(t);
        log.expect("slim_reduce_preserves_nullity_and_classes", slim.nullity_preserved && slim.classes_preserved);
    } else {
        log.unmet("singular_tree_has_two_core_end_vertices");
        log.unmet("cfvr_forest_has_perfect_matching");
    }
    const auto mc = is_mc_tree(t);
    log.expect("tree_q_full_column_rank", mc.q_full_column_rank);
    log.expect("mc_definition_iff_subdivision", mc.characterizations_agree);
    if (mc.by_definition) log.expect("mc_tree_matching_number_equals_ncv", mc.matching_equals_ncv);
    log.expect("incidence_rank_and_subdivision_nullity", incidence_rank_check(t).holds);
}

void bipartite_trial(TrialLog &log, const SuiteConfig &cfg, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.below(cfg.max_n);
    const std::size_t n1 = rng.below(n + 1);
    const Graph g = gen_random_bipartite(n1, n - n1, 1 + rng.below(7), 8, rng.next());
    log.set_graph(g);
    const auto parity = bipartite_parity_check(g);
    log.expect("bipartite_nullity_parity", parity.holds, {{"n", parity.n}, {"rank_s", parity.rank_s}});
    const auto d = is_bipartite(g);
    log.expect("adjacency_rank_twice_rank_s", rank(adjacency_matrix(g)) == 2 * rank(d->s));
    const VertexPartition p = classify_vertices(g);
    if (p.nullity == 1) {
        log.expect("bipartite_nullity_one_structure", bipartite_nullity1_structure(g).all_hold());
    } else {
        log.unmet("bipartite_nullity_one_structure");
    }
    const auto eq = bipartite_mc_slim_equivalence(g);
    if (eq.hypothesis_met) {
        log.expect("bipartite_mc_iff_slim_nullity_one", eq.equal, {{"mc", eq.lhs}, {"slim", eq.rhs}});
    } else {
        log.unmet("bipartite_mc_iff_slim_nullity_one");
    }
    const auto mc = is_minimal_configuration(g);
    if (mc.is_mc && g.order() >= 2) {
        log.expect("mc_is_connected", is_connected(g));
        const vertex_list &big = d->v1.size() > d->v2.size() ? d->v1 : d->v2;
        const vertex_list &small = d->v1.size() > d->v2.size() ? d->v2 : d->v1;
        log.expect("bipartite_mc_core_is_larger_class", mc.core == big && mc.periphery == small);
        log.expect("bipartite_mc_ncv_all_upper",
                   std::all_of(p.ncv.begin(), p.ncv.end(), [&](vertex v) { return p.class_of[v] == VertexClass::cfv_upp; }));
    } else {
        log.unmet("mc_is_connected");
    }
    log.expect("no_vertex_with_exactly_one_core_neighbour", check_core_neighbour_count(g, p).holds);
}

void subdivisions_trial(TrialLog &log, const SuiteConfig &cfg, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.below(cfg.max_n);
    const Graph t = gen_random_tree(n, rng.next());
    const Graph s = subdivision(t).first;
    log.set_graph(t);
    const VertexPartition p = classify_vertices(s);
    log.expect("subdivision_nullity_one", p.nullity == 1, {{"nullity", p.nullity}});
    log.expect("subdivision_is_mc", is_minimal_configuration(s).is_mc);
    const auto back = inverse_subdivision(s);
    log.expect("inverse_subdivision_round_trip", back && back->first == t);
    const std::size_t t_match = pendant_reduction(s).matching_number();
    log.expect("matching_number_equals_ncv", t_match == p.ncv.size(), {{"t", t_match}, {"ncv", p.ncv.size()}});
    log.expect("subdivision_ncv_all_upper", std::all_of(p.ncv.begin(), p.ncv.end(), [&](vertex v) {
                   return p.class_of[v] == VertexClass::cfv_upp;
               }));
    log.expect("incidence_rank_and_subdivision_nullity", incidence_rank_check(t).holds);
    log.expect("bipartite_nullity_one_structure", bipartite_nullity1_structure(s).all_hold());
    log.expect("mc_tree_checks", is_mc_tree(s).is_mc_tree);
    if (n <= 8) {
        log.expect("subdivision_char_poly_identity",
                   char_poly(adjacency_matrix(s)) == subdivision_char_poly_via_incidence(t));
    } else {
        log.unmet("subdivision_char_poly_identity");
    }
}

// Singular base graph with independent CV: a random tree or a filtered random graph.
Graph independent_core_base(SplitMix64 &rng, std::size_t max_n) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        const std::size_t n = 1 + rng.below(max_n);
        const Graph g = attempt % 2 == 0 ? gen_random_graph(n, 1 + rng.below(4), 8, rng.next())
                                         : gen_random_tree(n, rng.next());
        const auto kernel = kernel_basis(g);
        if (!kernel.empty() && is_independent(g, kernel.support())) return g;
    }
    return gen_path(1);
}

void perturbations_trial(TrialLog &log, const SuiteConfig &cfg, std::uint64_t seed, std::size_t trial) {
    SplitMix64 rng(seed);
    const Graph g = independent_core_base(rng, std::min<std::size_t>(cfg.max_n, 10));
    log.set_graph(g);
    const VertexPartition p = classify_vertices(g);
    for (const auto &e : candidate_edges(g, p)) {
        const auto r = apply_and_report(g, e);
        for (const auto &c : r.checks)
            log.expect(c.name, c.holds, {{"edge", {e.edge.u, e.edge.w}}, {"type", to_string(e.type)}});
        if (e.type == PairType::cv_ncv) {
            const auto t = verify_cv_ncv_theorem(g, e);
            if (t.hypothesis_met) {
                log.expect("cv_ncv_addition_keeps_nullity_with_witnesses", t.holds, {{"edge", {e.edge.u, e.edge.w}}});
            } else {
                log.unmet("cv_ncv_addition_keeps_nullity_with_witnesses");
            }
        }
    }
    const Preserve mode = static_cast<Preserve>(trial % 3);
    log.expect("greedy_densify_keeps_" + to_string(mode), greedy_densify(g, mode).property_maintained);
}

void unicyclic_trial(TrialLog &log, const SuiteConfig &cfg, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 3 + rng.below(std::max<std::size_t>(cfg.max_n, 3) - 2);
    const Graph g = gen_random_unicyclic(n, rng.next());
    log.set_graph(g);
    for (const auto &c : unicyclic_analysis(g).checks) log.expect(c.name, c.holds, c.witness);
    const VertexPartition p = classify_vertices(g);
    log.expect("cv_support_matches_deletion", core_vertices_by_deletion(g) == p.cv);
    log.expect("no_vertex_with_exactly_one_core_neighbour", check_core_neighbour_count(g, p).holds);
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < count; i = next++) body(i);
            } catch (...) {
                errors[t] = std::current_exception();
                next = count;
            }
        });
    }
    pool.clear();
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);
}

void run_single(const std::string &suite, std::size_t suite_index, const SuiteConfig &cfg, SuiteResult &out) {
    std::vector<TrialLog> logs(cfg.trials, TrialLog(Graph()));
    parallel_for(cfg.trials, cfg.threads, [&](std::size_t trial) {
        const std::uint64_t seed = trial_seed(cfg.seed, suite_index, trial);
        TrialLog &log = logs[trial];
        if (suite == "trees") trees_trial(log, cfg, seed);
        else if (suite == "bipartite") bipartite_trial(log, cfg, seed);
        else if (suite == "subdivisions") subdivisions_trial(log, cfg, seed);
        else if (suite == "perturbations") perturbations_trial(log, cfg, seed, trial);
        else if (suite == "unicyclic") unicyclic_trial(log, cfg, seed);
    });
    for (std::size_t trial = 0; trial < logs.size(); ++trial) {
        for (const auto &rec : logs[trial].records()) {
            Tally &tally = out.tallies[suite + "/" + rec.check];
            switch (rec.outcome) {
                case Outcome::pass: ++tally.passed; break;
                case Outcome::unmet: ++tally.unmet; break;
                case Outcome::fail:
                    ++tally.failed;
                    out.counterexamples.push_back({suite, rec.check, trial, logs[trial].graph(), rec.detail});
                    break;
            }
        }
    }
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"trees", "bipartite", "subdivisions", "perturbations", "unicyclic", "all"};
    return names;
}

SuiteResult run_suite(const SuiteConfig &config) {
    const auto &names = suite_names();
    const auto it = std::find(names.begin(), names.end(), config.suite);
    if (it == names.end()) throw std::invalid_argument("unknown suite '" + config.suite + "'");
    if (config.max_n == 0) throw std::invalid_argument("max_n must be at least 1");
    if (config.trials == 0) throw std::invalid_argument("trials must be at least 1");
    SuiteResult result;
    for (std::size_t i = 0; i + 1 < names.size(); ++i)
        if (config.suite == "all" || config.suite == names[i]) run_single(names[i], i, config, result);
    return result;
}

unsigned default_thread_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("NULLCORE_THREADS")) {
        char *end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    return hw;
}

nlohmann::json to_json(const SuiteResult &r) {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto &[name, t] : r.tallies) checks[name] = {{"passed", t.passed}, {"failed", t.failed}, {"unmet", t.unmet}};
    nlohmann::json cex = nlohmann::json::array();
    for (const auto &c : r.counterexamples)
        cex.push_back({{"suite", c.suite}, {"check", c.check}, {"trial", c.trial}, {"detail", c.detail}});
    return {{"ok", r.ok()}, {"checks", checks}, {"counterexamples", cex}};
}

}  // namespace nullcore
