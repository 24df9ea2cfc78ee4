#include "doctest.h"
#include "nullcore/analysis.hpp"
#include "nullcore/perturbation.hpp"
#include "nullcore/report_json.hpp"
#include "oracles.hpp"

using namespace nullcore;

namespace {

// Singular random graphs whose core is independent.
std::vector<Graph> independent_core_bases(std::size_t count, std::uint64_t seed) {
    std::vector<Graph> out;
    for (std::uint64_t s = seed; out.size() < count; ++s) {
        const Graph g = s % 2 ? gen_random_graph(3 + s % 7, 1, 3, s) : gen_random_tree(2 + s % 9, s);
        const VertexPartition p = classify_vertices(g);
        if (p.nullity > 0 && p.independent_cv) out.push_back(g);
    }
    return out;
}

}  // namespace

TEST_CASE("pair types") {
    CHECK(pair_type(VertexPart::ncv, VertexPart::cv) == PairType::cv_ncv);
    CHECK(pair_type(VertexPart::cfvr, VertexPart::ncv) == PairType::ncv_cfvr);
    CHECK(to_string(PairType::cv_ncv) == "CV-NCV");
    CHECK(is_cfv_pair(PairType::ncv_cfvr));
    CHECK_FALSE(is_cfv_pair(PairType::cv_cfvr));
    CHECK(parse_preserve("cv") == Preserve::cv_set);
    CHECK(parse_preserve("nullspace") == Preserve::nullspace);
    CHECK_FALSE(parse_preserve("bogus"));
    CHECK(to_string(Preserve::cv_set) == "cv");
}

TEST_CASE("candidates of P4 and C4") {
    const auto p4 = candidate_edges(gen_path(4));
    REQUIRE(p4.size() == 3);
    CHECK(p4[0] == EdgeCandidate{{0, 2}, PairType::cfvr_cfvr});
    CHECK(p4[1] == EdgeCandidate{{0, 3}, PairType::cfvr_cfvr});
    CHECK(p4[2] == EdgeCandidate{{1, 3}, PairType::cfvr_cfvr});
    const auto c4 = candidate_edges(gen_cycle(4));
    REQUIRE(c4.size() == 2);
    for (const auto &e : c4) CHECK(e.type == PairType::cv_cv);
    const Graph p7 = gen_path(7);
    CHECK(candidate_edges(p7) == candidate_edges(p7, classify_vertices(p7)));
}

TEST_CASE("closing P4 into C4") {
    const PerturbationReport r = apply_and_report(gen_path(4), 0, 3);
    CHECK(r.eta_before == 0);
    CHECK(r.eta_after == 2);
    CHECK_FALSE(r.preserved.nullity);
    CHECK_FALSE(r.preserved.cv_set);
    CHECK_FALSE(r.independent_cv_after);
    for (const auto &c : r.checks) CHECK_MESSAGE(c.holds, c.name);
    CHECK(r.checks.size() == 4);
}

TEST_CASE("a chord in C4") {
    const PerturbationReport r = apply_and_report(gen_cycle(4), 2, 0);
    CHECK(r.edge.edge == Edge{0, 2});
    CHECK(r.edge.type == PairType::cv_cv);
    CHECK(r.eta_before == 2);
    CHECK(r.eta_after == 1);
    CHECK(r.cv_after == vertex_list{1, 3});
    CHECK(r.checks.size() == 2);
    const auto j = to_json(r);
    CHECK(j["eta"] == nlohmann::json({2, 1}));
    CHECK(j["type"] == "CV-CV");
}

TEST_CASE("candidate validation") {
    const Graph p4 = gen_path(4);
    CHECK_THROWS_AS(apply_and_report(p4, EdgeCandidate{{0, 2}, PairType::cv_cv}), graph_error);
    CHECK_THROWS_AS(apply_and_report(p4, 0, 1), graph_error);
    CHECK_THROWS_AS(apply_and_report(p4, 0, 7), graph_error);
    CHECK_THROWS_AS(verify_cv_ncv_theorem(p4, EdgeCandidate{{0, 2}, PairType::cfvr_cfvr}), graph_error);
    CHECK_THROWS_AS(delete_and_report(p4, 0, 2), graph_error);
}

TEST_CASE("edge deletion report") {
    const PerturbationReport r = delete_and_report(gen_path(4), 1, 2);
    CHECK(r.deletion);
    CHECK(r.eta_after == 0);
    CHECK(r.preserved.nullity);
    CHECK(r.checks.empty());
    const PerturbationReport c = delete_and_report(gen_cycle(4), 0, 3);
    CHECK(c.eta_after == 0);
}

TEST_CASE("safe additions need an independent core") {
    CHECK_THROWS_AS(safe_additions(gen_cycle(4), Preserve::nullity), non_independent_core);
    CHECK(safe_additions(Graph(1), Preserve::nullity).empty());
    for (const auto &e : safe_additions(gen_path(7), Preserve::cv_set)) {
        CHECK(e.type != PairType::cv_cv);
        CHECK(e.type != PairType::cv_cfvr);
    }
}

TEST_CASE("greedy densification of P7 keeps the core") {
    const Graph p7 = gen_path(7);
    const Densification d = greedy_densify(p7, Preserve::cv_set);
    CHECK(d.property_maintained);
    CHECK_FALSE(d.added.empty());
    CHECK(classify_vertices(d.graph).cv == vertex_list{0, 2, 4, 6});
    CHECK(d.graph.size() == p7.size() + d.added.size());
    const Densification again = greedy_densify(p7, Preserve::cv_set);
    CHECK(again.added == d.added);
    CHECK(safe_additions(d.graph, Preserve::cv_set).empty());
}

TEST_CASE("greedy densification of a complete graph adds nothing") {
    const Densification d = greedy_densify(gen_complete(5), Preserve::nullity);
    CHECK(d.added.empty());
    CHECK(d.property_maintained);
}

TEST_CASE("nullity changes by at most two and agrees with the oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = gen_random_graph(2 + seed % 7, 1, 3, seed);
        for (const auto &e : candidate_edges(g)) {
            const PerturbationReport r = apply_and_report(g, e);
            CHECK(r.eta_after == oracle::nullity(add_edge(g, e.edge.u, e.edge.w)));
            for (const auto &c : r.checks) CHECK_MESSAGE(c.holds, c.name << " seed " << seed);
        }
    }
}

TEST_CASE("core-forbidden additions on independent-core graphs") {
    std::size_t preserved = 0;
    std::size_t changed = 0;
    for (const Graph &g : independent_core_bases(80, 1)) {
        for (const auto &e : candidate_edges(g)) {
            if (!is_cfv_pair(e.type)) continue;
            const PerturbationReport r = apply_and_report(g, e);
            CHECK(r.checks.size() == 4);
            for (const auto &c : r.checks) CHECK_MESSAGE(c.holds, c.name);
            (r.preserved.nullity ? preserved : changed)++;
        }
    }
    CHECK(preserved > 0);
    CHECK(changed > 0);
}

TEST_CASE("core to N(CV) additions that keep the labelling") {
    std::size_t met = 0;
    std::size_t unmet = 0;
    for (const Graph &g : independent_core_bases(120, 7)) {
        for (const auto &e : candidate_edges(g)) {
            if (e.type != PairType::cv_ncv) continue;
            const CvNcvReport r = verify_cv_ncv_theorem(g, e);
            if (!r.hypothesis_met) {
                ++unmet;
                continue;
            }
            ++met;
            CHECK(r.holds);
            CHECK(r.eta_before == r.eta_after);
            REQUIRE(r.leaving);
            REQUIRE(r.entering);
            const vertex core_end = classify_vertices(g).is_cv(e.edge.u) ? e.edge.u : e.edge.w;
            CHECK((*r.leaving)[core_end] != 0);
            CHECK((*r.entering)[core_end] != 0);
        }
    }
    CHECK(met > 0);
    CHECK(unmet > 0);
}

TEST_CASE("densification keeps each property on random bases") {
    for (const Graph &g : independent_core_bases(30, 3))
        for (Preserve p : {Preserve::nullity, Preserve::cv_set, Preserve::nullspace}) {
            const Densification d = greedy_densify(g, p);
            CHECK(d.property_maintained);
            const VertexPartition before = classify_vertices(g);
            const VertexPartition after = classify_vertices(d.graph);
            if (p == Preserve::nullity) CHECK(after.nullity == before.nullity);
            if (p == Preserve::cv_set) CHECK(after.cv == before.cv);
            if (p == Preserve::nullspace) CHECK(kernel_basis(d.graph) == kernel_basis(g));
        }
}

TEST_CASE("small graphs where the nullity stays but the kernel moves") {
    std::size_t found = 0;
    for (std::uint64_t seed = 0; seed < 400 && found == 0; ++seed) {
        const Graph g = gen_random_graph(3 + seed % 6, 1, 3, seed);
        for (const auto &e : candidate_edges(g)) {
            const PerturbationReport r = apply_and_report(g, e);
            if (!r.preserved.nullity || r.preserved.nullspace || r.eta_before == 0) continue;
            ++found;
            CHECK_FALSE(is_cfv_pair(e.type));
            const IntMatrix a = adjacency_matrix(add_edge(g, e.edge.u, e.edge.w));
            for (const auto &v : r.kernel_after.vectors) {
                const IntVector image = mat_vec(a, v);
                CHECK(std::all_of(image.begin(), image.end(), [](const Integer &x) { return x == 0; }));
            }
            break;
        }
    }
    CHECK(found > 0);
}
