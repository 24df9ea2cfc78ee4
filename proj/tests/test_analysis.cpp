#include "doctest.h"
#include "nullcore/analysis.hpp"
#include "nullcore/report_json.hpp"
#include "oracles.hpp"

using namespace nullcore;

namespace {

using VC = VertexClass;

Graph graph_of(std::size_t n, std::vector<Edge> edges) { return Graph(n, edges); }

// Singular, independent CV, non-empty CFV_R and a singular remote block.
Graph remote_counterexample() { return graph_of(5, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 4}}); }

const TheoremCheck &find_check(const std::vector<TheoremCheck> &checks, const std::string &name) {
    for (const auto &c : checks)
        if (c.name == name) return c;
    FAIL("missing check " << name);
    return checks.front();
}

}  // namespace

TEST_CASE("P7 partition") {
    const VertexPartition p = classify_vertices(gen_path(7));
    CHECK(p.nullity == 1);
    CHECK(p.cv == vertex_list{0, 2, 4, 6});
    CHECK(p.ncv == vertex_list{1, 3, 5});
    CHECK(p.cfvr.empty());
    CHECK(p.independent_cv);
    for (vertex v : {1, 3, 5}) CHECK(p.class_of[v] == VC::cfv_upp);
    CHECK(p.part_labels() == std::vector<std::string>{"cv", "ncv", "cv", "ncv", "cv", "ncv", "cv"});
}

TEST_CASE("C6 is non-singular with every vertex upper") {
    const VertexPartition p = classify_vertices(gen_cycle(6));
    CHECK(p.nullity == 0);
    CHECK(p.cv.empty());
    CHECK(p.cfvr.size() == 6);
    for (auto c : p.class_of) CHECK(c == VC::cfv_upp);
}

TEST_CASE("cycles of length 4k have nullity 2") {
    for (std::size_t n : {4, 8, 12}) CHECK(nullity(gen_cycle(n)) == 2);
    for (std::size_t n : {3, 5, 6, 7, 9, 10}) CHECK(nullity(gen_cycle(n)) == 0);
}

TEST_CASE("K1 and K2") {
    const VertexPartition k1 = classify_vertices(Graph(1));
    CHECK(k1.nullity == 1);
    CHECK(k1.cv == vertex_list{0});
    const VertexPartition k2 = classify_vertices(gen_path(2));
    CHECK(k2.nullity == 0);
    CHECK(k2.class_of[0] == VC::cfv_upp);
}

TEST_CASE("C4 core is not independent") {
    const Graph c4 = gen_cycle(4);
    const VertexPartition p = classify_vertices(c4);
    CHECK(p.nullity == 2);
    CHECK(p.cv.size() == 4);
    CHECK_FALSE(p.independent_cv);
    CHECK_THROWS_AS(core_labelling(c4), non_independent_core);
    CHECK_THROWS_AS(verify_block_theorems(c4), non_independent_core);
    const AnalysisReport r = analyze(c4);
    CHECK_FALSE(r.labelling.has_value());
    CHECK(to_json(r)["blocks"].is_null());
}

TEST_CASE("block theorems need a singular graph") {
    CHECK_THROWS_AS(verify_block_theorems(gen_path(4)), precondition_error);
}

TEST_CASE("core labelling of P7 and its blocks") {
    const CoreLabelling l = core_labelling(gen_path(7));
    CHECK(l.order == vertex_list{0, 2, 4, 6, 1, 3, 5});
    CHECK(l.cv_count == 4);
    CHECK(l.ncv_count == 3);
    CHECK(l.cfvr_count == 0);
    CHECK(l.q == IntMatrix::from_rows({{1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
    CHECK(l.n == IntMatrix(3, 3));
    const IntMatrix a = adjacency_matrix(gen_path(7));
    CHECK(l.reassemble() == a.submatrix(l.order, l.order));
    for (std::size_t i = 0; i < 7; ++i) CHECK(l.order[l.position[i]] == i);
    for (const auto &c : verify_block_theorems(gen_path(7))) CHECK_MESSAGE(c.holds, c.name);
}

TEST_CASE("core and half-core predicates") {
    CHECK(is_core_graph(gen_cycle(4)));
    CHECK(is_core_graph(Graph(1)));
    CHECK_FALSE(is_core_graph(gen_path(7)));
    CHECK_FALSE(is_core_graph(gen_path(4)));
    CHECK(is_half_core(gen_path(7)));
    CHECK(is_half_core(gen_star(4)));
    CHECK_FALSE(is_half_core(gen_cycle(4)));
    CHECK_FALSE(is_half_core(gen_path(4)));
    CHECK(is_slim(gen_path(7)));
    CHECK_FALSE(is_slim(gen_path(4)));
    CHECK_FALSE(is_slim(remote_counterexample()));
}

TEST_CASE("a singular remote block on a general graph") {
    const Graph g = remote_counterexample();
    REQUIRE(oracle::nullity(g) == 1);
    const VertexPartition p = classify_vertices(g);
    CHECK(p.cv == vertex_list{0, 2});
    CHECK(p.ncv == vertex_list{1, 4});
    CHECK(p.cfvr == vertex_list{3});
    CHECK(p.independent_cv);
    const CoreLabelling l = core_labelling(g, p);
    CHECK(l.m == IntMatrix(1, 1));
    const auto checks = verify_block_theorems(g);
    CHECK_FALSE(find_check(checks, "remote_block_nonsingular").holds);
    CHECK(find_check(checks, "nullity_of_q_transpose_equals_nullity").holds);
    CHECK(find_check(checks, "nullity_equals_core_size_minus_rank_q").holds);

    // Dropping CFV_R leaves C4 and raises the nullity.
    const SlimReduction s = slim_reduce(g);
    CHECK(s.graph.order() == 4);
    CHECK(oracle::nullity(s.graph) == 2);
    CHECK_FALSE(s.nullity_preserved);
}

TEST_CASE("slim reduction of a tree keeps nullity and classes") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph tree = gen_random_tree(2 + seed % 12, seed);
        if (nullity(tree) == 0) continue;
        const SlimReduction s = slim_reduce(tree);
        CHECK(s.nullity_preserved);
        CHECK(s.classes_preserved);
    }
}

TEST_CASE("classification agrees with deletion nullities from the oracle") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Graph g = gen_random_graph(1 + seed % 8, 2, 5, seed);
        const VertexPartition p = classify_vertices(g);
        const std::size_t eta = oracle::nullity(g);
        REQUIRE(p.nullity == eta);
        for (vertex v = 0; v < g.order(); ++v) {
            const std::size_t after = oracle::nullity_without(g, v);
            CHECK(after + 1 >= eta);
            CHECK(after <= eta + 1);
            const VC expected = after + 1 == eta ? VC::cv : after == eta ? VC::cfv_mid : VC::cfv_upp;
            CHECK(p.class_of[v] == expected);
        }
        CHECK(core_vertices_by_deletion(g) == p.cv);
        CHECK(kernel_basis(g).support() == p.cv);
    }
}

TEST_CASE("no vertex has exactly one core neighbour") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = gen_random_graph(2 + seed % 9, 1, 3, seed);
        CHECK(check_core_neighbour_count(g, classify_vertices(g)).holds);
    }
}

TEST_CASE("analysis of random trees passes every check") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const AnalysisReport r = analyze(gen_random_tree(1 + seed % 13, seed));
        for (const auto &c : r.checks) CHECK_MESSAGE(c.holds, c.name << " seed " << seed);
    }
}

TEST_CASE("unicyclic analysis of plain cycles") {
    const UnicyclicReport c4 = unicyclic_analysis(gen_cycle(4));
    CHECK(c4.length == 4);
    CHECK(c4.length_mod4 == 0);
    REQUIRE(c4.checks.size() == 1);
    CHECK(c4.checks[0].name == "cycle_4k_all_core_on_cycle_has_nullity_at_least_2");
    CHECK(c4.checks[0].holds);

    const UnicyclicReport c6 = unicyclic_analysis(gen_cycle(6));
    REQUIRE(c6.checks.size() == 1);
    CHECK(c6.checks[0].name == "cycle_not_4k_has_independent_cv");
    CHECK(c6.checks[0].holds);

    const UnicyclicReport c8 = unicyclic_analysis(gen_cycle(8));
    CHECK(c8.nullity == 2);
    CHECK(c8.checks[0].holds);
    CHECK_THROWS_AS(unicyclic_analysis(gen_path(4)), precondition_error);
}

TEST_CASE("unicyclic checks on random unicyclic graphs") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const UnicyclicReport r = unicyclic_analysis(gen_random_unicyclic(3 + seed % 12, seed));
        for (const auto &c : r.checks) CHECK_MESSAGE(c.holds, c.name << " seed " << seed);
    }
}

TEST_CASE("dot labels") {
    const std::string p7 = to_dot(gen_path(7), classify_vertices(gen_path(7)));
    CHECK(p7.find("1 [part=\"ncv\"]") != std::string::npos);
    // C4 plus a disjoint K2: the core is not independent, so cfv vertices keep their class.
    const Graph g = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}});
    const std::string dot = to_dot(g, classify_vertices(g));
    CHECK(dot.find("4 [part=\"cfv_upp\"]") != std::string::npos);
    CHECK(dot.find("0 [part=\"cv\"]") != std::string::npos);
}

TEST_CASE("analysis json fields") {
    const auto j = to_json(analyze(gen_path(7)));
    CHECK(j["nullity"] == 1);
    CHECK(j["kernel_basis"][0] == nlohmann::json({1, 0, -1, 0, 1, 0, -1}));
    CHECK(j["classes"][1] == "cfv_upp");
    CHECK(j["blocks"]["Q"].size() == 4);
    CHECK(j.dump() == to_json(analyze(gen_path(7))).dump());
}
