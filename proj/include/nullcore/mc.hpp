#pragma once

#include <string>
#include <vector>

#include "nullcore/analysis.hpp"
#include "nullcore/graph.hpp"

namespace nullcore {

struct MCReport {
    bool is_mc = false;
    std::size_t nullity = 0;
    vertex_list core;       // CV
    Graph core_subgraph;    // G[CV]
    vertex_list periphery;  // V \ CV
    bool periphery_independent = false;
    std::size_t core_nullity = 0;
    bool size_identity = false;  // |periphery| + 1 == nullity(G[CV])
    std::vector<std::string> failures;
};

MCReport is_minimal_configuration(const Graph &g);

struct BipartiteNullityOneReport {
    std::size_t n = 0;
    std::size_t larger = 0;   // size of the larger colour class
    std::size_t smaller = 0;
    bool n_odd = false;
    bool class_sizes = false;  // larger = smaller + 1 = (n + 1) / 2
    bool cv_in_larger = false;
    bool admits_core_labelling = false;
    bool all_hold() const { return n_odd && class_sizes && cv_in_larger && admits_core_labelling; }
};

// Requires a bipartite graph of nullity 1; throws precondition_error otherwise.
BipartiteNullityOneReport bipartite_nullity1_structure(const Graph &g);

struct McSlimEquivalence {
    bool hypothesis_met = false;  // colour classes of different size
    bool lhs = false;             // minimal configuration
    bool rhs = false;             // slim, nullity 1, CV = larger class
    bool equal = false;
};

McSlimEquivalence bipartite_mc_slim_equivalence(const Graph &g);

struct ParityReport {
    std::size_t n = 0;
    std::size_t rank_s = 0;
    std::size_t nullity_via_s = 0;
    std::size_t nullity_direct = 0;
    bool holds = false;
};

ParityReport bipartite_parity_check(const Graph &g);

}  // namespace nullcore
