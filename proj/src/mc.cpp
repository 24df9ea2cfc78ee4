#include "nullcore/mc.hpp"

#include <algorithm>

namespace nullcore {

MCReport is_minimal_configuration(const Graph &g) {
    MCReport r;
    const VertexPartition p = classify_vertices(g);
    r.nullity = p.nullity;
    r.core = p.cv;
    r.periphery = p.cfv();
    r.core_subgraph = induced_subgraph(g, p.cv).first;
    r.core_nullity = nullity(r.core_subgraph);
    r.periphery_independent = is_independent(g, r.periphery);
    r.size_identity = r.periphery.size() + 1 == r.core_nullity;

    if (g.order() == 1) {
        r.is_mc = true;
        return r;
    }
    if (g.order() == 0) r.failures.push_back("empty graph");
    if (g.order() == 2) r.failures.push_back("definition excludes |V|=2");
    if (r.nullity != 1) r.failures.push_back("nullity is " + std::to_string(r.nullity) + ", not 1");
    if (!r.periphery_independent) r.failures.push_back("periphery is not independent");
    if (!r.size_identity) {
        r.failures.push_back("|periphery| + 1 = " + std::to_string(r.periphery.size() + 1) + " but core nullity is " +
                             std::to_string(r.core_nullity));
    }
    r.is_mc = r.failures.empty();
    return r;
}

namespace {

BipartiteDecomposition require_bipartite(const Graph &g, const char *who) {
    auto d = is_bipartite(g);
    if (!d) throw precondition_error(std::string(who) + ": graph is not bipartite");
    return std::move(*d);
}

bool subset_of(const vertex_list &a, const vertex_list &b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

BipartiteNullityOneReport bipartite_nullity1_structure(const Graph &g) {
    const BipartiteDecomposition d = require_bipartite(g, "bipartite_nullity1_structure");
    const VertexPartition p = classify_vertices(g);
    if (p.nullity != 1) {
        throw precondition_error("bipartite_nullity1_structure: nullity is " + std::to_string(p.nullity) + ", not 1");
    }
    const vertex_list &big = d.v1.size() >= d.v2.size() ? d.v1 : d.v2;
    BipartiteNullityOneReport r;
    r.n = g.order();
    r.larger = big.size();
    r.smaller = g.order() - big.size();
    r.n_odd = r.n % 2 == 1;
    r.class_sizes = r.larger == r.smaller + 1 && 2 * r.smaller + 1 == r.n;
    r.cv_in_larger = subset_of(p.cv, big);
    r.admits_core_labelling = p.independent_cv;
    return r;
}

McSlimEquivalence bipartite_mc_slim_equivalence(const Graph &g) {
    const BipartiteDecomposition d = require_bipartite(g, "bipartite_mc_slim_equivalence");
    McSlimEquivalence r;
    if (d.v1.size() == d.v2.size()) return r;
    r.hypothesis_met = true;
    const vertex_list &big = d.v1.size() > d.v2.size() ? d.v1 : d.v2;
    const VertexPartition p = classify_vertices(g);
    r.lhs = is_minimal_configuration(g).is_mc;
    r.rhs = is_slim(g) && p.nullity == 1 && p.cv == big;
    r.equal = r.lhs == r.rhs;
    return r;
}

ParityReport bipartite_parity_check(const Graph &g) {
    const BipartiteDecomposition d = require_bipartite(g, "bipartite_parity_check");
    ParityReport r;
    r.n = g.order();
    r.rank_s = rank(d.s);
    r.nullity_via_s = r.n - 2 * r.rank_s;
    r.nullity_direct = nullity(g);
    r.holds = r.nullity_via_s == r.nullity_direct && r.nullity_via_s % 2 == r.n % 2;
    return r;
}

}  // namespace nullcore
