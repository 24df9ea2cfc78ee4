#include "nullcore/tree.hpp"

#include <algorithm>
#include <set>

#include "nullcore/mc.hpp"

namespace nullcore {

namespace {

void require_tree(const Graph &g, const char *who) {
    if (!is_tree(g)) throw precondition_error(std::string(who) + ": input is not a tree");
}

}  // namespace

ReductionTrace pendant_reduction(const Graph &forest) {
    if (!is_forest(forest)) throw precondition_error("pendant_reduction: input has a cycle");
    const std::size_t n = forest.order();
    std::vector<std::size_t> deg(n);
    std::vector<bool> removed(n, false);
    std::set<vertex> ends;
    for (vertex v = 0; v < n; ++v) {
        deg[v] = forest.degree(v);
        if (deg[v] == 1) ends.insert(v);
    }
    ReductionTrace trace;
    while (!ends.empty()) {
        const vertex w = *ends.begin();
        ends.erase(ends.begin());
        vertex u = n;
        for (vertex x : forest.neighbours(w))
            if (!removed[x]) u = x;
        trace.steps.emplace_back(w, u);
        removed[w] = removed[u] = true;
        ends.erase(u);
        for (vertex x : forest.neighbours(u)) {
            if (removed[x]) continue;
            if (--deg[x] == 1) {
                ends.insert(x);
            } else if (deg[x] == 0) {
                ends.erase(x);
            }
        }
    }
    for (vertex v = 0; v < n; ++v)
        if (!removed[v]) trace.isolated.push_back(v);
    return trace;
}

TreeNullityIdentity tree_nullity_identity(const Graph &tree) {
    require_tree(tree, "tree_nullity_identity");
    const ReductionTrace trace = pendant_reduction(tree);
    TreeNullityIdentity r;
    r.eta_reduction = trace.isolated.size();
    r.eta_rank = nullity(tree);
    r.n_minus_2t = static_cast<long>(tree.order()) - 2 * static_cast<long>(trace.matching_number());
    r.all_equal = r.eta_reduction == r.eta_rank && static_cast<long>(r.eta_rank) == r.n_minus_2t;
    return r;
}

EndVertexCores end_vertex_core_vertices(const Graph &tree) {
    require_tree(tree, "end_vertex_core_vertices");
    const VertexPartition p = classify_vertices(tree);
    EndVertexCores r;
    if (p.nullity == 0) {
        r.non_singular = true;
        return r;
    }
    for (vertex v : p.cv)
        if (tree.degree(v) <= 1) r.vertices.push_back(v);
    return r;
}

std::optional<std::vector<Edge>> cfvr_perfect_matching(const Graph &tree) {
    require_tree(tree, "cfvr_perfect_matching");
    const VertexPartition p = classify_vertices(tree);
    const auto [forest, prov] = induced_subgraph(tree, p.cfvr);
    const ReductionTrace trace = pendant_reduction(forest);
    if (!trace.isolated.empty()) return std::nullopt;
    std::vector<Edge> matching;
    for (const auto &[w, u] : trace.steps) matching.push_back(Edge::normalized(prov.source_of(w), prov.source_of(u)));
    std::sort(matching.begin(), matching.end());
    return matching;
}

std::optional<std::pair<Graph, VertexProvenance>> inverse_subdivision(const Graph &tree) {
    require_tree(tree, "inverse_subdivision");
    if (tree.order() == 1) return std::pair{tree, VertexProvenance{{{false, 0, {}}}}};
    const auto bip = is_bipartite(tree);
    const vertex_list *original = nullptr;
    const vertex_list *inserted = nullptr;
    if (bip->v2.size() + 1 == bip->v1.size()) {
        original = &bip->v1;
        inserted = &bip->v2;
    } else if (bip->v1.size() + 1 == bip->v2.size()) {
        original = &bip->v2;
        inserted = &bip->v1;
    } else {
        return std::nullopt;
    }
    for (vertex x : *inserted)
        if (tree.degree(x) != 2) return std::nullopt;
    std::vector<vertex> relabel(tree.order(), 0);
    VertexProvenance prov;
    for (std::size_t i = 0; i < original->size(); ++i) {
        relabel[(*original)[i]] = i;
        prov.origin.push_back({false, (*original)[i], {}});
    }
    std::vector<Edge> edges;
    for (vertex x : *inserted) {
        const auto &nb = tree.neighbours(x);
        edges.push_back(Edge::normalized(relabel[nb[0]], relabel[nb[1]]));
    }
    return std::pair{Graph(original->size(), edges), std::move(prov)};
}

McTreeReport is_mc_tree(const Graph &tree) {
    require_tree(tree, "is_mc_tree");
    McTreeReport r;
    r.by_definition = is_minimal_configuration(tree).is_mc;
    r.by_subdivision = inverse_subdivision(tree).has_value();
    r.characterizations_agree = r.by_definition == r.by_subdivision;
    const VertexPartition p = classify_vertices(tree);
    const CoreLabelling l = core_labelling(tree, p);
    r.matching_number = pendant_reduction(tree).matching_number();
    r.ncv = p.ncv.size();
    r.matching_equals_ncv = r.matching_number == r.ncv;
    r.q_full_column_rank = rank(l.q) == l.ncv_count;
    r.is_mc_tree = r.by_definition && r.by_subdivision && r.matching_equals_ncv && r.q_full_column_rank;
    return r;
}

IncidenceRankReport incidence_rank_check(const Graph &tree) {
    require_tree(tree, "incidence_rank_check");
    IncidenceRankReport r;
    r.rank_b = rank(incidence_matrix(tree));
    r.edges = tree.size();
    r.subdivision_nullity = nullity(subdivision(tree).first);
    r.holds = r.rank_b == r.edges && r.edges + 1 == tree.order() && r.subdivision_nullity == 1;
    return r;
}

PendantRemovalReport check_pendant_removal(const Graph &g, vertex end_vertex) {
    if (end_vertex >= g.order() || g.degree(end_vertex) != 1) {
        throw precondition_error("check_pendant_removal: vertex " + std::to_string(end_vertex) + " is not an end vertex");
    }
    PendantRemovalReport r;
    r.end_vertex = end_vertex;
    r.neighbour = g.neighbours(end_vertex).front();
    const vertex pair[] = {r.end_vertex, r.neighbour};
    const auto [rest, prov] = delete_vertices(g, pair);
    const VertexPartition before = classify_vertices(g);
    const VertexPartition after = classify_vertices(rest);
    r.eta_before = before.nullity;
    r.eta_after = after.nullity;
    r.classes_preserved = true;
    for (vertex v = 0; v < rest.order(); ++v)
        if (after.class_of[v] != before.class_of[prov.source_of(v)]) r.classes_preserved = false;
    return r;
}

CharPoly subdivision_char_poly_via_incidence(const Graph &g) {
    if (g.size() > g.order()) throw precondition_error("subdivision_char_poly_via_incidence: requires m <= n");
    const IntMatrix b = incidence_matrix(g);
    const CharPoly inner = char_poly(b.transpose() * b);
    // det(y I - B^T B) at y = x^2, then times x^(n-m).
    std::vector<Integer> squared(2 * inner.coefficients.size() - 1, Integer(0));
    for (std::size_t k = 0; k < inner.coefficients.size(); ++k) squared[2 * k] = inner.coefficients[k];
    std::vector<Integer> shift(g.order() - g.size() + 1, Integer(0));
    shift.back() = 1;
    return CharPoly{poly_mul(squared, shift)};
}

}  // namespace nullcore
