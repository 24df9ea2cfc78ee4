#include "nullcore/analysis.hpp"

#include <algorithm>

namespace nullcore {

std::string to_string(VertexClass c) {
    switch (c) {
        case VertexClass::cv: return "cv";
        case VertexClass::cfv_mid: return "cfv_mid";
        case VertexClass::cfv_upp: return "cfv_upp";
    }
    return "?";
}

vertex_list VertexPartition::cfv() const {
    vertex_list out;
    for (vertex v = 0; v < class_of.size(); ++v)
        if (class_of[v] != VertexClass::cv) out.push_back(v);
    return out;
}

std::vector<std::string> VertexPartition::part_labels() const {
    std::vector<std::string> labels(class_of.size(), "cfvr");
    for (vertex v : cv) labels[v] = "cv";
    for (vertex v : ncv) labels[v] = "ncv";
    return labels;
}

non_independent_core::non_independent_core(vertex u, vertex w)
    : std::runtime_error("core vertices " + std::to_string(u) + " and " + std::to_string(w) + " are adjacent"),
      u_(u),
      w_(w) {}

std::size_t nullity(const Graph &g) { return g.order() - rank(adjacency_matrix(g)); }

KernelBasis kernel_basis(const Graph &g) { return nullspace_basis(adjacency_matrix(g)); }

VertexPartition classify_vertices(const Graph &g) {
    VertexPartition p;
    const KernelBasis kernel = kernel_basis(g);
    p.nullity = kernel.nullity();
    p.cv = kernel.support();
    p.class_of.assign(g.order(), VertexClass::cfv_mid);
    for (vertex v : p.cv) p.class_of[v] = VertexClass::cv;
    for (vertex v = 0; v < g.order(); ++v) {
        if (p.class_of[v] == VertexClass::cv) continue;
        const std::size_t eta = nullity(delete_vertex(g, v).first);
        if (eta == p.nullity) {
            p.class_of[v] = VertexClass::cfv_mid;
        } else if (eta == p.nullity + 1) {
            p.class_of[v] = VertexClass::cfv_upp;
        } else {
            throw std::logic_error("classify_vertices: deleting core-forbidden vertex " + std::to_string(v) +
                                   " changed nullity from " + std::to_string(p.nullity) + " to " +
                                   std::to_string(eta));
        }
        const bool has_core_neighbour = std::any_of(g.neighbours(v).begin(), g.neighbours(v).end(),
                                                    [&](vertex w) { return std::binary_search(p.cv.begin(), p.cv.end(), w); });
        (has_core_neighbour ? p.ncv : p.cfvr).push_back(v);
    }
    p.independent_cv = is_independent(g, p.cv);
    return p;
}

vertex_list core_vertices_by_deletion(const Graph &g) {
    const std::size_t eta = nullity(g);
    vertex_list out;
    for (vertex v = 0; v < g.order(); ++v)
        if (nullity(delete_vertex(g, v).first) + 1 == eta) out.push_back(v);
    return out;
}

CoreLabelling core_labelling(const Graph &g) { return core_labelling(g, classify_vertices(g)); }

CoreLabelling core_labelling(const Graph &g, const VertexPartition &p) {
    if (!p.independent_cv) {
        for (vertex u : p.cv)
            for (vertex w : g.neighbours(u))
                if (u < w && p.is_cv(w)) throw non_independent_core(u, w);
    }
    CoreLabelling l;
    l.cv_count = p.cv.size();
    l.ncv_count = p.ncv.size();
    l.cfvr_count = p.cfvr.size();
    l.order = p.cv;
    l.order.insert(l.order.end(), p.ncv.begin(), p.ncv.end());
    l.order.insert(l.order.end(), p.cfvr.begin(), p.cfvr.end());
    l.position.assign(g.order(), 0);
    for (std::size_t i = 0; i < l.order.size(); ++i) l.position[l.order[i]] = i;
    const IntMatrix a = adjacency_matrix(g);
    l.q = a.submatrix(p.cv, p.ncv);
    l.n = a.submatrix(p.ncv, p.ncv);
    l.r = a.submatrix(p.ncv, p.cfvr);
    l.m = a.submatrix(p.cfvr, p.cfvr);
    return l;
}

IntMatrix CoreLabelling::reassemble() const {
    const std::size_t total = cv_count + ncv_count + cfvr_count;
    IntMatrix a(total, total);
    const std::size_t b1 = cv_count;
    const std::size_t b2 = cv_count + ncv_count;
    for (std::size_t i = 0; i < cv_count; ++i)
        for (std::size_t j = 0; j < ncv_count; ++j) {
            a(i, b1 + j) = q(i, j);
            a(b1 + j, i) = q(i, j);
        }
    for (std::size_t i = 0; i < ncv_count; ++i)
        for (std::size_t j = 0; j < ncv_count; ++j) a(b1 + i, b1 + j) = n(i, j);
    for (std::size_t i = 0; i < ncv_count; ++i)
        for (std::size_t j = 0; j < cfvr_count; ++j) {
            a(b1 + i, b2 + j) = r(i, j);
            a(b2 + j, b1 + i) = r(i, j);
        }
    for (std::size_t i = 0; i < cfvr_count; ++i)
        for (std::size_t j = 0; j < cfvr_count; ++j) a(b2 + i, b2 + j) = m(i, j);
    return a;
}

namespace {

std::vector<TheoremCheck> block_checks(const VertexPartition &p, const CoreLabelling &l) {
    const long eta = static_cast<long>(p.nullity);
    const long cv = static_cast<long>(l.cv_count);
    const long ncv = static_cast<long>(l.ncv_count);
    const long rank_q = static_cast<long>(rank(l.q));
    const long null_qt = static_cast<long>(nullspace_basis(l.q.transpose()).nullity());
    const Integer det_m = det(l.m);
    const nlohmann::json witness = {{"eta", eta},          {"cv", cv},         {"ncv", ncv},
                                    {"rank_q", rank_q},    {"nullity_qt", null_qt},
                                    {"cfvr", l.cfvr_count}, {"det_m", det_m.get_str()}};
    std::vector<TheoremCheck> checks;
    checks.push_back({"nullity_of_q_transpose_equals_nullity", null_qt == eta, witness});
    checks.push_back({"rank_q_below_core_size", rank_q < cv, witness});
    checks.push_back({"nullity_equals_core_size_minus_rank_q", eta == cv - rank_q, witness});
    checks.push_back({"q_full_column_rank_iff_nullity_is_core_minus_ncv", (rank_q == ncv) == (eta == cv - ncv), witness});
    checks.push_back({"remote_block_nonsingular", sgn(det_m) != 0, witness});
    return checks;
}

}  // namespace

std::vector<TheoremCheck> verify_block_theorems(const Graph &g) {
    const VertexPartition p = classify_vertices(g);
    const CoreLabelling l = core_labelling(g, p);
    if (p.nullity == 0) throw precondition_error("verify_block_theorems: graph is non-singular");
    return block_checks(p, l);
}

TheoremCheck check_core_neighbour_count(const Graph &g, const VertexPartition &p) {
    TheoremCheck c{"no_vertex_with_exactly_one_core_neighbour", true, nlohmann::json::object()};
    for (vertex v = 0; v < g.order(); ++v) {
        const auto count = std::count_if(g.neighbours(v).begin(), g.neighbours(v).end(),
                                         [&](vertex w) { return p.is_cv(w); });
        if (count == 1) {
            c.holds = false;
            c.witness = {{"vertex", v}};
            break;
        }
    }
    return c;
}

AnalysisReport analyze(const Graph &g) {
    AnalysisReport r;
    r.n = g.order();
    r.m = g.size();
    r.kernel = kernel_basis(g);
    r.partition = classify_vertices(g);
    r.checks.push_back(check_core_neighbour_count(g, r.partition));
    const vertex_list by_deletion = core_vertices_by_deletion(g);
    r.checks.push_back({"core_support_matches_deletion", by_deletion == r.partition.cv,
                        {{"support", r.partition.cv}, {"deletion", by_deletion}}});
    if (r.partition.independent_cv) {
        r.labelling = core_labelling(g, r.partition);
        r.checks.push_back({"labelling_reassembles_adjacency",
                            r.labelling->reassemble() ==
                                adjacency_matrix(g).submatrix(r.labelling->order, r.labelling->order),
                            nlohmann::json::object()});
        if (r.partition.nullity > 0) {
            auto blocks = block_checks(r.partition, *r.labelling);
            r.checks.insert(r.checks.end(), blocks.begin(), blocks.end());
        }
    }
    return r;
}

SlimReduction slim_reduce(const Graph &g) {
    const VertexPartition p = classify_vertices(g);
    if (!p.independent_cv) core_labelling(g, p);  // throws with the offending pair
    vertex_list keep = p.cv;
    keep.insert(keep.end(), p.ncv.begin(), p.ncv.end());
    auto [sub, prov] = induced_subgraph(g, keep);
    const VertexPartition ps = classify_vertices(sub);
    SlimReduction out{std::move(sub), std::move(prov), ps.nullity == p.nullity, true};
    for (vertex v = 0; v < out.graph.order(); ++v)
        if (ps.class_of[v] != p.class_of[out.provenance.source_of(v)]) out.classes_preserved = false;
    return out;
}

bool is_slim(const Graph &g) {
    const VertexPartition p = classify_vertices(g);
    return p.nullity > 0 && is_connected(g) && p.independent_cv && p.cfvr.empty();
}

bool is_core_graph(const Graph &g) {
    const VertexPartition p = classify_vertices(g);
    return p.nullity > 0 && p.cv.size() == g.order();
}

bool is_half_core(const Graph &g) {
    const VertexPartition p = classify_vertices(g);
    const vertex_list cfv = p.cfv();
    return p.nullity > 0 && is_independent(g, p.cv) && is_independent(g, cfv);
}

UnicyclicReport unicyclic_analysis(const Graph &g) {
    auto cycle = is_unicyclic(g);
    if (!cycle) throw precondition_error("unicyclic_analysis: graph is not unicyclic");
    const VertexPartition p = classify_vertices(g);
    UnicyclicReport r;
    r.cycle = *cycle;
    r.length = cycle->size();
    r.length_mod4 = r.length % 4;
    r.nullity = p.nullity;
    r.independent_cv = p.independent_cv;
    for (vertex v : r.cycle) r.cycle_classes.push_back(p.class_of[v]);
    const bool some_cfv = std::any_of(r.cycle_classes.begin(), r.cycle_classes.end(),
                                      [](VertexClass c) { return c != VertexClass::cv; });
    const nlohmann::json witness = {{"length", r.length}, {"nullity", r.nullity}, {"cv", p.cv}};
    if (r.length_mod4 == 0) {
        if (some_cfv) {
            r.checks.push_back({"cycle_4k_with_cfv_on_cycle_has_independent_cv", p.independent_cv, witness});
        } else {
            r.checks.push_back({"cycle_4k_all_core_on_cycle_has_nullity_at_least_2", p.nullity >= 2, witness});
        }
    } else {
        r.checks.push_back({"cycle_not_4k_has_independent_cv", p.independent_cv, witness});
    }
    return r;
}

std::string to_dot(const Graph &g, const VertexPartition &p) {
    std::vector<std::string> labels = p.part_labels();
    if (!p.independent_cv)
        for (vertex v = 0; v < g.order(); ++v)
            if (!p.is_cv(v)) labels[v] = to_string(p.class_of[v]);
    return to_dot(g, labels);
}

}  // namespace nullcore
