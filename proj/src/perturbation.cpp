#include "nullcore/perturbation.hpp"

#include <algorithm>

namespace nullcore {

std::string to_string(PairType t) {
    switch (t) {
        case PairType::cv_cv: return "CV-CV";
        case PairType::cv_ncv: return "CV-NCV";
        case PairType::cv_cfvr: return "CV-CFVR";
        case PairType::ncv_ncv: return "NCV-NCV";
        case PairType::ncv_cfvr: return "NCV-CFVR";
        case PairType::cfvr_cfvr: return "CFVR-CFVR";
    }
    return "?";
}

PairType pair_type(VertexPart a, VertexPart b) {
    if (b < a) std::swap(a, b);
    switch (a) {
        case VertexPart::cv:
            return b == VertexPart::cv ? PairType::cv_cv : b == VertexPart::ncv ? PairType::cv_ncv : PairType::cv_cfvr;
        case VertexPart::ncv: return b == VertexPart::ncv ? PairType::ncv_ncv : PairType::ncv_cfvr;
        case VertexPart::cfvr: return PairType::cfvr_cfvr;
    }
    return PairType::cfvr_cfvr;
}

bool is_cfv_pair(PairType t) {
    return t == PairType::ncv_ncv || t == PairType::ncv_cfvr || t == PairType::cfvr_cfvr;
}

std::string to_string(Preserve p) {
    switch (p) {
        case Preserve::nullity: return "nullity";
        case Preserve::cv_set: return "cv";
        case Preserve::nullspace: return "nullspace";
    }
    return "?";
}

std::optional<Preserve> parse_preserve(const std::string &s) {
    if (s == "nullity") return Preserve::nullity;
    if (s == "cv" || s == "cv_set") return Preserve::cv_set;
    if (s == "nullspace") return Preserve::nullspace;
    return std::nullopt;
}

bool PreservationFlags::get(Preserve p) const {
    switch (p) {
        case Preserve::nullity: return nullity;
        case Preserve::cv_set: return cv_set;
        case Preserve::nullspace: return nullspace;
    }
    return false;
}

namespace {

// CV / N(CV) / CFV_R straight from the kernel; no per-vertex deletions.
struct CoreSplit {
    KernelBasis kernel;
    vertex_list cv, ncv, cfvr;
    std::vector<VertexPart> part;
    bool independent = true;
};

CoreSplit core_split(const Graph &g) {
    CoreSplit s;
    s.kernel = kernel_basis(g);
    s.cv = s.kernel.support();
    s.part.assign(g.order(), VertexPart::cfvr);
    for (vertex v : s.cv) s.part[v] = VertexPart::cv;
    for (vertex v = 0; v < g.order(); ++v) {
        if (s.part[v] == VertexPart::cv) continue;
        const auto &nb = g.neighbours(v);
        if (std::any_of(nb.begin(), nb.end(), [&](vertex w) { return s.part[w] == VertexPart::cv; })) {
            s.part[v] = VertexPart::ncv;
            s.ncv.push_back(v);
        } else {
            s.cfvr.push_back(v);
        }
    }
    s.independent = is_independent(g, s.cv);
    return s;
}

std::vector<EdgeCandidate> candidates_from_parts(const Graph &g, const std::vector<VertexPart> &part) {
    std::vector<EdgeCandidate> out;
    for (vertex u = 0; u < g.order(); ++u)
        for (vertex w = u + 1; w < g.order(); ++w)
            if (!g.adjacent(u, w)) out.push_back({{u, w}, pair_type(part[u], part[w])});
    return out;
}

void validate_candidate(const Graph &g, const EdgeCandidate &e, const CoreSplit &base) {
    const auto [u, w] = e.edge;
    if (u >= g.order() || w >= g.order()) throw graph_error("candidate endpoint out of range");
    if (u == w) throw graph_error("candidate endpoints coincide");
    if (g.adjacent(u, w)) throw graph_error("candidate {" + std::to_string(u) + "," + std::to_string(w) + "} is an edge");
    if (pair_type(base.part[u], base.part[w]) != e.type) throw graph_error("candidate type does not match the partition");
}

PerturbationReport compare(const EdgeCandidate &e, const CoreSplit &before, const CoreSplit &after, bool deletion) {
    PerturbationReport r;
    r.edge = e;
    r.deletion = deletion;
    r.eta_before = before.kernel.nullity();
    r.eta_after = after.kernel.nullity();
    r.cv_before = before.cv;
    r.cv_after = after.cv;
    r.kernel_before = before.kernel;
    r.kernel_after = after.kernel;
    r.independent_cv_after = after.independent;
    r.preserved.nullity = r.eta_before == r.eta_after;
    r.preserved.cv_set = before.cv == after.cv;
    r.preserved.nullspace = before.kernel == after.kernel;
    r.preserved.core_labelling =
        r.preserved.cv_set && after.independent && before.ncv == after.ncv && before.cfvr == after.cfvr;
    return r;
}

PerturbationReport report_addition(const Graph &g, const EdgeCandidate &e, const CoreSplit &before) {
    validate_candidate(g, e, before);
    const CoreSplit after = core_split(add_edge(g, e.edge.u, e.edge.w));
    PerturbationReport r = compare(e, before, after, false);
    const long delta = static_cast<long>(r.eta_after) - static_cast<long>(r.eta_before);
    const nlohmann::json witness = {{"eta", {r.eta_before, r.eta_after}}, {"cv", {r.cv_before, r.cv_after}}};
    r.checks.push_back({"nullity_change_at_most_2", delta >= -2 && delta <= 2, witness});
    r.checks.push_back({"same_nullspace_implies_same_cv", !r.preserved.nullspace || r.preserved.cv_set, witness});
    if (before.independent && is_cfv_pair(e.type)) {
        r.checks.push_back({"cfv_addition_nullity_preserved_iff_cv_preserved",
                            r.preserved.nullity == r.preserved.cv_set, witness});
        r.checks.push_back({"cfv_addition_nullity_preserved_implies_same_nullspace_and_labelling",
                            !r.preserved.nullity || (r.preserved.nullspace && r.preserved.core_labelling), witness});
    }
    return r;
}

bool in_kernel(const IntMatrix &a, const IntVector &x) {
    const IntVector ax = mat_vec(a, x);
    return std::all_of(ax.begin(), ax.end(), [](const Integer &v) { return sgn(v) == 0; });
}

}  // namespace

std::vector<EdgeCandidate> candidate_edges(const Graph &g) { return candidates_from_parts(g, core_split(g).part); }

std::vector<EdgeCandidate> candidate_edges(const Graph &g, const VertexPartition &p) {
    std::vector<VertexPart> part(g.order(), VertexPart::cfvr);
    for (vertex v : p.cv) part[v] = VertexPart::cv;
    for (vertex v : p.ncv) part[v] = VertexPart::ncv;
    return candidates_from_parts(g, part);
}

PerturbationReport apply_and_report(const Graph &g, const EdgeCandidate &e) { return report_addition(g, e, core_split(g)); }

PerturbationReport apply_and_report(const Graph &g, vertex u, vertex w) {
    const CoreSplit base = core_split(g);
    if (u >= g.order() || w >= g.order()) throw graph_error("candidate endpoint out of range");
    return report_addition(g, {Edge::normalized(u, w), pair_type(base.part[u], base.part[w])}, base);
}

PerturbationReport delete_and_report(const Graph &g, vertex u, vertex w) {
    const CoreSplit before = core_split(g);
    const Graph smaller = delete_edge(g, u, w);
    const EdgeCandidate e{Edge::normalized(u, w), pair_type(before.part[u], before.part[w])};
    return compare(e, before, core_split(smaller), true);
}

CvNcvReport verify_cv_ncv_theorem(const Graph &g, const EdgeCandidate &e) {
    if (e.type != PairType::cv_ncv) throw graph_error("verify_cv_ncv_theorem: candidate is " + to_string(e.type));
    const CoreSplit before = core_split(g);
    if (!before.independent) core_labelling(g);  // throws naming the adjacent pair
    validate_candidate(g, e, before);
    const vertex core_end = before.part[e.edge.u] == VertexPart::cv ? e.edge.u : e.edge.w;
    const Graph grown = add_edge(g, e.edge.u, e.edge.w);
    const CoreSplit after = core_split(grown);
    const PerturbationReport pr = compare(e, before, after, false);

    CvNcvReport r;
    r.eta_before = pr.eta_before;
    r.eta_after = pr.eta_after;
    r.hypothesis_met = pr.preserved.core_labelling;
    if (!r.hypothesis_met) return r;
    const IntMatrix a_old = adjacency_matrix(g);
    const IntMatrix a_new = adjacency_matrix(grown);
    for (const auto &x : before.kernel.vectors)
        if (sgn(x[core_end]) != 0 && !in_kernel(a_new, x)) {
            r.leaving = x;
            break;
        }
    for (const auto &y : after.kernel.vectors)
        if (sgn(y[core_end]) != 0 && !in_kernel(a_old, y)) {
            r.entering = y;
            break;
        }
    r.holds = pr.preserved.nullity && r.leaving && r.entering;
    return r;
}

std::vector<EdgeCandidate> safe_additions(const Graph &g, Preserve preserve) {
    const CoreSplit base = core_split(g);
    if (!base.independent) core_labelling(g);
    std::vector<EdgeCandidate> out;
    for (const auto &e : candidates_from_parts(g, base.part)) {
        if (e.type == PairType::cv_cv || e.type == PairType::cv_cfvr) continue;
        const PerturbationReport r = report_addition(g, e, base);
        if (r.preserved.get(preserve) && r.independent_cv_after) out.push_back(e);
    }
    return out;
}

Densification greedy_densify(const Graph &g, Preserve preserve) {
    const CoreSplit origin = core_split(g);
    if (!origin.independent) core_labelling(g);
    Densification d{g, {}, true};
    while (true) {
        const auto safe = safe_additions(d.graph, preserve);
        if (safe.empty()) break;
        const Edge e = safe.front().edge;
        d.graph = add_edge(d.graph, e.u, e.w);
        d.added.push_back(e);
        const CoreSplit now = core_split(d.graph);
        bool kept = false;
        switch (preserve) {
            case Preserve::nullity: kept = now.kernel.nullity() == origin.kernel.nullity(); break;
            case Preserve::cv_set: kept = now.cv == origin.cv; break;
            case Preserve::nullspace: kept = now.kernel == origin.kernel; break;
        }
        if (!kept || !now.independent) d.property_maintained = false;
    }
    return d;
}

}  // namespace nullcore
