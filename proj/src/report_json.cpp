#include "nullcore/report_json.hpp"

namespace nullcore {

using nlohmann::json;

json integer_json(const Integer &v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json to_json(const IntMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const KernelBasis &k) {
    json out = json::array();
    for (const auto &v : k.vectors) {
        json row = json::array();
        for (const auto &e : v) row.push_back(integer_json(e));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const TheoremCheck &c) { return {{"name", c.name}, {"holds", c.holds}, {"witness", c.witness}}; }

json to_json(const AnalysisReport &r) {
    json classes = json::array();
    for (auto c : r.partition.class_of) classes.push_back(to_string(c));
    json checks = json::array();
    for (const auto &c : r.checks) checks.push_back(to_json(c));
    json out = {{"n", r.n},
                {"m", r.m},
                {"nullity", r.partition.nullity},
                {"classes", classes},
                {"cv", r.partition.cv},
                {"ncv", r.partition.ncv},
                {"cfvr", r.partition.cfvr},
                {"independent_cv", r.partition.independent_cv},
                {"kernel_basis", to_json(r.kernel)}};
    if (r.labelling) {
        out["blocks"] = {{"Q", to_json(r.labelling->q)},
                         {"N", to_json(r.labelling->n)},
                         {"R", to_json(r.labelling->r)},
                         {"M", to_json(r.labelling->m)}};
        out["labelling"] = r.labelling->order;
    } else {
        out["blocks"] = nullptr;
    }
    out["checks"] = checks;
    return out;
}

json to_json(const ReductionTrace &t) {
    json steps = json::array();
    for (const auto &[w, u] : t.steps) steps.push_back({w, u});
    return {{"steps", steps}, {"isolated", t.isolated}, {"t", t.matching_number()}};
}

json to_json(const MCReport &r) {
    return {{"is_mc", r.is_mc},
            {"nullity", r.nullity},
            {"core", r.core},
            {"periphery", r.periphery},
            {"periphery_independent", r.periphery_independent},
            {"eta_core", r.core_nullity},
            {"size_identity", r.size_identity},
            {"failures", r.failures}};
}

json to_json(const PerturbationReport &r) {
    json checks = json::array();
    for (const auto &c : r.checks) checks.push_back(to_json(c));
    return {{"edge", {r.edge.edge.u, r.edge.edge.w}},
            {"type", to_string(r.edge.type)},
            {"eta", {r.eta_before, r.eta_after}},
            {"cv", {r.cv_before, r.cv_after}},
            {"preserved",
             {{"nullity", r.preserved.nullity},
              {"cv_set", r.preserved.cv_set},
              {"nullspace", r.preserved.nullspace},
              {"core_labelling", r.preserved.core_labelling}}},
            {"checks", checks}};
}

json to_json(const UnicyclicReport &r) {
    json classes = json::array();
    for (auto c : r.cycle_classes) classes.push_back(to_string(c));
    json checks = json::array();
    for (const auto &c : r.checks) checks.push_back(to_json(c));
    return {{"cycle", r.cycle},     {"length", r.length},
            {"length_mod4", r.length_mod4}, {"cycle_classes", classes},
            {"nullity", r.nullity}, {"independent_cv", r.independent_cv},
            {"checks", checks}};
}

json to_json(const VertexProvenance &p) {
    json out = json::array();
    for (const auto &o : p.origin) {
        if (o.inserted) {
            out.push_back({{"edge", {o.edge.u, o.edge.w}}});
        } else {
            out.push_back(o.source);
        }
    }
    return out;
}

}  // namespace nullcore
