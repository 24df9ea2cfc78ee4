#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullcore/analysis.hpp"
#include "nullcore/graph.hpp"

namespace nullcore {

enum class VertexPart { cv, ncv, cfvr };

// Unordered pair of parts, smaller part first.
enum class PairType { cv_cv, cv_ncv, cv_cfvr, ncv_ncv, ncv_cfvr, cfvr_cfvr };

std::string to_string(PairType t);
PairType pair_type(VertexPart a, VertexPart b);
// Both endpoints core-forbidden.
bool is_cfv_pair(PairType t);

struct EdgeCandidate {
    Edge edge;
    PairType type = PairType::cfvr_cfvr;

    friend bool operator==(const EdgeCandidate &, const EdgeCandidate &) = default;
};

enum class Preserve { nullity, cv_set, nullspace };

std::string to_string(Preserve p);
std::optional<Preserve> parse_preserve(const std::string &s);

struct PreservationFlags {
    bool nullity = false;
    bool cv_set = false;
    bool nullspace = false;
    bool core_labelling = false;

    bool get(Preserve p) const;
};

struct PerturbationReport {
    EdgeCandidate edge;
    bool deletion = false;
    std::size_t eta_before = 0;
    std::size_t eta_after = 0;
    vertex_list cv_before;
    vertex_list cv_after;
    KernelBasis kernel_before;
    KernelBasis kernel_after;
    bool independent_cv_after = false;
    PreservationFlags preserved;
    std::vector<TheoremCheck> checks;
};

std::vector<EdgeCandidate> candidate_edges(const Graph &g);
std::vector<EdgeCandidate> candidate_edges(const Graph &g, const VertexPartition &p);

// Adds the candidate edge and compares the nullspace data before and after.
// For core-forbidden pairs on a graph with independent CV the report carries
// the nullity/core-set equivalence and the same-nullspace implication as checks.
PerturbationReport apply_and_report(const Graph &g, const EdgeCandidate &e);
PerturbationReport apply_and_report(const Graph &g, vertex u, vertex w);
// Same flags for removing an existing edge; no checks are attached.
PerturbationReport delete_and_report(const Graph &g, vertex u, vertex w);

struct CvNcvReport {
    bool hypothesis_met = false;  // core-labelling preserved by the addition
    std::size_t eta_before = 0;
    std::size_t eta_after = 0;
    std::optional<IntVector> leaving;   // old basis vector, non-zero at the cv endpoint, outside the new kernel
    std::optional<IntVector> entering;  // new basis vector, non-zero at the cv endpoint, outside the old kernel
    bool holds = false;
};

// Requires independent CV and a CV-NCV candidate.
CvNcvReport verify_cv_ncv_theorem(const Graph &g, const EdgeCandidate &e);

// Candidates (never CV-CV or CV-CFVR) whose addition keeps the requested
// property and leaves CV independent. Requires independent CV.
std::vector<EdgeCandidate> safe_additions(const Graph &g, Preserve preserve);

struct Densification {
    Graph graph;
    std::vector<Edge> added;
    bool property_maintained = true;  // checked against the input after every step
};

Densification greedy_densify(const Graph &g, Preserve preserve);

}  // namespace nullcore
