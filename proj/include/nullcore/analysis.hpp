#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nullcore/graph.hpp"
#include "nullcore/linalg.hpp"

namespace nullcore {

enum class VertexClass { cv, cfv_mid, cfv_upp };

std::string to_string(VertexClass c);

// Nullspace-induced vertex partition. The ncv/cfvr split is defined for every
// graph; it is only a core-labelling when independent_cv holds.
struct VertexPartition {
    std::size_t nullity = 0;
    std::vector<VertexClass> class_of;
    vertex_list cv;
    vertex_list ncv;   // core-forbidden vertices with a core neighbour
    vertex_list cfvr;  // core-forbidden vertices with no core neighbour
    bool independent_cv = true;

    bool is_cv(vertex v) const { return class_of.at(v) == VertexClass::cv; }
    vertex_list cfv() const;
    // "cv", "ncv", "cfvr" per vertex.
    std::vector<std::string> part_labels() const;
};

class non_independent_core : public std::runtime_error {
   public:
    non_independent_core(vertex u, vertex w);
    vertex u() const { return u_; }
    vertex w() const { return w_; }

   private:
    vertex u_;
    vertex w_;
};

// Vertex order CV, N(CV), CFV_R (each ascending) and the blocks of
//   [ 0   Q   0 ]
//   [ Q^T N   R ]
//   [ 0   R^T M ]
struct CoreLabelling {
    vertex_list order;                  // new label -> old label
    std::vector<std::size_t> position;  // old label -> new label
    std::size_t cv_count = 0;
    std::size_t ncv_count = 0;
    std::size_t cfvr_count = 0;
    IntMatrix q, n, r, m;

    IntMatrix reassemble() const;
};

struct TheoremCheck {
    std::string name;
    bool holds = false;
    nlohmann::json witness;
};

struct AnalysisReport {
    std::size_t n = 0;
    std::size_t m = 0;
    VertexPartition partition;
    KernelBasis kernel;
    std::optional<CoreLabelling> labelling;
    std::vector<TheoremCheck> checks;
};

std::size_t nullity(const Graph &g);
KernelBasis kernel_basis(const Graph &g);

VertexPartition classify_vertices(const Graph &g);
// Independent route: v is core iff deleting it lowers the nullity by one.
vertex_list core_vertices_by_deletion(const Graph &g);

CoreLabelling core_labelling(const Graph &g);
CoreLabelling core_labelling(const Graph &g, const VertexPartition &p);

// Evaluates the block-matrix results for a singular graph with independent CV;
// throws non_independent_core when CV is not independent.
std::vector<TheoremCheck> verify_block_theorems(const Graph &g);

// Every vertex adjacent to core vertices has at least two of them.
TheoremCheck check_core_neighbour_count(const Graph &g, const VertexPartition &p);

AnalysisReport analyze(const Graph &g);

struct SlimReduction {
    Graph graph;
    VertexProvenance provenance;
    bool nullity_preserved = false;
    bool classes_preserved = false;
};

// Induced subgraph on CV u N(CV); reports whether nullity and vertex classes survive.
SlimReduction slim_reduce(const Graph &g);

bool is_slim(const Graph &g);
bool is_core_graph(const Graph &g);
bool is_half_core(const Graph &g);

struct UnicyclicReport {
    vertex_list cycle;
    std::size_t length = 0;
    std::size_t length_mod4 = 0;
    std::vector<VertexClass> cycle_classes;
    std::size_t nullity = 0;
    bool independent_cv = false;
    std::vector<TheoremCheck> checks;
};

UnicyclicReport unicyclic_analysis(const Graph &g);

std::string to_dot(const Graph &g, const VertexPartition &p);

}  // namespace nullcore
