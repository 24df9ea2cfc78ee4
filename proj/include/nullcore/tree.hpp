#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nullcore/analysis.hpp"
#include "nullcore/graph.hpp"

namespace nullcore {

// Successive removal of an end vertex and its unique neighbour.
struct ReductionTrace {
    std::vector<std::pair<vertex, vertex>> steps;  // (end vertex, neighbour)
    vertex_list isolated;                          // survivors, original labels
    std::size_t matching_number() const { return steps.size(); }
};

// Lowest-labelled end vertex first. Throws precondition_error on cyclic input.
ReductionTrace pendant_reduction(const Graph &forest);

struct TreeNullityIdentity {
    std::size_t eta_reduction = 0;
    std::size_t eta_rank = 0;
    long n_minus_2t = 0;
    bool all_equal = false;
};

TreeNullityIdentity tree_nullity_identity(const Graph &tree);

struct EndVertexCores {
    vertex_list vertices;
    bool non_singular = false;
};

EndVertexCores end_vertex_core_vertices(const Graph &tree);

// Perfect matching of the forest induced on CFV_R, or nullopt if none exists.
std::optional<std::vector<Edge>> cfvr_perfect_matching(const Graph &tree);

// Smooths the degree-2 class of a subdivided tree; nullopt if the tree is not a subdivision.
// The provenance maps each vertex of the returned tree to its vertex in the input.
std::optional<std::pair<Graph, VertexProvenance>> inverse_subdivision(const Graph &tree);

struct McTreeReport {
    bool is_mc_tree = false;
    bool by_definition = false;
    bool by_subdivision = false;
    bool characterizations_agree = false;
    bool matching_equals_ncv = false;
    bool q_full_column_rank = false;
    std::size_t matching_number = 0;
    std::size_t ncv = 0;
};

McTreeReport is_mc_tree(const Graph &tree);

struct IncidenceRankReport {
    std::size_t rank_b = 0;
    std::size_t edges = 0;
    std::size_t subdivision_nullity = 0;
    bool holds = false;
};

IncidenceRankReport incidence_rank_check(const Graph &tree);

struct PendantRemovalReport {
    vertex end_vertex = 0;
    vertex neighbour = 0;
    std::size_t eta_before = 0;
    std::size_t eta_after = 0;
    bool classes_preserved = false;
};

// Removes end vertex w and its neighbour, comparing nullity and the class of every survivor.
PendantRemovalReport check_pendant_removal(const Graph &g, vertex end_vertex);

// x * det(x^2 I - B^T B) expanded; equals the subdivision's characteristic polynomial for trees.
CharPoly subdivision_char_poly_via_incidence(const Graph &g);

}  // namespace nullcore
