#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nullcore/linalg.hpp"

namespace nullcore {

using vertex = std::size_t;
using vertex_list = std::vector<vertex>;

struct Edge {
    vertex u = 0;
    vertex w = 0;

    // Endpoints ordered so that u < w.
    static Edge normalized(vertex a, vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

class graph_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an operation's structural precondition does not hold
// (cyclic input to a forest routine, disconnected input to subdivision, ...).
class precondition_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
   public:
    parse_error(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}
    // Throws graph_error on self-loops, out-of-range endpoints or repeated edges.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return m_; }
    const vertex_list &neighbours(vertex v) const { return adj_.at(v); }
    std::size_t degree(vertex v) const { return adj_.at(v).size(); }
    bool adjacent(vertex u, vertex w) const;
    // All edges with u < w in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph &, const Graph &) = default;

   private:
    std::vector<vertex_list> adj_;
    std::size_t m_ = 0;
};

// Where each vertex of a derived graph came from.
struct VertexOrigin {
    bool inserted = false;  // true for vertices placed on an edge by subdivision
    vertex source = 0;      // source vertex when !inserted
    Edge edge{};            // subdivided source edge when inserted

    friend bool operator==(const VertexOrigin &, const VertexOrigin &) = default;
};

struct VertexProvenance {
    std::vector<VertexOrigin> origin;

    std::size_t size() const { return origin.size(); }
    // Source vertex of a non-inserted derived vertex.
    vertex source_of(vertex derived) const;
};

struct BipartiteDecomposition {
    vertex_list v1;
    vertex_list v2;
    IntMatrix s;  // |V1| x |V2|, s(i, j) = 1 iff v1[i] ~ v2[j]
};

// Edge-list text: header "n m", then m lines "u w"; '#' starts a comment line.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph &g);
Graph read_edge_list_file(const std::filesystem::path &path);
void write_edge_list_file(const Graph &g, const std::filesystem::path &path);

std::pair<Graph, VertexProvenance> induced_subgraph(const Graph &g, std::span<const vertex> keep);
std::pair<Graph, VertexProvenance> delete_vertex(const Graph &g, vertex v);
std::pair<Graph, VertexProvenance> delete_vertices(const Graph &g, std::span<const vertex> remove);
Graph add_edge(const Graph &g, vertex u, vertex w);
Graph delete_edge(const Graph &g, vertex u, vertex w);
std::pair<Graph, VertexProvenance> subdivision(const Graph &g);

std::optional<BipartiteDecomposition> is_bipartite(const Graph &g);
bool is_connected(const Graph &g);
bool is_forest(const Graph &g);
bool is_tree(const Graph &g);
// The unique cycle starting at its minimum vertex, heading to its smaller cycle neighbour.
std::optional<vertex_list> is_unicyclic(const Graph &g);
bool is_independent(const Graph &g, std::span<const vertex> set);
std::vector<vertex_list> connected_components(const Graph &g);

IntMatrix adjacency_matrix(const Graph &g);
// n x m vertex-edge incidence matrix, columns in lexicographic edge order.
IntMatrix incidence_matrix(const Graph &g);

// Deterministic 64-bit stream (splitmix64).
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform in [0, bound) without modulo bias.
    std::uint64_t below(std::uint64_t bound);

   private:
    std::uint64_t state_;
};

Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_star(std::size_t n);  // K_{1,n-1}, centre 0
Graph gen_complete(std::size_t n);
Graph gen_random_tree(std::size_t n, std::uint64_t seed);
Graph gen_random_graph(std::size_t n, std::uint64_t p_numerator, std::uint64_t p_denominator, std::uint64_t seed);
// Bipartite graph with parts {0..n1-1} and {n1..n1+n2-1}.
Graph gen_random_bipartite(std::size_t n1, std::size_t n2, std::uint64_t p_numerator,
                           std::uint64_t p_denominator, std::uint64_t seed);
// Random tree on n >= 3 vertices plus one random extra edge.
Graph gen_random_unicyclic(std::size_t n, std::uint64_t seed);
Graph prufer_decode(std::span<const vertex> sequence);

// Undirected DOT; when `parts` is non-empty each vertex gets a "part" attribute.
std::string to_dot(const Graph &g, std::span<const std::string> parts = {});

}  // namespace nullcore
