#include "nullcore/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace nullcore {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (const auto &e : edges) {
        if (e.u >= n || e.w >= n) throw graph_error("edge endpoint out of range");
        if (e.u == e.w) throw graph_error("self-loop at vertex " + std::to_string(e.u));
        adj_[e.u].push_back(e.w);
        adj_[e.w].push_back(e.u);
    }
    for (auto &nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) throw graph_error("repeated edge");
    }
    m_ = edges.size();
}

bool Graph::adjacent(vertex u, vertex w) const {
    const auto &nu = adj_.at(u);
    return std::binary_search(nu.begin(), nu.end(), w);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (vertex u = 0; u < adj_.size(); ++u)
        for (vertex w : adj_[u])
            if (u < w) out.push_back({u, w});
    return out;
}

vertex VertexProvenance::source_of(vertex derived) const {
    const auto &o = origin.at(derived);
    if (o.inserted) throw graph_error("vertex " + std::to_string(derived) + " was inserted on an edge");
    return o.source;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Parses exactly two non-negative integers separated by whitespace.
std::optional<std::pair<std::size_t, std::size_t>> parse_pair(std::string_view line) {
    std::size_t values[2];
    const char *p = line.data();
    const char *end = line.data() + line.size();
    for (auto &value : values) {
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || next == p) return std::nullopt;
        p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end) return std::nullopt;
    return std::pair{values[0], values[1]};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto pair = parse_pair(line);
        if (!header) {
            if (!pair) throw parse_error(line_no, "malformed header, expected \"n m\"");
            header = pair;
            header_line = line_no;
            continue;
        }
        if (!pair) throw parse_error(line_no, "malformed edge line, expected \"u w\"");
        const auto [n, m] = *header;
        if (edges.size() == m) throw parse_error(line_no, "more edge lines than declared m = " + std::to_string(m));
        const auto [u, w] = *pair;
        if (u >= n || w >= n) throw parse_error(line_no, "vertex index out of range for n = " + std::to_string(n));
        if (u == w) throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
        const Edge e = Edge::normalized(u, w);
        if (!seen.insert(e).second) throw parse_error(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.w));
        edges.push_back(e);
    }
    if (!header) throw parse_error(line_no, "missing header \"n m\"");
    if (edges.size() != header->second) {
        throw parse_error(header_line, "header declares " + std::to_string(header->second) + " edges but " +
                                           std::to_string(edges.size()) + " were given");
    }
    return Graph(header->first, edges);
}

std::string serialize_edge_list(const Graph &g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const auto &e : g.edges()) os << e.u << ' ' << e.w << '\n';
    return os.str();
}

Graph read_edge_list_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph &g, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_edge_list(g);
}

std::pair<Graph, VertexProvenance> induced_subgraph(const Graph &g, std::span<const vertex> keep) {
    vertex_list kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    constexpr vertex absent = static_cast<vertex>(-1);
    std::vector<vertex> relabel(g.order(), absent);
    VertexProvenance prov;
    for (vertex i = 0; i < kept.size(); ++i) {
        if (kept[i] >= g.order()) throw graph_error("vertex " + std::to_string(kept[i]) + " out of range");
        relabel[kept[i]] = i;
        prov.origin.push_back({false, kept[i], {}});
    }
    std::vector<Edge> edges;
    for (const auto &e : g.edges())
        if (relabel[e.u] != absent && relabel[e.w] != absent) edges.push_back({relabel[e.u], relabel[e.w]});
    return {Graph(kept.size(), edges), std::move(prov)};
}

std::pair<Graph, VertexProvenance> delete_vertices(const Graph &g, std::span<const vertex> remove) {
    std::vector<bool> gone(g.order(), false);
    for (vertex v : remove) {
        if (v >= g.order()) throw graph_error("vertex " + std::to_string(v) + " out of range");
        gone[v] = true;
    }
    vertex_list keep;
    for (vertex v = 0; v < g.order(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::pair<Graph, VertexProvenance> delete_vertex(const Graph &g, vertex v) {
    const vertex one[] = {v};
    return delete_vertices(g, one);
}

Graph add_edge(const Graph &g, vertex u, vertex w) {
    if (u >= g.order() || w >= g.order()) throw graph_error("add_edge: vertex out of range");
    if (u == w) throw graph_error("add_edge: u = w");
    if (g.adjacent(u, w)) throw graph_error("add_edge: edge {" + std::to_string(u) + "," + std::to_string(w) + "} exists");
    auto edges = g.edges();
    edges.push_back(Edge::normalized(u, w));
    return Graph(g.order(), edges);
}

Graph delete_edge(const Graph &g, vertex u, vertex w) {
    if (u >= g.order() || w >= g.order()) throw graph_error("delete_edge: vertex out of range");
    if (u == w) throw graph_error("delete_edge: u = w");
    if (!g.adjacent(u, w)) {
        throw graph_error("delete_edge: edge {" + std::to_string(u) + "," + std::to_string(w) + "} missing");
    }
    auto edges = g.edges();
    std::erase(edges, Edge::normalized(u, w));
    return Graph(g.order(), edges);
}

std::pair<Graph, VertexProvenance> subdivision(const Graph &g) {
    if (!is_connected(g)) throw precondition_error("subdivision: graph is not connected");
    const std::size_t n = g.order();
    const auto old_edges = g.edges();
    VertexProvenance prov;
    for (vertex v = 0; v < n; ++v) prov.origin.push_back({false, v, {}});
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < old_edges.size(); ++k) {
        const vertex mid = n + k;
        edges.push_back({old_edges[k].u, mid});
        edges.push_back({old_edges[k].w, mid});
        prov.origin.push_back({true, 0, old_edges[k]});
    }
    return {Graph(n + old_edges.size(), edges), std::move(prov)};
}

std::vector<vertex_list> connected_components(const Graph &g) {
    std::vector<vertex_list> comps;
    std::vector<bool> seen(g.order(), false);
    for (vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        vertex_list comp;
        std::queue<vertex> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            const vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (vertex w : g.neighbours(v))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph &g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph &g) { return g.size() + connected_components(g).size() == g.order(); }

bool is_tree(const Graph &g) { return g.order() >= 1 && is_connected(g) && g.size() + 1 == g.order(); }

std::optional<vertex_list> is_unicyclic(const Graph &g) {
    if (g.order() == 0 || g.size() != g.order() || !is_connected(g)) return std::nullopt;
    // Peel leaves; what survives is the cycle.
    std::vector<std::size_t> deg(g.order());
    std::vector<bool> removed(g.order(), false);
    std::queue<vertex> leaves;
    for (vertex v = 0; v < g.order(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) leaves.push(v);
    }
    while (!leaves.empty()) {
        const vertex v = leaves.front();
        leaves.pop();
        removed[v] = true;
        for (vertex w : g.neighbours(v))
            if (!removed[w] && --deg[w] == 1) leaves.push(w);
    }
    vertex start = g.order();
    for (vertex v = 0; v < g.order(); ++v)
        if (!removed[v]) {
            start = v;
            break;
        }
    vertex_list cycle{start};
    vertex prev = start;
    vertex cur = start;
    while (true) {
        vertex next = g.order();
        for (vertex w : g.neighbours(cur))
            if (!removed[w] && w != prev) {
                next = w;
                break;  // neighbours are sorted, so the first choice at `start` is the smaller one
            }
        if (next == start || next == g.order()) break;
        cycle.push_back(next);
        prev = cur;
        cur = next;
        if (cycle.size() > g.order()) break;
    }
    return cycle;
}

bool is_independent(const Graph &g, std::span<const vertex> set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j])) return false;
    return true;
}

std::optional<BipartiteDecomposition> is_bipartite(const Graph &g) {
    std::vector<int> colour(g.order(), -1);
    for (vertex s = 0; s < g.order(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<vertex> q;
        q.push(s);
        while (!q.empty()) {
            const vertex v = q.front();
            q.pop();
            for (vertex w : g.neighbours(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    q.push(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    BipartiteDecomposition d;
    for (vertex v = 0; v < g.order(); ++v) (colour[v] == 0 ? d.v1 : d.v2).push_back(v);
    d.s = IntMatrix(d.v1.size(), d.v2.size());
    for (std::size_t j = 0; j < d.v2.size(); ++j)
        for (std::size_t i = 0; i < d.v1.size(); ++i)
            if (g.adjacent(d.v1[i], d.v2[j])) d.s(i, j) = 1;
    return d;
}

IntMatrix adjacency_matrix(const Graph &g) {
    IntMatrix a(g.order(), g.order());
    for (vertex v = 0; v < g.order(); ++v)
        for (vertex w : g.neighbours(v)) a(v, w) = 1;
    return a;
}

IntMatrix incidence_matrix(const Graph &g) {
    const auto edges = g.edges();
    IntMatrix b(g.order(), edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        b(edges[k].u, k) = 1;
        b(edges[k].w, k) = 1;
    }
    return b;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound is zero");
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

namespace {

void require_positive(std::size_t n, const char *who) {
    if (n == 0) throw graph_error(std::string(who) + ": n must be at least 1");
}

Graph random_tree(std::size_t n, SplitMix64 &rng) {
    if (n <= 2) return gen_path(n);
    vertex_list seq(n - 2);
    for (auto &s : seq) s = rng.below(n);
    return prufer_decode(seq);
}

}  // namespace

Graph prufer_decode(std::span<const vertex> sequence) {
    const std::size_t n = sequence.size() + 2;
    std::vector<std::size_t> deg(n, 1);
    for (vertex s : sequence) {
        if (s >= n) throw graph_error("prufer_decode: label out of range");
        ++deg[s];
    }
    std::priority_queue<vertex, std::vector<vertex>, std::greater<>> leaves;
    for (vertex v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    std::vector<Edge> edges;
    for (vertex s : sequence) {
        const vertex leaf = leaves.top();
        leaves.pop();
        edges.push_back(Edge::normalized(leaf, s));
        if (--deg[s] == 1) leaves.push(s);
    }
    const vertex a = leaves.top();
    leaves.pop();
    const vertex b = leaves.top();
    edges.push_back(Edge::normalized(a, b));
    return Graph(n, edges);
}

Graph gen_path(std::size_t n) {
    require_positive(n, "gen_path");
    std::vector<Edge> edges;
    for (vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, edges);
}

Graph gen_cycle(std::size_t n) {
    if (n < 3) throw graph_error("gen_cycle: n must be at least 3");
    std::vector<Edge> edges;
    for (vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});
    return Graph(n, edges);
}

Graph gen_star(std::size_t n) {
    require_positive(n, "gen_star");
    std::vector<Edge> edges;
    for (vertex v = 1; v < n; ++v) edges.push_back({0, v});
    return Graph(n, edges);
}

Graph gen_complete(std::size_t n) {
    require_positive(n, "gen_complete");
    std::vector<Edge> edges;
    for (vertex u = 0; u < n; ++u)
        for (vertex w = u + 1; w < n; ++w) edges.push_back({u, w});
    return Graph(n, edges);
}

Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
    require_positive(n, "gen_random_tree");
    SplitMix64 rng(seed);
    return random_tree(n, rng);
}

Graph gen_random_graph(std::size_t n, std::uint64_t p_numerator, std::uint64_t p_denominator, std::uint64_t seed) {
    require_positive(n, "gen_random_graph");
    if (p_denominator == 0 || p_numerator > p_denominator) throw graph_error("gen_random_graph: invalid probability");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (vertex u = 0; u < n; ++u)
        for (vertex w = u + 1; w < n; ++w)
            if (rng.below(p_denominator) < p_numerator) edges.push_back({u, w});
    return Graph(n, edges);
}

Graph gen_random_bipartite(std::size_t n1, std::size_t n2, std::uint64_t p_numerator, std::uint64_t p_denominator,
                           std::uint64_t seed) {
    require_positive(n1 + n2, "gen_random_bipartite");
    if (p_denominator == 0 || p_numerator > p_denominator) throw graph_error("gen_random_bipartite: invalid probability");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (vertex u = 0; u < n1; ++u)
        for (vertex w = n1; w < n1 + n2; ++w)
            if (rng.below(p_denominator) < p_numerator) edges.push_back({u, w});
    return Graph(n1 + n2, edges);
}

Graph gen_random_unicyclic(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw graph_error("gen_random_unicyclic: n must be at least 3");
    SplitMix64 rng(seed);
    const Graph tree = random_tree(n, rng);
    std::vector<Edge> non_edges;
    for (vertex u = 0; u < n; ++u)
        for (vertex w = u + 1; w < n; ++w)
            if (!tree.adjacent(u, w)) non_edges.push_back({u, w});
    const Edge e = non_edges[rng.below(non_edges.size())];
    return add_edge(tree, e.u, e.w);
}

std::string to_dot(const Graph &g, std::span<const std::string> parts) {
    if (!parts.empty() && parts.size() != g.order()) throw graph_error("to_dot: one part label per vertex required");
    std::ostringstream os;
    os << "graph G {\n";
    for (vertex v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (!parts.empty()) os << " [part=\"" << parts[v] << "\"]";
        os << ";\n";
    }
    for (const auto &e : g.edges()) os << "  " << e.u << " -- " << e.w << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace nullcore
