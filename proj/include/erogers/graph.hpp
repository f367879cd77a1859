#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <erogers/vertex_set.hpp>

namespace erogers {

using Edge = std::pair<int, int>;

// Simple undirected graph with one bit row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge> & edges);

    int order() const { return static_cast<int>(rows_.size()); }
    int size() const { return edge_count_; }

    bool adjacent(int u, int v) const { return rows_[u].contains(v); }
    const VertexSet & neighbours(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }
    int max_degree() const;
    int min_degree() const;

    // Adding an existing edge or a loop is rejected by returning false.
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);

    // Edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    Graph complement() const;

    bool operator==(const Graph & o) const { return rows_ == o.rows_; }

private:
    void check_vertex(int v) const;

    std::vector<VertexSet> rows_;
    int edge_count_ = 0;
};

// Graph on |s| vertices; vertex i is the i-th smallest member of s.
Graph induced_subgraph(const Graph & g, const VertexSet & s);
Graph induced_subgraph(const Graph & g, const std::vector<int> & vertices);

// Removes the given vertices, relabelling the rest in increasing order.
Graph delete_vertices(const Graph & g, const std::vector<int> & removed);

bool is_independent(const Graph & g, const VertexSet & s);
std::optional<std::array<int, 3>> find_triangle(const Graph & g);
// Some clique on exactly k vertices, sorted.
std::optional<std::vector<int>> find_clique(const Graph & g, int k);
bool is_connected(const Graph & g);
bool is_acyclic(const Graph & g);
bool is_biconnected(const Graph & g);
bool is_complete(const Graph & g);
// Two-colouring (0/1 per vertex) if bipartite.
std::optional<std::vector<int>> bipartition(const Graph & g);

// Graph text format: "n m" then m lines "u v", 0-based.
void write_graph(std::ostream & out, const Graph & g);
Graph read_graph(std::istream & in);
Graph load_graph(const std::string & path);
void save_graph(const std::string & path, const Graph & g);

namespace graphs {
    Graph empty(int n);
    Graph complete(int n);
    Graph cycle(int n);
    Graph path(int n);
    Graph complete_bipartite(int a, int b);
    Graph complete_multipartite(const std::vector<int> & parts);
    Graph petersen();
    Graph wagner();
    // Blowup: vertex v of f becomes an independent set of the given size.
    Graph blowup(const Graph & f, int part_size);
    // Named small patterns: K<n>, C<n>, P<n>, K<a>,<b>, petersen.
    std::optional<Graph> by_name(const std::string & name);
}

} // namespace erogers
