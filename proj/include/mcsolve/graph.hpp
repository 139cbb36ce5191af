#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcs {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; }

    bool adjacent(int u, int v) const { return matrix_[static_cast<size_t>(u) * n_ + v] != 0; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    /// Throws ContractError on loops, duplicates or out-of-range endpoints.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int add_vertex();

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Connected components, each sorted, ordered by smallest vertex.
    std::vector<std::vector<int>> components() const;
    bool connected() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.matrix_ == b.matrix_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<char> matrix_;
};

/// Induced subgraph on `vertices`; new vertex i is original vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Induced subgraph on the complement of `removed`, plus the kept vertices in
/// increasing order (new index -> original index).
std::pair<Graph, std::vector<int>> remove_vertices(const Graph& g, std::span<const int> removed);

/// Disjoint union; the vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Edge-list text: header "n m" then one "u v" line per edge.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// Small named families used by tests, generators and the CLI.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);
/// Replaces every edge by a path with `factor` edges.
Graph subdivide(const Graph& g, int factor);

} // namespace mcs
