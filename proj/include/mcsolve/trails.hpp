#pragma once

#include "mcsolve/graph.hpp"

#include <vector>

namespace mcs {

enum class TrailKind {
    Path,          ///< two distinct non-degree-2 endpoints
    Cycle,         ///< closed, both ends at the same non-degree-2 vertex
    IsolatedCycle  ///< a cycle component, anchored at its lowest vertex
};

struct Trail
{
    TrailKind kind;
    /// Walk from one end to the other; for cycles front() == back().
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
    /// Vertices strictly between the two ends.
    std::vector<int> interior() const { return {vertices.begin() + 1, vertices.end() - 1}; }
};

/// Maximal degree-2 trails. Non-degree-2 vertices are scanned in increasing
/// order and their incident edges in increasing neighbour order; isolated
/// cycles come last.
struct TrailDecomposition
{
    std::vector<Trail> trails;
    std::vector<int> branch;          ///< non-degree-2 vertices, increasing
    std::vector<int> trail_of_vertex; ///< degree-2 vertex -> trail, else -1

    int count() const noexcept { return static_cast<int>(trails.size()); }
};

TrailDecomposition degree2_trails(const Graph& g);

/// Undirected multigraph with loops. Edge i is the collapse of trail i.
struct MultiSkeleton
{
    int n = 0;
    std::vector<Edge> edges;          ///< (u, v) with u <= v; loops have u == v
    std::vector<int> origin;          ///< skeleton vertex -> original vertex

    int degree(int v) const;
    /// A vertex whose only incident edge is one loop.
    bool isolated_loop_carrier(int v) const;
    /// Simple-graph view; only valid when there are no loops or parallel edges.
    bool is_simple() const;
    Graph to_graph() const;
};

/// Collapses every maximal degree-2 trail into one edge (a loop for cycles).
MultiSkeleton smoothing(const Graph& g);

} // namespace mcs
