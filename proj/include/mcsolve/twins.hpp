#pragma once

#include "mcsolve/graph.hpp"

#include <vector>

namespace mcs {

/// Twin classes of a graph. Classes are ordered by their smallest vertex and
/// each class lists its vertices in increasing order.
struct TwinClassPartition
{
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;           ///< vertex -> class index
    std::vector<char> clique;            ///< class has internal edges (singletons are not cliques)
    std::vector<std::vector<char>> full; ///< full[a][b]: classes a != b are completely joined

    int count() const noexcept { return static_cast<int>(classes.size()); }

    /// Ordered pair (a, b) is an adjacent pair: a == b and a is a clique, or a != b and full.
    bool adjacent_pair(int a, int b) const { return a == b ? clique[a] != 0 : full[a][b] != 0; }
};

/// N(u) \ {v} == N(v) \ {u}
bool are_twins(const Graph& g, int u, int v);

TwinClassPartition twin_classes(const Graph& g);

int neighborhood_diversity(const Graph& g);

/// Deletes the highest-index vertices of each twin class until every class has
/// at most `cap` vertices. Returns the induced subgraph and the kept vertices.
std::pair<Graph, std::vector<int>> truncate_twin_classes(const Graph& g, int cap);

} // namespace mcs
