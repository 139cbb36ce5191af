#pragma once

#include "mcsolve/graph.hpp"

#include <vector>

namespace mcs {

struct SpanningTree
{
    std::vector<int> parent; ///< parent[root] == -1
    int root = -1;

    std::vector<int> leaves() const;
    int leaf_count() const { return static_cast<int>(leaves().size()); }
    /// The tree as a graph on the same vertex set.
    Graph as_graph() const;
};

bool is_spanning_tree_of(const Graph& g, const SpanningTree& t);

/// One admissible operation of the tree-growth procedure.
struct ExpansionStep
{
    enum class Kind { Case1, Case2a, Case2b, Case3 };
    Kind kind;
    int leaf;            ///< leaf x that was expanded
    int delta_leaves;    ///< change in leaves
    int delta_dead;      ///< change in dead leaves (no neighbours outside T)
    int delta_vertices;  ///< change in tree size

    bool satisfies_augmentation() const { return 3 * delta_leaves + delta_dead >= delta_vertices; }
};

struct LeafyTreeResult
{
    SpanningTree tree;
    int initial_center = -1;
    std::vector<ExpansionStep> steps;
};

/// Grows a spanning tree by expansions from a star. Requires g connected,
/// at least two vertices and no degree-2 vertex (see reduce_degree2).
/// The result satisfies |V| <= 4L - 6.
LeafyTreeResult leafy_spanning_tree(const Graph& g);

/// Repeatedly contracts a bridge at a separating degree-2 vertex or deletes
/// one edge at a non-separating one, until no degree-2 vertex remains.
/// The number of non-degree-2 vertices never drops and ml never grows.
Graph reduce_degree2(const Graph& g);

} // namespace mcs
