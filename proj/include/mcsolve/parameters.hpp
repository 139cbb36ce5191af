#pragma once

#include "mcsolve/errors.hpp"
#include "mcsolve/graph.hpp"

#include <optional>
#include <vector>

namespace mcs {

/// Every component is a complete graph.
bool is_cluster_graph(const Graph& g);

/// `cover` hits every non-twin edge of g.
bool is_twin_cover(const Graph& g, const std::vector<int>& cover);

/// Minimum vertex set hitting every non-twin edge (sorted). Lowest-index
/// solution among those found by iterative deepening.
std::vector<int> minimum_twin_cover(const Graph& g);

/// Minimum twin cover if its size is at most k.
std::optional<std::vector<int>> twin_cover_within(const Graph& g, int k);

/// Minimum vertex set whose removal leaves a disjoint union of cliques.
std::vector<int> minimum_cluster_deletion(const Graph& g);

/// Thrown when a component is too large for the exact max-leaf search.
class MaxLeafInfeasible : public ResourceError
{
public:
    MaxLeafInfeasible(const std::string& what, int lower_bound)
        : ResourceError(what), lower_bound_(lower_bound)
    {
    }
    int lower_bound() const noexcept { return lower_bound_; }

private:
    int lower_bound_;
};

inline constexpr int kDefaultMaxLeafCap = 16;

/// Sum over components of the maximum number of leaves of a spanning tree.
/// Isolated vertices contribute 1, an edge component contributes 2.
int max_leaf_number(const Graph& g, int component_cap = kDefaultMaxLeafCap);

/// Lower bound on ml(g) that never needs exponential work.
int max_leaf_lower_bound(const Graph& g);

/// Vertices whose degree is not 2.
std::vector<int> non_degree2_vertices(const Graph& g);

} // namespace mcs
