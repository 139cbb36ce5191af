#pragma once

#include "mcsolve/certificate.hpp"
#include "mcsolve/graph.hpp"

#include <optional>
#include <vector>

namespace mcs {

inline constexpr int kDefaultMcisOracleCap = 10;
inline constexpr int kDefaultMcsOracleCap = 12;

/// Lexicographically least injection V(H) -> V(G) witnessing (induced)
/// subgraph isomorphism, or nullopt.
std::optional<std::vector<int>> embed(const Graph& h, const Graph& g, Mode mode);

/// Exhaustive MCIS over vertex subsets of the smaller graph.
/// Throws ResourceError when that graph has more than `cap` vertices.
EmbeddingCertificate mcis_oracle(const Graph& g1, const Graph& g2, int cap = kDefaultMcisOracleCap);

/// Exhaustive MCS over edge subsets of the graph with fewer edges.
/// Throws ResourceError when that graph has more than `cap` edges.
EmbeddingCertificate mcs_oracle(const Graph& g1, const Graph& g2, int cap = kDefaultMcsOracleCap);

} // namespace mcs
