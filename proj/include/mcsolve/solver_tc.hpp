#pragma once

#include "mcsolve/certificate.hpp"
#include "mcsolve/graph.hpp"

#include <utility>
#include <vector>

namespace mcs {

struct TcResult
{
    EmbeddingCertificate certificate;
    int budget = 0;          ///< largest cover-graph size that was tried
    int smallest_budget = 0; ///< smallest |T| among guesses reaching the optimum
    long long guesses = 0;   ///< accepted guesses that reached the matching phase
};

/// Exact MCIS by guessing the twin-cover part of a common induced subgraph
/// and matching the remaining cliques. `budget` < 0 means tc(G1) + tc(G2).
TcResult mcis_tc(const Graph& g1, const Graph& g2, int budget = -1);

/// Deletes y for every non-twin edge {x, y} with x in S \ T and y outside
/// S and T, until T is a twin cover of what is left. Returns the residual
/// graph and its kept vertices. Throws ContractError unless T is a twin
/// cover of G[S + T].
std::pair<Graph, std::vector<int>> prune_noncover(const Graph& g, const std::vector<int>& s, const std::vector<int>& t);

/// Exact MCIS of two disjoint unions of cliques by matching components.
EmbeddingCertificate mcis_cluster_graphs(const Graph& g1, const Graph& g2);

} // namespace mcs
