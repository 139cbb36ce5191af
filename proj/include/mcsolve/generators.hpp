#pragma once

#include "mcsolve/graph.hpp"

#include <random>
#include <vector>

namespace mcs {

using Rng = std::mt19937;

Graph gen_cluster(const std::vector<int>& sizes);
Graph gen_gnp(Rng& rng, int n, double p);

/// Random partition of n into paths (and cycles of length >= 3 when allowed).
Graph gen_path_forest(Rng& rng, int n);
Graph gen_cycle_forest(Rng& rng, int n);
Graph gen_path_cycle_forest(Rng& rng, int n);

/// Cluster graph on n - k vertices plus k cover vertices; every clique sees
/// a random subset of the cover, so tc <= k.
Graph gen_small_twin_cover(Rng& rng, int n, int k);

/// Cluster graph plus k vertices with arbitrary adjacency, so cvd <= k.
Graph gen_small_cluster_deletion(Rng& rng, int n, int k);

/// n vertices over `classes` twin-class templates, so nd <= classes.
Graph gen_bounded_nd(Rng& rng, int n, int classes);

/// Random cluster graph on n vertices with cliques of size <= max_clique.
Graph gen_random_cluster(Rng& rng, int n, int max_clique);

/// Vertex permutation, used to hide generator structure from solvers.
Graph shuffle_vertices(Rng& rng, const Graph& g);

/// Replaces every edge of `base` by a path of uniform random length in [1, max_length].
Graph gen_subdivision(Rng& rng, const Graph& base, int max_length);

} // namespace mcs
