#pragma once

#include "mcsolve/certificate.hpp"
#include "mcsolve/graph.hpp"
#include "mcsolve/twins.hpp"

#include <functional>
#include <vector>

namespace mcs {

inline constexpr long long kDefaultNdBranchCap = 10'000'000;
inline constexpr int kDefaultNdVariableCap = 64;

struct NdResult
{
    EmbeddingCertificate certificate;
    long long branches = 0; ///< assignments that survived both rejection rules
    long long nodes = 0;    ///< partial assignments explored (mcis) or ip nodes (mcs)
};

/// Per-cell branch state: 0 (empty), 1 (exactly one vertex), 2 (two or more).
/// Cells are indexed i * q + j for class i of G1 and class j of G2.
bool nd_assignment_admissible(const TwinClassPartition& t1, const TwinClassPartition& t2, const std::vector<int>& state);

/// Exact MCIS over twin-class intersection counts. `on_branch` sees the
/// materialized certificate of every surviving branch with a feasible ILP.
NdResult mcis_nd(const Graph& g1, const Graph& g2, long long branch_cap = kDefaultNdBranchCap,
    const std::function<void(const EmbeddingCertificate&)>& on_branch = {});

/// Exact MCS from a single integer quadratic program over the same cells.
NdResult mcs_nd(const Graph& g1, const Graph& g2, int variable_cap = kDefaultNdVariableCap);

} // namespace mcs
