#pragma once

#include <utility>
#include <vector>

namespace mcs {

/// Bipartite graph with non-negative integer weights and required vertices.
struct MatchingInstance
{
    int left = 0;
    int right = 0;
    std::vector<std::vector<long long>> weight; ///< weight[l][r], -1 when there is no edge
    std::vector<char> required_left;
    std::vector<char> required_right;

    MatchingInstance() = default;
    MatchingInstance(int left_size, int right_size);

    void add_edge(int l, int r, long long w);
    bool has_edge(int l, int r) const { return weight[l][r] >= 0; }
    void require_left(int l) { required_left[l] = 1; }
    void require_right(int r) { required_right[r] = 1; }
};

struct MatchingResult
{
    bool feasible = false;
    long long weight = 0;                  ///< original (unshifted) weight
    std::vector<std::pair<int, int>> pairs; ///< (left, right), sorted by left
};

/// Maximum-weight matching among those covering every required vertex.
/// feasible == false when no such matching exists.
MatchingResult max_weight_matching_covering(const MatchingInstance& inst);

} // namespace mcs
