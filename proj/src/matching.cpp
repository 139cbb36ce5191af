#include "mcsolve/matching.hpp"

#include "mcsolve/errors.hpp"

#include <algorithm>
#include <limits>

namespace mcs {

MatchingInstance::MatchingInstance(int left_size, int right_size)
    : left(left_size)
    , right(right_size)
    , weight(static_cast<size_t>(left_size), std::vector<long long>(static_cast<size_t>(right_size), -1))
    , required_left(static_cast<size_t>(left_size), 0)
    , required_right(static_cast<size_t>(right_size), 0)
{
}

void MatchingInstance::add_edge(int l, int r, long long w)
{
    if (l < 0 || l >= left || r < 0 || r >= right || w < 0)
        throw ContractError("matching edge out of range or negative");
    weight[l][r] = w;
}

namespace {

    // Minimum-cost perfect assignment on a square matrix (rows -> columns).
    std::vector<int> hungarian(const std::vector<std::vector<long long>>& cost)
    {
        const int n = static_cast<int>(cost.size());
        const long long inf = std::numeric_limits<long long>::max() / 4;
        std::vector<long long> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
        std::vector<int> p(n + 1, 0), way(n + 1, 0);
        std::vector<char> used(n + 1);
        for (int i = 1; i <= n; ++i) {
            p[0] = i;
            int j0 = 0;
            std::fill(minv.begin(), minv.end(), inf);
            std::fill(used.begin(), used.end(), 0);
            do {
                used[j0] = 1;
                int i0 = p[j0], j1 = 0;
                long long delta = inf;
                for (int j = 1; j <= n; ++j) {
                    if (used[j])
                        continue;
                    long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if (cur < minv[j]) {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if (minv[j] < delta) {
                        delta = minv[j];
                        j1 = j;
                    }
                }
                for (int j = 0; j <= n; ++j) {
                    if (used[j]) {
                        u[p[j]] += delta;
                        v[j] -= delta;
                    } else {
                        minv[j] -= delta;
                    }
                }
                j0 = j1;
            } while (p[j0] != 0);
            do {
                int j1 = way[j0];
                p[j0] = p[j1];
                j0 = j1;
            } while (j0);
        }
        std::vector<int> row_to_col(n, -1);
        for (int j = 1; j <= n; ++j)
            if (p[j] > 0)
                row_to_col[p[j] - 1] = j - 1;
        return row_to_col;
    }

} // namespace

MatchingResult max_weight_matching_covering(const MatchingInstance& inst)
{
    long long total = 1;
    for (const auto& row : inst.weight)
        for (long long w : row)
            if (w > 0)
                total += w;
    const long long shift = total;

    const int n = std::max(inst.left, inst.right);
    std::vector<std::vector<long long>> cost(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (int l = 0; l < inst.left; ++l)
        for (int r = 0; r < inst.right; ++r) {
            if (!inst.has_edge(l, r))
                continue;
            long long w = inst.weight[l][r];
            w += shift * (inst.required_left[l] + inst.required_right[r]);
            cost[l][r] = -w;
        }

    MatchingResult res;
    if (n > 0) {
        auto assign = hungarian(cost);
        for (int l = 0; l < inst.left; ++l) {
            int r = assign[l];
            if (r >= 0 && r < inst.right && inst.has_edge(l, r)) {
                res.pairs.emplace_back(l, r);
                res.weight += inst.weight[l][r];
            }
        }
    }
    std::vector<char> hit_l(static_cast<size_t>(inst.left), 0), hit_r(static_cast<size_t>(inst.right), 0);
    for (auto [l, r] : res.pairs) {
        hit_l[l] = 1;
        hit_r[r] = 1;
    }
    res.feasible = true;
    for (int l = 0; l < inst.left; ++l)
        if (inst.required_left[l] && !hit_l[l])
            res.feasible = false;
    for (int r = 0; r < inst.right; ++r)
        if (inst.required_right[r] && !hit_r[r])
            res.feasible = false;
    if (!res.feasible) {
        res.pairs.clear();
        res.weight = 0;
    }
    return res;
}

} // namespace mcs
