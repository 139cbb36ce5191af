#include "mcsolve/parameters.hpp"

#include "mcsolve/spanning.hpp"
#include "mcsolve/twins.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>

namespace mcs {

bool is_cluster_graph(const Graph& g)
{
    for (const auto& comp : g.components())
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (!g.adjacent(comp[i], comp[j]))
                    return false;
    return true;
}

bool is_twin_cover(const Graph& g, const std::vector<int>& cover)
{
    std::vector<char> in(static_cast<size_t>(g.order()), 0);
    for (int v : cover)
        in[v] = 1;
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v] && !are_twins(g, u, v))
            return false;
    return true;
}

namespace {

    // Vertex cover of `edges` with at most k vertices, branching on the
    // first uncovered edge, lower endpoint first.
    bool bounded_vertex_cover(const std::vector<Edge>& edges, std::vector<char>& taken, int k, std::vector<int>& chosen)
    {
        const Edge* open = nullptr;
        for (const auto& e : edges)
            if (!taken[e.first] && !taken[e.second]) {
                open = &e;
                break;
            }
        if (!open)
            return true;
        if (k == 0)
            return false;
        for (int v : {open->first, open->second}) {
            taken[v] = 1;
            chosen.push_back(v);
            if (bounded_vertex_cover(edges, taken, k - 1, chosen))
                return true;
            chosen.pop_back();
            taken[v] = 0;
        }
        return false;
    }

    bool find_induced_p3(const Graph& g, const std::vector<char>& removed, int& a, int& center, int& b)
    {
        for (int v = 0; v < g.order(); ++v) {
            if (removed[v])
                continue;
            const auto& nb = g.neighbors(v);
            for (size_t i = 0; i < nb.size(); ++i) {
                if (removed[nb[i]])
                    continue;
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    if (removed[nb[j]] || g.adjacent(nb[i], nb[j]))
                        continue;
                    a = nb[i];
                    center = v;
                    b = nb[j];
                    return true;
                }
            }
        }
        return false;
    }

    bool bounded_cluster_deletion(const Graph& g, std::vector<char>& removed, int k, std::vector<int>& chosen)
    {
        int a, c, b;
        if (!find_induced_p3(g, removed, a, c, b))
            return true;
        if (k == 0)
            return false;
        std::array<int, 3> options{a, c, b};
        std::sort(options.begin(), options.end());
        for (int v : options) {
            removed[v] = 1;
            chosen.push_back(v);
            if (bounded_cluster_deletion(g, removed, k - 1, chosen))
                return true;
            chosen.pop_back();
            removed[v] = 0;
        }
        return false;
    }

    // n - (minimum connected dominating set) for a connected graph with n >= 3.
    int component_max_leaf(const Graph& c)
    {
        const int n = c.order();
        std::vector<uint32_t> closed(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            closed[v] = 1u << v;
            for (int w : c.neighbors(v))
                closed[v] |= 1u << w;
        }
        const uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
        auto connected_set = [&](uint32_t s) {
            uint32_t reached = s & (~s + 1);
            for (;;) {
                uint32_t grow = reached;
                for (uint32_t r = reached; r; r &= r - 1)
                    grow |= closed[std::countr_zero(r)] & s;
                if (grow == reached)
                    break;
                reached = grow;
            }
            return reached == s;
        };
        for (int k = 1; k <= n; ++k) {
            // Gosper's hack over k-subsets.
            uint32_t s = (1u << k) - 1;
            while (s <= all && s != 0) {
                uint32_t dom = 0;
                for (uint32_t r = s; r; r &= r - 1)
                    dom |= closed[std::countr_zero(r)];
                if (dom == all && connected_set(s))
                    return n - k;
                uint32_t low = s & (~s + 1);
                uint32_t ripple = s + low;
                if (ripple == 0 || ripple > all)
                    break;
                s = (((ripple ^ s) >> 2) / low) | ripple;
            }
        }
        return 1;
    }

    int component_lower_bound(const Graph& c)
    {
        if (c.order() <= 2)
            return c.order();
        Graph reduced = reduce_degree2(c);
        int best = std::max(2, c.max_degree());
        if (reduced.order() >= 2)
            best = std::max(best, leafy_spanning_tree(reduced).tree.leaf_count());
        return best;
    }

} // namespace

std::optional<std::vector<int>> twin_cover_within(const Graph& g, int k)
{
    std::vector<Edge> non_twin;
    for (auto [u, v] : g.edges())
        if (!are_twins(g, u, v))
            non_twin.emplace_back(u, v);
    for (int b = 0; b <= k; ++b) {
        std::vector<char> taken(static_cast<size_t>(g.order()), 0);
        std::vector<int> chosen;
        if (bounded_vertex_cover(non_twin, taken, b, chosen)) {
            std::sort(chosen.begin(), chosen.end());
            return chosen;
        }
    }
    return std::nullopt;
}

std::vector<int> minimum_twin_cover(const Graph& g)
{
    return *twin_cover_within(g, g.order());
}

std::vector<int> minimum_cluster_deletion(const Graph& g)
{
    for (int k = 0;; ++k) {
        std::vector<char> removed(static_cast<size_t>(g.order()), 0);
        std::vector<int> chosen;
        if (bounded_cluster_deletion(g, removed, k, chosen)) {
            std::sort(chosen.begin(), chosen.end());
            return chosen;
        }
    }
}

int max_leaf_number(const Graph& g, int component_cap)
{
    int total = 0;
    for (const auto& comp : g.components()) {
        Graph c = induced_subgraph(g, comp);
        if (c.order() <= 2) {
            total += c.order();
            continue;
        }
        if (c.order() > component_cap || c.order() > 31)
            throw MaxLeafInfeasible("exact ml infeasible: component with " + std::to_string(c.order())
                    + " vertices exceeds cap " + std::to_string(component_cap),
                max_leaf_lower_bound(g));
        total += component_max_leaf(c);
    }
    return total;
}

int max_leaf_lower_bound(const Graph& g)
{
    int total = 0;
    for (const auto& comp : g.components())
        total += component_lower_bound(induced_subgraph(g, comp));
    return total;
}

std::vector<int> non_degree2_vertices(const Graph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            out.push_back(v);
    return out;
}

} // namespace mcs
