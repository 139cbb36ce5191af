#include "mcsolve/trails.hpp"

#include "mcsolve/errors.hpp"

#include <algorithm>
#include <set>

namespace mcs {

TrailDecomposition degree2_trails(const Graph& g)
{
    const int n = g.order();
    TrailDecomposition d;
    d.trail_of_vertex.assign(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n) * n, 0);
    auto mark = [&](int u, int v) {
        used[static_cast<size_t>(u) * n + v] = 1;
        used[static_cast<size_t>(v) * n + u] = 1;
    };
    auto is_used = [&](int u, int v) { return used[static_cast<size_t>(u) * n + v] != 0; };
    auto other = [&](int cur, int prev) {
        const auto& nb = g.neighbors(cur);
        return nb[0] == prev ? nb[1] : nb[0];
    };

    for (int x = 0; x < n; ++x)
        if (g.degree(x) != 2)
            d.branch.push_back(x);

    for (int x : d.branch) {
        for (int w : g.neighbors(x)) {
            if (is_used(x, w))
                continue;
            Trail t{TrailKind::Path, {x, w}};
            mark(x, w);
            int prev = x, cur = w;
            while (g.degree(cur) == 2) {
                int next = other(cur, prev);
                mark(cur, next);
                t.vertices.push_back(next);
                prev = cur;
                cur = next;
            }
            if (t.front() == t.back())
                t.kind = TrailKind::Cycle;
            const int id = d.count();
            for (int v : t.interior())
                d.trail_of_vertex[v] = id;
            d.trails.push_back(std::move(t));
        }
    }

    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2 || d.trail_of_vertex[v] >= 0)
            continue;
        Trail t{TrailKind::IsolatedCycle, {v}};
        int prev = v, cur = g.neighbors(v)[0];
        t.vertices.push_back(cur);
        while (cur != v) {
            int next = other(cur, prev);
            t.vertices.push_back(next);
            prev = cur;
            cur = next;
        }
        const int id = d.count();
        for (size_t i = 0; i + 1 < t.vertices.size(); ++i)
            d.trail_of_vertex[t.vertices[i]] = id;
        d.trails.push_back(std::move(t));
    }
    return d;
}

int MultiSkeleton::degree(int v) const
{
    int deg = 0;
    for (auto [a, b] : edges)
        deg += (a == v) + (b == v);
    return deg;
}

bool MultiSkeleton::isolated_loop_carrier(int v) const
{
    int loops = 0, others = 0;
    for (auto [a, b] : edges) {
        if (a == v && b == v)
            ++loops;
        else if (a == v || b == v)
            ++others;
    }
    return loops == 1 && others == 0;
}

bool MultiSkeleton::is_simple() const
{
    std::set<Edge> seen;
    for (auto e : edges) {
        if (e.first == e.second || !seen.insert(e).second)
            return false;
    }
    return true;
}

Graph MultiSkeleton::to_graph() const
{
    if (!is_simple())
        throw ContractError("skeleton has loops or parallel edges");
    Graph g(n);
    for (auto [a, b] : edges)
        g.add_edge(a, b);
    return g;
}

MultiSkeleton smoothing(const Graph& g)
{
    auto d = degree2_trails(g);
    MultiSkeleton s;
    std::vector<int> index(static_cast<size_t>(g.order()), -1);
    for (int x : d.branch) {
        index[x] = s.n++;
        s.origin.push_back(x);
    }
    for (const auto& t : d.trails) {
        if (t.kind == TrailKind::IsolatedCycle) {
            index[t.front()] = s.n++;
            s.origin.push_back(t.front());
        }
        int a = index[t.front()], b = index[t.back()];
        s.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return s;
}

} // namespace mcs
