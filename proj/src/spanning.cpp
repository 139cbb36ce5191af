#include "mcsolve/spanning.hpp"

#include "mcsolve/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcs {

std::vector<int> SpanningTree::leaves() const
{
    const int n = static_cast<int>(parent.size());
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        if (parent[v] >= 0) {
            ++deg[v];
            ++deg[parent[v]];
        }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1)
            out.push_back(v);
    return out;
}

Graph SpanningTree::as_graph() const
{
    Graph t(static_cast<int>(parent.size()));
    for (int v = 0; v < t.order(); ++v)
        if (parent[v] >= 0)
            t.add_edge(v, parent[v]);
    return t;
}

bool is_spanning_tree_of(const Graph& g, const SpanningTree& t)
{
    const int n = g.order();
    if (static_cast<int>(t.parent.size()) != n || n == 0)
        return n == 0 && t.parent.empty();
    int roots = 0;
    for (int v = 0; v < n; ++v) {
        int p = t.parent[v];
        if (p < 0) {
            ++roots;
            continue;
        }
        if (p >= n || !g.adjacent(v, p))
            return false;
    }
    if (roots != 1)
        return false;
    for (int v = 0; v < n; ++v) {
        int steps = 0, cur = v;
        while (t.parent[cur] >= 0) {
            cur = t.parent[cur];
            if (++steps > n)
                return false;
        }
    }
    return true;
}

LeafyTreeResult leafy_spanning_tree(const Graph& g)
{
    const int n = g.order();
    if (n < 2 || !g.connected())
        throw ContractError("leafy_spanning_tree needs a connected graph with at least two vertices");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2)
            throw ContractError("leafy_spanning_tree needs a graph without degree-2 vertices; apply reduce_degree2 first");

    LeafyTreeResult res;
    res.tree.parent.assign(static_cast<size_t>(n), -1);
    if (n == 2) {
        res.tree.root = 0;
        res.tree.parent[1] = 0;
        res.initial_center = 0;
        return res;
    }

    std::vector<char> in_tree(static_cast<size_t>(n), 0);
    std::vector<int> tree_degree(static_cast<size_t>(n), 0);
    int size = 0;

    auto out_degree = [&](int x) {
        int d = 0;
        for (int w : g.neighbors(x))
            d += !in_tree[w];
        return d;
    };
    auto expand = [&](int x) {
        for (int w : g.neighbors(x))
            if (!in_tree[w]) {
                in_tree[w] = 1;
                res.tree.parent[w] = x;
                ++tree_degree[w];
                ++tree_degree[x];
                ++size;
            }
    };
    struct Counts { int leaves, dead, vertices; };
    auto counts = [&]() {
        Counts c{0, 0, size};
        for (int v = 0; v < n; ++v)
            if (in_tree[v] && tree_degree[v] == 1) {
                ++c.leaves;
                c.dead += out_degree(v) == 0;
            }
        return c;
    };

    int center = -1;
    for (int v = 0; v < n && center < 0; ++v)
        if (g.degree(v) == 1)
            center = g.neighbors(v)[0];
    if (center < 0) {
        center = 0;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(center))
                center = v;
    }
    res.initial_center = center;
    res.tree.root = center;
    in_tree[center] = 1;
    size = 1;
    expand(center);

    for (;;) {
        std::vector<int> live;
        for (int v = 0; v < n; ++v)
            if (in_tree[v] && tree_degree[v] == 1 && out_degree(v) > 0)
                live.push_back(v);
        if (live.empty())
            break;

        const Counts before = counts();
        ExpansionStep step{ExpansionStep::Kind::Case1, -1, 0, 0, 0};
        auto pick = std::find_if(live.begin(), live.end(), [&](int x) { return out_degree(x) >= 2; });
        if (pick != live.end()) {
            step.kind = ExpansionStep::Kind::Case1;
            step.leaf = *pick;
            expand(*pick);
        } else {
            // Every live leaf has exactly one outside neighbour.
            auto outside = [&](int x) {
                for (int w : g.neighbors(x))
                    if (!in_tree[w])
                        return w;
                return -1;
            };
            auto high = std::find_if(live.begin(), live.end(), [&](int x) { return g.degree(outside(x)) >= 3; });
            if (high != live.end()) {
                const int x = *high, y = outside(x);
                int inside = 0;
                for (int w : g.neighbors(y))
                    inside += in_tree[w];
                step.leaf = x;
                if (inside >= 2) {
                    step.kind = ExpansionStep::Kind::Case2a;
                    expand(x);
                } else {
                    step.kind = ExpansionStep::Kind::Case2b;
                    expand(x);
                    expand(y);
                }
            } else {
                step.kind = ExpansionStep::Kind::Case3;
                step.leaf = live.front();
                expand(live.front());
            }
        }
        const Counts after = counts();
        step.delta_leaves = after.leaves - before.leaves;
        step.delta_dead = after.dead - before.dead;
        step.delta_vertices = after.vertices - before.vertices;
        if (!step.satisfies_augmentation())
            throw std::logic_error("tree growth step violates the augmentation inequality");
        res.steps.push_back(step);
    }
    if (size != n)
        throw std::logic_error("tree growth stopped before spanning the graph");
    if (n > 4 * res.tree.leaf_count() - 6)
        throw std::logic_error("tree growth produced too few leaves");
    return res;
}

namespace {

    bool connected_without_vertex(const Graph& g, int skip)
    {
        const int n = g.order();
        int start = skip == 0 ? 1 : 0;
        if (n <= 2)
            return true;
        std::vector<char> seen(static_cast<size_t>(n), 0);
        seen[skip] = 1;
        seen[start] = 1;
        std::vector<int> stack{start};
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == n - 1;
    }

    bool is_bridge(Graph g, int u, int v)
    {
        g.remove_edge(u, v);
        return !g.connected();
    }

} // namespace

Graph reduce_degree2(const Graph& input)
{
    if (!input.connected())
        throw ContractError("reduce_degree2 needs a connected graph");
    Graph g = input;
    for (;;) {
        int v = -1;
        for (int x = 0; x < g.order(); ++x)
            if (g.degree(x) == 2) {
                v = x;
                break;
            }
        if (v < 0)
            return g;
        const int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
        if (!connected_without_vertex(g, v)) {
            // Contract a bridge {u, v} into u.
            const int u = is_bridge(g, a, v) ? a : b;
            const int w = u == a ? b : a;
            std::vector<Edge> edges;
            for (auto [p, q] : g.edges()) {
                if (p == v || q == v)
                    continue;
                edges.emplace_back(p, q);
            }
            edges.emplace_back(std::min(u, w), std::max(u, w));
            auto relabel = [v](int x) { return x > v ? x - 1 : x; };
            Graph next(g.order() - 1);
            for (auto [p, q] : edges)
                next.add_edge(relabel(p), relabel(q));
            g = std::move(next);
        } else {
            g.remove_edge(v, a);
        }
    }
}

} // namespace mcs
