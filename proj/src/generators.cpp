#include "mcsolve/generators.hpp"

#include "mcsolve/errors.hpp"

#include <algorithm>
#include <numeric>

namespace mcs {

namespace {

    int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

    void add_clique(Graph& g, int first, int size)
    {
        for (int u = first; u < first + size; ++u)
            for (int v = u + 1; v < first + size; ++v)
                g.add_edge(u, v);
    }

    std::vector<int> random_parts(Rng& rng, int n, int min_part, int max_part)
    {
        std::vector<int> parts;
        while (n > 0) {
            int hi = std::min(n, max_part);
            int lo = std::min(min_part, hi);
            int take = uniform(rng, lo, hi);
            if (n - take > 0 && n - take < min_part)
                take = n;
            parts.push_back(take);
            n -= take;
        }
        return parts;
    }

} // namespace

Graph gen_cluster(const std::vector<int>& sizes)
{
    int n = 0;
    for (int s : sizes) {
        if (s < 1)
            throw ContractError("clique sizes must be positive");
        n += s;
    }
    Graph g(n);
    int first = 0;
    for (int s : sizes) {
        add_clique(g, first, s);
        first += s;
    }
    return g;
}

Graph gen_gnp(Rng& rng, int n, double p)
{
    if (n < 0 || p < 0 || p > 1)
        throw ContractError("gnp needs n >= 0 and p in [0,1]");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng, p))
                g.add_edge(u, v);
    return g;
}

Graph gen_path_forest(Rng& rng, int n)
{
    Graph g(n);
    int first = 0;
    for (int len : random_parts(rng, n, 1, std::max(1, n))) {
        for (int i = 1; i < len; ++i)
            g.add_edge(first + i - 1, first + i);
        first += len;
    }
    return g;
}

Graph gen_cycle_forest(Rng& rng, int n)
{
    if (n != 0 && n < 3)
        throw ContractError("a cycle forest needs at least 3 vertices");
    Graph g(n);
    int first = 0;
    for (int len : random_parts(rng, n, 3, std::max(3, n))) {
        for (int i = 0; i < len; ++i)
            g.add_edge(first + i, first + (i + 1) % len);
        first += len;
    }
    return g;
}

Graph gen_path_cycle_forest(Rng& rng, int n)
{
    Graph g(n);
    int first = 0;
    for (int len : random_parts(rng, n, 1, std::max(1, n))) {
        for (int i = 1; i < len; ++i)
            g.add_edge(first + i - 1, first + i);
        if (len >= 3 && coin(rng))
            g.add_edge(first, first + len - 1);
        first += len;
    }
    return g;
}

Graph gen_random_cluster(Rng& rng, int n, int max_clique)
{
    return gen_cluster(random_parts(rng, n, 1, std::max(1, max_clique)));
}

Graph gen_small_twin_cover(Rng& rng, int n, int k)
{
    k = std::clamp(k, 0, n);
    Graph g = gen_random_cluster(rng, n - k, 3);
    const auto cliques = g.components();
    for (int i = 0; i < k; ++i)
        g.add_vertex();
    const int base = n - k;
    for (int u = base; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    for (const auto& comp : cliques)
        for (int s = base; s < n; ++s)
            if (coin(rng))
                for (int v : comp)
                    g.add_edge(v, s);
    return g;
}

Graph gen_small_cluster_deletion(Rng& rng, int n, int k)
{
    k = std::clamp(k, 0, n);
    Graph g = gen_random_cluster(rng, n - k, 4);
    for (int i = 0; i < k; ++i)
        g.add_vertex();
    for (int u = n - k; u < n; ++u)
        for (int v = 0; v < u; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

Graph gen_bounded_nd(Rng& rng, int n, int classes)
{
    if (classes < 1 && n > 0)
        throw ContractError("bounded-nd needs at least one class");
    std::vector<int> class_of(static_cast<size_t>(n));
    for (int& c : class_of)
        c = uniform(rng, 0, classes - 1);
    std::vector<char> clique(static_cast<size_t>(classes));
    for (auto& c : clique)
        c = coin(rng);
    std::vector<std::vector<char>> full(static_cast<size_t>(classes), std::vector<char>(static_cast<size_t>(classes)));
    for (int a = 0; a < classes; ++a)
        for (int b = a + 1; b < classes; ++b)
            full[a][b] = full[b][a] = coin(rng, 0.4);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int a = class_of[u], b = class_of[v];
            if (a == b ? clique[a] : full[a][b])
                g.add_edge(u, v);
        }
    return g;
}

Graph shuffle_vertices(Rng& rng, const Graph& g)
{
    std::vector<int> perm(static_cast<size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph out(g.order());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[u], perm[v]);
    return out;
}

Graph gen_subdivision(Rng& rng, const Graph& base, int max_length)
{
    if (max_length < 1)
        throw ContractError("subdivision length must be at least 1");
    std::uniform_int_distribution<int> length(1, max_length);
    std::vector<Edge> edges;
    int n = base.order();
    for (auto [u, v] : base.edges()) {
        int prev = u;
        for (int k = length(rng); k > 1; --k) {
            edges.push_back({prev, n});
            prev = n++;
        }
        edges.push_back({prev, v});
    }
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

} // namespace mcs
