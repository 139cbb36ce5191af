#include "mcsolve/twins.hpp"

#include "mcsolve/errors.hpp"

namespace mcs {

bool are_twins(const Graph& g, int u, int v)
{
    if (u == v)
        return true;
    for (int w = 0; w < g.order(); ++w) {
        if (w == u || w == v)
            continue;
        if (g.adjacent(u, w) != g.adjacent(v, w))
            return false;
    }
    return true;
}

TwinClassPartition twin_classes(const Graph& g)
{
    TwinClassPartition p;
    const int n = g.order();
    p.class_of.assign(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < p.count(); ++c)
            if (are_twins(g, p.classes[c].front(), v)) {
                p.classes[c].push_back(v);
                p.class_of[v] = c;
                break;
            }
        if (p.class_of[v] < 0) {
            p.class_of[v] = p.count();
            p.classes.push_back({v});
        }
    }
    const int k = p.count();
    p.clique.assign(static_cast<size_t>(k), 0);
    p.full.assign(static_cast<size_t>(k), std::vector<char>(static_cast<size_t>(k), 0));
    for (int a = 0; a < k; ++a) {
        const auto& ca = p.classes[a];
        p.clique[a] = ca.size() >= 2 && g.adjacent(ca[0], ca[1]);
        for (int b = 0; b < k; ++b)
            if (a != b)
                p.full[a][b] = g.adjacent(ca[0], p.classes[b][0]);
    }
    return p;
}

int neighborhood_diversity(const Graph& g)
{
    return twin_classes(g).count();
}

std::pair<Graph, std::vector<int>> truncate_twin_classes(const Graph& g, int cap)
{
    if (cap < 1)
        throw ContractError("twin class cap must be at least 1");
    auto p = twin_classes(g);
    std::vector<int> removed;
    for (const auto& cls : p.classes)
        for (size_t i = static_cast<size_t>(cap); i < cls.size(); ++i)
            removed.push_back(cls[i]);
    return remove_vertices(g, removed);
}

} // namespace mcs
