#pragma once

#include "mcsolve/graph.hpp"

#include <random>
#include <string>

namespace testing {

inline mcs::Graph G(const std::string& text) { return mcs::parse_graph(text); }

inline mcs::Graph random_graph(std::mt19937& rng, int n, double p)
{
    mcs::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

inline mcs::Graph paw()
{
    return mcs::parse_graph("4 4\n0 1\n0 2\n1 2\n2 3\n");
}

} // namespace testing
