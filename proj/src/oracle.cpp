#include "mcsolve/oracle.hpp"

#include "mcsolve/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace mcs {

namespace {

    struct Embedder
    {
        const Graph& h;
        const Graph& g;
        Mode mode;
        std::vector<int> map;
        std::vector<char> used;

        bool consistent(int u, int x) const
        {
            for (int w = 0; w < u; ++w) {
                const bool he = h.adjacent(u, w);
                const bool ge = g.adjacent(x, map[w]);
                if (he && !ge)
                    return false;
                if (mode == Mode::Induced && !he && ge)
                    return false;
            }
            return true;
        }

        bool extend(int u)
        {
            if (u == h.order())
                return true;
            for (int x = 0; x < g.order(); ++x) {
                if (used[x] || g.degree(x) < h.degree(u) || !consistent(u, x))
                    continue;
                used[x] = 1;
                map[u] = x;
                if (extend(u + 1))
                    return true;
                used[x] = 0;
            }
            return false;
        }
    };

    // Sorted degree sequence of h dominated by the top of g's.
    bool degrees_fit(const Graph& h, const Graph& g)
    {
        if (h.order() > g.order() || h.size() > g.size())
            return false;
        std::vector<int> dh, dg;
        for (int v = 0; v < h.order(); ++v)
            dh.push_back(h.degree(v));
        for (int v = 0; v < g.order(); ++v)
            dg.push_back(g.degree(v));
        std::sort(dh.rbegin(), dh.rend());
        std::sort(dg.rbegin(), dg.rend());
        for (size_t i = 0; i < dh.size(); ++i)
            if (dh[i] > dg[i])
                return false;
        return true;
    }

    // Calls f on each k-subset of {0..n-1} in lexicographic order until f returns true.
    template <class F>
    bool for_each_subset(int n, int k, F&& f)
    {
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        for (;;) {
            if (f(idx))
                return true;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                return false;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }

} // namespace

std::optional<std::vector<int>> embed(const Graph& h, const Graph& g, Mode mode)
{
    if (!degrees_fit(h, g))
        return std::nullopt;
    Embedder e{h, g, mode, std::vector<int>(static_cast<size_t>(h.order()), -1),
        std::vector<char>(static_cast<size_t>(g.order()), 0)};
    if (!e.extend(0))
        return std::nullopt;
    return e.map;
}

EmbeddingCertificate mcis_oracle(const Graph& g1, const Graph& g2, int cap)
{
    const bool first = g1.order() <= g2.order();
    const Graph& small = first ? g1 : g2;
    const Graph& large = first ? g2 : g1;
    if (small.order() > cap)
        throw ResourceError("mcis oracle: smaller graph has " + std::to_string(small.order())
            + " vertices, cap is " + std::to_string(cap));

    for (int k = small.order(); k >= 0; --k) {
        std::vector<int> chosen, image;
        bool found = for_each_subset(small.order(), k, [&](const std::vector<int>& subset) {
            Graph h = induced_subgraph(small, subset);
            auto m = embed(h, large, Mode::Induced);
            if (!m)
                return false;
            chosen = subset;
            image = *m;
            return true;
        });
        if (found)
            return first ? induced_certificate(g1, chosen, image) : induced_certificate(g1, image, chosen);
    }
    return induced_certificate(g1, {}, {});
}

EmbeddingCertificate mcs_oracle(const Graph& g1, const Graph& g2, int cap)
{
    const bool first = g1.size() <= g2.size();
    const Graph& small = first ? g1 : g2;
    const Graph& large = first ? g2 : g1;
    if (small.size() > cap)
        throw ResourceError("mcs oracle: sparser graph has " + std::to_string(small.size())
            + " edges, cap is " + std::to_string(cap));

    const auto edges = small.edges();
    const int m = static_cast<int>(edges.size());
    EmbeddingCertificate cert;
    cert.mode = Mode::Subgraph;
    for (int k = std::min(m, large.size()); k >= 0; --k) {
        bool found = for_each_subset(m, k, [&](const std::vector<int>& subset) {
            std::vector<int> touched;
            for (int i : subset) {
                touched.push_back(edges[i].first);
                touched.push_back(edges[i].second);
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            std::vector<int> local(static_cast<size_t>(small.order()), -1);
            for (size_t i = 0; i < touched.size(); ++i)
                local[touched[i]] = static_cast<int>(i);
            Graph h(static_cast<int>(touched.size()));
            for (int i : subset)
                h.add_edge(local[edges[i].first], local[edges[i].second]);
            auto map = embed(h, large, Mode::Subgraph);
            if (!map)
                return false;
            cert.h = std::move(h);
            cert.eta1 = first ? touched : *map;
            cert.eta2 = first ? *map : touched;
            cert.value = k;
            return true;
        });
        if (found)
            return cert;
    }
    return cert;
}

} // namespace mcs
