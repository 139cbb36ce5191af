#include "mcsolve/solver_cvd.hpp"

#include "mcsolve/errors.hpp"
#include "mcsolve/matching.hpp"
#include "mcsolve/oracle.hpp"
#include "mcsolve/parameters.hpp"
#include "mcsolve/solver_tc.hpp"
#include "mcsolve/twins.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mcs {

namespace {

    using Signature = unsigned;

    // Vertices of one clique grouped by their neighbourhood pattern in the base.
    using PatternGroups = std::map<Signature, std::vector<int>>;

    Signature signature(const Graph& g, int v, const std::vector<int>& base)
    {
        Signature s = 0;
        for (size_t k = 0; k < base.size(); ++k)
            if (g.adjacent(v, base[k]))
                s |= 1u << k;
        return s;
    }

    std::vector<PatternGroups> cliques_outside(const Graph& g, const std::vector<int>& base)
    {
        auto [rest, kept] = remove_vertices(g, base);
        std::vector<PatternGroups> out;
        for (const auto& comp : rest.components()) {
            PatternGroups groups;
            for (int v : comp)
                groups[signature(g, kept[v], base)].push_back(kept[v]);
            out.push_back(std::move(groups));
        }
        return out;
    }

    Signature remap(Signature s, const std::vector<int>& to)
    {
        Signature out = 0;
        for (size_t k = 0; s; ++k, s >>= 1)
            if (s & 1)
                out |= 1u << to[k];
        return out;
    }

    long long gain(const PatternGroups& a, const PatternGroups& b)
    {
        long long total = 0;
        for (const auto& [sig, verts] : a)
            if (auto it = b.find(sig); it != b.end())
                total += static_cast<long long>(std::min(verts.size(), it->second.size()));
        return total;
    }

    template <class F>
    void for_each_combination(const std::vector<int>& items, int k, F&& f)
    {
        const int n = static_cast<int>(items.size());
        if (k < 0 || k > n)
            return;
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        std::vector<int> pick(static_cast<size_t>(k));
        for (;;) {
            for (int i = 0; i < k; ++i)
                pick[i] = items[idx[i]];
            f(pick);
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                return;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }

    std::vector<int> induced_degrees(const Graph& g, const std::vector<int>& b)
    {
        std::vector<int> deg(b.size(), 0);
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                if (i != j && g.adjacent(b[i], b[j]))
                    ++deg[i];
        return deg;
    }

    struct Side
    {
        Graph g;                 ///< input minus dropped deletion-set vertices
        std::vector<int> keep;   ///< local -> original
        std::vector<int> s;      ///< retained deletion set (local)
        std::vector<int> others; ///< local vertices outside s
    };

    Side make_side(const Graph& g, const std::vector<int>& cover, unsigned mask)
    {
        Side side;
        std::vector<int> dropped, retained;
        for (size_t i = 0; i < cover.size(); ++i)
            ((mask >> i) & 1 ? retained : dropped).push_back(cover[i]);
        auto [h, keep] = remove_vertices(g, dropped);
        side.g = std::move(h);
        side.keep = std::move(keep);
        std::vector<int> inv(static_cast<size_t>(g.order()), -1);
        for (size_t i = 0; i < side.keep.size(); ++i)
            inv[side.keep[i]] = static_cast<int>(i);
        for (int v : retained)
            side.s.push_back(inv[v]);
        for (int v = 0; v < side.g.order(); ++v)
            if (!std::binary_search(side.s.begin(), side.s.end(), v))
                side.others.push_back(v);
        return side;
    }

} // namespace

long long pair_gain(const Graph& g1, const std::vector<int>& k1, const std::vector<int>& base1, const Graph& g2,
    const std::vector<int>& k2, const std::vector<int>& base2)
{
    if (base1.size() != base2.size() || base1.size() > 31)
        throw ContractError("pair_gain needs aligned bases of equal size");
    PatternGroups a, b;
    for (int v : k1)
        a[signature(g1, v, base1)].push_back(v);
    for (int v : k2)
        b[signature(g2, v, base2)].push_back(v);
    return gain(a, b);
}

CvdResult mcis_cvd_xp(const Graph& g1, const Graph& g2, long long guess_cap)
{
    const auto s1 = minimum_cluster_deletion(g1);
    const auto s2 = minimum_cluster_deletion(g2);
    CvdResult res;
    res.certificate = induced_certificate(g1, {}, {});
    long long best = 0;

    std::vector<Side> sides1, sides2;
    for (unsigned m = 0; m < (1u << s1.size()); ++m)
        sides1.push_back(make_side(g1, s1, m));
    for (unsigned m = 0; m < (1u << s2.size()); ++m)
        sides2.push_back(make_side(g2, s2, m));

    for (const auto& a : sides1)
        for (const auto& b : sides2) {
            const int sa = static_cast<int>(a.s.size()), sb = static_cast<int>(b.s.size());
            for (int c = 0; c <= std::min(sa, sb); ++c) {
                const int r1 = sb - c, r2 = sa - c;
                const int base_size = sa + r1;
                for_each_combination(a.others, r1, [&](const std::vector<int>& ra) {
                    std::vector<int> base1 = a.s;
                    base1.insert(base1.end(), ra.begin(), ra.end());
                    auto deg1 = induced_degrees(a.g, base1);
                    auto sorted1 = deg1;
                    std::sort(sorted1.begin(), sorted1.end());
                    const auto cliques1 = cliques_outside(a.g, base1);

                    for_each_combination(b.others, r2, [&](const std::vector<int>& rb) {
                        std::vector<int> base2 = b.s;
                        base2.insert(base2.end(), rb.begin(), rb.end());
                        auto deg2 = induced_degrees(b.g, base2);
                        auto sorted2 = deg2;
                        std::sort(sorted2.begin(), sorted2.end());
                        if (sorted1 != sorted2)
                            return;
                        const long long bound = base_size
                            + std::min(a.g.order() - base_size, b.g.order() - base_size);
                        if (bound <= best)
                            return;
                        const auto cliques2 = cliques_outside(b.g, base2);

                        // phi: position k of base1 -> position phi[k] of base2.
                        // Partner vertices of G1 go into the retained set of G2.
                        const int n = base_size;
                        std::vector<int> phi(static_cast<size_t>(n), -1);
                        std::vector<char> used(static_cast<size_t>(n), 0);
                        std::function<void(int)> rec = [&](int k) {
                            if (k == n) {
                                if (++res.guesses > guess_cap)
                                    throw ResourceError("cvd guess cap exceeded after " + std::to_string(guess_cap)
                                        + " bijections");
                                std::vector<int> inverse(static_cast<size_t>(n));
                                for (int j = 0; j < n; ++j)
                                    inverse[phi[j]] = j;
                                // Re-express G2 patterns in base1 positions.
                                std::vector<PatternGroups> mapped2;
                                for (const auto& groups : cliques2) {
                                    PatternGroups m;
                                    for (const auto& [sig, verts] : groups)
                                        m[remap(sig, inverse)] = verts;
                                    mapped2.push_back(std::move(m));
                                }
                                MatchingInstance inst(static_cast<int>(cliques1.size()), static_cast<int>(mapped2.size()));
                                for (size_t l = 0; l < cliques1.size(); ++l)
                                    for (size_t r = 0; r < mapped2.size(); ++r)
                                        inst.add_edge(static_cast<int>(l), static_cast<int>(r), gain(cliques1[l], mapped2[r]));
                                auto m = max_weight_matching_covering(inst);
                                const long long value = n + m.weight;
                                if (value <= best)
                                    return;
                                best = value;
                                std::vector<int> image1, image2;
                                for (int j = 0; j < n; ++j) {
                                    image1.push_back(a.keep[base1[j]]);
                                    image2.push_back(b.keep[base2[phi[j]]]);
                                }
                                for (auto [l, r] : m.pairs)
                                    for (const auto& [sig, verts] : cliques1[l]) {
                                        auto it = mapped2[r].find(sig);
                                        if (it == mapped2[r].end())
                                            continue;
                                        const size_t take = std::min(verts.size(), it->second.size());
                                        for (size_t t = 0; t < take; ++t) {
                                            image1.push_back(a.keep[verts[t]]);
                                            image2.push_back(b.keep[it->second[t]]);
                                        }
                                    }
                                res.certificate = induced_certificate(g1, image1, image2);
                                return;
                            }
                            const bool partner = k >= sa;
                            for (int x = 0; x < n; ++x) {
                                if (used[x] || (partner && x >= sb) || deg1[k] != deg2[x])
                                    continue;
                                bool ok = true;
                                for (int j = 0; j < k && ok; ++j)
                                    ok = a.g.adjacent(base1[j], base1[k]) == b.g.adjacent(base2[phi[j]], base2[x]);
                                if (!ok)
                                    continue;
                                used[x] = 1;
                                phi[k] = x;
                                rec(k + 1);
                                used[x] = 0;
                            }
                        };
                        rec(0);
                    });
                });
            }
        }
    return res;
}

ApproxResult mcis_cvd_approx(const Graph& g1, const Graph& g2, long long eps_num, long long eps_den, ExactMethod exact)
{
    if (eps_num <= 0 || eps_den <= 0 || eps_num >= eps_den)
        throw ContractError("eps must lie strictly between 0 and 1");
    const auto s1 = minimum_cluster_deletion(g1);
    const auto s2 = minimum_cluster_deletion(g2);
    ApproxResult res;
    res.p = static_cast<int>(std::max(s1.size(), s2.size()));

    auto lift = [&](const EmbeddingCertificate& local, const std::vector<int>& keep1, const std::vector<int>& keep2) {
        std::vector<int> image1, image2;
        for (int v : local.eta1)
            image1.push_back(keep1[v]);
        for (int v : local.eta2)
            image2.push_back(keep2[v]);
        return induced_certificate(g1, image1, image2);
    };

    auto [c1, k1] = remove_vertices(g1, s1);
    auto [c2, k2] = remove_vertices(g2, s2);
    res.certificate = lift(mcis_cluster_graphs(c1, c2), k1, k2);
    res.cluster_value = res.certificate.value;
    res.branch = ApproxResult::Branch::ClusterPart;

    if (res.p == 0)
        return res;
    // ceil(2p / eps) = ceil(2p * den / num)
    const long long cap = (2LL * res.p * eps_den + eps_num - 1) / eps_num;
    res.cap = static_cast<int>(std::min<long long>(cap, 1 << 30));
    auto [t1, tk1] = truncate_twin_classes(g1, res.cap);
    auto [t2, tk2] = truncate_twin_classes(g2, res.cap);
    EmbeddingCertificate local;
    switch (exact) {
    case ExactMethod::Oracle:
        local = mcis_oracle(t1, t2);
        break;
    case ExactMethod::TwinCover:
        local = mcis_tc(t1, t2).certificate;
        break;
    case ExactMethod::CvdXp:
        local = mcis_cvd_xp(t1, t2).certificate;
        break;
    }
    res.truncated_value = local.value;
    if (local.value >= res.cluster_value) {
        res.certificate = lift(local, tk1, tk2);
        res.branch = ApproxResult::Branch::Truncated;
    }
    return res;
}

} // namespace mcs
