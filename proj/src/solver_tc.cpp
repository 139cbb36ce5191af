#include "mcsolve/solver_tc.hpp"

#include "mcsolve/errors.hpp"
#include "mcsolve/matching.hpp"
#include "mcsolve/parameters.hpp"
#include "mcsolve/twins.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

namespace mcs {

namespace {

    bool twins_among(const Graph& g, const std::vector<char>& alive, int u, int v)
    {
        for (int w = 0; w < g.order(); ++w)
            if (w != u && w != v && alive[w] && g.adjacent(u, w) != g.adjacent(v, w))
                return false;
        return true;
    }

    std::vector<int> positions_in(const std::vector<int>& sorted_universe, const std::vector<int>& items)
    {
        std::vector<int> out;
        for (int x : items)
            out.push_back(static_cast<int>(std::lower_bound(sorted_universe.begin(), sorted_universe.end(), x)
                - sorted_universe.begin()));
        return out;
    }

    // index map old -> new for a kept list, -1 when deleted
    std::vector<int> inverse(const std::vector<int>& kept, int n)
    {
        std::vector<int> inv(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < kept.size(); ++i)
            inv[kept[i]] = static_cast<int>(i);
        return inv;
    }

    struct Clique
    {
        std::vector<int> vertices; ///< original indices, cover vertices first
        int special = 0;           ///< retained cover vertices inside
        std::vector<int> attach;   ///< positions in the T list it is joined to
    };

    // One side of a guess after cleanup.
    struct Placement
    {
        std::vector<int> t;        ///< original indices of the T images
        Graph t_graph;             ///< G[t] in that order
        std::vector<Clique> cliques;
    };

    struct SideGuesses
    {
        // by_size[k]: placements with |T| == k
        std::vector<std::vector<Placement>> by_size;
    };

    class SidePreparer
    {
    public:
        SidePreparer(const Graph& g, const std::vector<int>& cover, int budget)
            : g_(g)
            , cover_(cover)
            , budget_(budget)
        {
        }

        SideGuesses prepare(unsigned retained_mask)
        {
            SideGuesses out;
            out.by_size.resize(static_cast<size_t>(budget_) + 1);
            std::vector<int> dropped;
            retained_.clear();
            for (size_t i = 0; i < cover_.size(); ++i)
                ((retained_mask >> i) & 1 ? retained_ : dropped).push_back(cover_[i]);
            auto [gp, keep] = remove_vertices(g_, dropped);
            gp_ = std::move(gp);
            keep_ = std::move(keep);
            auto inv = inverse(keep_, g_.order());
            retained_local_.clear();
            for (int s : retained_)
                retained_local_.push_back(inv[s]);

            // Components of G' - S', grouped by their neighbourhood in S'.
            auto [rest, rest_keep] = remove_vertices(gp_, retained_local_);
            std::map<std::vector<int>, std::vector<std::vector<int>>> by_attach;
            for (auto comp : rest.components()) {
                for (int& v : comp)
                    v = rest_keep[v];
                std::vector<int> attach;
                for (int w : gp_.neighbors(comp.front()))
                    if (std::binary_search(retained_local_.begin(), retained_local_.end(), w))
                        attach.push_back(w);
                by_attach[attach].push_back(std::move(comp));
            }
            groups_.clear();
            for (auto& [attach, comps] : by_attach) {
                std::stable_sort(comps.begin(), comps.end(),
                    [](const auto& a, const auto& b) { return a.size() < b.size(); });
                groups_.push_back(std::move(comps));
            }

            const int r = static_cast<int>(retained_local_.size());
            for (unsigned in_t = 0; in_t < (1u << r); ++in_t) {
                const int used = std::popcount(in_t);
                if (used > budget_)
                    continue;
                std::vector<int> a;
                for (int i = 0; i < r; ++i)
                    if ((in_t >> i) & 1)
                        a.push_back(retained_local_[i]);
                std::vector<std::vector<int>> chosen;
                place_group(0, budget_ - used, a, chosen, out);
            }
            return out;
        }

    private:
        // Chooses non-decreasing counts for group gi and assigns them greedily
        // to the smallest components that fit.
        void place_group(size_t gi, int remaining, std::vector<int>& a, std::vector<std::vector<int>>& chosen,
            SideGuesses& out)
        {
            if (gi == groups_.size()) {
                finish(a, chosen, out);
                return;
            }
            const auto& comps = groups_[gi];
            std::vector<int> counts;
            std::function<void(int, int)> rec = [&](int min_count, int left) {
                // Try the current multiset.
                std::vector<char> used(comps.size(), 0);
                std::vector<int> picked;
                bool ok = true;
                for (int c : counts) {
                    size_t k = 0;
                    while (k < comps.size() && (used[k] || static_cast<int>(comps[k].size()) < c))
                        ++k;
                    if (k == comps.size()) {
                        ok = false;
                        break;
                    }
                    used[k] = 1;
                    picked.push_back(static_cast<int>(k));
                }
                if (ok) {
                    const size_t before_a = a.size(), before_c = chosen.size();
                    for (size_t i = 0; i < counts.size(); ++i) {
                        const auto& comp = comps[picked[i]];
                        chosen.push_back(comp);
                        for (int j = 0; j < counts[i]; ++j)
                            a.push_back(comp[j]);
                    }
                    place_group(gi + 1, left, a, chosen, out);
                    a.resize(before_a);
                    chosen.resize(before_c);
                } else {
                    return;
                }
                if (counts.size() == comps.size())
                    return;
                const int largest = comps.empty() ? 0 : static_cast<int>(comps.back().size());
                for (int c = std::max(1, min_count); c <= std::min(left, largest); ++c) {
                    counts.push_back(c);
                    rec(c, left - c);
                    counts.pop_back();
                }
            };
            rec(1, remaining);
        }

        void finish(std::vector<int> a, const std::vector<std::vector<int>>& touched, SideGuesses& out)
        {
            std::sort(a.begin(), a.end());
            // T images must form a twin cover of G'[S' + T].
            std::vector<int> span = retained_local_;
            span.insert(span.end(), a.begin(), a.end());
            std::sort(span.begin(), span.end());
            span.erase(std::unique(span.begin(), span.end()), span.end());
            if (!is_twin_cover(induced_subgraph(gp_, span), positions_in(span, a)))
                return;

            // Components holding T images keep nothing else.
            std::vector<int> removed;
            for (const auto& comp : touched)
                for (int v : comp)
                    if (!std::binary_search(a.begin(), a.end(), v))
                        removed.push_back(v);
            auto [gq, keep_q] = remove_vertices(gp_, removed);
            auto inv_q = inverse(keep_q, gp_.order());
            std::vector<int> s_q, a_q;
            for (int s : retained_local_)
                s_q.push_back(inv_q[s]);
            for (int v : a)
                a_q.push_back(inv_q[v]);

            auto to_original = [&](int v) { return keep_[keep_q[v]]; };
            std::vector<char> in_a(static_cast<size_t>(gq.order()), 0), in_s(static_cast<size_t>(gq.order()), 0);
            for (int v : a_q)
                in_a[v] = 1;
            for (int v : s_q)
                in_s[v] = 1;
            auto attach_of = [&](int v) {
                std::vector<int> attach;
                for (size_t j = 0; j < a_q.size(); ++j)
                    if (gq.adjacent(v, a_q[j]))
                        attach.push_back(static_cast<int>(j));
                return attach;
            };

            // Cover vertices outside T form cliques (twin-cover check above).
            // Each may absorb one untouched component that sees exactly that
            // clique among them and the same T images; the largest dominates.
            std::vector<int> free_cover;
            for (int v : s_q)
                if (!in_a[v])
                    free_cover.push_back(v);
            auto [cover_graph, cover_keep] = remove_vertices(gq, [&] {
                std::vector<int> others;
                for (int v = 0; v < gq.order(); ++v)
                    if (!in_s[v] || in_a[v])
                        others.push_back(v);
                return others;
            }());
            std::vector<std::vector<int>> cover_cliques;
            for (auto comp : cover_graph.components()) {
                for (int& v : comp)
                    v = cover_keep[v];
                cover_cliques.push_back(std::move(comp));
            }
            std::vector<int> absorbed(cover_cliques.size(), -1);
            std::vector<std::vector<int>> plain;
            std::vector<std::vector<int>> candidates;
            {
                std::vector<int> drop;
                for (int v = 0; v < gq.order(); ++v)
                    if (in_s[v] || in_a[v])
                        drop.push_back(v);
                auto [outside, outside_keep] = remove_vertices(gq, drop);
                for (auto comp : outside.components()) {
                    for (int& v : comp)
                        v = outside_keep[v];
                    std::vector<int> sees;
                    for (int w : gq.neighbors(comp.front()))
                        if (in_s[w] && !in_a[w])
                            sees.push_back(w);
                    if (sees.empty()) {
                        plain.push_back(std::move(comp));
                        continue;
                    }
                    for (size_t c = 0; c < cover_cliques.size(); ++c) {
                        if (cover_cliques[c] != sees || attach_of(comp.front()) != attach_of(sees.front()))
                            continue;
                        const int id = static_cast<int>(candidates.size());
                        if (absorbed[c] < 0 || candidates[absorbed[c]].size() < comp.size())
                            absorbed[c] = id;
                    }
                    candidates.push_back(std::move(comp));
                }
            }

            Placement p;
            for (int v : a)
                p.t.push_back(keep_[v]);
            p.t_graph = induced_subgraph(g_, p.t);
            for (size_t c = 0; c < cover_cliques.size(); ++c) {
                Clique q;
                for (int v : cover_cliques[c])
                    q.vertices.push_back(to_original(v));
                q.special = static_cast<int>(cover_cliques[c].size());
                if (absorbed[c] >= 0)
                    for (int v : candidates[absorbed[c]])
                        q.vertices.push_back(to_original(v));
                q.attach = attach_of(cover_cliques[c].front());
                p.cliques.push_back(std::move(q));
            }
            for (const auto& comp : plain) {
                Clique q;
                for (int v : comp)
                    q.vertices.push_back(to_original(v));
                q.attach = attach_of(comp.front());
                p.cliques.push_back(std::move(q));
            }
            out.by_size[p.t.size()].push_back(std::move(p));
        }

        const Graph& g_;
        std::vector<int> cover_;
        int budget_;
        std::vector<int> retained_;
        std::vector<int> retained_local_;
        Graph gp_;
        std::vector<int> keep_;
        std::vector<std::vector<std::vector<int>>> groups_;
    };

    // Calls f(pi) for every isomorphism pi from a onto b (position j -> pi[j]).
    template <class F>
    void for_each_isomorphism(const Graph& a, const Graph& b, F&& f)
    {
        const int k = a.order();
        std::vector<int> pi(static_cast<size_t>(k), -1);
        std::vector<char> used(static_cast<size_t>(k), 0);
        std::function<void(int)> rec = [&](int j) {
            if (j == k) {
                f(pi);
                return;
            }
            for (int x = 0; x < k; ++x) {
                if (used[x] || a.degree(j) != b.degree(x))
                    continue;
                bool ok = true;
                for (int i = 0; i < j && ok; ++i)
                    ok = a.adjacent(i, j) == b.adjacent(pi[i], x);
                if (!ok)
                    continue;
                used[x] = 1;
                pi[j] = x;
                rec(j + 1);
                used[x] = 0;
            }
        };
        rec(0);
    }

    long long clique_total(const Placement& p)
    {
        long long total = 0;
        for (const auto& c : p.cliques)
            total += static_cast<long long>(c.vertices.size());
        return total;
    }

} // namespace

std::pair<Graph, std::vector<int>> prune_noncover(const Graph& g, const std::vector<int>& s, const std::vector<int>& t)
{
    const int n = g.order();
    std::vector<char> in_s(static_cast<size_t>(n), 0), in_t(static_cast<size_t>(n), 0);
    for (int v : s)
        in_s.at(v) = 1;
    for (int v : t)
        in_t.at(v) = 1;
    std::vector<int> span;
    for (int v = 0; v < n; ++v)
        if (in_s[v] || in_t[v])
            span.push_back(v);
    std::vector<int> t_sorted(t);
    std::sort(t_sorted.begin(), t_sorted.end());
    if (!is_twin_cover(induced_subgraph(g, span), positions_in(span, t_sorted)))
        throw ContractError("prune_noncover: T is not a twin cover of G[S + T]");

    std::vector<char> alive(static_cast<size_t>(n), 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < n && !changed; ++x) {
            if (!in_s[x] || in_t[x])
                continue;
            for (int y : g.neighbors(x)) {
                if (!alive[y] || in_s[y] || in_t[y] || twins_among(g, alive, x, y))
                    continue;
                alive[y] = 0;
                changed = true;
                break;
            }
        }
    }
    std::vector<int> removed;
    for (int v = 0; v < n; ++v)
        if (!alive[v])
            removed.push_back(v);
    auto result = remove_vertices(g, removed);
    auto inv = inverse(result.second, n);
    std::vector<int> t_local;
    for (int v : t_sorted)
        t_local.push_back(inv[v]);
    if (!is_twin_cover(result.first, t_local))
        throw ContractError("prune_noncover: T cannot become a twin cover by this rule");
    return result;
}

TcResult mcis_tc(const Graph& g1, const Graph& g2, int budget)
{
    const auto s1 = minimum_twin_cover(g1);
    const auto s2 = minimum_twin_cover(g2);
    if (budget < 0)
        budget = static_cast<int>(s1.size() + s2.size());

    TcResult res;
    res.budget = budget;
    res.certificate = induced_certificate(g1, {}, {});
    long long best = 0;

    SidePreparer prep1(g1, s1, budget), prep2(g2, s2, budget);
    std::vector<SideGuesses> side1, side2;
    for (unsigned m = 0; m < (1u << s1.size()); ++m)
        side1.push_back(prep1.prepare(m));
    for (unsigned m = 0; m < (1u << s2.size()); ++m)
        side2.push_back(prep2.prepare(m));

    for (const auto& left : side1)
        for (const auto& right : side2)
            for (int k = 0; k <= budget; ++k)
                for (const auto& a : left.by_size[k])
                    for (const auto& b : right.by_size[k]) {
                        const long long bound = k + std::min(clique_total(a), clique_total(b));
                        if (bound < best || (bound == best && k >= res.smallest_budget))
                            continue;
                        for_each_isomorphism(a.t_graph, b.t_graph, [&](const std::vector<int>& pi) {
                            MatchingInstance inst(static_cast<int>(a.cliques.size()), static_cast<int>(b.cliques.size()));
                            for (size_t l = 0; l < a.cliques.size(); ++l) {
                                const auto& c1 = a.cliques[l];
                                std::vector<int> mapped;
                                for (int j : c1.attach)
                                    mapped.push_back(pi[j]);
                                std::sort(mapped.begin(), mapped.end());
                                if (c1.special)
                                    inst.require_left(static_cast<int>(l));
                                for (size_t r = 0; r < b.cliques.size(); ++r) {
                                    const auto& c2 = b.cliques[r];
                                    const long long w = static_cast<long long>(std::min(c1.vertices.size(), c2.vertices.size()));
                                    if (mapped == c2.attach && w >= std::max(c1.special, c2.special))
                                        inst.add_edge(static_cast<int>(l), static_cast<int>(r), w);
                                }
                            }
                            for (size_t r = 0; r < b.cliques.size(); ++r)
                                if (b.cliques[r].special)
                                    inst.require_right(static_cast<int>(r));
                            auto m = max_weight_matching_covering(inst);
                            if (!m.feasible)
                                return;
                            ++res.guesses;
                            const long long value = k + m.weight;
                            if (value == best && k < res.smallest_budget)
                                res.smallest_budget = k;
                            if (value <= best)
                                return;
                            best = value;
                            res.smallest_budget = k;
                            std::vector<int> image1(a.t), image2;
                            for (int j = 0; j < k; ++j)
                                image2.push_back(b.t[pi[j]]);
                            for (auto [l, r] : m.pairs) {
                                const auto& v1 = a.cliques[l].vertices;
                                const auto& v2 = b.cliques[r].vertices;
                                const size_t take = std::min(v1.size(), v2.size());
                                image1.insert(image1.end(), v1.begin(), v1.begin() + static_cast<long>(take));
                                image2.insert(image2.end(), v2.begin(), v2.begin() + static_cast<long>(take));
                            }
                            res.certificate = induced_certificate(g1, image1, image2);
                        });
                    }
    return res;
}

EmbeddingCertificate mcis_cluster_graphs(const Graph& g1, const Graph& g2)
{
    if (!is_cluster_graph(g1) || !is_cluster_graph(g2))
        throw ContractError("mcis_cluster_graphs needs two disjoint unions of cliques");
    const auto c1 = g1.components(), c2 = g2.components();
    MatchingInstance inst(static_cast<int>(c1.size()), static_cast<int>(c2.size()));
    for (size_t l = 0; l < c1.size(); ++l)
        for (size_t r = 0; r < c2.size(); ++r)
            inst.add_edge(static_cast<int>(l), static_cast<int>(r), static_cast<long long>(std::min(c1[l].size(), c2[r].size())));
    auto m = max_weight_matching_covering(inst);
    std::vector<int> image1, image2;
    for (auto [l, r] : m.pairs) {
        const size_t take = std::min(c1[l].size(), c2[r].size());
        image1.insert(image1.end(), c1[l].begin(), c1[l].begin() + static_cast<long>(take));
        image2.insert(image2.end(), c2[r].begin(), c2[r].begin() + static_cast<long>(take));
    }
    return induced_certificate(g1, image1, image2);
}

} // namespace mcs
