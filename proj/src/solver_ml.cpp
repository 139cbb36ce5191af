#include "mcsolve/solver_ml.hpp"

#include "mcsolve/errors.hpp"
#include "mcsolve/ipsolve.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

namespace mcs {

namespace {

    int trail_other_end(const Trail& t, int v) { return t.front() == v ? t.back() : t.front(); }

    /// Incident trails of each non-degree-2 vertex, increasing trail id.
    std::vector<std::vector<int>> incidence(const Graph& g, const TrailDecomposition& d)
    {
        std::vector<std::vector<int>> inc(static_cast<size_t>(g.order()));
        for (int t = 0; t < d.count(); ++t) {
            const auto& tr = d.trails[t];
            if (tr.kind == TrailKind::IsolatedCycle)
                continue;
            inc[tr.front()].push_back(t);
            if (tr.back() != tr.front())
                inc[tr.back()].push_back(t);
        }
        return inc;
    }

    /// Marks every cycle length of g (chordless cycles only when induced). Empty when the
    /// search exceeds `budget` steps.
    std::optional<std::vector<char>> cycle_lengths(const Graph& g, bool induced, long long budget)
    {
        const int n = g.order();
        std::vector<char> found(static_cast<size_t>(n) + 1, 0);
        std::vector<int> path;
        std::vector<char> on_path(static_cast<size_t>(n), 0);
        bool exhausted = false;
        auto chord_free = [&](int w) {
            // w may touch only the path end and, when it closes the cycle, the start.
            for (size_t k = 1; k + 1 < path.size(); ++k)
                if (g.adjacent(w, path[k]))
                    return false;
            return true;
        };
        auto dfs = [&](auto&& self, int s, int v) -> void {
            if (--budget < 0) {
                exhausted = true;
                return;
            }
            for (int w : g.neighbors(v)) {
                if (exhausted)
                    return;
                if (w == s && path.size() >= 3) {
                    found[path.size()] = 1;
                    continue;
                }
                if (w <= s || on_path[w])
                    continue;
                if (induced) {
                    if (!chord_free(w))
                        continue;
                    if (g.adjacent(w, s) && path.size() >= 2) {
                        found[path.size() + 1] = 1;
                        continue;
                    }
                }
                path.push_back(w);
                on_path[w] = 1;
                self(self, s, w);
                on_path[w] = 0;
                path.pop_back();
            }
        };
        for (int s = 0; s < n && !exhausted; ++s) {
            path = {s};
            on_path[s] = 1;
            dfs(dfs, s, s);
            on_path[s] = 0;
        }
        if (exhausted)
            return std::nullopt;
        return found;
    }

    /// Minimum feedback vertex set size, or empty when branching exceeds `budget` nodes.
    std::optional<int> feedback_vertex_number(const Graph& g, long long budget)
    {
        const int n = g.order();
        auto solve = [&](auto&& self, std::vector<char> alive, int k) -> std::optional<bool> {
            if (--budget < 0)
                return std::nullopt;
            std::vector<int> degree(static_cast<size_t>(n), 0);
            for (int v = 0; v < n; ++v)
                if (alive[v])
                    for (int w : g.neighbors(v))
                        degree[v] += alive[w];
            std::vector<int> peel;
            for (int v = 0; v < n; ++v)
                if (alive[v] && degree[v] <= 1)
                    peel.push_back(v);
            while (!peel.empty()) {
                const int v = peel.back();
                peel.pop_back();
                if (!alive[v])
                    continue;
                alive[v] = 0;
                for (int w : g.neighbors(v))
                    if (alive[w] && --degree[w] == 1)
                        peel.push_back(w);
            }
            int start = -1;
            for (int v = 0; v < n && start < 0; ++v)
                if (alive[v])
                    start = v;
            if (start < 0)
                return true;
            if (k == 0)
                return false;
            // Every vertex now has degree >= 2, so walking without stepping back closes a cycle.
            std::vector<int> seen(static_cast<size_t>(n), -1), walk;
            int prev = -1, v = start;
            while (seen[v] < 0) {
                seen[v] = static_cast<int>(walk.size());
                walk.push_back(v);
                int next = -1;
                for (int w : g.neighbors(v))
                    if (alive[w] && w != prev) {
                        next = w;
                        break;
                    }
                prev = v;
                v = next;
            }
            std::vector<int> cycle(walk.begin() + seen[v], walk.end());
            // A degree-2 vertex can be traded for a neighbour, so branch on the others.
            std::vector<int> branch;
            for (int c : cycle)
                if (degree[c] >= 3)
                    branch.push_back(c);
            if (branch.empty())
                branch.push_back(cycle.front());
            for (int c : branch) {
                auto next = alive;
                next[c] = 0;
                auto r = self(self, std::move(next), k - 1);
                if (!r || *r)
                    return r;
            }
            return false;
        };
        for (int k = 0; k <= n; ++k) {
            auto r = solve(solve, std::vector<char>(static_cast<size_t>(n), 1), k);
            if (!r)
                return std::nullopt;
            if (*r)
                return k;
        }
        return n;
    }

} // namespace

std::vector<Sequence> enumerate_valid_sequences(const Graph& g, const TrailDecomposition& d, SequenceElement from,
    SequenceElement to, int cap)
{
    std::vector<Sequence> out;
    if (cap < 1)
        return out;
    const auto inc = incidence(g, d);
    Sequence seq{from};
    std::vector<char> vertex_used(static_cast<size_t>(g.order()), 0);
    std::vector<char> trail_used(static_cast<size_t>(d.count()), 0);
    if (from.trail)
        trail_used[from.id] = 1;
    else
        vertex_used[from.id] = 1;

    auto has_trail = [&] { return std::any_of(seq.begin(), seq.end(), [](const SequenceElement& e) { return e.trail; }); };

    auto rec = [&](auto&& self) -> void {
        const SequenceElement last = seq.back();
        if (seq.size() > 1 || last.trail)
            if (last == to && has_trail())
                out.push_back(seq);
        if (static_cast<int>(seq.size()) >= cap)
            return;
        if (seq.size() > 1 && last == to)
            return;
        if (last.trail) {
            const auto& tr = d.trails[last.id];
            if (tr.kind == TrailKind::IsolatedCycle)
                return;
            // A trail leads on to the endpoint it was not entered from.
            std::vector<int> next;
            if (seq.size() == 1) {
                next.push_back(tr.front());
                if (tr.back() != tr.front())
                    next.push_back(tr.back());
            } else {
                next.push_back(trail_other_end(tr, seq[seq.size() - 2].id));
            }
            for (int v : next) {
                const bool closes = !from.trail && v == from.id;
                if (vertex_used[v] && !(closes && to == SequenceElement{false, v}))
                    continue;
                seq.push_back({false, v});
                const bool fresh = !vertex_used[v];
                vertex_used[v] = 1;
                self(self);
                if (fresh)
                    vertex_used[v] = 0;
                seq.pop_back();
            }
            return;
        }
        const int v = last.id;
        for (int t : inc[v]) {
            const auto& tr = d.trails[t];
            if (trail_used[t]) {
                // Only the first element may come back, as the last element, from its other end.
                const bool terminal = from.trail && from.id == t && to == SequenceElement{true, t};
                const bool other_end = tr.kind == TrailKind::Cycle || seq[1].id != v;
                if (!terminal || !other_end || seq.size() < 2)
                    continue;
                seq.push_back({true, t});
                out.push_back(seq);
                seq.pop_back();
                continue;
            }
            trail_used[t] = 1;
            seq.push_back({true, t});
            self(self);
            seq.pop_back();
            trail_used[t] = 0;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

    enum class AtomKind { Route, Free, CycleLoop, VertexK1, PointK1 };

    struct Attach
    {
        int trail = -1;
        int end = 0; ///< 0: trail front, 1: trail back
    };

    /// Placement of one skeleton edge (or isolated skeleton vertex) in one graph.
    struct Atom
    {
        AtomKind kind = AtomKind::Route;
        int component = -1;
        std::optional<Attach> head, tail; ///< skeleton endpoints inside these trails
        std::vector<int> vertices;        ///< non-degree-2 vertices in walk order
        std::vector<int> inner;           ///< trail between vertices[k] and vertices[k + 1]
        int trail = -1;                   ///< Free, CycleLoop, PointK1; also the vertex of VertexK1
        long long fixed = 0;              ///< total length of inner trails
        long long min_len = 0, max_len = 0;
        bool canonical = true; ///< false for the reversed copy of a route

        bool edge() const { return kind == AtomKind::Route || kind == AtomKind::Free || kind == AtomKind::CycleLoop; }
        bool loop() const
        {
            return kind == AtomKind::CycleLoop
                || (kind == AtomKind::Route && !head && !tail && vertices.size() > 1 && vertices.front() == vertices.back());
        }
        bool stacks() const { return kind == AtomKind::Free || kind == AtomKind::PointK1; }
        /// Vertex image of the first/last skeleton endpoint, -1 for a point inside a trail.
        int from() const
        {
            if (kind == AtomKind::VertexK1)
                return trail;
            return kind == AtomKind::Route && !head ? vertices.front() : -1;
        }
        int to() const
        {
            if (kind == AtomKind::VertexK1)
                return trail;
            return kind == AtomKind::Route && !tail ? vertices.back() : -1;
        }
        bool has_vertex_end() const { return from() >= 0 || to() >= 0; }
    };

    Atom reversed(const Atom& a)
    {
        Atom r = a;
        std::swap(r.head, r.tail);
        std::reverse(r.vertices.begin(), r.vertices.end());
        std::reverse(r.inner.begin(), r.inner.end());
        return r;
    }

    auto atom_key(const Atom& a)
    {
        auto attach = [](const std::optional<Attach>& x) { return x ? std::pair{x->trail, x->end} : std::pair{-1, -1}; };
        return std::tuple{static_cast<int>(a.kind), attach(a.head), a.vertices, a.inner, attach(a.tail), a.trail};
    }

    struct Side
    {
        const Graph& g;
        TrailDecomposition d;
        std::vector<std::vector<int>> inc;
        std::vector<int> component_of;   ///< vertex -> component
        std::vector<int> trail_component;
        std::vector<int> previous_copy;  ///< component -> previous identical component or -1
        int components = 0;
        std::vector<Atom> atoms;
        bool sequence_cut = false;

        Side(const Graph& graph, bool induced, int sequence_cap, bool canonical_only);

        long long trail_length(int t) const { return d.trails[t].length(); }
        bool isolated(int t) const { return d.trails[t].kind == TrailKind::IsolatedCycle; }
        int end_vertex(int t, int end) const { return end == 0 ? d.trails[t].front() : d.trails[t].back(); }

    private:
        void enumerate_routes(int sequence_cap);
        void add_route(Atom a);
    };

    Side::Side(const Graph& graph, bool induced, int sequence_cap, bool canonical_only) : g(graph), d(degree2_trails(graph))
    {
        inc = incidence(g, d);
        component_of.assign(static_cast<size_t>(g.order()), -1);
        const auto comps = g.components();
        components = static_cast<int>(comps.size());
        std::vector<Graph> local;
        for (int c = 0; c < components; ++c) {
            for (int v : comps[c])
                component_of[v] = c;
            local.push_back(induced_subgraph(g, comps[c]));
            previous_copy.push_back(-1);
            for (int e = c - 1; e >= 0; --e)
                if (local[e] == local[c]) {
                    previous_copy[c] = e;
                    break;
                }
        }
        for (const auto& t : d.trails)
            trail_component.push_back(component_of[t.vertices[1]]);

        enumerate_routes(sequence_cap);
        for (int t = 0; t < d.count(); ++t) {
            const long long len = trail_length(t);
            Atom a;
            a.component = trail_component[t];
            a.trail = t;
            if (isolated(t)) {
                a.kind = AtomKind::CycleLoop;
                a.min_len = a.max_len = len;
                atoms.push_back(a);
                a.kind = AtomKind::Free;
                a.min_len = 1;
                a.max_len = len - (induced ? 2 : 1);
                atoms.push_back(a);
            } else if (len >= 3) {
                a.kind = AtomKind::Free;
                a.min_len = 1;
                a.max_len = len - 2;
                atoms.push_back(a);
            }
            if (induced && (isolated(t) || len >= 2)) {
                a.kind = AtomKind::PointK1;
                a.min_len = a.max_len = 0;
                atoms.push_back(a);
            }
        }
        if (induced)
            for (int v : d.branch) {
                Atom a;
                a.kind = AtomKind::VertexK1;
                a.component = component_of[v];
                a.trail = v;
                atoms.push_back(a);
            }
        std::erase_if(atoms, [](const Atom& a) { return a.edge() && a.min_len > a.max_len; });

        // Side 1 keeps one orientation per route; side 2 keeps both where it matters.
        std::vector<Atom> kept;
        for (auto& a : atoms) {
            if (a.kind != AtomKind::Route || a.loop()) {
                if (a.kind != AtomKind::Route || atom_key(a) <= atom_key(reversed(a)))
                    kept.push_back(a);
                continue;
            }
            const auto key = atom_key(a), rev = atom_key(reversed(a));
            if (key < rev)
                kept.push_back(a);
            else if (!canonical_only && key != rev && a.has_vertex_end()) {
                a.canonical = false;
                kept.push_back(a);
            }
        }
        atoms = std::move(kept);
        std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.component < b.component; });
    }

    void Side::add_route(Atom a)
    {
        a.kind = AtomKind::Route;
        a.component = component_of[a.vertices.front()];
        a.fixed = 0;
        for (int t : a.inner)
            a.fixed += trail_length(t);
        a.min_len = a.max_len = a.fixed;
        for (const auto* at : {&a.head, &a.tail})
            if (*at) {
                a.min_len += 1;
                a.max_len += trail_length((*at)->trail) - 1;
            }
        if (a.min_len >= 1)
            atoms.push_back(std::move(a));
    }

    void Side::enumerate_routes(int cap)
    {
        std::vector<char> vertex_used(static_cast<size_t>(g.order()), 0);
        std::vector<char> trail_used(static_cast<size_t>(d.count()), 0);
        Atom cur;

        auto elements = [&] { return static_cast<int>(cur.vertices.size() + cur.inner.size()) + (cur.head ? 1 : 0); };

        auto extend = [&](auto&& self) -> void {
            const int x = cur.vertices.back();
            const bool closed = cur.vertices.size() > 1 && cur.vertices.front() == x;
            const int trails = static_cast<int>(cur.inner.size()) + (cur.head ? 1 : 0);
            if (trails > 0 && (!closed || !cur.head))
                add_route(cur);
            if (closed)
                return;
            // Tail into a trail at x.
            for (int t : inc[x])
                for (int end = 0; end < 2; ++end) {
                    if (end_vertex(t, end) != x || trail_length(t) < 2 || trail_used[t])
                        continue;
                    if (cur.head && cur.head->trail == t && cur.head->end == end)
                        continue;
                    if (d.trails[t].kind == TrailKind::Path && end == 1 && d.trails[t].front() == x)
                        continue;
                    if (elements() + 1 > cap) {
                        sequence_cut = true;
                        continue;
                    }
                    cur.tail = Attach{t, end};
                    add_route(cur);
                    cur.tail.reset();
                }
            // Whole trail to the next vertex.
            for (int t : inc[x]) {
                if (trail_used[t] || (cur.head && cur.head->trail == t))
                    continue;
                const int y = trail_other_end(d.trails[t], x);
                const bool closes = !cur.head && y == cur.vertices.front();
                if (vertex_used[y] && !closes)
                    continue;
                if (elements() + 2 > cap) {
                    sequence_cut = true;
                    continue;
                }
                trail_used[t] = 1;
                cur.inner.push_back(t);
                cur.vertices.push_back(y);
                const bool fresh = !vertex_used[y];
                vertex_used[y] = 1;
                self(self);
                if (fresh)
                    vertex_used[y] = 0;
                cur.vertices.pop_back();
                cur.inner.pop_back();
                trail_used[t] = 0;
            }
        };

        auto start = [&](int x) {
            vertex_used[x] = 1;
            cur.vertices = {x};
            extend(extend);
            vertex_used[x] = 0;
            cur = Atom{};
        };
        for (int x : d.branch) {
            if (cap >= 2)
                start(x);
            for (int t : inc[x])
                for (int end = 0; end < 2; ++end) {
                    if (end_vertex(t, end) != x || trail_length(t) < 2)
                        continue;
                    if (d.trails[t].kind == TrailKind::Path && end == 1 && d.trails[t].front() == x)
                        continue;
                    if (cap < 2) {
                        sequence_cut = true;
                        continue;
                    }
                    cur.head = Attach{t, end};
                    start(x);
                }
        }
    }

} // namespace

namespace {

    struct Element
    {
        int a1, a2;
        bool repeat;
    };

    struct SideState
    {
        std::vector<int> sv;       ///< vertex -> skeleton vertex or -1
        std::vector<char> inner_v; ///< vertex lies strictly inside a placed walk
        std::vector<char> inner_t, loop_t;
        std::vector<std::array<int, 2>> attach; ///< trail end -> chosen item or -1
        std::vector<int> blocks;
        std::vector<char> touched; ///< component

        explicit SideState(const Side& s)
            : sv(static_cast<size_t>(s.g.order()), -1), inner_v(static_cast<size_t>(s.g.order()), 0),
              inner_t(static_cast<size_t>(s.d.count()), 0), loop_t(static_cast<size_t>(s.d.count()), 0),
              attach(static_cast<size_t>(s.d.count()), {-1, -1}), blocks(static_cast<size_t>(s.d.count()), 0),
              touched(static_cast<size_t>(s.components), 0)
        {
        }

        bool used(int v) const { return sv[v] >= 0 || inner_v[v]; }
    };

    struct State
    {
        std::array<SideState, 2> side;
        std::vector<std::array<int, 2>> images; ///< skeleton vertex -> image per side (-1: point)
        std::vector<int> chosen;                ///< element ids
        std::vector<std::array<int, 2>> ends;   ///< skeleton endpoints per chosen item
        int edges = 0;
    };

    /// Inner (non-endpoint) vertices of a route walk.
    template <class F>
    void for_inner_vertices(const Atom& a, F&& f)
    {
        const int n = static_cast<int>(a.vertices.size());
        const int first = a.head ? 0 : 1, last = a.tail ? n - 1 : n - 2;
        for (int k = first; k <= last; ++k)
            f(a.vertices[k]);
    }

    template <bool Commit>
    bool claim(SideState& st, const Atom& a, int item)
    {
        switch (a.kind) {
        case AtomKind::Route: {
            for (const auto* at : {&a.head, &a.tail})
                if (*at) {
                    const int t = (*at)->trail;
                    if (st.inner_t[t] || st.loop_t[t] || st.attach[t][(*at)->end] >= 0)
                        return false;
                    if constexpr (Commit)
                        st.attach[t][(*at)->end] = item;
                }
            for (int t : a.inner) {
                if (st.inner_t[t] || st.loop_t[t] || st.attach[t][0] >= 0 || st.attach[t][1] >= 0 || st.blocks[t] > 0)
                    return false;
                if constexpr (Commit)
                    st.inner_t[t] = 1;
            }
            bool ok = true;
            for_inner_vertices(a, [&](int v) {
                if (st.used(v))
                    ok = false;
                if constexpr (Commit)
                    st.inner_v[v] = 1;
            });
            return ok;
        }
        case AtomKind::Free:
        case AtomKind::PointK1:
            if (st.inner_t[a.trail] || st.loop_t[a.trail])
                return false;
            if constexpr (Commit)
                ++st.blocks[a.trail];
            return true;
        case AtomKind::CycleLoop:
            if (st.loop_t[a.trail] || st.blocks[a.trail] > 0)
                return false;
            if constexpr (Commit)
                st.loop_t[a.trail] = 1;
            return true;
        case AtomKind::VertexK1:
            return true;
        }
        return false;
    }

    /// Skeleton vertex for the image pair, -1 on conflict. Commit creates it.
    template <bool Commit>
    int bind(State& st, int v1, int v2)
    {
        if (v1 >= 0) {
            if (int s = st.side[0].sv[v1]; s >= 0)
                return v2 >= 0 && st.images[s][1] == v2 ? s : -1;
            if (st.side[0].inner_v[v1])
                return -1;
        }
        if (v2 >= 0 && st.side[1].used(v2))
            return -1;
        const int s = static_cast<int>(st.images.size());
        if constexpr (Commit) {
            st.images.push_back({v1, v2});
            if (v1 >= 0)
                st.side[0].sv[v1] = s;
            if (v2 >= 0)
                st.side[1].sv[v2] = s;
        }
        return s;
    }

    struct Evaluation
    {
        long long value = 0;
        bool pending = false; ///< an unoccupied length-1 trail joins two used vertices
        IpResult ip;
        std::vector<int> length_var;                   ///< chosen item -> variable or -1
        std::array<std::vector<std::array<int, 2>>, 2> portion; ///< per side, chosen item -> head/tail variable
    };

} // namespace

namespace {

    class Search
    {
    public:
        Search(const Graph& g1, const Graph& g2, bool induced, const MlCaps& caps)
            : sides_{Side(g1, induced, caps.sequence_length, true), Side(g2, induced, caps.sequence_length, false)},
              induced_(induced), gap_(induced ? 2 : 1), caps_(caps)
        {
            const auto& s1 = sides_[0];
            const auto& s2 = sides_[1];
            for (int a1 = 0; a1 < static_cast<int>(s1.atoms.size()); ++a1)
                for (int a2 = 0; a2 < static_cast<int>(s2.atoms.size()); ++a2) {
                    const Atom& x = s1.atoms[a1];
                    const Atom& y = s2.atoms[a2];
                    if (x.edge() != y.edge() || x.loop() != y.loop())
                        continue;
                    if (x.edge() && std::max(x.min_len, y.min_len) > std::min(x.max_len, y.max_len))
                        continue;
                    if (!y.canonical && !x.has_vertex_end())
                        continue;
                    universe_.push_back({a1, a2, x.stacks() && y.stacks()});
                }
            // Long vertex-to-vertex pairs first so the first descent lands near the optimum.
            auto rank = [&](const Element& el) {
                const Atom& x = s1.atoms[el.a1];
                const Atom& y = s2.atoms[el.a2];
                const int attached = (x.head ? 1 : 0) + (x.tail ? 1 : 0) + (y.head ? 1 : 0) + (y.tail ? 1 : 0);
                const int free = (x.kind == AtomKind::Route ? 0 : 1) + (y.kind == AtomKind::Route ? 0 : 1);
                return std::tuple(free, attached, x.inner.size() + y.inner.size(), -std::min(x.max_len, y.max_len));
            };
            std::stable_sort(universe_.begin(), universe_.end(),
                [&](const Element& a, const Element& b) { return rank(a) < rank(b); });
            upper_ = induced ? std::min(g1.order(), g2.order()) : std::min(g1.size(), g2.size());
            capped_ = s1.sequence_cut || s2.sequence_cut;
            restrict_to_forests(g1, g2);
        }

        MlResult run()
        {
            State st{{SideState(sides_[0]), SideState(sides_[1])}, {}, {}, {}, 0};
            result_.certificate.mode = induced_ ? Mode::Induced : Mode::Subgraph;
            std::vector<int> all(universe_.size());
            std::iota(all.begin(), all.end(), 0);
            if (upper_ > 0)
                rec(st, all, 0);
            result_.within_caps_only = capped_;
            return result_;
        }

    private:
        std::array<Side, 2> sides_;
        bool induced_;
        long long gap_;
        MlCaps caps_;
        std::vector<Element> universe_;
        long long upper_ = 0;
        long long best_ = 0;
        long long nodes_ = 0;
        bool capped_ = false;
        bool done_ = false;
        bool forest_ = false;
        MlResult result_;

        const Atom& atom(int side, int item, const State& st) const
        {
            const Element& el = universe_[st.chosen[item]];
            return sides_[side].atoms[side == 0 ? el.a1 : el.a2];
        }

        bool first_use_ok(const State& st, int side, int component) const
        {
            if (st.side[side].touched[component])
                return true;
            const int prev = sides_[side].previous_copy[component];
            return prev < 0 || st.side[side].touched[prev];
        }

        // Without a common cycle length the common subgraph is a forest, which caps it by
        // the largest forest inside each side.
        void restrict_to_forests(const Graph& g1, const Graph& g2)
        {
            constexpr long long kBudget = 2'000'000;
            const auto c1 = cycle_lengths(g1, induced_, kBudget);
            const auto c2 = c1 ? cycle_lengths(g2, induced_, kBudget) : std::nullopt;
            if (!c2)
                return;
            for (size_t L = 3; L < std::min(c1->size(), c2->size()); ++L)
                if ((*c1)[L] && (*c2)[L])
                    return;
            forest_ = true;
            for (const Graph* g : {&g1, &g2}) {
                if (induced_) {
                    if (auto f = feedback_vertex_number(*g, kBudget))
                        upper_ = std::min<long long>(upper_, g->order() - *f);
                } else {
                    upper_ = std::min<long long>(upper_, g->order() - static_cast<long long>(g->components().size()));
                }
            }
        }

        bool connected(const State& st, int a, int b) const
        {
            std::vector<char> seen(st.images.size(), 0);
            std::vector<int> stack{a};
            seen[a] = 1;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                if (v == b)
                    return true;
                for (const auto& [p, q] : st.ends)
                    for (auto [u, w] : {std::pair{p, q}, std::pair{q, p}})
                        if (u == v && !seen[w]) {
                            seen[w] = 1;
                            stack.push_back(w);
                        }
            }
            return false;
        }

        bool fits(State& st, int e) const
        {
            const Element& el = universe_[e];
            const Atom& x = sides_[0].atoms[el.a1];
            const Atom& y = sides_[1].atoms[el.a2];
            const int item = static_cast<int>(st.chosen.size());
            if (!claim<false>(st.side[0], x, item) || !claim<false>(st.side[1], y, item))
                return false;
            const int s = bind<false>(st, x.from(), y.from());
            if (s < 0 || (!x.edge() && s != static_cast<int>(st.images.size())))
                return false;
            if (!x.edge())
                return true;
            if (x.loop())
                return !forest_;
            const int t = bind<false>(st, x.to(), y.to());
            if (t < 0)
                return false;
            const int fresh = static_cast<int>(st.images.size());
            return !forest_ || s == fresh || t == fresh || (s != t && !connected(st, s, t));
        }

        bool apply(State& st, int e)
        {
            const Element& el = universe_[e];
            const Atom& x = sides_[0].atoms[el.a1];
            const Atom& y = sides_[1].atoms[el.a2];
            const int item = static_cast<int>(st.chosen.size());
            st.side[0].touched[x.component] = 1;
            st.side[1].touched[y.component] = 1;
            claim<true>(st.side[0], x, item);
            claim<true>(st.side[1], y, item);
            const int from = bind<true>(st, x.from(), y.from());
            int to = from;
            if (x.edge() && !x.loop())
                to = bind<true>(st, x.to(), y.to());
            if (to < 0)
                return false;
            st.chosen.push_back(e);
            st.ends.push_back({from, to});
            st.edges += x.edge() ? 1 : 0;
            if (static_cast<int>(st.images.size()) > caps_.skeleton_vertices || st.edges > caps_.skeleton_edges) {
                capped_ = true;
                return false;
            }
            return true;
        }

        bool first_use_ok(const State& st, int e) const
        {
            const Element& el = universe_[e];
            return first_use_ok(st, 0, sides_[0].atoms[el.a1].component)
                && first_use_ok(st, 1, sides_[1].atoms[el.a2].component);
        }

        // candidates[start..] are the elements still open to this subtree. Conflicts on
        // claimed resources never go away, so each level keeps only the survivors.
        void rec(State& st, const std::vector<int>& candidates, size_t start)
        {
            if (++nodes_ > caps_.search_nodes)
                throw ResourceError("ml search node cap " + std::to_string(caps_.search_nodes) + " exceeded");
            if (std::min(coverage(st, 0), coverage(st, 1)) <= best_)
                return;
            if (!st.chosen.empty()) {
                auto ev = evaluate(st);
                if (!ev)
                    return;
                ++result_.states;
                if (!ev->pending && ev->value > best_) {
                    best_ = ev->value;
                    result_.certificate = materialize(st, *ev);
                    result_.skeleton_vertices = static_cast<int>(st.images.size());
                    result_.skeleton_edges = st.edges;
                    if (best_ >= upper_) {
                        done_ = true;
                        return;
                    }
                }
            }
            std::vector<int> live;
            for (size_t i = start; i < candidates.size(); ++i)
                if (fits(st, candidates[i]))
                    live.push_back(candidates[i]);
            for (size_t i = 0; i < live.size() && !done_; ++i) {
                const int e = live[i];
                if (!first_use_ok(st, e))
                    continue;
                State next = st;
                if (!apply(next, e))
                    continue;
                rec(next, live, universe_[e].repeat ? i : i + 1);
            }
        }

        long long coverage(const State& st, int s) const;
        std::optional<Evaluation> evaluate(const State& st) const;
        EmbeddingCertificate materialize(const State& st, const Evaluation& ev) const;
    };

} // namespace

namespace {

    // Edges (vertices when induced) of one side that any extension of st can still cover.
    // Every term only shrinks as items are added.
    long long Search::coverage(const State& st, int s) const
    {
        const Side& side = sides_[s];
        const SideState& ss = st.side[s];
        long long total = induced_ ? side.g.order() : 0;
        for (int t = 0; t < side.d.count(); ++t) {
            const long long len = side.trail_length(t);
            const bool isolated = side.isolated(t);
            const long long interior = isolated ? len : len - 1;
            const long long k = ss.blocks[t];
            const bool attached = ss.attach[t][0] >= 0 || ss.attach[t][1] >= 0;
            long long cap;
            // A walk can still run through an untouched trail unless an end lies inside another walk.
            const bool through = isolated
                || (!ss.inner_v[side.end_vertex(t, 0)] && !ss.inner_v[side.end_vertex(t, 1)]);
            if (ss.inner_t[t] || ss.loop_t[t] || (k == 0 && !attached && through)) {
                cap = induced_ ? interior : len;
            } else {
                long long rhs;
                if (isolated) {
                    rhs = len - gap_ * k;
                } else {
                    const bool used0 = ss.used(side.end_vertex(t, 0)), used1 = ss.used(side.end_vertex(t, 1));
                    rhs = gap_ - gap_ * k - (used0 ? gap_ : 1) + (used1 ? len - gap_ : len - 1);
                }
                cap = std::max(0LL, induced_ ? rhs + k : rhs);
                if (induced_)
                    cap = std::min(cap, interior);
            }
            if (induced_)
                total -= interior - cap;
            else
                total += cap;
        }
        return total;
    }

    std::optional<Evaluation> Search::evaluate(const State& st) const
    {
        Evaluation ev;
        BoundedIntegerProgram ip;
        const int items = static_cast<int>(st.chosen.size());
        ev.length_var.assign(static_cast<size_t>(items), -1);
        for (int j = 0; j < items; ++j) {
            const Atom& x = atom(0, j, st);
            const Atom& y = atom(1, j, st);
            if (!x.edge())
                continue;
            const long long lo = std::max(x.min_len, y.min_len), hi = std::min(x.max_len, y.max_len);
            ev.length_var[j] = ip.add_variable(lo, hi, "l" + std::to_string(j));
            ip.add_linear(ev.length_var[j], 1);
        }
        for (int s = 0; s < 2; ++s) {
            const Side& side = sides_[s];
            const SideState& ss = st.side[s];
            auto& portion = ev.portion[s];
            portion.assign(static_cast<size_t>(items), {-1, -1});
            for (int j = 0; j < items; ++j) {
                const Atom& a = atom(s, j, st);
                if (a.kind != AtomKind::Route)
                    continue;
                std::vector<LinearTerm> terms{{ev.length_var[j], 1}};
                int k = 0;
                for (const auto* at : {&a.head, &a.tail}) {
                    if (*at) {
                        portion[j][k] = ip.add_variable(1, side.trail_length((*at)->trail) - 1);
                        terms.push_back({portion[j][k], -1});
                    }
                    ++k;
                }
                ip.add_eq(terms, a.fixed);
            }
            // Packing along every trail that is not wholly inside one walk.
            for (int t = 0; t < side.d.count(); ++t) {
                if (ss.inner_t[t] || ss.loop_t[t])
                    continue;
                std::vector<LinearTerm> terms;
                for (int j = 0; j < items; ++j) {
                    const Atom& a = atom(s, j, st);
                    if (a.kind == AtomKind::Free && a.trail == t)
                        terms.push_back({ev.length_var[j], 1});
                }
                const long long len = side.trail_length(t);
                const long long k = ss.blocks[t];
                long long rhs;
                if (side.isolated(t)) {
                    if (k == 0)
                        continue;
                    rhs = len - gap_ * k;
                } else {
                    const bool used0 = ss.used(side.end_vertex(t, 0)), used1 = ss.used(side.end_vertex(t, 1));
                    for (int end = 0; end < 2; ++end)
                        if (int item = ss.attach[t][end]; item >= 0) {
                            const Atom& a = atom(s, item, st);
                            const bool is_head = a.head && a.head->trail == t && a.head->end == end;
                            terms.push_back({portion[item][is_head ? 0 : 1], 1});
                        }
                    rhs = gap_ - gap_ * k - (used0 ? gap_ : 1) + (used1 ? len - gap_ : len - 1);
                }
                if (terms.empty()) {
                    // Only a later walk through this edge can repair it, so keep extending.
                    if (rhs < 0 && k == 0 && len == 1 && !side.isolated(t))
                        ev.pending = true;
                    else if (rhs < 0)
                        return std::nullopt;
                    continue;
                }
                ip.add_le(terms, rhs);
            }
        }
        ev.ip = solve_ip(ip);
        if (!ev.ip.feasible)
            return std::nullopt;
        ev.value = ev.ip.value;
        if (induced_)
            ev.value += static_cast<long long>(st.images.size()) - st.edges;
        return ev;
    }

    EmbeddingCertificate Search::materialize(const State& st, const Evaluation& ev) const
    {
        const int items = static_cast<int>(st.chosen.size());
        auto value_of = [&](int var) { return var >= 0 ? ev.ip.x[var] : 0LL; };
        std::array<std::vector<std::vector<int>>, 2> walks;
        for (int s = 0; s < 2; ++s) {
            const Side& side = sides_[s];
            const SideState& ss = st.side[s];
            std::vector<long long> cursor(static_cast<size_t>(side.d.count()), 0);
            for (int t = 0; t < side.d.count(); ++t) {
                if (side.isolated(t))
                    continue;
                long long a = 0;
                if (int item = ss.attach[t][0]; item >= 0) {
                    const Atom& at = atom(s, item, st);
                    const bool is_head = at.head && at.head->trail == t && at.head->end == 0;
                    a = value_of(ev.portion[s][item][is_head ? 0 : 1]);
                }
                cursor[t] = ss.used(side.end_vertex(t, 0)) ? a + gap_ : 1;
            }
            auto& out = walks[s];
            for (int j = 0; j < items; ++j) {
                const Atom& a = atom(s, j, st);
                const long long len = value_of(ev.length_var[j]);
                std::vector<int> w;
                auto trail_at = [&](int t, long long pos) {
                    const auto& tv = side.d.trails[t].vertices;
                    const long long l = side.trail_length(t);
                    return tv[static_cast<size_t>(side.isolated(t) ? pos % l : pos)];
                };
                switch (a.kind) {
                case AtomKind::Route: {
                    if (a.head) {
                        const int t = a.head->trail;
                        const long long l = side.trail_length(t), p = value_of(ev.portion[s][j][0]);
                        if (a.head->end == 0)
                            for (long long k = p; k >= 1; --k)
                                w.push_back(trail_at(t, k));
                        else
                            for (long long k = l - p; k <= l - 1; ++k)
                                w.push_back(trail_at(t, k));
                    }
                    w.push_back(a.vertices.front());
                    for (size_t k = 0; k < a.inner.size(); ++k) {
                        const auto& tv = side.d.trails[a.inner[k]].vertices;
                        if (tv.front() == a.vertices[k])
                            w.insert(w.end(), tv.begin() + 1, tv.end());
                        else
                            w.insert(w.end(), tv.rbegin() + 1, tv.rend());
                    }
                    if (a.tail) {
                        const int t = a.tail->trail;
                        const long long l = side.trail_length(t), q = value_of(ev.portion[s][j][1]);
                        if (a.tail->end == 0)
                            for (long long k = 1; k <= q; ++k)
                                w.push_back(trail_at(t, k));
                        else
                            for (long long k = l - 1; k >= l - q; --k)
                                w.push_back(trail_at(t, k));
                    }
                    break;
                }
                case AtomKind::Free:
                case AtomKind::PointK1: {
                    const long long begin = cursor[a.trail];
                    for (long long k = begin; k <= begin + len; ++k)
                        w.push_back(trail_at(a.trail, k));
                    cursor[a.trail] = begin + len + gap_;
                    break;
                }
                case AtomKind::CycleLoop:
                    for (long long k = 0; k <= len; ++k)
                        w.push_back(trail_at(a.trail, k));
                    break;
                case AtomKind::VertexK1:
                    w.push_back(a.trail);
                    break;
                }
                if (static_cast<long long>(w.size()) != len + 1)
                    throw ContractError("ml walk length disagrees with its length variable");
                out.push_back(std::move(w));
            }
        }

        const int skeleton = static_cast<int>(st.images.size());
        std::array<std::vector<int>, 2> eta{std::vector<int>(static_cast<size_t>(skeleton), -1),
            std::vector<int>(static_cast<size_t>(skeleton), -1)};
        std::vector<Edge> h_edges;
        int h_order = skeleton;
        for (int j = 0; j < items; ++j) {
            const auto& w1 = walks[0][j];
            const auto& w2 = walks[1][j];
            const int len = static_cast<int>(w1.size()) - 1;
            std::vector<int> h_walk{st.ends[j][0]};
            for (int k = 1; k < len; ++k) {
                h_walk.push_back(h_order++);
                eta[0].push_back(w1[k]);
                eta[1].push_back(w2[k]);
            }
            if (len > 0)
                h_walk.push_back(st.ends[j][1]);
            for (int s = 0; s < 2; ++s) {
                const auto& w = walks[s][j];
                for (auto [sv, img] : {std::pair{st.ends[j][0], w.front()}, std::pair{st.ends[j][1], w.back()}}) {
                    if (eta[s][sv] >= 0 && eta[s][sv] != img)
                        throw ContractError("ml skeleton vertex mapped twice");
                    eta[s][sv] = img;
                }
            }
            for (int k = 0; k < len; ++k)
                h_edges.push_back({std::min(h_walk[k], h_walk[k + 1]), std::max(h_walk[k], h_walk[k + 1])});
        }

        EmbeddingCertificate cert;
        if (induced_) {
            cert = induced_certificate(sides_[0].g, eta[0], eta[1]);
            if (cert.h.size() != static_cast<int>(h_edges.size()))
                throw ContractError("ml length program admits a chord");
        } else {
            cert.mode = Mode::Subgraph;
            cert.h = Graph(h_order);
            for (auto [u, v] : h_edges)
                cert.h.add_edge(u, v);
            cert.eta1 = std::move(eta[0]);
            cert.eta2 = std::move(eta[1]);
            cert.value = cert.h.size();
        }
        if (cert.value != ev.value)
            throw ContractError("ml certificate value disagrees with the length program");
        return cert;
    }

} // namespace

MlResult mcs_ml(const Graph& g1, const Graph& g2, const MlCaps& caps)
{
    return Search(g1, g2, false, caps).run();
}

MlResult mcis_ml(const Graph& g1, const Graph& g2, const MlCaps& caps)
{
    return Search(g1, g2, true, caps).run();
}

} // namespace mcs
