#include "mcsolve/solver_nd.hpp"

#include "mcsolve/errors.hpp"
#include "mcsolve/ipsolve.hpp"

#include <algorithm>

namespace mcs {

namespace {

    struct Grid
    {
        const TwinClassPartition& t1;
        const TwinClassPartition& t2;
        int p, q;

        int row(int c) const { return c / q; }
        int col(int c) const { return c % q; }
        long long cell_cap(int c) const
        {
            return static_cast<long long>(std::min(t1.classes[row(c)].size(), t2.classes[col(c)].size()));
        }
        bool clique_agrees(int c) const { return t1.clique[row(c)] == t2.clique[col(c)]; }
        bool pair_agrees(int a, int b) const
        {
            return t1.adjacent_pair(row(a), row(b)) == t2.adjacent_pair(col(a), col(b));
        }
    };

    /// Draws x[c] lowest unused vertices from both classes of every cell.
    std::pair<std::vector<int>, std::vector<int>> materialize(const Grid& grid, const std::vector<long long>& x)
    {
        std::vector<size_t> used1(static_cast<size_t>(grid.p), 0), used2(static_cast<size_t>(grid.q), 0);
        std::vector<int> image1, image2;
        for (int c = 0; c < grid.p * grid.q; ++c)
            for (long long k = 0; k < x[c]; ++k) {
                image1.push_back(grid.t1.classes[grid.row(c)][used1[grid.row(c)]++]);
                image2.push_back(grid.t2.classes[grid.col(c)][used2[grid.col(c)]++]);
            }
        return {image1, image2};
    }

    struct BranchSearch
    {
        const Graph& g1;
        const Grid& grid;
        long long cap;
        const std::function<void(const EmbeddingCertificate&)>& on_branch;
        std::vector<int> state;
        std::vector<long long> row_low, col_low;
        NdResult result;
        long long best = -1;

        long long upper_bound(int next) const
        {
            long long rows = 0;
            for (int i = 0; i < grid.p; ++i) {
                long long room = 0;
                for (int j = 0; j < grid.q; ++j) {
                    const int c = i * grid.q + j;
                    room += c >= next || state[c] == 2 ? grid.cell_cap(c) : state[c];
                }
                rows += std::min<long long>(room, static_cast<long long>(grid.t1.classes[i].size()));
            }
            return rows;
        }

        void solve_leaf()
        {
            ++result.branches;
            BoundedIntegerProgram ip;
            std::vector<int> var(state.size(), -1);
            for (size_t c = 0; c < state.size(); ++c)
                if (state[c] == 1)
                    var[c] = ip.add_variable(1, 1);
                else if (state[c] == 2)
                    var[c] = ip.add_variable(2, grid.cell_cap(static_cast<int>(c)));
            for (int v = 0; v < ip.variables(); ++v)
                ip.add_linear(v, 1);
            for (int i = 0; i < grid.p; ++i) {
                std::vector<LinearTerm> terms;
                for (int j = 0; j < grid.q; ++j)
                    if (int v = var[i * grid.q + j]; v >= 0)
                        terms.push_back({v, 1});
                if (!terms.empty())
                    ip.add_le(terms, static_cast<long long>(grid.t1.classes[i].size()));
            }
            for (int j = 0; j < grid.q; ++j) {
                std::vector<LinearTerm> terms;
                for (int i = 0; i < grid.p; ++i)
                    if (int v = var[i * grid.q + j]; v >= 0)
                        terms.push_back({v, 1});
                if (!terms.empty())
                    ip.add_le(terms, static_cast<long long>(grid.t2.classes[j].size()));
            }
            auto r = solve_ip(ip);
            if (!r.feasible)
                return;
            std::vector<long long> x(state.size(), 0);
            for (size_t c = 0; c < state.size(); ++c)
                if (var[c] >= 0)
                    x[c] = r.x[var[c]];
            auto [image1, image2] = materialize(grid, x);
            auto cert = induced_certificate(g1, std::move(image1), std::move(image2));
            if (on_branch)
                on_branch(cert);
            if (cert.value > best) {
                best = cert.value;
                result.certificate = std::move(cert);
            }
        }

        void run(int c)
        {
            if (++result.nodes > cap)
                throw ResourceError("nd branch cap " + std::to_string(cap) + " exceeded with p*q = "
                    + std::to_string(grid.p) + "*" + std::to_string(grid.q) + " cells");
            if (!on_branch && upper_bound(c) <= best)
                return;
            if (c == grid.p * grid.q) {
                solve_leaf();
                return;
            }
            const int i = grid.row(c), j = grid.col(c);
            for (int s : {1, 2, 0}) {
                if (s == 2 && (grid.cell_cap(c) < 2 || !grid.clique_agrees(c)))
                    continue;
                if (s > 0) {
                    const long long low = s;
                    if (row_low[i] + low > static_cast<long long>(grid.t1.classes[i].size())
                        || col_low[j] + low > static_cast<long long>(grid.t2.classes[j].size()))
                        continue;
                    bool ok = true;
                    for (int d = 0; d < c && ok; ++d)
                        ok = state[d] == 0 || grid.pair_agrees(d, c);
                    if (!ok)
                        continue;
                    row_low[i] += low;
                    col_low[j] += low;
                }
                state[c] = s;
                run(c + 1);
                if (s > 0) {
                    row_low[i] -= s;
                    col_low[j] -= s;
                }
                state[c] = 0;
            }
        }
    };

} // namespace

bool nd_assignment_admissible(const TwinClassPartition& t1, const TwinClassPartition& t2, const std::vector<int>& state)
{
    Grid grid{t1, t2, t1.count(), t2.count()};
    if (static_cast<int>(state.size()) != grid.p * grid.q)
        throw ContractError("assignment size must be p*q");
    for (int c = 0; c < grid.p * grid.q; ++c) {
        if (state[c] == 2 && !grid.clique_agrees(c))
            return false;
        for (int d = 0; d < c; ++d)
            if (state[c] != 0 && state[d] != 0 && !grid.pair_agrees(c, d))
                return false;
    }
    return true;
}

NdResult mcis_nd(const Graph& g1, const Graph& g2, long long branch_cap,
    const std::function<void(const EmbeddingCertificate&)>& on_branch)
{
    const auto t1 = twin_classes(g1);
    const auto t2 = twin_classes(g2);
    Grid grid{t1, t2, t1.count(), t2.count()};
    BranchSearch search{g1, grid, branch_cap, on_branch, std::vector<int>(static_cast<size_t>(grid.p * grid.q), 0),
        std::vector<long long>(static_cast<size_t>(grid.p), 0), std::vector<long long>(static_cast<size_t>(grid.q), 0),
        {}, -1};
    search.result.certificate = induced_certificate(g1, {}, {});
    search.run(0);
    return search.result;
}

NdResult mcs_nd(const Graph& g1, const Graph& g2, int variable_cap)
{
    const auto t1 = twin_classes(g1);
    const auto t2 = twin_classes(g2);
    Grid grid{t1, t2, t1.count(), t2.count()};
    const int cells = grid.p * grid.q;
    if (cells > variable_cap)
        throw ResourceError("nd variable cap " + std::to_string(variable_cap) + " exceeded with p*q = "
            + std::to_string(grid.p) + "*" + std::to_string(grid.q));

    BoundedIntegerProgram ip;
    for (int c = 0; c < cells; ++c)
        ip.add_variable(0, grid.cell_cap(c), "x" + std::to_string(grid.row(c)) + "_" + std::to_string(grid.col(c)));
    for (int i = 0; i < grid.p; ++i) {
        std::vector<LinearTerm> terms;
        for (int j = 0; j < grid.q; ++j)
            terms.push_back({i * grid.q + j, 1});
        ip.add_le(terms, static_cast<long long>(t1.classes[i].size()));
    }
    for (int j = 0; j < grid.q; ++j) {
        std::vector<LinearTerm> terms;
        for (int i = 0; i < grid.p; ++i)
            terms.push_back({i * grid.q + j, 1});
        ip.add_le(terms, static_cast<long long>(t2.classes[j].size()));
    }
    // Objective 2|E(H)|.
    for (int c = 0; c < cells; ++c) {
        if (t1.clique[grid.row(c)] && t2.clique[grid.col(c)]) {
            ip.add_quadratic(c, c, 1);
            ip.add_linear(c, -1);
        }
        for (int d = c + 1; d < cells; ++d)
            if (t1.adjacent_pair(grid.row(c), grid.row(d)) && t2.adjacent_pair(grid.col(c), grid.col(d)))
                ip.add_quadratic(c, d, 2);
    }
    auto r = solve_ip(ip);
    if (r.value % 2 != 0)
        throw ContractError("mcs_nd objective must be even");

    NdResult res;
    res.nodes = r.nodes;
    res.branches = 1;
    auto [image1, image2] = materialize(grid, r.x);
    auto& cert = res.certificate;
    cert.mode = Mode::Subgraph;
    cert.h = Graph(static_cast<int>(image1.size()));
    for (size_t u = 0; u < image1.size(); ++u)
        for (size_t v = u + 1; v < image1.size(); ++v)
            if (g1.adjacent(image1[u], image1[v]) && g2.adjacent(image2[u], image2[v]))
                cert.h.add_edge(static_cast<int>(u), static_cast<int>(v));
    cert.eta1 = std::move(image1);
    cert.eta2 = std::move(image2);
    normalize_subgraph_certificate(cert);
    if (cert.value * 2 != r.value)
        throw ContractError("mcs_nd certificate does not realize the optimum");
    return res;
}

} // namespace mcs
