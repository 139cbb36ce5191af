#include "brute.hpp"
#include "helpers.hpp"

#include "mcsolve/certificate.hpp"
#include "mcsolve/generators.hpp"
#include "mcsolve/oracle.hpp"
#include "mcsolve/parameters.hpp"
#include "mcsolve/solve.hpp"
#include "mcsolve/solver_cvd.hpp"
#include "mcsolve/solver_ml.hpp"
#include "mcsolve/solver_nd.hpp"
#include "mcsolve/solver_tc.hpp"
#include "mcsolve/spanning.hpp"
#include "mcsolve/trails.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace mcs;
using testing::brute_ip;
using testing::brute_matching;
using testing::brute_max_leaf;
using testing::random_connected;
using testing::random_matching_instance;
using testing::random_program;

namespace {

struct Tally
{
    long long cases = 0;
    long long failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && failures++ == 0)
            first_failure = what;
    }
};

// Certificates produced by criteria 1-3, reused by the mutation suite.
struct Produced
{
    Graph g1, g2;
    EmbeddingCertificate cert;
};
std::vector<Produced> produced;
Tally certificate_tally;

void record(const Graph& g1, const Graph& g2, const EmbeddingCertificate& cert, const std::string& where)
{
    certificate_tally.check(verify_certificate(g1, g2, cert).ok(), where + ": certificate rejected");
    produced.push_back({g1, g2, cert});
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(int id, const char* title, const Tally& t, const std::string& detail)
{
    const bool ok = t.failures == 0 && t.cases > 0;
    std::printf("%s criterion %d (%s): %lld/%lld checks passed%s%s%s\n", ok ? "PASS" : "FAIL", id, title,
        t.cases - t.failures, t.cases, detail.empty() ? "" : ", ", detail.c_str(),
        ok ? "" : ("; first failure: " + t.first_failure).c_str());
    std::fflush(stdout);
    return ok;
}

std::string pair_text(const Graph& a, const Graph& b)
{
    return "\n" + serialize_graph(a) + "---\n" + serialize_graph(b);
}

int size_in(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); }

bool criterion1()
{
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    Rng rng(1001);
    auto family = [&](const char* name, auto make, auto run, bool induced) {
        for (int i = 0; i < 200; ++i) {
            const Graph a = shuffle_vertices(rng, make());
            const Graph b = shuffle_vertices(rng, make());
            const auto cert = run(a, b);
            const long long opt = induced ? mcis_oracle(a, b, 8).value : mcs_oracle(a, b, 28).value;
            t.check(cert.value == opt, std::string(name) + " value " + std::to_string(cert.value) + " vs oracle "
                    + std::to_string(opt) + pair_text(a, b));
            record(a, b, cert, name);
        }
    };
    family("mcis_tc", [&] { return gen_small_twin_cover(rng, size_in(rng, 1, 8), size_in(rng, 0, 2)); },
        [](const Graph& a, const Graph& b) { return mcis_tc(a, b).certificate; }, true);
    family("mcis_cvd_xp", [&] { return gen_small_cluster_deletion(rng, size_in(rng, 1, 8), size_in(rng, 0, 2)); },
        [](const Graph& a, const Graph& b) { return mcis_cvd_xp(a, b).certificate; }, true);
    family("mcis_nd", [&] {
            const int n = size_in(rng, 1, 8);
            return gen_bounded_nd(rng, n, size_in(rng, 1, std::min(n, 4)));
        },
        [](const Graph& a, const Graph& b) { return mcis_nd(a, b).certificate; }, true);
    family("mcs_nd", [&] {
            const int n = size_in(rng, 1, 8);
            return gen_bounded_nd(rng, n, size_in(rng, 1, std::min(n, 4)));
        },
        [](const Graph& a, const Graph& b) { return mcs_nd(a, b).certificate; }, false);
    const double secs = seconds_since(t0);
    t.check(secs <= 600, "wall time " + std::to_string(secs) + " s exceeds 10 minutes");
    char detail[64];
    std::snprintf(detail, sizeof detail, "4 families x 200 pairs, %.1f s", secs);
    return report(1, "oracle equivalence", t, detail);
}

bool criterion2()
{
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    Rng rng(2002);
    auto both = [&](const Graph& a, const Graph& b, const char* what) {
        const auto i = mcis_ml(a, b);
        const auto s = mcs_ml(a, b);
        t.check(!i.within_caps_only && !s.within_caps_only, std::string(what) + ": a cap cut the search" + pair_text(a, b));
        const long long oi = mcis_oracle(a, b).value, os = mcs_oracle(a, b).value;
        t.check(i.certificate.value == oi, std::string(what) + " mcis_ml " + std::to_string(i.certificate.value)
                + " vs " + std::to_string(oi) + pair_text(a, b));
        t.check(s.certificate.value == os, std::string(what) + " mcs_ml " + std::to_string(s.certificate.value)
                + " vs " + std::to_string(os) + pair_text(a, b));
        record(a, b, i.certificate, what);
        record(a, b, s.certificate, what);
    };
    for (int k = 0; k < 100; ++k) {
        const Graph a = shuffle_vertices(rng, gen_path_cycle_forest(rng, size_in(rng, 1, 10)));
        const Graph b = shuffle_vertices(rng, gen_path_cycle_forest(rng, size_in(rng, 1, 10)));
        both(a, b, "forest pair");
    }
    const Graph bases[] = {complete_graph(4), star_graph(3)};
    int pairs = 0;
    while (pairs < 25) {
        const Graph a = subdivide(bases[rng() % 2], size_in(rng, 1, 3));
        const Graph b = subdivide(bases[rng() % 2], size_in(rng, 1, 3));
        // Keep the brute-force oracles within their caps.
        if (std::min(a.order(), b.order()) > kDefaultMcisOracleCap || std::min(a.size(), b.size()) > kDefaultMcsOracleCap)
            continue;
        both(shuffle_vertices(rng, a), shuffle_vertices(rng, b), "subdivided pair");
        ++pairs;
    }
    char detail[80];
    std::snprintf(detail, sizeof detail, "100 forest pairs, 25 subdivided pairs, %.1f s", seconds_since(t0));
    return report(2, "max-leaf solvers", t, detail);
}

bool criterion3()
{
    Tally t;
    Rng rng(3003);
    for (int k = 0; k < 100; ++k) {
        const int n = size_in(rng, 1, 8);
        const Graph a = k % 2 ? gen_small_cluster_deletion(rng, n, size_in(rng, 0, 3)) : gen_gnp(rng, n, 0.5);
        const Graph b = shuffle_vertices(rng, gen_small_cluster_deletion(rng, size_in(rng, 1, 8), size_in(rng, 0, 3)));
        const long long opt = mcis_oracle(a, b, 8).value;
        for (auto [num, den] : {std::pair(1LL, 4LL), std::pair(1LL, 2LL)}) {
            const auto r = mcis_cvd_approx(a, b, num, den, ExactMethod::CvdXp);
            const long long floor_value = ((den - num) * opt + den - 1) / den;
            t.check(r.certificate.value >= floor_value && r.certificate.value <= opt,
                "eps " + std::to_string(num) + "/" + std::to_string(den) + " value "
                    + std::to_string(r.certificate.value) + " outside [" + std::to_string(floor_value) + ", "
                    + std::to_string(opt) + "]" + pair_text(a, b));
            record(a, b, r.certificate, "cvd approx");
        }
    }
    return report(3, "approximation guarantee", t, "100 instances x eps in {1/4, 1/2}");
}

bool criterion4()
{
    Tally t;
    Rng rng(4004);
    for (int k = 0; k < 500; ++k) {
        const int n = size_in(rng, 2, 10);
        const Graph g = gen_gnp(rng, n, 0.1 + 0.05 * (k % 9));
        const int ml = max_leaf_number(g);
        if (g.size() <= 16)
            t.check(ml == brute_max_leaf(g), "ml disagrees with spanning-tree enumeration\n" + serialize_graph(g));
        const int vertices = static_cast<int>(non_degree2_vertices(g).size());
        const int trails = degree2_trails(g).count();
        const int components = static_cast<int>(g.components().size());
        t.check(vertices <= 4 * ml - 6, "|V_!=2| > 4ml-6\n" + serialize_graph(g));
        t.check(trails <= 2 * ml * ml, "trails > 2ml^2\n" + serialize_graph(g));
        t.check(ml >= std::max(g.max_degree(), components), "ml < max(degree, components)\n" + serialize_graph(g));
    }
    for (int n = 2; n <= 10; ++n) {
        const Graph p = path_graph(n);
        const int ml = max_leaf_number(p);
        const int vertices = static_cast<int>(non_degree2_vertices(p).size());
        t.check(vertices == 2 && 4 * ml - 6 == 2, "path P" + std::to_string(n) + " is not tight");
    }
    return report(4, "structural bounds", t, "500 graphs, tight on P2..P10");
}

// Random connected graph whose degree-2 vertices are repaired by extra edges; empty on failure.
Graph no_degree2_graph(std::mt19937& rng, int n, double p)
{
    Graph g = random_connected(rng, n, p);
    for (int round = 0; round < 4 * n; ++round) {
        std::vector<int> bad;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 2)
                bad.push_back(v);
        if (bad.empty())
            return g;
        const int v = bad[rng() % bad.size()];
        std::vector<int> free;
        for (int w = 0; w < n; ++w)
            if (w != v && !g.adjacent(v, w))
                free.push_back(w);
        if (free.empty())
            return {};
        g.add_edge(v, free[rng() % free.size()]);
    }
    return {};
}

bool criterion5()
{
    Tally t;
    std::mt19937 rng(5005);
    int graphs = 0;
    long long steps = 0;
    while (graphs < 200) {
        const Graph g = no_degree2_graph(rng, 2 + static_cast<int>(rng() % 11), 0.15 + 0.05 * (graphs % 7));
        if (g.order() < 2)
            continue;
        ++graphs;
        const auto res = leafy_spanning_tree(g);
        const std::string text = "\n" + serialize_graph(g);
        t.check(is_spanning_tree_of(g, res.tree), "not a spanning tree" + text);
        const int leaves = res.tree.leaf_count();
        t.check(g.order() <= 4 * leaves - 6, "|V| > 4L-6" + text);
        int sum_leaves = 0, sum_dead = 0, sum_vertices = 0;
        for (const auto& step : res.steps) {
            ++steps;
            t.check(step.satisfies_augmentation(), "augmentation inequality fails" + text);
            sum_leaves += step.delta_leaves;
            sum_dead += step.delta_dead;
            sum_vertices += step.delta_vertices;
        }
        // The recorded steps must account for the growth from the initial star.
        const int c = res.initial_center;
        std::vector<char> star(static_cast<size_t>(g.order()), 0);
        star[c] = 1;
        for (int x : g.neighbors(c))
            star[x] = 1;
        std::vector<int> star_leaves(g.neighbors(c));
        if (g.degree(c) == 1)
            star_leaves.push_back(c);
        int initial_dead = 0;
        for (int x : star_leaves) {
            bool outside = false;
            for (int y : g.neighbors(x))
                outside = outside || !star[y];
            initial_dead += outside ? 0 : 1;
        }
        const int initial_leaves = static_cast<int>(star_leaves.size());
        t.check(sum_vertices == g.order() - 1 - g.degree(c), "vertex deltas do not add up" + text);
        t.check(sum_leaves == leaves - initial_leaves, "leaf deltas do not add up" + text);
        t.check(sum_dead == leaves - initial_dead, "dead-leaf deltas do not add up" + text);
    }
    return report(5, "tree-growth procedure", t, "200 graphs, " + std::to_string(steps) + " expansions");
}

bool criterion6()
{
    Tally t;
    std::mt19937 rng(6006);
    for (int k = 0; k < 1000; ++k) {
        const auto inst = random_matching_instance(rng);
        const auto r = max_weight_matching_covering(inst);
        const long long expect = brute_matching(inst);
        t.check(r.feasible == (expect >= 0) && (!r.feasible || r.weight == expect),
            "matching case " + std::to_string(k) + ": " + std::to_string(r.weight) + " vs " + std::to_string(expect));
    }
    for (int k = 0; k < 100; ++k) {
        const auto p = random_program(rng);
        const auto r = solve_ip(p);
        const auto e = brute_ip(p);
        t.check(r.feasible == e.feasible && (!e.feasible || (r.value == e.value && p.feasible(r.x))),
            "program " + std::to_string(k) + ":\n" + p.dump());
    }
    return report(6, "subsolver oracles", t, "1000 matchings, 100 programs");
}

bool criterion7()
{
    Tally t = certificate_tally;
    const long long from_runs = t.cases;
    using F = VerifyResult::Failure;
    Rng rng(7007);
    int mutated = 0;
    for (size_t k = 0; mutated < 300 && k < 100 * produced.size(); ++k) {
        const auto& p = produced[rng() % produced.size()];
        const auto& base = p.cert;
        const int kind = mutated % 3;
        const int side = 1 + static_cast<int>(rng() % 2);
        EmbeddingCertificate c = base;
        auto& eta = side == 1 ? c.eta1 : c.eta2;
        VerifyResult expect;
        if (kind == 0) {
            if (eta.empty())
                continue;
            eta.pop_back();
            expect = {F::SizeMismatch, side, -1, -1, ""};
        } else if (kind == 1) {
            if (eta.size() < 2)
                continue;
            const int j = 1 + static_cast<int>(rng() % (eta.size() - 1));
            const int i = static_cast<int>(rng() % static_cast<unsigned>(j));
            eta[j] = eta[i];
            expect = {F::NotInjective, side, i, j, ""};
        } else {
            const auto edges = c.h.edges();
            if (edges.empty())
                continue;
            const auto [u, v] = edges[rng() % edges.size()];
            c.h.remove_edge(u, v);
            expect = base.mode == Mode::Induced ? VerifyResult{F::InducedViolation, 1, u, v, ""}
                                                : VerifyResult{F::ValueMismatch, 0, -1, -1, ""};
        }
        ++mutated;
        const auto got = verify_certificate(p.g1, p.g2, c);
        const bool ok = got.failure == expect.failure && got.side == expect.side
            && (expect.u < 0 || (got.u == expect.u && got.v == expect.v)) && !got.message.empty();
        t.check(ok, "mutation kind " + std::to_string(kind) + " diagnosed as '" + got.message + "'");
    }
    t.check(mutated == 300, "only " + std::to_string(mutated) + " mutations could be built");
    return report(7, "certificates", t,
        std::to_string(from_runs) + " solver certificates, " + std::to_string(mutated) + " mutations");
}

bool criterion8()
{
    Tally t;
    struct Named
    {
        const char* name;
        Problem problem;
        Graph g1, g2;
        long long value;
        std::vector<Method> methods;
    };
    const Graph k2k3 = disjoint_union(complete_graph(2), complete_graph(3));
    const Graph k4k1 = disjoint_union(complete_graph(4), empty_graph(1));
    const Graph k2k1 = disjoint_union(complete_graph(2), empty_graph(1));
    const std::vector<Named> named{
        {"mcis(K2+K3, K4+K1)", Problem::Mcis, k2k3, k4k1, 4, {Method::Brute, Method::Cluster, Method::Tc, Method::Nd}},
        {"mcs(C4, P4)", Problem::Mcs, cycle_graph(4), path_graph(4), 3, {Method::Brute, Method::Nd, Method::Ml}},
        {"mcis(P4, C4)", Problem::Mcis, path_graph(4), cycle_graph(4), 3,
            {Method::Brute, Method::Tc, Method::Cvd, Method::Nd, Method::Ml}},
        {"mcis(K2+K1, P3)", Problem::Mcis, k2k1, path_graph(3), 2,
            {Method::Brute, Method::Tc, Method::Cvd, Method::Nd, Method::Ml}},
    };
    for (const auto& c : named) {
        int agreeing = 0;
        for (auto m : c.methods) {
            SolveRequest req;
            req.problem = c.problem;
            req.method = m;
            const auto out = solve(c.g1, c.g2, req);
            const bool ok = out.certificate.value == c.value && verify_certificate(c.g1, c.g2, out.certificate).ok();
            t.check(ok, std::string(c.name) + " by " + std::string(to_string(m)) + " gave "
                    + std::to_string(out.certificate.value));
            agreeing += ok ? 1 : 0;
        }
        t.check(agreeing >= 2, std::string(c.name) + " reproduced by fewer than two methods");
    }
    return report(8, "named values", t, "4 values, 2 to 5 methods each");
}

} // namespace

int main()
{
    bool ok = true;
    const std::function<bool()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
        criterion7, criterion8};
    for (const auto& c : criteria) {
        try {
            ok = c() && ok;
        } catch (const std::exception& e) {
            std::printf("FAIL criterion: uncaught exception: %s\n", e.what());
            ok = false;
        }
    }
    return ok ? 0 : 1;
}
