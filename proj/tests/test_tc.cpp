#include "doctest.h"
#include "helpers.hpp"

#include "mcsolve/errors.hpp"
#include "mcsolve/generators.hpp"
#include "mcsolve/oracle.hpp"
#include "mcsolve/parameters.hpp"
#include "mcsolve/solver_tc.hpp"

#include <algorithm>

using namespace mcs;

namespace {

Graph k2_k3() { return disjoint_union(complete_graph(2), complete_graph(3)); }
Graph k4_k1() { return disjoint_union(complete_graph(4), empty_graph(1)); }

} // namespace

TEST_CASE("mcis_tc examples")
{
    Graph cluster = gen_cluster({3, 1, 2});
    auto self = mcis_tc(cluster, cluster);
    CHECK(self.certificate.value == 6);
    CHECK(self.budget == 0);

    auto named = mcis_tc(k2_k3(), k4_k1());
    CHECK(named.certificate.value == 4);
    CHECK(verify_certificate(k2_k3(), k4_k1(), named.certificate).ok());

    auto p4c4 = mcis_tc(path_graph(4), cycle_graph(4));
    CHECK(p4c4.certificate.value == 3);
    CHECK(verify_certificate(path_graph(4), cycle_graph(4), p4c4.certificate).ok());

    CHECK(mcis_tc(disjoint_union(complete_graph(2), empty_graph(1)), path_graph(3)).certificate.value == 2);
    CHECK(mcis_tc(testing::paw(), complete_graph(4)).certificate.value == 3);
}

TEST_CASE("prune_noncover examples")
{
    Graph c4 = cycle_graph(4);
    auto [same, kept] = prune_noncover(c4, {0, 2}, {1, 3});
    CHECK(same == c4);

    auto [p3, p3_kept] = prune_noncover(path_graph(3), {0}, {});
    CHECK(p3_kept == std::vector<int>{0, 2});
    CHECK(p3.size() == 0);

    Graph cluster = gen_cluster({2, 3});
    CHECK(prune_noncover(cluster, {}, {}).first == cluster);

    CHECK_THROWS_AS(prune_noncover(path_graph(4), {}, {}), ContractError);
    CHECK_THROWS_AS(prune_noncover(path_graph(3), {0, 1, 2}, {}), ContractError);
}

TEST_CASE("mcis_cluster_graphs examples")
{
    CHECK(mcis_cluster_graphs(complete_graph(3), complete_graph(5)).value == 3);
    CHECK(mcis_cluster_graphs(k2_k3(), k4_k1()).value == 4);
    CHECK(mcis_cluster_graphs(empty_graph(4), empty_graph(2)).value == 2);
    CHECK_THROWS_AS(mcis_cluster_graphs(path_graph(3), complete_graph(2)), ContractError);
}

TEST_CASE("mcis_cluster_graphs equals the oracle")
{
    Rng rng(211);
    for (int trial = 0; trial < 100; ++trial) {
        Graph a = gen_random_cluster(rng, 1 + trial % 10, 4);
        Graph b = shuffle_vertices(rng, gen_random_cluster(rng, 1 + (trial * 7) % 10, 4));
        auto cert = mcis_cluster_graphs(a, b);
        CHECK(verify_certificate(a, b, cert).ok());
        CHECK(cert.value == mcis_oracle(a, b).value);
    }
}

TEST_CASE("mcis_tc equals the oracle on small instances")
{
    Rng rng(223);
    for (int trial = 0; trial < 120; ++trial) {
        const int n1 = 1 + trial % 8, n2 = 1 + (trial * 5) % 8;
        Graph a = shuffle_vertices(rng, gen_small_twin_cover(rng, n1, trial % 3));
        Graph b = shuffle_vertices(rng, gen_small_twin_cover(rng, n2, (trial / 3) % 3));
        auto res = mcis_tc(a, b);
        const auto opt = mcis_oracle(a, b).value;
        CHECK(res.certificate.value == opt);
        CHECK(verify_certificate(a, b, res.certificate).ok());
        CHECK(res.smallest_budget <= res.budget);

        // Twin covers restrict to induced subgraphs, so tc(H) <= min(tc(G1), tc(G2)).
        const int low = static_cast<int>(std::min(minimum_twin_cover(a).size(), minimum_twin_cover(b).size()));
        CHECK(res.smallest_budget <= low);
        CHECK(mcis_tc(a, b, low).certificate.value == opt);
    }
}

TEST_CASE("mcis_tc equals the oracle on unstructured graphs")
{
    Rng rng(227);
    for (int trial = 0; trial < 60; ++trial) {
        Graph a = gen_gnp(rng, 1 + trial % 6, 0.5);
        Graph b = gen_gnp(rng, 1 + (trial * 3) % 6, 0.5);
        auto res = mcis_tc(a, b);
        CHECK(res.certificate.value == mcis_oracle(a, b).value);
        CHECK(verify_certificate(a, b, res.certificate).ok());
    }
}
