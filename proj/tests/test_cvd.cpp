#include "doctest.h"
#include "helpers.hpp"

#include "mcsolve/errors.hpp"
#include "mcsolve/generators.hpp"
#include "mcsolve/oracle.hpp"
#include "mcsolve/parameters.hpp"
#include "mcsolve/solver_cvd.hpp"
#include "mcsolve/twins.hpp"

#include <algorithm>

using namespace mcs;

namespace {

long long ceil_fraction(long long a, long long num, long long den) { return (a * num + den - 1) / den; }

} // namespace

TEST_CASE("mcis_cvd_xp examples")
{
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = gen_small_cluster_deletion(rng, 3 + trial % 4, 2);
        if (minimum_cluster_deletion(g).size() > 2)
            continue;
        auto r = mcis_cvd_xp(g, g);
        CHECK(r.certificate.value == g.order());
        CHECK(verify_certificate(g, g, r.certificate).ok());
    }

    auto p4c4 = mcis_cvd_xp(path_graph(4), cycle_graph(4));
    CHECK(p4c4.certificate.value == 3);
    CHECK(verify_certificate(path_graph(4), cycle_graph(4), p4c4.certificate).ok());

    auto paw = mcis_cvd_xp(testing::paw(), complete_graph(4));
    CHECK(paw.certificate.value == 3);
    CHECK(verify_certificate(testing::paw(), complete_graph(4), paw.certificate).ok());
}

TEST_CASE("mcis_cvd_xp guess cap")
{
    try {
        mcis_cvd_xp(cycle_graph(6), cycle_graph(6), 3);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("mcis_cvd_xp matches the oracle")
{
    Rng rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const int n1 = 2 + static_cast<int>(rng() % 7), n2 = 2 + static_cast<int>(rng() % 7);
        Graph g1 = gen_small_cluster_deletion(rng, n1, static_cast<int>(rng() % 3));
        Graph g2 = trial % 3 ? gen_small_cluster_deletion(rng, n2, static_cast<int>(rng() % 3))
                             : testing::random_graph(rng, n2, 0.5);
        auto r = mcis_cvd_xp(g1, g2);
        CAPTURE(serialize_graph(g1));
        CAPTURE(serialize_graph(g2));
        CHECK(r.certificate.value == mcis_oracle(g1, g2).value);
        CHECK(verify_certificate(g1, g2, r.certificate).ok());
    }
}

TEST_CASE("pair_gain examples")
{
    Graph k3 = complete_graph(3);
    CHECK(pair_gain(k3, {0, 1, 2}, {}, complete_graph(2), {0, 1}, {}) == 2);
    CHECK(pair_gain(k3, {}, {}, k3, {0, 1, 2}, {}) == 0);

    // G1: a = 0 adjacent to both clique vertices 1, 2.
    Graph g1 = testing::G("3 3\n0 1\n0 2\n1 2\n");
    // G2: b = 0 adjacent to clique vertex 1 only; clique {1, 2, 3}.
    Graph g2 = testing::G("4 4\n0 1\n1 2\n1 3\n2 3\n");
    CHECK(pair_gain(g1, {1, 2}, {0}, g2, {1, 2, 3}, {0}) == 1);
}

TEST_CASE("pair_gain is symmetric and bounded")
{
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g1 = testing::random_graph(rng, 7, 0.5), g2 = testing::random_graph(rng, 7, 0.5);
        std::vector<int> v1{0, 1, 2, 3, 4, 5, 6}, v2 = v1;
        std::shuffle(v1.begin(), v1.end(), rng);
        std::shuffle(v2.begin(), v2.end(), rng);
        const int b = static_cast<int>(rng() % 3);
        std::vector<int> base1(v1.begin(), v1.begin() + b), base2(v2.begin(), v2.begin() + b);
        std::vector<int> k1(v1.begin() + b, v1.begin() + b + static_cast<int>(rng() % (7 - b + 1)));
        std::vector<int> k2(v2.begin() + b, v2.begin() + b + static_cast<int>(rng() % (7 - b + 1)));
        const long long forward = pair_gain(g1, k1, base1, g2, k2, base2);
        CHECK(forward == pair_gain(g2, k2, base2, g1, k1, base1));
        CHECK(forward <= static_cast<long long>(std::min(k1.size(), k2.size())));
    }
}

TEST_CASE("truncate_twin_classes examples")
{
    CHECK(truncate_twin_classes(complete_graph(5), 2).first == complete_graph(2));
    auto [c4, kept] = truncate_twin_classes(cycle_graph(4), 1);
    CHECK(c4 == complete_graph(2));
    CHECK(kept == std::vector<int>{0, 1});
    CHECK(truncate_twin_classes(cycle_graph(5), 4).first == cycle_graph(5));
}

TEST_CASE("mcis_cvd_approx examples")
{
    Graph cluster = gen_cluster({3, 2, 2});
    auto exact = mcis_cvd_approx(cluster, gen_cluster({2, 4}), 1, 2);
    CHECK(exact.p == 0);
    CHECK(exact.cap == 0);
    CHECK(exact.truncated_value == -1);
    CHECK(exact.certificate.value == mcis_oracle(cluster, gen_cluster({2, 4})).value);

    auto p4c4 = mcis_cvd_approx(path_graph(4), cycle_graph(4), 1, 2);
    CHECK(p4c4.certificate.value == 3);
    CHECK(p4c4.p == 2);
    CHECK(p4c4.cap == 8);
    CHECK(verify_certificate(path_graph(4), cycle_graph(4), p4c4.certificate).ok());

    Graph g = testing::paw();
    auto self = mcis_cvd_approx(g, g, 1, 4);
    CHECK(self.certificate.value == 4);
    CHECK(self.branch == ApproxResult::Branch::Truncated);

    CHECK_THROWS_AS(mcis_cvd_approx(g, g, 0, 1), ContractError);
    CHECK_THROWS_AS(mcis_cvd_approx(g, g, 1, 1), ContractError);
}

TEST_CASE("mcis_cvd_approx guarantee")
{
    Rng rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g1 = gen_small_cluster_deletion(rng, 2 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 3));
        Graph g2 = gen_small_cluster_deletion(rng, 2 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 3));
        const long long opt = mcis_oracle(g1, g2).value;
        for (auto [num, den] : {std::pair{1LL, 4LL}, std::pair{1LL, 2LL}}) {
            for (auto method : {ExactMethod::Oracle, ExactMethod::TwinCover, ExactMethod::CvdXp}) {
                auto r = mcis_cvd_approx(g1, g2, num, den, method);
                CHECK(r.certificate.value <= opt);
                CHECK(r.certificate.value >= ceil_fraction(opt, den - num, den));
                CHECK(verify_certificate(g1, g2, r.certificate).ok());
            }
        }
    }
}

TEST_CASE("deleting cvd sets costs at most their sizes")
{
    Rng rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g1 = testing::random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.5);
        Graph g2 = testing::random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.5);
        auto s1 = minimum_cluster_deletion(g1), s2 = minimum_cluster_deletion(g2);
        const long long rest = mcis_oracle(remove_vertices(g1, s1).first, remove_vertices(g2, s2).first).value;
        CHECK(mcis_oracle(g1, g2).value <= rest + static_cast<long long>(s1.size() + s2.size()));
    }
}
