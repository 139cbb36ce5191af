#include "doctest.h"
#include "helpers.hpp"

#include "mcsolve/errors.hpp"
#include "mcsolve/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace mcs;
using testing::G;

namespace {

// Every injection, in lexicographic order; returns the first that works.
std::optional<std::vector<int>> brute_embed(const Graph& h, const Graph& g, Mode mode)
{
    const int k = h.order(), n = g.order();
    if (k > n)
        return std::nullopt;
    std::vector<int> map(static_cast<size_t>(k), 0);
    std::function<bool(int)> rec = [&](int u) {
        if (u == k) {
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    if (map[a] == map[b])
                        return false;
                    bool he = h.adjacent(a, b), ge = g.adjacent(map[a], map[b]);
                    if (he && !ge)
                        return false;
                    if (mode == Mode::Induced && ge && !he)
                        return false;
                }
            return true;
        }
        for (int x = 0; x < n; ++x) {
            map[u] = x;
            if (rec(u + 1))
                return true;
        }
        return false;
    };
    if (rec(0))
        return map;
    return std::nullopt;
}

Graph k2_k3() { return disjoint_union(complete_graph(2), complete_graph(3)); }
Graph k4_k1() { return disjoint_union(complete_graph(4), empty_graph(1)); }

} // namespace

TEST_CASE("embed examples")
{
    CHECK(embed(path_graph(3), complete_graph(3), Mode::Subgraph).has_value());
    CHECK_FALSE(embed(path_graph(3), complete_graph(3), Mode::Induced).has_value());
    CHECK_FALSE(embed(cycle_graph(4), complete_graph(4), Mode::Induced).has_value());
    CHECK(embed(cycle_graph(4), complete_graph(4), Mode::Subgraph).has_value());
    CHECK(embed(empty_graph(0), empty_graph(0), Mode::Induced) == std::vector<int>{});
}

TEST_CASE("embed returns the lexicographically least witness")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        Graph h = testing::random_graph(rng, 1 + trial % 4, 0.5);
        Graph g = testing::random_graph(rng, 1 + trial % 6, 0.5);
        for (Mode mode : {Mode::Induced, Mode::Subgraph})
            CHECK(embed(h, g, mode) == brute_embed(h, g, mode));
    }
}

TEST_CASE("mcis_oracle examples")
{
    Graph paw = testing::paw();
    auto self = mcis_oracle(paw, paw);
    CHECK(self.value == 4);
    CHECK(self.eta1 == std::vector<int>{0, 1, 2, 3});
    CHECK(self.eta2 == std::vector<int>{0, 1, 2, 3});

    CHECK(mcis_oracle(complete_graph(3), empty_graph(3)).value == 1);

    auto named = mcis_oracle(k2_k3(), k4_k1());
    CHECK(named.value == 4);
    CHECK(verify_certificate(k2_k3(), k4_k1(), named).ok());

    CHECK(mcis_oracle(path_graph(4), cycle_graph(4)).value == 3);
    CHECK(mcis_oracle(disjoint_union(complete_graph(2), empty_graph(1)), path_graph(3)).value == 2);
    CHECK(mcis_oracle(paw, complete_graph(4)).value == 3);
    CHECK(mcis_oracle(path_graph(5), cycle_graph(4)).value == 3);
    CHECK(mcis_oracle(path_graph(7), disjoint_union(path_graph(3), path_graph(3))).value == 6);
}

TEST_CASE("mcs_oracle examples")
{
    Graph paw = testing::paw();
    auto self = mcs_oracle(paw, paw);
    CHECK(self.value == 4);
    CHECK(verify_certificate(paw, paw, self).ok());
    CHECK(mcs_oracle(complete_graph(3), empty_graph(3)).value == 0);
    CHECK(mcs_oracle(cycle_graph(4), path_graph(4)).value == 3);
    CHECK(mcs_oracle(path_graph(5), cycle_graph(4)).value == 3);
}

TEST_CASE("oracles refuse inputs over the cap")
{
    CHECK_THROWS_AS(mcis_oracle(empty_graph(11), empty_graph(12)), ResourceError);
    CHECK_NOTHROW(mcis_oracle(empty_graph(11), empty_graph(3)));
    CHECK_THROWS_AS(mcs_oracle(path_graph(14), path_graph(15)), ResourceError);
    CHECK_THROWS_AS(mcis_oracle(empty_graph(5), empty_graph(5), 4), ResourceError);
}

TEST_CASE("oracle properties")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Graph a = testing::random_graph(rng, 1 + trial % 6, 0.5);
        Graph b = testing::random_graph(rng, 1 + (trial / 2) % 6, 0.5);
        auto ab = mcis_oracle(a, b), ba = mcis_oracle(b, a);
        CHECK(ab.value == ba.value);
        CHECK(verify_certificate(a, b, ab).ok());
        CHECK(verify_certificate(b, a, ba).ok());
        CHECK(mcis_oracle(a, a).value == a.order());

        auto eab = mcs_oracle(a, b), eba = mcs_oracle(b, a);
        CHECK(eab.value == eba.value);
        CHECK(verify_certificate(a, b, eab).ok());
        CHECK(mcs_oracle(a, a).value == a.size());

        auto grow = [](Graph g) {
            g.add_vertex();
            return g;
        };
        CHECK(mcis_oracle(grow(a), grow(b)).value == ab.value + 1);

        for (auto [u, v] : std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}) {
            if (v >= a.order() || a.adjacent(u, v))
                continue;
            Graph denser = a;
            denser.add_edge(u, v);
            CHECK(mcs_oracle(denser, b).value >= eab.value);
        }
    }
}

TEST_CASE("verify_certificate diagnostics")
{
    Graph g1 = k2_k3(), g2 = k4_k1();
    auto cert = mcis_oracle(g1, g2);
    REQUIRE(verify_certificate(g1, g2, cert).ok());

    auto dropped = cert;
    dropped.eta1.pop_back();
    CHECK(verify_certificate(g1, g2, dropped).failure == VerifyResult::Failure::SizeMismatch);

    auto clash = cert;
    clash.eta2[1] = clash.eta2[0];
    auto r = verify_certificate(g1, g2, clash);
    CHECK(r.failure == VerifyResult::Failure::NotInjective);
    CHECK(r.side == 2);
    CHECK(r.u == 0);
    CHECK(r.v == 1);

    auto far = cert;
    far.eta1[0] = 99;
    CHECK(verify_certificate(g1, g2, far).failure == VerifyResult::Failure::OutOfRange);

    // Subgraph-mode witness reused in induced mode: H misses a host edge.
    auto first_edge = cert.h.edges().front();
    auto missing = cert;
    missing.h.remove_edge(first_edge.first, first_edge.second);
    auto ind = verify_certificate(g1, g2, missing);
    CHECK(ind.failure == VerifyResult::Failure::InducedViolation);
    CHECK(ind.u == first_edge.first);
    CHECK(ind.v == first_edge.second);
    CHECK_FALSE(ind.message.empty());

    missing.mode = Mode::Subgraph;
    CHECK(verify_certificate(g1, g2, missing).failure == VerifyResult::Failure::ValueMismatch);

    auto extra = cert;
    extra.h = complete_graph(4);
    CHECK(verify_certificate(g1, g2, extra).failure == VerifyResult::Failure::MissingEdge);
}

TEST_CASE("certificate text round-trips")
{
    std::mt19937 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        Graph a = testing::random_graph(rng, 1 + trial % 6, 0.5);
        Graph b = testing::random_graph(rng, 1 + (trial / 3) % 6, 0.5);
        for (auto cert : {mcis_oracle(a, b), mcs_oracle(a, b)}) {
            std::string text = serialize_certificate(cert);
            auto back = parse_certificate(text);
            CHECK(back == cert);
            CHECK(serialize_certificate(back) == text);
        }
    }
    CHECK_THROWS_AS(parse_certificate("mode fuzzy\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate("mode induced\nvalue 1\nh 1 0\neta1 0\n"), ParseError);
}
