#include "doctest.h"
#include "helpers.hpp"

#include "mcsolve/errors.hpp"
#include "mcsolve/generators.hpp"
#include "mcsolve/oracle.hpp"
#include "mcsolve/solver_nd.hpp"
#include "mcsolve/twins.hpp"

#include <algorithm>
#include <numeric>

using namespace mcs;

namespace {

// Calls f(image1, image2) for every induced common subgraph embedding.
template <class F>
void for_each_induced_embedding(const Graph& g1, const Graph& g2, F&& f)
{
    std::vector<int> image1, image2;
    std::vector<char> used(static_cast<size_t>(g2.order()), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g1.order()) {
            f(image1, image2);
            return;
        }
        self(self, v + 1);
        for (int w = 0; w < g2.order(); ++w) {
            if (used[w])
                continue;
            bool ok = true;
            for (size_t k = 0; k < image1.size() && ok; ++k)
                ok = g1.adjacent(image1[k], v) == g2.adjacent(image2[k], w);
            if (!ok)
                continue;
            used[w] = 1;
            image1.push_back(v);
            image2.push_back(w);
            self(self, v + 1);
            image1.pop_back();
            image2.pop_back();
            used[w] = 0;
        }
    };
    rec(rec, 0);
}

} // namespace

TEST_CASE("mcis_nd examples")
{
    CHECK(mcis_nd(complete_graph(4), complete_graph(6)).certificate.value == 4);
    auto r = mcis_nd(disjoint_union(complete_graph(2), empty_graph(1)), path_graph(3));
    CHECK(r.certificate.value == 2);
    CHECK(mcis_nd(cycle_graph(4), cycle_graph(4)).certificate.value == 4);
    CHECK(mcis_nd(Graph(0), cycle_graph(4)).certificate.value == 0);
}

TEST_CASE("mcs_nd examples")
{
    CHECK(mcs_nd(complete_graph(4), complete_graph(6)).certificate.value == 6);
    auto r = mcs_nd(cycle_graph(4), path_graph(4));
    CHECK(r.certificate.value == 3);
    CHECK(verify_certificate(cycle_graph(4), path_graph(4), r.certificate).ok());
    CHECK(mcs_nd(complete_graph(3), empty_graph(3)).certificate.value == 0);
}

TEST_CASE("nd caps")
{
    try {
        mcis_nd(path_graph(6), path_graph(6), 5);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("6*6") != std::string::npos);
    }
    CHECK_THROWS_AS(mcs_nd(path_graph(6), path_graph(6), 35), ResourceError);
    CHECK_NOTHROW(mcs_nd(path_graph(6), path_graph(6), 36));
}

TEST_CASE("nd solvers match the oracles")
{
    Rng rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const int n1 = 1 + static_cast<int>(rng() % 8), n2 = 1 + static_cast<int>(rng() % 8);
        Graph g1 = gen_bounded_nd(rng, n1, 1 + static_cast<int>(rng() % 4));
        Graph g2 = trial % 3 ? gen_bounded_nd(rng, n2, 1 + static_cast<int>(rng() % 4)) : testing::random_graph(rng, n2, 0.5);
        CAPTURE(serialize_graph(g1));
        CAPTURE(serialize_graph(g2));
        auto induced = mcis_nd(g1, g2);
        CHECK(induced.certificate.value == mcis_oracle(g1, g2).value);
        CHECK(verify_certificate(g1, g2, induced.certificate).ok());
        auto edges = mcs_nd(g1, g2);
        CHECK(edges.certificate.value == mcs_oracle(g1, g2, 28).value);
        CHECK(verify_certificate(g1, g2, edges.certificate).ok());
    }
}

TEST_CASE("every surviving branch materializes a valid certificate")
{
    Rng rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g1 = gen_bounded_nd(rng, 2 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3));
        Graph g2 = gen_bounded_nd(rng, 2 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3));
        long long seen = 0;
        auto r = mcis_nd(g1, g2, kDefaultNdBranchCap, [&](const EmbeddingCertificate& cert) {
            ++seen;
            CHECK(verify_certificate(g1, g2, cert).ok());
        });
        CHECK(seen == r.branches);
    }
}

TEST_CASE("rejected branches admit no embedding")
{
    Rng rng(64);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g1 = testing::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
        Graph g2 = testing::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
        const auto t1 = twin_classes(g1), t2 = twin_classes(g2);
        const int q = t2.count();
        for_each_induced_embedding(g1, g2, [&](const std::vector<int>& image1, const std::vector<int>& image2) {
            std::vector<int> count(static_cast<size_t>(t1.count() * q), 0);
            for (size_t k = 0; k < image1.size(); ++k)
                ++count[t1.class_of[image1[k]] * q + t2.class_of[image2[k]]];
            for (int& c : count)
                c = std::min(c, 2);
            CHECK(nd_assignment_admissible(t1, t2, count));
        });
    }
}

TEST_CASE("mcs_nd objective stays even")
{
    Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g1 = gen_bounded_nd(rng, 1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 3));
        Graph g2 = gen_bounded_nd(rng, 1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 3));
        CHECK_NOTHROW(mcs_nd(g1, g2));
    }
}
