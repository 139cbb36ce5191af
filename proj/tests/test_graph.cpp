#include "doctest.h"
#include "helpers.hpp"

#include "mcsolve/errors.hpp"
#include "mcsolve/graph.hpp"
#include "mcsolve/twins.hpp"

#include <random>

using namespace mcs;
using testing::G;

TEST_CASE("parse_graph reads edge lists")
{
    Graph p3 = G("3 2\n0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(2, 1));
    CHECK_FALSE(p3.adjacent(0, 2));
    CHECK(p3 == path_graph(3));

    Graph single = G("1 0");
    CHECK(single.order() == 1);
    CHECK(single.size() == 0);
}

TEST_CASE("parse_graph rejects malformed input with a line number")
{
    auto line_of = [](const char* text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("2 1\n0 0") == 2);
    CHECK(line_of("3 2\n0 1\n1 0") == 3);
    CHECK(line_of("3 1\n0 3") == 2);
    CHECK(line_of("3 2\n0 1") == 3);
    CHECK(line_of("x 1\n0 1") == 1);
    CHECK(line_of("3 1\n0 1\n1 2") == 3);
    CHECK(line_of("3 1\n0 1 2") == 2);
    CHECK(line_of("3 1\n0 1\n\n") == -1);
}

TEST_CASE("serialize_graph round-trips")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testing::random_graph(rng, 1 + trial % 9, 0.4);
        std::string text = serialize_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
    CHECK(serialize_graph(G("3 2\n2 1\n1 0")) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("graph helpers")
{
    Graph g = disjoint_union(complete_graph(2), complete_graph(3));
    CHECK(g.order() == 5);
    CHECK(g.size() == 4);
    CHECK(g.components().size() == 2);
    auto [rest, kept] = remove_vertices(g, std::vector<int>{0, 3});
    CHECK(rest.order() == 3);
    CHECK(kept == std::vector<int>{1, 2, 4});
    CHECK(rest.size() == 1);

    Graph s = subdivide(complete_graph(3), 2);
    CHECK(s.order() == 6);
    CHECK(s.size() == 6);
    CHECK(star_graph(3).max_degree() == 3);
    CHECK_THROWS_AS(g.add_edge(0, 1), ContractError);
    CHECK_THROWS_AS(g.add_edge(2, 2), ContractError);
}

TEST_CASE("twin_classes on small graphs")
{
    auto k3 = twin_classes(complete_graph(3));
    REQUIRE(k3.count() == 1);
    CHECK(k3.classes[0] == std::vector<int>{0, 1, 2});
    CHECK(k3.clique[0]);

    auto p3 = twin_classes(path_graph(3));
    REQUIRE(p3.count() == 2);
    CHECK(p3.classes[0] == std::vector<int>{0, 2});
    CHECK(p3.classes[1] == std::vector<int>{1});
    CHECK_FALSE(p3.clique[0]);
    CHECK(p3.full[0][1]);

    auto c4 = twin_classes(cycle_graph(4));
    REQUIRE(c4.count() == 2);
    CHECK(c4.classes[0] == std::vector<int>{0, 2});
    CHECK(c4.classes[1] == std::vector<int>{1, 3});
    CHECK_FALSE(c4.clique[0]);
    CHECK_FALSE(c4.clique[1]);
    CHECK(c4.full[0][1]);
}

TEST_CASE("neighborhood_diversity")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(neighborhood_diversity(complete_graph(n)) == 1);
    CHECK(neighborhood_diversity(cycle_graph(4)) == 2);
    CHECK(neighborhood_diversity(path_graph(4)) == 4);
}

TEST_CASE("twin partition agrees with the pairwise definition")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 10;
        Graph g = testing::random_graph(rng, n, 0.5);
        auto part = twin_classes(g);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                // Definition, written out independently.
                bool twins = true;
                for (int w = 0; w < n; ++w)
                    if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w))
                        twins = false;
                CHECK(twins == (part.class_of[u] == part.class_of[v]));
            }
        for (int a = 0; a < part.count(); ++a) {
            for (int b = 0; b < part.count(); ++b) {
                if (a == b)
                    continue;
                int edges = 0;
                for (int u : part.classes[a])
                    for (int v : part.classes[b])
                        edges += g.adjacent(u, v);
                const int all = static_cast<int>(part.classes[a].size() * part.classes[b].size());
                CHECK((edges == 0 || edges == all));
                CHECK((edges == all) == static_cast<bool>(part.full[a][b]));
            }
        }
    }
}

TEST_CASE("truncate_twin_classes keeps the lowest vertices")
{
    Graph g = disjoint_union(complete_graph(4), empty_graph(3));
    auto [t, kept] = truncate_twin_classes(g, 2);
    CHECK(kept == std::vector<int>{0, 1, 4, 5});
    CHECK(t.size() == 1);
    CHECK_THROWS_AS(truncate_twin_classes(g, 0), ContractError);
}
