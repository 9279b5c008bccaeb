#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "ccn/coloring.hpp"
#include "ccn/families.hpp"
#include "oracle_helpers.hpp"

using namespace ccn;

TEST_CASE("coloring canonicalizes labels") {
    Coloring col({5, 2, 5, 2, 9});
    CHECK(col.assignment() == std::vector<int>{0, 1, 0, 1, 2});
    CHECK(col.class_count() == 3);
    CHECK(col.class_sizes() == std::vector<int>{2, 2, 1});
    CHECK(col.classes() ==
          std::vector<std::vector<int>>{{0, 2}, {1, 3}, {4}});
    CHECK(col.to_json() == R"({"classes":[[0,2],[1,3],[4]]})");
    CHECK_THROWS_AS(Coloring({}), std::invalid_argument);
    CHECK_THROWS_AS(Coloring({0, -1}), std::invalid_argument);
}

TEST_CASE("class size tallies") {
    CHECK(Coloring({0, 1, 0, 1, 2}).class_sizes() ==
          std::vector<int>{2, 2, 1});
    CHECK(Coloring({0, 1, 2}).class_sizes() == std::vector<int>{1, 1, 1});
    CHECK(Coloring({0, 1, 0, 1, 0, 1}).class_sizes() ==
          std::vector<int>{3, 3});
}

TEST_CASE("bad edges") {
    Graph k3 = gen_complete(3);
    CHECK(bad_edges(k3, Coloring({0, 0, 0})).size() == 3);

    Graph c4 = gen_cycle(4);
    CHECK(bad_edges(c4, Coloring({0, 1, 0, 1})).empty());
    CHECK(is_proper(c4, Coloring({0, 1, 0, 1})));

    Graph p3 = gen_path(3);
    CHECK(bad_edges(p3, Coloring({0, 0, 1})) ==
          std::vector<Edge>{{0, 1}});

    CHECK_THROWS_AS(bad_edges(k3, Coloring({0, 1})), std::invalid_argument);
}

TEST_CASE("chromatic numbers of named graphs") {
    CHECK(chromatic_number(gen_cycle(5)) == 3);
    CHECK(chromatic_number(gen_cycle(6)) == 2);
    CHECK(chromatic_number(gen_complete(4)) == 4);
    CHECK(chromatic_number(Graph(3)) == 1);
    CHECK(chromatic_number(gen_path(1)) == 1);
    for (int n = 3; n <= 15; ++n)
        CHECK(chromatic_number(gen_cycle(n)) == (n % 2 == 0 ? 2 : 3));
}

TEST_CASE("chromatic number guard") {
    SolverLimits tight;
    tight.max_order = 4;
    CHECK_THROWS_AS(chromatic_number(gen_cycle(6), tight), GuardError);
    tight.force = true;
    CHECK(chromatic_number(gen_cycle(6), tight) == 2);
}

TEST_CASE("chromatic number agrees with assignment enumeration") {
    testutil::Rng rng(2024);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + rng.below(7);
        Graph g = testutil::random_connected_graph(rng, n);
        CAPTURE(write_graph(g, GraphFormat::edge_list));
        CHECK(chromatic_number(g) == testutil::naive_chromatic_number(g));
    }
}

TEST_CASE("partition stream on named graphs") {
    auto c4 = chromatic_partitions(gen_cycle(4));
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].classes() == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

    auto k3 = chromatic_partitions(gen_complete(3));
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].class_count() == 3);

    CHECK(chromatic_partitions(gen_cycle(5)).size() == 5);
}

TEST_CASE("partition stream is canonical, proper, ordered, exact") {
    testutil::Rng rng(5150);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + rng.below(6);
        Graph g = testutil::random_connected_graph(rng, n);
        CAPTURE(write_graph(g, GraphFormat::edge_list));
        int chi = chromatic_number(g);

        auto stream = chromatic_partitions(g);
        std::vector<std::vector<int>> got;
        for (const auto& col : stream) {
            CHECK(col.class_count() == chi);
            CHECK(bad_edges(g, col).empty());
            got.push_back(col.assignment());
        }
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());

        // independent route: filter raw assignments
        CHECK(got == testutil::naive_chromatic_partitions(g, chi));
    }
}

TEST_CASE("stream length on connected bipartite graphs is one") {
    CHECK(chromatic_partitions(gen_path(6)).size() == 1);
    CHECK(chromatic_partitions(gen_cycle(8)).size() == 1);
    CHECK(chromatic_partitions(gen_complete_multipartite({3, 4})).size() == 1);
}

TEST_CASE("partition count times chi factorial is the colouring count") {
    testutil::Rng rng(77);
    for (int round = 0; round < 25; ++round) {
        int n = 2 + rng.below(6); // n <= 7
        Graph g = testutil::random_connected_graph(rng, n);
        CAPTURE(write_graph(g, GraphFormat::edge_list));
        int chi = chromatic_number(g);
        long long factorial = 1;
        for (int i = 2; i <= chi; ++i) factorial *= i;
        long long partitions = 0;
        for_each_chromatic_partition(g, [&](const Coloring&) {
            ++partitions;
            return true;
        });
        CHECK(partitions * factorial ==
              testutil::count_proper_surjective(g, chi));
    }
}

TEST_CASE("visitor can stop the stream early") {
    int seen = 0;
    for_each_chromatic_partition(gen_cycle(5), [&](const Coloring&) {
        ++seen;
        return seen < 2;
    });
    CHECK(seen == 2);
}
