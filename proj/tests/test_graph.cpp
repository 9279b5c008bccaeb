#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "ccn/families.hpp"
#include "ccn/graph.hpp"
#include "ccn/graph_io.hpp"
#include "oracle_helpers.hpp"

using namespace ccn;

TEST_CASE("construction and validation") {
    Graph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(triangle.order() == 3);
    CHECK(triangle.size() == 3);

    Graph dedup(2, {{0, 1}, {1, 0}});
    CHECK(dedup.size() == 1);

    CHECK_THROWS_AS(Graph(1, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("degrees") {
    Graph c5 = gen_cycle(5);
    CHECK(c5.degree(0) == 2);
    Graph k4 = gen_complete(4);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.degree(0) == 3);
    CHECK(star.max_degree() == 3);
    CHECK(star.min_degree() == 1);
    CHECK_THROWS_AS(star.degree(9), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(gen_complete(4).complement() == Graph(4));
    CHECK(gen_cycle(5).complement().size() == 5);
    // complement of a 5-cycle is again a 5-cycle: 0-2-4-1-3-0
    Graph expected(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(gen_cycle(5).complement() == expected);
    CHECK(gen_path(2).complement() == Graph(2));
}

TEST_CASE("completeness") {
    CHECK(gen_complete(5).is_complete());
    CHECK(!gen_cycle(4).is_complete());
    CHECK(Graph(1).is_complete());
}

TEST_CASE("complete multipartite recognition") {
    auto k23 = gen_complete_multipartite({2, 3});
    REQUIRE(k23.complete_multipartite_parts());
    CHECK(*k23.complete_multipartite_parts() == std::vector<int>{2, 3});

    CHECK(!gen_cycle(5).complete_multipartite_parts());

    REQUIRE(gen_complete(4).complete_multipartite_parts());
    CHECK(*gen_complete(4).complete_multipartite_parts() ==
          std::vector<int>{1, 1, 1, 1});

    // edgeless graphs are one big part
    CHECK(*Graph(4).complete_multipartite_parts() == std::vector<int>{4});
    // a path on 4 vertices is not complete multipartite
    CHECK(!gen_path(4).complete_multipartite_parts());
}

TEST_CASE("recognition inverts the generator on all part lists up to 8") {
    // every multiset of positive parts with total <= 8
    std::vector<std::vector<int>> stack;
    std::vector<int> current;
    std::function<void(int, int)> emit = [&](int left, int lo) {
        if (!current.empty()) stack.push_back(current);
        for (int p = lo; p <= left; ++p) {
            current.push_back(p);
            emit(left - p, p);
            current.pop_back();
        }
    };
    for (int total = 1; total <= 8; ++total) emit(total, 1);
    CHECK(stack.size() > 60); // sanity: all partitions of 1..8 are covered
    for (const auto& parts : stack) {
        auto g = gen_complete_multipartite(parts);
        auto recognized = g.complete_multipartite_parts();
        REQUIRE(recognized);
        std::vector<int> sorted = parts;
        std::sort(sorted.begin(), sorted.end());
        CHECK(*recognized == sorted);
    }
}

TEST_CASE("random graph properties") {
    testutil::Rng rng(99);
    for (int round = 0; round < 300; ++round) {
        int n = 1 + rng.below(10);
        Graph g = testutil::random_connected_graph(rng, n);

        CHECK(g.complement().complement() == g);
        CHECK(g.size() + g.complement().size() == n * (n - 1) / 2);

        int degree_sum = 0;
        for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.size());
    }
}

TEST_CASE("edge list parsing") {
    Graph c5 = read_graph("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n",
                          GraphFormat::edge_list);
    CHECK(c5 == gen_cycle(5));

    Graph one = read_graph("2 1\n0 1\n", GraphFormat::edge_list);
    CHECK(one.size() == 1);

    CHECK_THROWS_AS(read_graph("3 1\n0 5\n", GraphFormat::edge_list),
                    ParseError);
    CHECK_THROWS_AS(read_graph("3\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(read_graph("2 2\n0 1\n", GraphFormat::edge_list),
                    ParseError);
    CHECK_THROWS_AS(read_graph("2 1\n0 1\n1 0\n", GraphFormat::edge_list),
                    ParseError);
    CHECK_THROWS_AS(read_graph("2 1\n0 1 2\n", GraphFormat::edge_list),
                    ParseError);
    CHECK_THROWS_AS(read_graph("2 1\n0 x\n", GraphFormat::edge_list),
                    ParseError);

    SUBCASE("comments and blank lines") {
        Graph g = read_graph("# a triangle\n3 3\n\n0 1\n1 2 # inline\n2 0\n",
                             GraphFormat::edge_list);
        CHECK(g == gen_cycle(3));
    }

    SUBCASE("duplicate edges merge with a note") {
        std::ostringstream diag;
        Graph g = read_graph("2 2\n0 1\n1 0\n", GraphFormat::edge_list, false,
                             &diag);
        CHECK(g.size() == 1);
        CHECK(diag.str().find("duplicate") != std::string::npos);
    }

    SUBCASE("one-based ids") {
        Graph g = read_graph("3 3\n1 2\n2 3\n3 1\n", GraphFormat::edge_list,
                             true);
        CHECK(g == gen_cycle(3));
        CHECK_THROWS_AS(
            read_graph("3 1\n0 1\n", GraphFormat::edge_list, true),
            ParseError);
    }
}

TEST_CASE("json parsing") {
    Graph g = read_graph(R"({"n": 3, "edges": [[0,1],[1,2],[2,0]]})",
                         GraphFormat::json);
    CHECK(g == gen_cycle(3));
    CHECK_THROWS_AS(read_graph("{", GraphFormat::json), ParseError);
    CHECK_THROWS_AS(read_graph(R"({"n": 2})", GraphFormat::json), ParseError);
    CHECK_THROWS_AS(read_graph(R"({"n": 2, "edges": [[0]]})",
                               GraphFormat::json),
                    ParseError);
    CHECK_THROWS_AS(read_graph(R"({"n": 0, "edges": []})", GraphFormat::json),
                    ParseError);
}

TEST_CASE("round trips are stable in both formats") {
    testutil::Rng rng(123);
    for (int round = 0; round < 100; ++round) {
        int n = 1 + rng.below(12);
        Graph g = testutil::random_connected_graph(rng, n);
        for (auto format : {GraphFormat::edge_list, GraphFormat::json}) {
            CHECK(read_graph(write_graph(g, format), format) == g);
            CHECK(read_graph(write_graph(g, format, true), format, true) == g);
            CHECK(read_graph_auto(write_graph(g, format)) == g);
        }
    }
}
