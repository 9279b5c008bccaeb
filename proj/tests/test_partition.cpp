#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "ccn/limits.hpp"
#include "ccn/partition.hpp"
#include "oracle_helpers.hpp"

using namespace ccn;

TEST_CASE("pairwise product sums of small partitions") {
    CHECK(pairwise_product_sum(PartitionSpec({1, 1, 3})) == 7);
    CHECK(pairwise_product_sum(PartitionSpec({1, 2, 2})) == 8);
    CHECK(pairwise_product_sum(PartitionSpec({1, 2, 5})) == 17);
    CHECK(pairwise_product_sum(PartitionSpec({1, 3, 4})) == 19);
    CHECK(pairwise_product_sum(PartitionSpec({2, 3, 3})) == 21);
    CHECK(pairwise_product_sum(PartitionSpec({2, 2, 4})) == 20);
    CHECK(pairwise_product_sum(PartitionSpec({1, 1})) == 1);
}

TEST_CASE("partition spec sorts and validates") {
    PartitionSpec p({3, 1, 2});
    CHECK(p.parts() == std::vector<int>{1, 2, 3});
    CHECK(p.total() == 6);
    CHECK(p.length() == 3);
    CHECK_THROWS_AS(PartitionSpec({}), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec({-1, 3}), std::invalid_argument);
}

TEST_CASE("value does not depend on input order") {
    testutil::Rng rng(7);
    for (int round = 0; round < 200; ++round) {
        int l = 2 + rng.below(6);
        std::vector<int> parts(l, 1);
        for (int i = rng.below(40); i > 0; --i) ++parts[rng.below(l)];
        std::vector<int> shuffled = parts;
        for (int i = l - 1; i > 0; --i)
            std::swap(shuffled[i], shuffled[rng.below(i + 1)]);
        CHECK(PartitionSpec(parts) == PartitionSpec(shuffled));
        CHECK(pairwise_product_sum(PartitionSpec(parts)) ==
              pairwise_product_sum(PartitionSpec(shuffled)));
    }
}

TEST_CASE("completion partition shapes") {
    CHECK(completion_partition(8, 3).parts() == std::vector<int>{2, 3, 3});
    CHECK(completion_partition(9, 3).parts() == std::vector<int>{3, 3, 3});
    CHECK(completion_partition(22, 4).parts() == std::vector<int>{5, 5, 6, 6});
    CHECK(completion_partition(2, 2).parts() == std::vector<int>{1, 1});
    CHECK_THROWS_AS(completion_partition(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(completion_partition(3, 5), std::invalid_argument);
}

TEST_CASE("completion sum products") {
    CHECK(completion_sum_product(8, 3) == 21);
    CHECK(completion_sum_product(5, 3) == 8);
    CHECK(completion_sum_product(2, 2) == 1);
}

TEST_CASE("partition oracle pins the documented maxima") {
    auto r83 = max_partition_oracle(8, 3);
    CHECK(r83.value == 21);
    REQUIRE(r83.argmax.size() == 1);
    CHECK(r83.argmax[0].parts() == std::vector<int>{2, 3, 3});

    auto r53 = max_partition_oracle(5, 3);
    CHECK(r53.value == 8);
    REQUIRE(r53.argmax.size() == 1);
    CHECK(r53.argmax[0].parts() == std::vector<int>{1, 2, 2});

    auto r42 = max_partition_oracle(4, 2);
    CHECK(r42.value == 4);
    REQUIRE(r42.argmax.size() == 1);
    CHECK(r42.argmax[0].parts() == std::vector<int>{2, 2});

    CHECK_THROWS_AS(max_partition_oracle(31, 3), GuardError);
    CHECK_THROWS_AS(max_partition_oracle(10, 1), std::invalid_argument);
}

TEST_CASE("balanced partition attains the exhaustive maximum, n <= 14") {
    for (int n = 2; n <= 14; ++n)
        for (int l = 2; l <= n; ++l) {
            auto oracle = max_partition_oracle(n, l);
            CAPTURE(n);
            CAPTURE(l);
            CHECK(completion_sum_product(n, l) == oracle.value);
            auto balanced = completion_partition(n, l);
            CHECK(std::find(oracle.argmax.begin(), oracle.argmax.end(),
                            balanced) != oracle.argmax.end());
        }
}

TEST_CASE("double loop equals the square-sum identity") {
    testutil::Rng rng(42);
    for (int round = 0; round < 2000; ++round) {
        int n = 2 + rng.below(59);
        int l = 2 + rng.below(std::max(1, n - 1));
        if (l > n) l = n;
        std::vector<int> parts(l, 1);
        for (int left = n - l; left > 0; --left) ++parts[rng.below(l)];
        PartitionSpec p(parts);
        long long square_sum = 0;
        for (int x : p.parts()) square_sum += static_cast<long long>(x) * x;
        long long closed =
            (static_cast<long long>(n) * n - square_sum) / 2;
        CHECK(pairwise_product_sum(p) == closed);
    }
}

TEST_CASE("products of a fixed sum grow as the parts get closer") {
    for (int s = 3; s <= 51; ++s)
        for (int a = 1; a + 1 <= s / 2; ++a) {
            long long near = static_cast<long long>(a + 1) * (s - a - 1);
            long long far = static_cast<long long>(a) * (s - a);
            CAPTURE(s);
            CAPTURE(a);
            CHECK(far < near);
        }
}
