#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhowe/partitions.hpp"

using namespace qhowe;

TEST_CASE("strict partition validation") {
    CHECK_THROWS(StrictPartition({1, 2}));
    CHECK_THROWS(StrictPartition({2, 2}));
    CHECK_THROWS(StrictPartition({2, 0}));
    CHECK_THROWS(StrictPartition({-1}));
    CHECK(StrictPartition{}.empty());
    CHECK(StrictPartition({3, 1}).size() == 4);
    CHECK(StrictPartition({3, 1}).length() == 2);
}

TEST_CASE("parse and to_string round trip") {
    CHECK(StrictPartition::parse("3,1").parts() == std::vector<int>{3, 1});
    CHECK(StrictPartition::parse("0").empty());
    CHECK(StrictPartition::parse("").empty());
    CHECK(StrictPartition({4, 2, 1}).to_string() == "4,2,1");
    CHECK(StrictPartition{}.to_string() == "0");
    CHECK_THROWS(StrictPartition::parse("1,3"));
    CHECK_THROWS(StrictPartition::parse("a"));
    for (int n = 0; n <= 9; ++n)
        for (const auto& lam : strict_partitions(n))
            CHECK(StrictPartition::parse(lam.to_string()) == lam);
}

TEST_CASE("enumeration counts match the odd-part partition oracle") {
    // Euler: #partitions into distinct parts == #partitions into odd parts.
    for (int n = 0; n <= 14; ++n) {
        long odd_count = 0;
        // DP over odd part sizes.
        std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
        ways[0] = 1;
        for (int p = 1; p <= n; p += 2)
            for (int s = p; s <= n; ++s)
                ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - p)];
        odd_count = ways[static_cast<std::size_t>(n)];
        CHECK(static_cast<long>(strict_partitions(n).size()) == odd_count);
    }
}

TEST_CASE("enumeration order and length filter") {
    auto all = strict_partitions(6);
    REQUIRE(all.size() == 4);
    CHECK(all[0] == StrictPartition({6}));
    CHECK(all[1] == StrictPartition({5, 1}));
    CHECK(all[2] == StrictPartition({4, 2}));
    CHECK(all[3] == StrictPartition({3, 2, 1}));
    auto short_ones = strict_partitions(6, 2);
    REQUIRE(short_ones.size() == 3);
    for (const auto& lam : short_ones) CHECK(lam.length() <= 2);
    CHECK(strict_partitions(0).size() == 1);
    CHECK(strict_partitions(0)[0].empty());
}

TEST_CASE("delta") {
    CHECK(delta(0) == 0);
    CHECK(delta(1) == 1);
    CHECK(delta(2) == 0);
    CHECK(delta(3) == 1);
}
