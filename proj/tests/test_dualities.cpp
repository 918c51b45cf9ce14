#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qhowe/dualities.hpp"

using namespace qhowe;

namespace {

long table_total(const VerificationReport& rep) {
    long s = 0;
    for (const auto& row : rep.dimension_table) s += row.contribution;
    return s;
}

const VerifyOptions kTampered{.tamper = true};

} // namespace

TEST_CASE("hom dimensions at m = 2") {
    for (const char* lam : {"1", "3"}) {
        HomSplit h = hom_dim(StrictPartition::parse(lam), 2);
        CHECK(h.total == 2);
        CHECK(h.even_dim == 1);
        CHECK(h.odd_dim == 1);
    }
    for (const char* lam : {"2,1"}) {
        HomSplit h = hom_dim(StrictPartition::parse(lam), 2);
        CHECK(h.total == 1);
        CHECK(h.even_dim == 1);
        CHECK(h.odd_dim == 0);
    }
    CHECK(verify_hom(StrictPartition({2}), 2).verified);
    CHECK_FALSE(verify_hom(StrictPartition({2}), 2, kTampered).verified);
}

TEST_CASE("sergeev duality tables") {
    auto r22 = verify_sergeev(2, 2);
    CHECK(r22.verified);
    CHECK(table_total(r22) == 16);

    auto r23 = verify_sergeev(2, 3);
    CHECK(r23.verified);
    REQUIRE(r23.dimension_table.size() == 2);
    CHECK(r23.dimension_table[0].contribution == 48); // (1/2) * 12 * 8
    CHECK(r23.dimension_table[1].contribution == 16); // 4 * 4
    CHECK(table_total(r23) == 64);

    CHECK_FALSE(verify_sergeev(2, 2, kTampered).verified);
}

TEST_CASE("howe duality tables") {
    auto r = verify_howe(2, 2, 3);
    CHECK(r.verified);
    REQUIRE(r.dimension_table.size() == 2);
    CHECK(r.dimension_table[0].lambda.to_string() == "3");
    CHECK(r.dimension_table[0].contribution == 72);
    CHECK(r.dimension_table[1].lambda.to_string() == "2,1");
    CHECK(r.dimension_table[1].contribution == 16);
    CHECK(table_total(r) == 88);

    CHECK(verify_howe(2, 2, 2).verified);
    CHECK(table_total(verify_howe(2, 2, 2)) == 32);
    CHECK_FALSE(verify_howe(1, 1, 2, kTampered).verified);
}

TEST_CASE("symmetric powers are irreducible") {
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 4; ++k) CHECK(verify_symmetric_power(m, k).verified);
    CHECK_FALSE(verify_symmetric_power(2, 2, kTampered).verified);
}

TEST_CASE("zero weight spaces") {
    const std::pair<const char*, std::pair<long, long>> expected[] = {
        {"1", {2, 2}}, {"2", {4, 2}}, {"2,1", {4, 1}}, {"3", {8, 2}}};
    for (const auto& [lam, dims] : expected) {
        auto r = verify_zero_weight(StrictPartition::parse(lam));
        CHECK(r.verified);
        REQUIRE(r.dimension_table.size() == 1);
        CHECK(r.dimension_table[0].dim_left == dims.first);
        CHECK(r.dimension_table[0].dim_right == dims.second);
    }
    // lambda = (2,1) has no rational single copy: the verification runs over
    // the quadratic field recorded in the report.
    auto r21 = verify_zero_weight(StrictPartition({2, 1}));
    CHECK(r21.parameters.count("scalar_field") == 1);
    CHECK_FALSE(verify_zero_weight(StrictPartition({2}), kTampered).verified);
}

TEST_CASE("regular representation") {
    for (int n = 1; n <= 2; ++n) CHECK(verify_regular(n).verified);
    auto r3 = verify_regular(3);
    CHECK(r3.verified);
    REQUIRE(r3.dimension_table.size() == 2);
    CHECK(r3.dimension_table[0].contribution + r3.dimension_table[1].contribution == 48);
    CHECK_FALSE(verify_regular(2, kTampered).verified);
}

TEST_CASE("center counts") {
    for (int k = 1; k <= 4; ++k) {
        auto r = center_check(1, k);
        CHECK(r.verified);
        CHECK(r.parameters.at("invariants") == "1");
    }
    auto r23 = center_check(2, 3);
    CHECK(r23.verified);
    CHECK(r23.parameters.at("invariants") == "2");
    CHECK_FALSE(center_check(1, 2, kTampered).verified);
}

TEST_CASE("guards reject oversized ambients") {
    CHECK_THROWS_AS(verify_sergeev(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_regular(4), std::invalid_argument);
}
