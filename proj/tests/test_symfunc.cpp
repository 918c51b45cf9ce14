#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhowe/symfunc.hpp"

using namespace qhowe;

namespace {

// Coefficientwise symmetry check under all adjacent variable swaps.
bool is_symmetric(const TruncatedPolynomial& p) {
    const int m = p.variable_count();
    for (int i = 0; i + 1 < m; ++i) {
        for (const auto& [e, c] : p.terms()) {
            Exponents swapped = e;
            std::swap(swapped[static_cast<std::size_t>(i)],
                      swapped[static_cast<std::size_t>(i + 1)]);
            if (p.coeff(swapped) != c) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("elementary and complete basics") {
    const int D = 6;
    auto e2 = elementary(2, 3, D);
    CHECK(e2.coeff({1, 1, 0}) == 1);
    CHECK(e2.coeff({1, 0, 1}) == 1);
    CHECK(e2.coeff({0, 1, 1}) == 1);
    CHECK(e2.coeff({2, 0, 0}) == 0);
    CHECK(e2.eval_ones() == 3);
    CHECK(elementary(4, 3, D).is_zero());
    CHECK(elementary(0, 3, D).eval_ones() == 1);

    auto h2 = complete(2, 2, D);
    CHECK(h2.coeff({2, 0}) == 1);
    CHECK(h2.coeff({1, 1}) == 1);
    CHECK(h2.coeff({0, 2}) == 1);
    CHECK(complete(3, 2, D).eval_ones() == 4);
    // Newton-ish identity: sum_{i} (-1)^i e_i h_{r-i} = 0 for r >= 1.
    for (int r = 1; r <= 4; ++r) {
        auto acc = TruncatedPolynomial::zero(3, D);
        for (int i = 0; i <= r; ++i) {
            auto term = elementary(i, 3, D) * complete(r - i, 3, D);
            acc += (i % 2) ? (acc.zero(3, D) - term) : term;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("q polynomials") {
    const int D = 8;
    auto q1 = q_poly(1, 2, D);
    CHECK(q1.coeff({1, 0}) == 2);
    CHECK(q1.coeff({0, 1}) == 2);
    for (int r = 0; r <= 5; ++r) CHECK(is_symmetric(q_poly(r, 3, D)));
    // Generating function identity: sum q_r t^r = prod (1+x_i t)/(1-x_i t),
    // checked through q_r(1,1,1) = coefficient comparison at all-ones:
    // prod (1+t)/(1-t) over 3 vars has t^r coefficient matching eval_ones.
    // (1+t)^3(1-t)^{-3}: r=1 -> 6, r=2 -> 18, r=3 -> 38.
    CHECK(q_poly(1, 3, D).eval_ones() == 6);
    CHECK(q_poly(2, 3, D).eval_ones() == 18);
    CHECK(q_poly(3, 3, D).eval_ones() == 38);
}

TEST_CASE("schur Q basics") {
    const int D = 8;
    CHECK(schur_q(StrictPartition{}, 2, D).eval_ones() == 1);
    // One row: Q_(r) = q_r.
    for (int r = 1; r <= 4; ++r)
        CHECK(schur_q(StrictPartition({r}), 3, D) == q_poly(r, 3, D));
    // Vanishing beyond the variable count.
    CHECK(schur_q(StrictPartition({2, 1}), 1, D).is_zero());
    CHECK(schur_q(StrictPartition({3, 2, 1}), 2, D).is_zero());
    // Symmetry and integrality.
    for (int size = 1; size <= 6; ++size)
        for (const auto& lam : strict_partitions(size)) {
            auto Q = schur_q(lam, 3, D);
            CHECK(is_symmetric(Q));
            for (const auto& [e, c] : Q.terms())
                CHECK(boost::multiprecision::denominator(c) == 1);
        }
    // Two-row rule against the hand expansion Q_{(2,1)} = 4x1x2(x1+x2)
    // in 2 variables.
    auto Q21 = schur_q(StrictPartition({2, 1}), 2, D);
    CHECK(Q21.coeff({2, 1}) == 4);
    CHECK(Q21.coeff({1, 2}) == 4);
    CHECK(Q21.coeff({3, 0}) == 0);
    CHECK(Q21.eval_ones() == 8);
}

TEST_CASE("characters and dimensions") {
    CHECK_THROWS(char_U(StrictPartition({2, 1}), 1, 4));
    CHECK(dim_U(StrictPartition({1}), 1) == 2);
    CHECK(dim_U(StrictPartition({1}), 2) == 4);
    CHECK(dim_U(StrictPartition({2}), 2) == 8);
    CHECK(dim_U(StrictPartition({3}), 2) == 12);
    CHECK(dim_U(StrictPartition({2, 1}), 2) == 4);
    CHECK(dim_U(StrictPartition({3}), 3) == 38);
    CHECK(dim_U(StrictPartition({2, 1}), 3) == 16);

    CHECK(dim_T(StrictPartition({1}), 1) == 2);
    CHECK(dim_T(StrictPartition({2}), 2) == 4);
    CHECK(dim_T(StrictPartition({3}), 3) == 8);
    CHECK(dim_T(StrictPartition({2, 1}), 3) == 4);
}

TEST_CASE("cauchy identity") {
    auto rep = cauchy_check(1, 1, 3);
    CHECK(rep.verified);
    CHECK(cauchy_check(2, 2, 4).verified);
    CHECK(cauchy_check(3, 2, 4).verified);
    VerifyOptions tampered{.tamper = true};
    CHECK_FALSE(cauchy_check(1, 1, 3, tampered).verified);
    CHECK_FALSE(cauchy_check(2, 2, 4, tampered).verified);
}
