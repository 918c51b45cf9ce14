#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhowe/qalg.hpp"

using namespace qhowe;

namespace {

std::vector<QElement> q_basis(int n) {
    std::vector<QElement> out;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            out.push_back(q_gen_A(n, p, q));
            out.push_back(q_gen_B(n, p, q));
        }
    return out;
}

QElement q_scale(QElement x, const Rat& c) {
    for (auto& row : x.A)
        for (auto& v : row) v *= c;
    for (auto& row : x.B)
        for (auto& v : row) v *= c;
    return x;
}

QElement q_add(QElement x, const QElement& y) {
    for (std::size_t i = 0; i < x.A.size(); ++i)
        for (std::size_t j = 0; j < x.A.size(); ++j) {
            x.A[i][j] += y.A[i][j];
            x.B[i][j] += y.B[i][j];
        }
    return x;
}

bool q_is_zero(const QElement& x) { return x.is_even() && x.is_odd(); }

} // namespace

TEST_CASE("q(n) bracket structure constants") {
    // [A_01, A_10] = A_00 - A_11.
    auto z = q_bracket(q_gen_A(2, 0, 1), q_gen_A(2, 1, 0));
    CHECK(z == q_add(q_gen_A(2, 0, 0), q_scale(q_gen_A(2, 1, 1), -1)));
    // {B_00, B_00} = 2 A_00.
    auto w = q_bracket(q_gen_B(2, 0, 0), q_gen_B(2, 0, 0));
    CHECK(w == q_scale(q_gen_A(2, 0, 0), 2));
    // [A_00, B_01] = B_01, [A_00, B_10] = -B_10.
    CHECK(q_bracket(q_gen_A(2, 0, 0), q_gen_B(2, 0, 1)) == q_gen_B(2, 0, 1));
    CHECK(q_bracket(q_gen_A(2, 0, 0), q_gen_B(2, 1, 0)) == q_scale(q_gen_B(2, 1, 0), -1));
}

TEST_CASE("q(n) bracket super-skew-symmetry and Jacobi") {
    for (int n : {2, 3}) {
        auto basis = q_basis(n);
        for (const auto& x : basis)
            for (const auto& y : basis) {
                int sign = (x.parity() && y.parity()) ? -1 : 1;
                CHECK(q_is_zero(q_add(q_bracket(x, y), q_scale(q_bracket(y, x), sign))));
            }
        if (n == 3) continue; // Jacobi over all 3-subsets only at n = 2
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& zz : basis) {
                    // (-1)^{p(x)p(z)}[x,[y,z]] + cyclic = 0.
                    auto term = [&](const QElement& a, const QElement& b, const QElement& c) {
                        int s = (a.parity() && c.parity()) ? -1 : 1;
                        return q_scale(q_bracket(a, q_bracket(b, c)), s);
                    };
                    auto total = q_add(q_add(term(x, y, zz), term(y, zz, x)), term(zz, x, y));
                    CHECK(q_is_zero(total));
                }
    }
}

TEST_CASE("odd automorphism P") {
    for (int m : {1, 2, 3}) {
        auto P = p_matrix(m);
        // P^2 = -1.
        for (int i = 0; i < 2 * m; ++i)
            for (int j = 0; j < 2 * m; ++j) {
                Rat acc = 0;
                for (int l = 0; l < 2 * m; ++l)
                    acc += P[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                           P[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
                CHECK(acc == (i == j ? -1 : 0));
            }
        // P commutes with even elements of q(m), anticommutes with odd ones.
        for (const auto& x : q_basis(m)) {
            auto M = x.full_matrix();
            int sign = x.parity() ? 1 : -1;
            for (int i = 0; i < 2 * m; ++i)
                for (int j = 0; j < 2 * m; ++j) {
                    Rat pm = 0, mp = 0;
                    for (int l = 0; l < 2 * m; ++l) {
                        pm += P[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                              M[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
                        mp += M[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                              P[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
                    }
                    CHECK(pm + sign * mp == 0);
                }
        }
    }
}

TEST_CASE("tensor space structure") {
    TensorSpace V(2, 2);
    CHECK(V.dimension() == 16);
    CHECK(V.module.even_dimension() == 8);
    // Weight of e1 (x) f2 is (1,1); parity odd.
    int idx = V.with_digit(V.with_digit(0, 0, 0), 1, 3); // digit 0 = e1, digit 3 = f2
    CHECK(V.module.weights[static_cast<std::size_t>(idx)] == std::vector<int>{1, 1});
    CHECK(V.module.parity[static_cast<std::size_t>(idx)] == 1);
    CHECK(V.digit(idx, 0) == 0);
    CHECK(V.digit(idx, 1) == 3);
}

TEST_CASE("tensor action is a representation") {
    for (auto [m, k] : {std::pair{1, 3}, std::pair{2, 2}}) {
        TensorSpace V(m, k);
        auto basis = q_basis(m);
        std::vector<GradedOperator> acts;
        for (const auto& x : basis) acts.push_back(V.action(x));
        for (std::size_t a = 0; a < basis.size(); ++a) {
            CHECK(acts[a].parity_consistent(V.module));
            for (std::size_t b = 0; b < basis.size(); ++b) {
                auto got = superbracket(acts[a], acts[b]);
                auto want = V.action(q_bracket(basis[a], basis[b]));
                CHECK((got - want).is_zero());
            }
        }
    }
}

TEST_CASE("sym power dimensions") {
    CHECK(SymPowerSpace(1, 1, 2).dimension() == 2);  // x^2, x*xi
    CHECK(SymPowerSpace(2, 2, 2).dimension() == 8);
    CHECK(SymPowerSpace(3, 3, 4).dimension() == 66);  // S^4(C^{3|3})
    CHECK(SymPowerSpace(4, 4, 4).dimension() == 192); // S^4(C^{4|4})
    CHECK(SymPowerSpace(6, 6, 3).dimension() == 292); // S^3(C^{6|6})
    CHECK(SymPowerSpace(9, 9, 3).dimension() == 978); // S^3(C^{9|9})
    CHECK(SymPowerSpace(2, 2, 0).dimension() == 1);
}

TEST_CASE("superderivation extension is a Lie superalgebra map") {
    // Base = C^{2|2}; run over all 16 matrix units of End(C^{2|2}) split by
    // parity and compare brackets on S^3.
    SymPowerSpace S(2, 2, 3);
    std::vector<GradedOperator> units;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int par = ((i >= 2) + (j >= 2)) % 2;
            GradedOperator u(4, 4, par);
            u.add_entry(i, j, 1);
            units.push_back(u);
        }
    for (const auto& x : units) {
        auto dx = S.derivation(x);
        CHECK(dx.parity_consistent(S.module));
        for (const auto& y : units) {
            auto got = superbracket(S.derivation(x), S.derivation(y));
            auto want = S.derivation(superbracket(x, y));
            CHECK((got - want).is_zero());
        }
    }
}

TEST_CASE("grading sign and relabeling") {
    SymPowerSpace S(2, 2, 2);
    auto sg = S.grading_sign();
    auto id = GradedOperator::identity(S.dimension());
    CHECK((sg.compose(sg) - id).is_zero());

    // Swap both variables pairs: an involutive automorphism.
    auto swap_op = S.relabel({1, 0}, {1, 0});
    CHECK((swap_op.compose(swap_op) - id).is_zero());
    // xi1*xi2 -> xi2*xi1 = -xi1*xi2.
    SymMonomial mono;
    mono.even_exp = {0, 0};
    mono.odd_set = {0, 1};
    int idx = S.index.at(mono);
    CHECK(swap_op.entry(idx, idx) == -1);
}

TEST_CASE("howe space and realization") {
    HoweSpace H(2, 2, 2);
    CHECK(H.dimension() == SymPowerSpace(4, 4, 2).dimension());
    for (const auto& op : H.lower_generators()) CHECK(op.parity_consistent(H.space.module));
    for (const auto& op : H.upper_generators()) CHECK(op.parity_consistent(H.space.module));

    CHECK(realization_check(1, 1, 1).verified);
    CHECK(realization_check(1, 1, 2).verified);
    CHECK(realization_check(1, 2, 2).verified);
    CHECK(realization_check(2, 1, 2).verified);
    CHECK(realization_check(2, 2, 2).verified);
    CHECK(realization_check(2, 2, 3).verified);
    VerifyOptions tampered{.tamper = true};
    CHECK_FALSE(realization_check(1, 1, 2, tampered).verified);
    CHECK_FALSE(realization_check(2, 2, 2, tampered).verified);
}

TEST_CASE("lower and upper actions match generator sums") {
    HoweSpace H(2, 2, 2);
    auto x = q_gen_B(2, 0, 1);
    auto direct = H.lower_action(x);
    auto via_op = H.op(HoweKind::BLower, 0, 1);
    CHECK((direct - via_op).is_zero());
    auto y = q_gen_B(2, 1, 0);
    CHECK((H.upper_action(y) - H.op(HoweKind::BUpper, 1, 0)).is_zero());
}

TEST_CASE("singular vectors and cyclic modules in a tensor power") {
    // (C^{1|1})^{(x) 2}: q(1) has no raising operators, so take the Howe
    // space S^2(C^{2|2}) for m = 2, n = 1 and find the highest weight (2,0).
    HoweSpace H(2, 1, 2);
    auto raising = H.lower_raising();
    std::vector<int> hw = {2, 0, 2}; // lower (2,0), upper degree 2
    auto sing = singular_vectors(raising, H.space.module, hw);
    CHECK(!sing.empty());
    auto M = cyclic_module(H.space.module, sing[0], H.lower_generators(), raising);
    CHECK(M.dimension() > 0);
    // The cyclic module character uses the lower weights.
    auto ch = character(weight_homogenize(M), 0, 2, 4);
    CHECK(ch.eval_ones() == M.dimension());
}
