#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhowe/linalg.hpp"

using namespace qhowe;

namespace {

SparseVec vec(std::initializer_list<std::pair<int, int>> entries) {
    SparseVec v;
    for (auto [i, c] : entries)
        if (c) v[i] = c;
    return v;
}

GradedOperator dense_op(int n, int parity, const std::vector<std::vector<int>>& m) {
    GradedOperator op(n, n, parity);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            op.add_entry(i, j, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return op;
}

} // namespace

TEST_CASE("echelon rank and membership") {
    Echelon e;
    CHECK(e.insert(vec({{0, 1}, {1, 2}})));
    CHECK(e.insert(vec({{1, 1}, {2, 1}})));
    CHECK_FALSE(e.insert(vec({{0, 2}, {1, 2}, {2, -2}})));
    CHECK(e.rank() == 2);
    CHECK(e.contains(vec({{0, 3}, {1, 3}, {2, -3}})));
    CHECK_FALSE(e.contains(vec({{2, 1}})));
    auto basis = e.reduced_basis();
    REQUIRE(basis.size() == 2);
    // RREF: each row's pivot is absent from the other row.
    CHECK(basis[0].begin()->first == 0);
    CHECK(basis[1].begin()->first == 1);
    CHECK(basis[0].count(1) == 0);
}

TEST_CASE("nullspace and rank-nullity") {
    // x0 + x1 = 0, x1 + x2 = 0 in 3 unknowns: kernel is 1-dimensional.
    auto ns = nullspace({vec({{0, 1}, {1, 1}}), vec({{1, 1}, {2, 1}})}, 3);
    REQUIRE(ns.size() == 1);
    const auto& v = ns[0];
    CHECK(v.at(0) == -v.at(1));
    CHECK(v.at(2) == -v.at(1));

    // Random fixed-seed matrices: rank + nullity == unknowns.
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const int rows = 6, cols = 9;
        std::vector<SparseVec> constraints;
        Echelon rk;
        for (int r = 0; r < rows; ++r) {
            SparseVec row;
            for (int c = 0; c < cols; ++c) {
                int x = coeff(rng);
                if (x) row[c] = x;
            }
            rk.insert(row);
            constraints.push_back(std::move(row));
        }
        auto kernel = nullspace(constraints, cols);
        CHECK(rk.rank() + static_cast<int>(kernel.size()) == cols);
        for (const auto& k : kernel)
            for (const auto& row : constraints) {
                Rat dot = 0;
                for (const auto& [i, c] : row) {
                    auto it = k.find(i);
                    if (it != k.end()) dot += c * it->second;
                }
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("joint kernel") {
    GradedOperator a(3, 3, 0), b(3, 3, 0);
    a.add_entry(0, 0, 1); // kills e1, e2
    b.add_entry(0, 1, 1); // kills e0, e2
    auto k = joint_kernel({a, b}, 3);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == vec({{2, 1}}));
    CHECK(joint_kernel({}, 4).size() == 4);
}

TEST_CASE("commutant of a generic diagonal operator is the diagonal algebra") {
    SuperModule V;
    V.labels = {"a", "b", "c"};
    V.parity = {0, 0, 0};
    GradedOperator d(3, 3, 0);
    d.add_entry(0, 0, 1);
    d.add_entry(1, 1, 2);
    d.add_entry(2, 2, 5);
    auto c = commutant({d}, V);
    CHECK(c.even.size() == 3);
    CHECK(c.odd.empty());
    for (const auto& z : c.even) CHECK(superbracket(z, d).is_zero());
}

TEST_CASE("graded commutant sees odd symmetries") {
    // V = C^{1|1}, generator = identity: everything supercommutes that is
    // even; odd Z must satisfy ZI - IZ = 0, so odd part is 2-dimensional.
    SuperModule V;
    V.labels = {"e", "f"};
    V.parity = {0, 1};
    auto c = commutant({GradedOperator::identity(2)}, V);
    CHECK(c.even.size() == 2);
    CHECK(c.odd.size() == 2);

    // Against the odd operator P (e -> -f, f -> e) with P odd: the graded
    // commutant inside End(C^{1|1}) is spanned by 1, P.
    GradedOperator P(2, 2, 1);
    P.add_entry(1, 0, -1);
    P.add_entry(0, 1, 1);
    GradedOperator A(2, 2, 0);
    A.add_entry(0, 0, 1);
    A.add_entry(1, 1, 1);
    auto cp = commutant({P, A}, V);
    CHECK(cp.total_dimension() == 2);
    for (const auto& z : cp.even) CHECK(superbracket(z, P).is_zero());
    for (const auto& z : cp.odd) CHECK(superbracket(z, P).is_zero());
}

TEST_CASE("span equality and algebra closure") {
    GradedOperator e12(2, 2, 0), e21(2, 2, 0);
    e12.add_entry(0, 1, 1);
    e21.add_entry(1, 0, 1);
    CHECK(algebra_span_dimension({e12, e21}, 2) == 4);
    CHECK(algebra_span_dimension({e12, e21}, 2, 3) == 3); // early stop
    CHECK(algebra_span_dimension({GradedOperator::identity(2)}, 2) == 1);

    GradedOperator sum = e12 + e21;
    CHECK(span_equal({e12, e21}, {sum, e12}));
    CHECK_FALSE(span_equal({e12}, {e21}));
    CHECK(span_equal({}, {}));
}

TEST_CASE("weight decomposition") {
    SuperModule V;
    V.labels = {"a", "b", "c", "d"};
    V.parity = {0, 0, 1, 1};
    GradedOperator t(4, 4, 0);
    t.add_entry(0, 0, 1);
    t.add_entry(1, 1, 2);
    t.add_entry(2, 2, 1);
    auto spaces = weight_decompose({t}, V);
    REQUIRE(spaces.size() == 3);
    CHECK(spaces.at({Rat(1)}) == std::vector<int>{0, 2});
    CHECK(spaces.at({Rat(2)}) == std::vector<int>{1});
    CHECK(spaces.at({Rat(0)}) == std::vector<int>{3});

    GradedOperator nd(4, 4, 0);
    nd.add_entry(0, 1, 1);
    CHECK_THROWS(weight_decompose({nd}, V));
}

TEST_CASE("subspace, closure, restriction") {
    SuperModule V;
    V.labels = {"a", "b", "c"};
    V.parity = {0, 0, 0};
    V.weights = {{1}, {1}, {2}};

    GradedOperator rot(3, 3, 0); // a -> b -> a on the first two coordinates
    rot.add_entry(1, 0, 1);
    rot.add_entry(0, 1, 1);

    Subspace sub = invariant_closure(V, {vec({{0, 1}})}, {rot});
    CHECK(sub.dimension() == 2);
    CHECK(sub.vector_parity(0) == 0);
    CHECK(sub.vector_weight(0) == std::vector<int>{1});
    CHECK(sub.coordinates(vec({{0, 2}, {1, -3}})).has_value());
    CHECK_FALSE(sub.coordinates(vec({{2, 1}})).has_value());

    auto restricted = sub.restrict_operator(rot);
    REQUIRE(restricted.has_value());
    CHECK(restricted->rows == 2);

    GradedOperator leak(3, 3, 0);
    leak.add_entry(2, 0, 1);
    CHECK_FALSE(sub.restrict_operator(leak).has_value());

    SuperModule induced = sub.induced_module();
    CHECK(induced.dimension() == 2);
    CHECK(induced.weights[0] == std::vector<int>{1});
}

TEST_CASE("weight homogenize") {
    SuperModule V;
    V.labels = {"a", "b"};
    V.parity = {0, 0};
    V.weights = {{1}, {2}};
    Subspace whole;
    whole.ambient = &V;
    {
        Echelon e;
        e.insert(vec({{0, 1}, {1, 1}}));
        e.insert(vec({{0, 1}, {1, -1}}));
        whole.basis = e.reduced_basis();
    }
    Subspace h = weight_homogenize(whole);
    CHECK(h.dimension() == 2);
    CHECK(h.vector_weight(0) == std::vector<int>{1});
    CHECK(h.vector_weight(1) == std::vector<int>{2});
}
