#pragma once

#include <functional>

#include "qhowe/linalg.hpp"
#include "qhowe/polynomial.hpp"
#include "qhowe/report.hpp"
#include "qhowe/supermodule.hpp"

namespace qhowe {

/// Element of the queer Lie superalgebra q(n), realized as the 2n x 2n
/// matrix [[A,B],[B,A]].  Even iff B = 0, odd iff A = 0.
struct QElement {
    int n = 0;
    std::vector<std::vector<Rat>> A; // even block
    std::vector<std::vector<Rat>> B; // odd block

    explicit QElement(int rank);

    bool is_even() const;
    bool is_odd() const;
    /// 0 or 1; throws for mixed-parity elements.
    int parity() const;

    /// The 2n x 2n matrix [[A,B],[B,A]].
    std::vector<std::vector<Rat>> full_matrix() const;

    bool operator==(const QElement& o) const { return n == o.n && A == o.A && B == o.B; }
};

/// Basis elements: A-block resp. B-block matrix unit E_pq (0-based).
QElement q_gen_A(int n, int p, int q);
QElement q_gen_B(int n, int p, int q);

/// Supercommutator of parity-homogeneous elements, computed from 2n x 2n
/// block arithmetic and re-expressed in (A,B) form.  Closure is asserted.
QElement q_bracket(const QElement& X, const QElement& Y);

/// The fixed odd automorphism with P(e_i) = -f_i, P(f_i) = e_i; P^2 = -1.
/// Returned as a 2m x 2m matrix (columns = images of e_1..e_m, f_1..f_m).
std::vector<std::vector<Rat>> p_matrix(int m);

/// The tensor power of the natural module: a based model of
/// (C^{m|m})^{tensor k}.  Basis tuples are mixed-radix encoded, first
/// factor = least significant digit; digit d < m is e_{d+1} (even), digit
/// d >= m is f_{d-m+1} (odd).  Weight tags count lower indices.
struct TensorSpace {
    int m = 0;
    int k = 0;
    SuperModule module;

    TensorSpace(int m, int k);

    int dimension() const { return module.dimension(); }
    int digit(int index, int pos) const;
    int with_digit(int index, int pos, int d) const;
    int slot_parity(int d) const { return d >= m ? 1 : 0; }

    /// Derivation action of a general linear map on C^{m|m} (given as its
    /// 2m x 2m matrix with a parity tag), with Koszul signs.
    GradedOperator derivation(const std::vector<std::vector<Rat>>& mat, int parity) const;

    /// Derivation action of X in q(m).
    GradedOperator action(const QElement& X) const;

    /// Diagonal torus operator for index p (0-based): the action of
    /// q_gen_A(m, p, p); diagonal on the basis.
    GradedOperator torus_op(int p) const;
};

/// A based model of S^degree(C^{n_even|n_odd}): all monomials of total
/// degree `degree` in n_even commuting and n_odd anticommuting variables,
/// odd factors stored sorted with the Koszul sign absorbed.
struct SymMonomial {
    std::vector<int> even_exp;
    std::vector<int> odd_set; // strictly increasing

    auto operator<=>(const SymMonomial&) const = default;
};

struct SymPowerSpace {
    int n_even = 0;
    int n_odd = 0;
    int degree = 0;
    std::vector<SymMonomial> basis;
    std::map<SymMonomial, int> index;
    SuperModule module;

    /// weight_of(is_odd, var) gives the weight vector of one variable;
    /// monomial weights are the multiplicity-weighted sums.  Pass nullptr
    /// for no weight tags.
    SymPowerSpace(int n_even, int n_odd, int degree,
                  const std::function<std::vector<int>(bool, int)>& weight_of = nullptr);

    int dimension() const { return module.dimension(); }

    /// Left-superderivation extension of a linear map on the base space
    /// (base basis: even variables 0..n_even-1, then odd variables).
    GradedOperator derivation(const GradedOperator& base_op) const;

    /// The grading involution v -> (-1)^{p(v)} v.
    GradedOperator grading_sign() const;

    /// Algebra automorphism induced by a parity-preserving relabeling of
    /// variables (even_map/odd_map are permutations of variable indices);
    /// odd factors are re-sorted with Koszul signs.
    GradedOperator relabel(const std::vector<int>& even_map,
                           const std::vector<int>& odd_map) const;
};

/// The polynomial model of S^k(C^{mn|mn}) carrying the commuting q(m) and
/// q(n) actions by first-order differential operators.  Variables x_i^j,
/// xi_i^j are flattened as i*n + j (0-based lower i < m, upper j < n);
/// weight tags are (lower weight | upper weight) of length m + n.
enum class HoweKind { AUpper, BUpper, ALower, BLower };

struct HoweSpace {
    int m = 0;
    int n = 0;
    int k = 0;
    SymPowerSpace space;

    HoweSpace(int m, int n, int k);

    int dimension() const { return space.dimension(); }
    int var(int i, int j) const { return i * n + j; }

    /// First-order operator per kind (0-based p, q; upper: p,q < n, lower:
    /// p,q < m).  A-kinds are even, B-kinds odd.
    GradedOperator op(HoweKind kind, int p, int q) const;

    /// Derivation action of X in q(m) through the lower operators.
    GradedOperator lower_action(const QElement& X) const;
    /// Action of Y in q(n) through the upper operators.  The odd-odd
    /// structure constants of this copy are the negatives of the matrix
    /// realization's (the two are isomorphic over C via B -> iB).
    GradedOperator upper_action(const QElement& Y) const;

    std::vector<GradedOperator> lower_generators() const;
    std::vector<GradedOperator> upper_generators() const;
    std::vector<GradedOperator> lower_raising() const; // p < q, A and B kinds
    std::vector<GradedOperator> upper_raising() const;
    std::vector<GradedOperator> lower_torus() const;   // A_pp, diagonal
    std::vector<GradedOperator> upper_torus() const;

    /// Automorphism permuting upper indices of all variables.
    GradedOperator relabel_upper(const std::vector<int>& perm) const;
    /// Automorphism permuting lower indices of all variables.
    GradedOperator relabel_lower(const std::vector<int>& perm) const;
};

/// Verifies that the lower operators on S^k reproduce the structure
/// constants of q(m), the upper ones those of q(n) up to the B -> iB
/// twist on odd-odd brackets, and that the two families supercommute.
VerificationReport realization_check(int m, int n, int k, const VerifyOptions& opts = {});

/// Basis of the weight-homogeneous joint kernel of the raising operators.
std::vector<SparseVec> singular_vectors(const std::vector<GradedOperator>& raising,
                                        const SuperModule& V,
                                        const std::vector<int>& weight);

/// Smallest subspace containing v invariant under all given algebra
/// operators.  v must be annihilated by `raising` (checked).
Subspace cyclic_module(const SuperModule& V, const SparseVec& v,
                       const std::vector<GradedOperator>& algebra_ops,
                       const std::vector<GradedOperator>& raising);

/// Character of a weight-homogeneous subspace: sum over a basis of
/// x^{weight}, reading weight components [offset, offset+count) of the
/// ambient weight tags.
TruncatedPolynomial character(const Subspace& M, int offset, int count, int degree_bound);

} // namespace qhowe
