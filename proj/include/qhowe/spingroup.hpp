#pragma once

#include "qhowe/linalg.hpp"
#include "qhowe/qalg.hpp"
#include "qhowe/report.hpp"

namespace qhowe {

/// Element of the finite supergroup attached to the Sergeev algebra on k
/// strands, in normal form coeff * a_{i_1}...a_{i_t} * sigma with
/// i_1 < ... < i_t and sigma in S_k.  The central element z is identified
/// with -1, so coefficients are +-1 for group elements (general rational
/// coefficients are allowed so the type doubles as a 1-term algebra word).
struct SpinGroupElement {
    int k = 0;
    Rat coeff = 1;
    std::vector<std::uint8_t> eps; // a-word indicator, length k
    std::vector<int> perm;         // perm[i] = sigma(i), 0-based

    static SpinGroupElement identity(int k);
    static SpinGroupElement generator_a(int k, int i);          // a_{i+1}, 0-based i
    static SpinGroupElement transposition(int k, int i, int j); // sigma = (i j)

    int parity() const; // number of a-letters mod 2
    bool operator==(const SpinGroupElement& o) const {
        return k == o.k && coeff == o.coeff && eps == o.eps && perm == o.perm;
    }

    std::string to_string() const;
};

/// Product in the group algebra: normalizes the concatenated a-word with
/// a_i a_j = -a_j a_i (i != j), a_i^2 = z = -1, sigma a_i sigma^{-1} =
/// a_{sigma(i)}.
SpinGroupElement multiply(const SpinGroupElement& g, const SpinGroupElement& h);

/// Parses products like "a1*a3*s2" or "(1 3 2)" style cycle-free input:
/// tokens a<i> (Clifford generator), s<i> (adjacent transposition s_i =
/// (i, i+1)), and z; separated by '*'.
SpinGroupElement parse_spin_element(int k, const std::string& text);

/// Action on the tensor power (C^{m|m})^{(x) k}: a_i acts by the odd
/// automorphism P on slot i with the Koszul prefix sign, transpositions act
/// by graded slot swaps (adjacent factorization).
GradedOperator act_tensor(const SpinGroupElement& g, const TensorSpace& V);

/// The Sergeev-algebra generators as operators: a_1..a_k then s_1..s_{k-1}.
std::vector<GradedOperator> sergeev_generators(const TensorSpace& V);

/// The invariants of the diagonal supergroup action on
/// (C^{m|m})^{(x)k} (x) (C^{n|n})^{(x)k}, taken with the graded twist
/// g.(v (x) w) = (-1)^{p(g)(p(v)+p(w))} gv (x) gw.
struct DeltaInvariants {
    TensorSpace left;   // (C^{m|m})^{(x)k}
    TensorSpace right;  // (C^{n|n})^{(x)k}
    SuperModule product; // left (x) right, index = iL * dim(right) + iR
    Subspace invariants;

    DeltaInvariants(int k, int m, int n);

    int pair_index(int iL, int iR) const { return iL * right.dimension() + iR; }
};

/// Verifies that symmetrization identifies S^k(C^{mn|mn}) with the diagonal
/// invariants and intertwines the q(m) x q(n) operator actions on both
/// sides.
VerificationReport iso_to_symk(int k, int m, int n, const VerifyOptions& opts = {});

/// The symmetrization matrix underlying iso_to_symk: column j is the image
/// in left (x) right coordinates of the j-th monomial of S^k(C^{mn|mn}).
GradedOperator symmetrization_matrix(const HoweSpace& H, const DeltaInvariants& D);

} // namespace qhowe
