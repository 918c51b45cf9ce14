#pragma once

#include <optional>
#include <vector>

#include "qhowe/supermodule.hpp"

namespace qhowe {

/// Row echelon structure over sparse rational vectors with first-nonzero
/// pivoting.  Deterministic: the pivot of each stored row is its smallest
/// nonzero index and rows are kept pivot-normalized.
class Echelon {
public:
    /// Reduces v against the stored rows in place.
    void reduce(SparseVec& v) const;

    /// Reduces v; if nonzero, normalizes and stores it.  Returns true if
    /// the vector enlarged the span.
    bool insert(SparseVec v);

    int rank() const { return static_cast<int>(rows_.size()); }
    bool contains(SparseVec v) const;

    /// Back-substitutes so that every stored row is zero at every other
    /// pivot (full RREF), then returns rows ordered by pivot.
    std::vector<SparseVec> reduced_basis();

    const std::map<int, SparseVec>& rows() const { return rows_; }

private:
    std::map<int, SparseVec> rows_; // pivot index -> normalized row
};

/// Deterministic basis of the solution space of `constraints` (each a linear
/// functional on an `unknowns`-dimensional space).
std::vector<SparseVec> nullspace(std::vector<SparseVec> constraints, int unknowns);

/// Exact basis of the intersection of the kernels of `ops`.  An empty list
/// yields the full space.
std::vector<SparseVec> joint_kernel(const std::vector<GradedOperator>& ops, int dimension);

/// Z2-graded commutant: bases of {Z even : superbracket(Z,g)=0 for all g}
/// and likewise Z odd.  Diagonal even generators are used to restrict the
/// support of Z before solving.
struct GradedCommutant {
    std::vector<GradedOperator> even;
    std::vector<GradedOperator> odd;
    int total_dimension() const {
        return static_cast<int>(even.size() + odd.size());
    }
};
GradedCommutant commutant(const std::vector<GradedOperator>& gens, const SuperModule& V);

/// True iff the spans of A and B inside End(V) coincide.
bool span_equal(const std::vector<GradedOperator>& A, const std::vector<GradedOperator>& B);

/// Dimension of the unital associative algebra generated by `gens`,
/// computed by closing the span under right multiplication by generators.
/// Stops early once the rank reaches `stop_at` (pass -1 for full closure).
int algebra_span_dimension(const std::vector<GradedOperator>& gens, int dimension,
                           int stop_at = -1);

/// Groups basis indices of V by their joint eigenvalue vector under
/// `torus_ops`, which must act diagonally on the basis (checked).
std::map<std::vector<Rat>, std::vector<int>> weight_decompose(
    const std::vector<GradedOperator>& torus_ops, const SuperModule& V);

/// A subspace of an ambient SuperModule, held as a full-RREF basis.  Basis
/// vectors are parity-homogeneous (and weight-homogeneous when the ambient
/// has weight tags).
struct Subspace {
    const SuperModule* ambient = nullptr;
    std::vector<SparseVec> basis; // RREF rows ordered by pivot

    int dimension() const { return static_cast<int>(basis.size()); }

    /// Parity of a basis vector (asserts homogeneity).
    int vector_parity(int i) const;
    /// Weight of a basis vector (asserts homogeneity).
    std::vector<int> vector_weight(int i) const;

    /// Expresses an ambient vector in this basis; nullopt if outside.
    std::optional<SparseVec> coordinates(const SparseVec& v) const;

    /// Restriction of an ambient operator mapping the subspace into itself;
    /// nullopt if the subspace is not invariant.
    std::optional<GradedOperator> restrict_operator(const GradedOperator& op) const;

    /// The induced SuperModule on this basis (parities and weights of the
    /// homogeneous basis vectors).
    SuperModule induced_module() const;
};

/// Smallest subspace containing `seed` and invariant under all `ops`,
/// by breadth-first closure with exact rank tracking.
Subspace invariant_closure(const SuperModule& V, const std::vector<SparseVec>& seed,
                           const std::vector<GradedOperator>& ops);

/// Splits each basis vector of `sub` into its weight-homogeneous components
/// (all of which lie in `sub` when it is torus-invariant; checked) and
/// re-echelonizes, producing a weight-homogeneous basis.
Subspace weight_homogenize(const Subspace& sub);

} // namespace qhowe
