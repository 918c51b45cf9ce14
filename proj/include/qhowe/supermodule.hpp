#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhowe/rational.hpp"

namespace qhowe {

/// Sparse exact-rational column vector, index -> nonzero coefficient.
using SparseVec = std::map<int, Rat>;

inline void vec_axpy(SparseVec& y, const Rat& a, const SparseVec& x) {
    if (a == 0) return;
    for (const auto& [i, c] : x) {
        auto [it, inserted] = y.emplace(i, a * c);
        if (!inserted) {
            it->second += a * c;
            if (it->second == 0) y.erase(it);
        }
    }
}

/// Finite-dimensional Z2-graded vector space with an enumerated,
/// parity-tagged basis and optional per-element integer weight tags.
struct SuperModule {
    std::vector<std::string> labels;
    std::vector<int> parity;                 // 0 even, 1 odd
    std::vector<std::vector<int>> weights;   // may be empty (no weight tags)

    int dimension() const { return static_cast<int>(parity.size()); }
    bool has_weights() const { return !weights.empty(); }

    int even_dimension() const {
        int d = 0;
        for (int p : parity) d += (p == 0);
        return d;
    }
};

/// Sparse exact-rational matrix with a parity tag.  Column j holds the
/// image of basis vector j.  Every nonzero entry must connect basis
/// elements whose parities differ by exactly the operator's parity.
struct GradedOperator {
    int rows = 0;
    int cols = 0;
    int parity = 0;
    std::vector<SparseVec> col;

    GradedOperator() = default;
    GradedOperator(int r, int c, int p)
        : rows(r), cols(c), parity(p), col(static_cast<std::size_t>(c)) {}

    static GradedOperator identity(int n) {
        GradedOperator op(n, n, 0);
        for (int i = 0; i < n; ++i) op.col[static_cast<std::size_t>(i)][i] = 1;
        return op;
    }

    void add_entry(int i, int j, const Rat& v) {
        if (v == 0) return;
        auto& c = col[static_cast<std::size_t>(j)];
        auto [it, inserted] = c.emplace(i, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) c.erase(it);
        }
    }

    Rat entry(int i, int j) const {
        const auto& c = col[static_cast<std::size_t>(j)];
        auto it = c.find(i);
        return it == c.end() ? Rat(0) : it->second;
    }

    bool is_zero() const {
        for (const auto& c : col)
            if (!c.empty()) return false;
        return true;
    }

    long nnz() const {
        long n = 0;
        for (const auto& c : col) n += static_cast<long>(c.size());
        return n;
    }

    SparseVec apply(const SparseVec& v) const;

    GradedOperator compose(const GradedOperator& o) const;   // this after o
    GradedOperator operator+(const GradedOperator& o) const;
    GradedOperator operator-(const GradedOperator& o) const;
    GradedOperator operator*(const Rat& c) const;

    /// Checks the parity invariant against a module's basis parities.
    bool parity_consistent(const SuperModule& V) const;
};

/// XY - (-1)^{p(X)p(Y)} YX.
GradedOperator superbracket(const GradedOperator& X, const GradedOperator& Y);

/// XY - YX, irrespective of parities.
GradedOperator ordinary_bracket(const GradedOperator& X, const GradedOperator& Y);

} // namespace qhowe
