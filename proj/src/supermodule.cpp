#include "qhowe/supermodule.hpp"

namespace qhowe {

SparseVec GradedOperator::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [j, c] : v) vec_axpy(out, c, col[static_cast<std::size_t>(j)]);
    return out;
}

GradedOperator GradedOperator::compose(const GradedOperator& o) const {
    if (cols != o.rows) throw std::invalid_argument("compose: shape mismatch");
    GradedOperator r(rows, o.cols, (parity + o.parity) % 2);
    for (int j = 0; j < o.cols; ++j)
        r.col[static_cast<std::size_t>(j)] = apply(o.col[static_cast<std::size_t>(j)]);
    return r;
}

GradedOperator GradedOperator::operator+(const GradedOperator& o) const {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("operator+: shape mismatch");
    GradedOperator r = *this;
    for (int j = 0; j < cols; ++j)
        vec_axpy(r.col[static_cast<std::size_t>(j)], 1, o.col[static_cast<std::size_t>(j)]);
    return r;
}

GradedOperator GradedOperator::operator-(const GradedOperator& o) const {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("operator-: shape mismatch");
    GradedOperator r = *this;
    for (int j = 0; j < cols; ++j)
        vec_axpy(r.col[static_cast<std::size_t>(j)], -1, o.col[static_cast<std::size_t>(j)]);
    return r;
}

GradedOperator GradedOperator::operator*(const Rat& c) const {
    GradedOperator r(rows, cols, parity);
    if (c == 0) return r;
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col[static_cast<std::size_t>(j)])
            r.col[static_cast<std::size_t>(j)].emplace(i, v * c);
    return r;
}

bool GradedOperator::parity_consistent(const SuperModule& V) const {
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col[static_cast<std::size_t>(j)])
            if ((V.parity[static_cast<std::size_t>(i)] +
                 V.parity[static_cast<std::size_t>(j)]) % 2 != parity)
                return false;
    return true;
}

GradedOperator superbracket(const GradedOperator& X, const GradedOperator& Y) {
    if (X.rows != X.cols || Y.rows != Y.cols || X.rows != Y.rows)
        throw std::invalid_argument("superbracket: operators must share a square space");
    GradedOperator xy = X.compose(Y);
    GradedOperator yx = Y.compose(X);
    return (X.parity && Y.parity) ? xy + yx : xy - yx;
}

GradedOperator ordinary_bracket(const GradedOperator& X, const GradedOperator& Y) {
    return X.compose(Y) - Y.compose(X);
}

} // namespace qhowe
