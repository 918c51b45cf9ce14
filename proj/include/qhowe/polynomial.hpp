#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhowe/rational.hpp"

namespace qhowe {

/// Exponent vector of a commutative monomial, one entry per variable.
using Exponents = std::vector<int>;

/// Multivariate polynomial with exact rational coefficients, truncated at a
/// total degree bound.  Arithmetic silently drops terms above the bound and
/// is exact below it.  No zero coefficient is ever stored.
class TruncatedPolynomial {
public:
    TruncatedPolynomial(int variable_count, int degree_bound)
        : vars_(variable_count), bound_(degree_bound) {}

    static TruncatedPolynomial zero(int vars, int bound) { return {vars, bound}; }
    static TruncatedPolynomial constant(int vars, int bound, const Rat& c);
    static TruncatedPolynomial variable(int vars, int bound, int index);

    int variable_count() const { return vars_; }
    int degree_bound() const { return bound_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rat& c);

    TruncatedPolynomial& operator+=(const TruncatedPolynomial& o);
    TruncatedPolynomial& operator-=(const TruncatedPolynomial& o);
    TruncatedPolynomial operator+(const TruncatedPolynomial& o) const;
    TruncatedPolynomial operator-(const TruncatedPolynomial& o) const;
    TruncatedPolynomial operator*(const TruncatedPolynomial& o) const;
    TruncatedPolynomial operator*(const Rat& c) const;
    bool operator==(const TruncatedPolynomial& o) const;

    /// Evaluate with every variable set to 1.
    Rat eval_ones() const;

    /// Canonical text form: graded lexicographic monomial order, variables
    /// printed via `name(i)` (defaults to x1, x2, ...).
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int vars_;
    int bound_;
    std::map<Exponents, Rat> terms_;
};

} // namespace qhowe
