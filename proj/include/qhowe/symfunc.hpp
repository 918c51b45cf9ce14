#pragma once

#include "qhowe/partitions.hpp"
#include "qhowe/polynomial.hpp"
#include "qhowe/report.hpp"

namespace qhowe {

/// Elementary symmetric polynomial e_r in m variables (0 if r > m, e_0 = 1).
TruncatedPolynomial elementary(int r, int m, int degree_bound);

/// Complete homogeneous symmetric polynomial h_r in m variables.
TruncatedPolynomial complete(int r, int m, int degree_bound);

/// q_r = sum_{i=0}^{r} h_i e_{r-i}; q_0 = 1.
TruncatedPolynomial q_poly(int r, int m, int degree_bound);

/// Schur Q-function Q_lambda in m variables, assembled from the q_r by the
/// two-row rule and a Pfaffian.  Q_{(k)} = q_k; Q_lambda = 0 when
/// l(lambda) > m.
TruncatedPolynomial schur_q(const StrictPartition& lambda, int m, int degree_bound);

/// Character of the irreducible highest-weight module U^lambda_m:
/// 2^{(delta(l)-l)/2} * Q_lambda.  Rejects l(lambda) > m.
TruncatedPolynomial char_U(const StrictPartition& lambda, int m, int degree_bound);

/// dim U^lambda_m: char_U evaluated at x = (1,...,1).
long dim_U(const StrictPartition& lambda, int m);

/// Coefficient of x_1...x_k in char_U(lambda, k), where k = |lambda|:
/// the dimension of the spin module T^lambda_k.
long dim_T(const StrictPartition& lambda, int k);

/// Compares the truncated expansion of prod (1+x_i y_j)/(1-x_i y_j) with
/// sum_lambda 2^{-l(lambda)} Q_lambda(x) Q_lambda(y) coefficientwise over
/// all monomials with x-degree <= D and y-degree <= D.
VerificationReport cauchy_check(int m, int n, int degree_bound,
                                const VerifyOptions& opts = {});

} // namespace qhowe
