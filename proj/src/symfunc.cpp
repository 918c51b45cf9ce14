#include "qhowe/symfunc.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace qhowe {

TruncatedPolynomial elementary(int r, int m, int D) {
    if (r < 0) throw std::invalid_argument("elementary: negative r");
    TruncatedPolynomial p = TruncatedPolynomial::constant(m, D, 1);
    if (r == 0) return p;
    if (r > m) return TruncatedPolynomial::zero(m, D);
    // DP over variables: e_r picks each variable at most once
    std::vector<TruncatedPolynomial> acc(static_cast<std::size_t>(r) + 1,
                                         TruncatedPolynomial::zero(m, D));
    acc[0] = p;
    for (int v = 0; v < m; ++v) {
        TruncatedPolynomial xv = TruncatedPolynomial::variable(m, D, v);
        for (int j = std::min(r, v + 1); j >= 1; --j)
            acc[static_cast<std::size_t>(j)] += acc[static_cast<std::size_t>(j - 1)] * xv;
    }
    return acc[static_cast<std::size_t>(r)];
}

TruncatedPolynomial complete(int r, int m, int D) {
    if (r < 0) throw std::invalid_argument("complete: negative r");
    // DP over variables: h_r allows arbitrary multiplicities
    std::vector<TruncatedPolynomial> acc(static_cast<std::size_t>(r) + 1,
                                         TruncatedPolynomial::zero(m, D));
    acc[0] = TruncatedPolynomial::constant(m, D, 1);
    for (int v = 0; v < m; ++v) {
        TruncatedPolynomial xv = TruncatedPolynomial::variable(m, D, v);
        for (int j = 1; j <= r; ++j)
            acc[static_cast<std::size_t>(j)] += acc[static_cast<std::size_t>(j - 1)] * xv;
    }
    return acc[static_cast<std::size_t>(r)];
}

TruncatedPolynomial q_poly(int r, int m, int D) {
    TruncatedPolynomial s = TruncatedPolynomial::zero(m, D);
    for (int i = 0; i <= r; ++i) s += complete(i, m, D) * elementary(r - i, m, D);
    return s;
}

namespace {

/// Two-row Schur Q-function: Q_{(r,s)} = q_r q_s + 2 sum_{i=1}^s (-1)^i q_{r+i} q_{s-i}.
TruncatedPolynomial schur_q_two_row(int r, int s, int m, int D) {
    TruncatedPolynomial res = q_poly(r, m, D) * q_poly(s, m, D);
    for (int i = 1; i <= s; ++i) {
        TruncatedPolynomial t = q_poly(r + i, m, D) * q_poly(s - i, m, D) * Rat(2);
        if (i % 2)
            res -= t;
        else
            res += t;
    }
    return res;
}

/// Pfaffian by recursive expansion along the first row.
TruncatedPolynomial pfaffian(const std::vector<std::vector<TruncatedPolynomial>>& M,
                             std::vector<int> idx, int m, int D) {
    std::size_t n = idx.size();
    if (n == 0) return TruncatedPolynomial::constant(m, D, 1);
    if (n % 2) return TruncatedPolynomial::zero(m, D);
    if (n == 2)
        return M[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(idx[1])];
    TruncatedPolynomial res = TruncatedPolynomial::zero(m, D);
    for (std::size_t j = 1; j < n; ++j) {
        std::vector<int> rest;
        for (std::size_t t = 1; t < n; ++t)
            if (t != j) rest.push_back(idx[t]);
        TruncatedPolynomial term =
            M[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(idx[j])] *
            pfaffian(M, rest, m, D);
        if (j % 2)
            res += term;
        else
            res -= term;
    }
    return res;
}

} // namespace

TruncatedPolynomial schur_q(const StrictPartition& lambda, int m, int D) {
    int l = lambda.length();
    if (l == 0) return TruncatedPolynomial::constant(m, D, 1);
    if (l == 1) return q_poly(lambda.part(0), m, D);
    // even-size antisymmetric array; odd length gets an appended zero part,
    // whose column holds the one-row functions q_{lambda_i}
    int r = (l % 2 == 0) ? l : l + 1;
    std::vector<std::vector<TruncatedPolynomial>> M(
        static_cast<std::size_t>(r),
        std::vector<TruncatedPolynomial>(static_cast<std::size_t>(r),
                                         TruncatedPolynomial::zero(m, D)));
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            TruncatedPolynomial entry =
                (j < l) ? schur_q_two_row(lambda.part(i), lambda.part(j), m, D)
                        : q_poly(lambda.part(i), m, D);
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry;
            M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                TruncatedPolynomial::zero(m, D) - entry;
        }
    }
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    return pfaffian(M, idx, m, D);
}

TruncatedPolynomial char_U(const StrictPartition& lambda, int m, int D) {
    int l = lambda.length();
    if (l > m)
        throw std::invalid_argument(
            "char_U: no finite-dimensional irreducible for l(lambda) > m");
    return schur_q(lambda, m, D) * pow2((delta(l) - l) / 2);
}

long dim_U(const StrictPartition& lambda, int m) {
    Rat v = char_U(lambda, m, lambda.size()).eval_ones();
    if (denominator(v) != 1) throw std::logic_error("dim_U: non-integral dimension");
    return static_cast<long>(numerator(v));
}

long dim_T(const StrictPartition& lambda, int k) {
    if (lambda.size() != k)
        throw std::invalid_argument("dim_T: requires |lambda| = k");
    if (k == 0) return 1;
    TruncatedPolynomial c = char_U(lambda, k, k);
    Exponents square_free(static_cast<std::size_t>(k), 1);
    Rat v = c.coeff(square_free);
    if (denominator(v) != 1 || v <= 0) throw std::logic_error("dim_T: bad coefficient");
    return static_cast<long>(numerator(v));
}

namespace {

std::string monomial_string(const Exponents& e, int m, int n) {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < m + n; ++i) {
        int ex = e[static_cast<std::size_t>(i)];
        if (!ex) continue;
        if (any) os << "*";
        any = true;
        os << (i < m ? "x" : "y") << (i < m ? i + 1 : i - m + 1);
        if (ex > 1) os << "^" << ex;
    }
    if (!any) os << "1";
    return os.str();
}

} // namespace

VerificationReport cauchy_check(int m, int n, int D, const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.check_name = "cauchy-check";
    rep.parameters = {{"m", std::to_string(m)},
                      {"n", std::to_string(n)},
                      {"degree", std::to_string(D)}};

    int vars = m + n; // x_1..x_m then y_1..y_n
    int bound = 2 * D;

    // LHS: product over (i,j) of (1 + x_i y_j) * sum_{t<=D} (x_i y_j)^t
    TruncatedPolynomial lhs = TruncatedPolynomial::constant(vars, bound, 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            TruncatedPolynomial factor(vars, bound);
            Exponents e(static_cast<std::size_t>(vars), 0);
            for (int t = 0; t <= D; ++t) {
                e[static_cast<std::size_t>(i)] = t;
                e[static_cast<std::size_t>(m + j)] = t;
                factor.add_term(e, 1);
                e[static_cast<std::size_t>(i)] = t + 1;
                e[static_cast<std::size_t>(m + j)] = t + 1;
                factor.add_term(e, 1);
            }
            lhs = lhs * factor;
        }
    }

    // RHS: sum over strict lambda, |lambda| <= D, l(lambda) <= min(m,n)
    TruncatedPolynomial rhs = TruncatedPolynomial::zero(vars, bound);
    for (int k = 0; k <= D; ++k) {
        for (const auto& lambda : strict_partitions(k, std::min(m, n))) {
            TruncatedPolynomial qx = schur_q(lambda, m, D);
            TruncatedPolynomial qy = schur_q(lambda, n, D);
            // embed into the joint variable set
            TruncatedPolynomial qx2(vars, bound), qy2(vars, bound);
            for (const auto& [e, c] : qx.terms()) {
                Exponents e2(static_cast<std::size_t>(vars), 0);
                for (int i = 0; i < m; ++i) e2[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
                qx2.add_term(e2, c);
            }
            for (const auto& [e, c] : qy.terms()) {
                Exponents e2(static_cast<std::size_t>(vars), 0);
                for (int j = 0; j < n; ++j) e2[static_cast<std::size_t>(m + j)] = e[static_cast<std::size_t>(j)];
                qy2.add_term(e2, c);
            }
            rhs += (qx2 * qy2) * pow2(-lambda.length());
        }
    }

    if (opts.tamper && !rhs.terms().empty()) {
        // negative control: perturb one RHS coefficient by +1
        rhs.add_term(rhs.terms().begin()->first, 1);
    }

    // compare every monomial with x-degree <= D and y-degree <= D
    auto degrees = [&](const Exponents& e) {
        int dx = 0, dy = 0;
        for (int i = 0; i < m; ++i) dx += e[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) dy += e[static_cast<std::size_t>(m + j)];
        return std::pair{dx, dy};
    };
    TruncatedPolynomial diff = lhs - rhs;
    for (const auto& [e, c] : diff.terms()) {
        auto [dx, dy] = degrees(e);
        if (dx <= D && dy <= D) {
            std::ostringstream os;
            os << "coefficient mismatch at " << monomial_string(e, m, n)
               << ": difference " << c;
            rep.fail(os.str());
            break;
        }
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace qhowe
