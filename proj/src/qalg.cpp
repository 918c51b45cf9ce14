#include "qhowe/qalg.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace qhowe {

namespace {

using Mat = std::vector<std::vector<Rat>>;

Mat zero_mat(int r, int c) { return Mat(static_cast<std::size_t>(r), std::vector<Rat>(static_cast<std::size_t>(c))); }

Mat mat_mul(const Mat& X, const Mat& Y) {
    const auto r = X.size(), mid = Y.size(), c = Y[0].size();
    Mat Z(r, std::vector<Rat>(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < mid; ++l) {
            if (X[i][l] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) Z[i][j] += X[i][l] * Y[l][j];
        }
    return Z;
}

} // namespace

QElement::QElement(int rank) : n(rank), A(zero_mat(rank, rank)), B(zero_mat(rank, rank)) {}

bool QElement::is_even() const {
    for (const auto& row : B)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

bool QElement::is_odd() const {
    for (const auto& row : A)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

int QElement::parity() const {
    if (is_odd()) return 1; // zero element counts as odd or even; pick odd only if A=0, B!=0
    if (is_even()) return 0;
    throw std::invalid_argument("QElement::parity: mixed-parity element");
}

Mat QElement::full_matrix() const {
    Mat M = zero_mat(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
            M[si][sj] = A[si][sj];
            M[si + n][sj + n] = A[si][sj];
            M[si][sj + n] = B[si][sj];
            M[si + n][sj] = B[si][sj];
        }
    return M;
}

QElement q_gen_A(int n, int p, int q) {
    QElement X(n);
    X.A[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = 1;
    return X;
}

QElement q_gen_B(int n, int p, int q) {
    QElement X(n);
    X.B[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = 1;
    return X;
}

QElement q_bracket(const QElement& X, const QElement& Y) {
    if (X.n != Y.n) throw std::invalid_argument("q_bracket: rank mismatch");
    const int n = X.n;
    Mat Mx = X.full_matrix(), My = Y.full_matrix();
    Mat XY = mat_mul(Mx, My), YX = mat_mul(My, Mx);
    const int sign = (X.parity() && Y.parity()) ? 1 : -1;
    QElement Z(n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
            auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
            XY[si][sj] += sign * YX[si][sj];
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
            if (XY[si][sj] != XY[si + n][sj + n] || XY[si][sj + n] != XY[si + n][sj])
                throw std::logic_error("q_bracket: result escaped q(n)");
            Z.A[si][sj] = XY[si][sj];
            Z.B[si][sj] = XY[si][sj + n];
        }
    return Z;
}

Mat p_matrix(int m) {
    Mat P = zero_mat(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        auto si = static_cast<std::size_t>(i);
        P[si + m][si] = -1; // P(e_i) = -f_i
        P[si][si + m] = 1;  // P(f_i) = e_i
    }
    return P;
}

TensorSpace::TensorSpace(int m_, int k_) : m(m_), k(k_) {
    if (m < 1 || k < 1) throw std::invalid_argument("TensorSpace: need m,k >= 1");
    long dim = 1;
    for (int i = 0; i < k; ++i) dim *= 2 * m;
    module.labels.reserve(static_cast<std::size_t>(dim));
    module.parity.reserve(static_cast<std::size_t>(dim));
    module.weights.reserve(static_cast<std::size_t>(dim));
    for (long t = 0; t < dim; ++t) {
        int par = 0;
        std::vector<int> w(static_cast<std::size_t>(m), 0);
        std::string label;
        long rest = t;
        for (int pos = 0; pos < k; ++pos) {
            int d = static_cast<int>(rest % (2 * m));
            rest /= 2 * m;
            par += slot_parity(d);
            w[static_cast<std::size_t>(d % m)] += 1;
            if (pos) label += "*";
            label += (d < m ? "e" : "f") + std::to_string(d % m + 1);
        }
        module.labels.push_back(label);
        module.parity.push_back(par % 2);
        module.weights.push_back(std::move(w));
    }
}

int TensorSpace::digit(int index, int pos) const {
    for (int i = 0; i < pos; ++i) index /= 2 * m;
    return index % (2 * m);
}

int TensorSpace::with_digit(int index, int pos, int d) const {
    int stride = 1;
    for (int i = 0; i < pos; ++i) stride *= 2 * m;
    return index + (d - digit(index, pos)) * stride;
}

GradedOperator TensorSpace::derivation(const Mat& mat, int parity) const {
    const int dim = dimension();
    GradedOperator op(dim, dim, parity);
    for (int t = 0; t < dim; ++t) {
        int prefix = 0;
        for (int pos = 0; pos < k; ++pos) {
            const int d = digit(t, pos);
            for (int r = 0; r < 2 * m; ++r) {
                const Rat& v = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)];
                if (v == 0) continue;
                const int sign = (parity && (prefix & 1)) ? -1 : 1;
                op.add_entry(with_digit(t, pos, r), t, sign * v);
            }
            prefix += slot_parity(d);
        }
    }
    return op;
}

GradedOperator TensorSpace::action(const QElement& X) const {
    if (X.n != m) throw std::invalid_argument("TensorSpace::action: rank mismatch");
    return derivation(X.full_matrix(), X.parity());
}

GradedOperator TensorSpace::torus_op(int p) const { return action(q_gen_A(m, p, p)); }

SymPowerSpace::SymPowerSpace(int ne, int no, int deg,
                             const std::function<std::vector<int>(bool, int)>& weight_of)
    : n_even(ne), n_odd(no), degree(deg) {
    if (ne < 0 || no < 0 || deg < 0) throw std::invalid_argument("SymPowerSpace: bad shape");

    std::vector<SymMonomial> raw;
    std::vector<int> subset;
    auto emit_even = [&](auto&& self, SymMonomial& mono, int var, int remaining) -> void {
        if (var == n_even) {
            if (remaining == 0) raw.push_back(mono);
            return;
        }
        if (var == n_even - 1) {
            mono.even_exp[static_cast<std::size_t>(var)] = remaining;
            raw.push_back(mono);
            mono.even_exp[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            mono.even_exp[static_cast<std::size_t>(var)] = e;
            self(self, mono, var + 1, remaining - e);
        }
        mono.even_exp[static_cast<std::size_t>(var)] = 0;
    };
    auto emit_subsets = [&](auto&& self, int start, int need) -> void {
        if (need == 0) {
            SymMonomial mono;
            mono.even_exp.assign(static_cast<std::size_t>(n_even), 0);
            mono.odd_set = subset;
            emit_even(emit_even, mono, 0, degree - static_cast<int>(subset.size()));
            return;
        }
        for (int s = start; s + need <= n_odd; ++s) {
            subset.push_back(s);
            self(self, s + 1, need - 1);
            subset.pop_back();
        }
    };
    for (int t = 0; t <= std::min(n_odd, degree); ++t) {
        if (n_even == 0 && t != degree) continue;
        emit_subsets(emit_subsets, 0, t);
    }
    std::sort(raw.begin(), raw.end());

    for (auto& mono : raw) {
        const int idx = static_cast<int>(basis.size());
        index.emplace(mono, idx);
        std::string label;
        for (int a = 0; a < n_even; ++a) {
            const int e = mono.even_exp[static_cast<std::size_t>(a)];
            if (!e) continue;
            if (!label.empty()) label += "*";
            label += "x" + std::to_string(a + 1);
            if (e > 1) label += "^" + std::to_string(e);
        }
        for (int s : mono.odd_set) {
            if (!label.empty()) label += "*";
            label += "xi" + std::to_string(s + 1);
        }
        if (label.empty()) label = "1";
        module.labels.push_back(label);
        module.parity.push_back(static_cast<int>(mono.odd_set.size()) % 2);
        if (weight_of) {
            std::vector<int> w;
            for (int a = 0; a < n_even; ++a) {
                const int e = mono.even_exp[static_cast<std::size_t>(a)];
                if (!e) continue;
                std::vector<int> wv = weight_of(false, a);
                if (w.empty()) w.assign(wv.size(), 0);
                for (std::size_t c = 0; c < wv.size(); ++c) w[c] += e * wv[c];
            }
            for (int s : mono.odd_set) {
                std::vector<int> wv = weight_of(true, s);
                if (w.empty()) w.assign(wv.size(), 0);
                for (std::size_t c = 0; c < wv.size(); ++c) w[c] += wv[c];
            }
            if (w.empty() && degree == 0) w.assign(weight_of(false, 0).size(), 0);
            module.weights.push_back(std::move(w));
        }
        basis.push_back(std::move(mono));
    }
}

GradedOperator SymPowerSpace::derivation(const GradedOperator& base_op) const {
    if (base_op.rows != n_even + n_odd || base_op.cols != n_even + n_odd)
        throw std::invalid_argument("SymPowerSpace::derivation: base shape mismatch");
    const int dim = dimension();
    const int p = base_op.parity;
    GradedOperator op(dim, dim, p);
    for (int c = 0; c < dim; ++c) {
        const SymMonomial& mono = basis[static_cast<std::size_t>(c)];
        for (int a = 0; a < n_even; ++a) {
            const int e = mono.even_exp[static_cast<std::size_t>(a)];
            if (!e) continue;
            for (const auto& [r, val] : base_op.col[static_cast<std::size_t>(a)]) {
                SymMonomial img = mono;
                img.even_exp[static_cast<std::size_t>(a)] -= 1;
                Rat coeff = e * val;
                if (r < n_even) {
                    img.even_exp[static_cast<std::size_t>(r)] += 1;
                } else {
                    const int s = r - n_even;
                    auto it = std::lower_bound(img.odd_set.begin(), img.odd_set.end(), s);
                    if (it != img.odd_set.end() && *it == s) continue;
                    const auto t1 = it - img.odd_set.begin();
                    img.odd_set.insert(it, s);
                    if (t1 & 1) coeff = -coeff;
                }
                op.add_entry(index.at(img), c, coeff);
            }
        }
        for (std::size_t t0 = 0; t0 < mono.odd_set.size(); ++t0) {
            const int s = mono.odd_set[t0];
            const int sign0 = (p && (t0 & 1)) ? -1 : 1;
            for (const auto& [r, val] : base_op.col[static_cast<std::size_t>(n_even + s)]) {
                SymMonomial img = mono;
                img.odd_set.erase(img.odd_set.begin() + static_cast<long>(t0));
                Rat coeff = sign0 * val;
                if (r < n_even) {
                    img.even_exp[static_cast<std::size_t>(r)] += 1;
                } else {
                    const int s2 = r - n_even;
                    auto it = std::lower_bound(img.odd_set.begin(), img.odd_set.end(), s2);
                    if (it != img.odd_set.end() && *it == s2) continue;
                    const auto t1 = it - img.odd_set.begin();
                    img.odd_set.insert(it, s2);
                    if ((static_cast<long>(t0) + t1) & 1) coeff = -coeff;
                }
                op.add_entry(index.at(img), c, coeff);
            }
        }
    }
    return op;
}

GradedOperator SymPowerSpace::grading_sign() const {
    const int dim = dimension();
    GradedOperator op(dim, dim, 0);
    for (int i = 0; i < dim; ++i)
        op.add_entry(i, i, module.parity[static_cast<std::size_t>(i)] ? -1 : 1);
    return op;
}

GradedOperator SymPowerSpace::relabel(const std::vector<int>& even_map,
                                      const std::vector<int>& odd_map) const {
    const int dim = dimension();
    GradedOperator op(dim, dim, 0);
    for (int c = 0; c < dim; ++c) {
        const SymMonomial& mono = basis[static_cast<std::size_t>(c)];
        SymMonomial img;
        img.even_exp.assign(static_cast<std::size_t>(n_even), 0);
        for (int a = 0; a < n_even; ++a)
            img.even_exp[static_cast<std::size_t>(even_map[static_cast<std::size_t>(a)])] =
                mono.even_exp[static_cast<std::size_t>(a)];
        std::vector<int> mapped;
        mapped.reserve(mono.odd_set.size());
        for (int s : mono.odd_set) mapped.push_back(odd_map[static_cast<std::size_t>(s)]);
        int sign = 1;
        for (std::size_t i = 0; i < mapped.size(); ++i)
            for (std::size_t j = i + 1; j < mapped.size(); ++j)
                if (mapped[i] > mapped[j]) sign = -sign;
        std::sort(mapped.begin(), mapped.end());
        img.odd_set = std::move(mapped);
        op.add_entry(index.at(img), c, sign);
    }
    return op;
}

HoweSpace::HoweSpace(int m_, int n_, int k_)
    : m(m_), n(n_), k(k_),
      space(m_ * n_, m_ * n_, k_, [m_, n_](bool, int v) {
          std::vector<int> w(static_cast<std::size_t>(m_ + n_), 0);
          w[static_cast<std::size_t>(v / n_)] += 1;
          w[static_cast<std::size_t>(m_ + v % n_)] += 1;
          return w;
      }) {
    if (m < 1 || n < 1 || k < 0) throw std::invalid_argument("HoweSpace: bad shape");
}

GradedOperator HoweSpace::op(HoweKind kind, int p, int q) const {
    const int nv = m * n;
    const bool odd = (kind == HoweKind::BUpper || kind == HoweKind::BLower);
    GradedOperator base(2 * nv, 2 * nv, odd ? 1 : 0);
    switch (kind) {
    case HoweKind::ALower: // x_q^j -> x_p^j, xi_q^j -> xi_p^j
        for (int j = 0; j < n; ++j) {
            base.add_entry(var(p, j), var(q, j), 1);
            base.add_entry(nv + var(p, j), nv + var(q, j), 1);
        }
        break;
    case HoweKind::BLower: // x_q^j -> xi_p^j, xi_q^j -> x_p^j
        for (int j = 0; j < n; ++j) {
            base.add_entry(nv + var(p, j), var(q, j), 1);
            base.add_entry(var(p, j), nv + var(q, j), 1);
        }
        break;
    case HoweKind::AUpper: // x_i^q -> x_i^p, xi_i^q -> xi_i^p
        for (int i = 0; i < m; ++i) {
            base.add_entry(var(i, p), var(i, q), 1);
            base.add_entry(nv + var(i, p), nv + var(i, q), 1);
        }
        break;
    case HoweKind::BUpper: // x_i^q -> -xi_i^p, xi_i^q -> x_i^p
        for (int i = 0; i < m; ++i) {
            base.add_entry(nv + var(i, p), var(i, q), -1);
            base.add_entry(var(i, p), nv + var(i, q), 1);
        }
        break;
    }
    return space.derivation(base);
}

GradedOperator HoweSpace::lower_action(const QElement& X) const {
    if (X.n != m) throw std::invalid_argument("HoweSpace::lower_action: rank mismatch");
    const int nv = m * n;
    const int par = X.parity();
    GradedOperator base(2 * nv, 2 * nv, par);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const Rat& a = X.A[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
            const Rat& b = X.B[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
            for (int j = 0; j < n; ++j) {
                if (a != 0) {
                    base.add_entry(var(p, j), var(q, j), a);
                    base.add_entry(nv + var(p, j), nv + var(q, j), a);
                }
                if (b != 0) {
                    base.add_entry(nv + var(p, j), var(q, j), b);
                    base.add_entry(var(p, j), nv + var(q, j), b);
                }
            }
        }
    return space.derivation(base);
}

GradedOperator HoweSpace::upper_action(const QElement& Y) const {
    if (Y.n != n) throw std::invalid_argument("HoweSpace::upper_action: rank mismatch");
    const int nv = m * n;
    const int par = Y.parity();
    GradedOperator base(2 * nv, 2 * nv, par);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const Rat& a = Y.A[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
            const Rat& b = Y.B[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
            for (int i = 0; i < m; ++i) {
                if (a != 0) {
                    base.add_entry(var(i, p), var(i, q), a);
                    base.add_entry(nv + var(i, p), nv + var(i, q), a);
                }
                if (b != 0) {
                    base.add_entry(nv + var(i, p), var(i, q), -b);
                    base.add_entry(var(i, p), nv + var(i, q), b);
                }
            }
        }
    return space.derivation(base);
}

std::vector<GradedOperator> HoweSpace::lower_generators() const {
    std::vector<GradedOperator> ops;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            ops.push_back(op(HoweKind::ALower, p, q));
            ops.push_back(op(HoweKind::BLower, p, q));
        }
    return ops;
}

std::vector<GradedOperator> HoweSpace::upper_generators() const {
    std::vector<GradedOperator> ops;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            ops.push_back(op(HoweKind::AUpper, p, q));
            ops.push_back(op(HoweKind::BUpper, p, q));
        }
    return ops;
}

std::vector<GradedOperator> HoweSpace::lower_raising() const {
    std::vector<GradedOperator> ops;
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q) {
            ops.push_back(op(HoweKind::ALower, p, q));
            ops.push_back(op(HoweKind::BLower, p, q));
        }
    return ops;
}

std::vector<GradedOperator> HoweSpace::upper_raising() const {
    std::vector<GradedOperator> ops;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            ops.push_back(op(HoweKind::AUpper, p, q));
            ops.push_back(op(HoweKind::BUpper, p, q));
        }
    return ops;
}

std::vector<GradedOperator> HoweSpace::lower_torus() const {
    std::vector<GradedOperator> ops;
    for (int p = 0; p < m; ++p) ops.push_back(op(HoweKind::ALower, p, p));
    return ops;
}

std::vector<GradedOperator> HoweSpace::upper_torus() const {
    std::vector<GradedOperator> ops;
    for (int p = 0; p < n; ++p) ops.push_back(op(HoweKind::AUpper, p, p));
    return ops;
}

GradedOperator HoweSpace::relabel_upper(const std::vector<int>& perm) const {
    std::vector<int> vmap(static_cast<std::size_t>(m * n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            vmap[static_cast<std::size_t>(var(i, j))] = var(i, perm[static_cast<std::size_t>(j)]);
    return space.relabel(vmap, vmap);
}

GradedOperator HoweSpace::relabel_lower(const std::vector<int>& perm) const {
    std::vector<int> vmap(static_cast<std::size_t>(m * n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            vmap[static_cast<std::size_t>(var(i, j))] = var(perm[static_cast<std::size_t>(i)], j);
    return space.relabel(vmap, vmap);
}

VerificationReport realization_check(int m, int n, int k, const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.check_name = "realization";
    rep.parameters = {{"m", std::to_string(m)},
                      {"n", std::to_string(n)},
                      {"k", std::to_string(k)}};

    HoweSpace H(m, n, k);

    struct Gen {
        QElement elem;
        GradedOperator oper;
    };
    std::vector<Gen> lower, upper;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            lower.push_back({q_gen_A(m, p, q), H.op(HoweKind::ALower, p, q)});
            lower.push_back({q_gen_B(m, p, q), H.op(HoweKind::BLower, p, q)});
        }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            upper.push_back({q_gen_A(n, p, q), H.op(HoweKind::AUpper, p, q)});
            upper.push_back({q_gen_B(n, p, q), H.op(HoweKind::BUpper, p, q)});
        }

    if (opts.tamper) lower[1].oper.add_entry(0, 0, 1); // B-lower(0,0) gains a stray entry

    auto lower_of = [&](const QElement& Z) { return H.lower_action(Z); };
    auto upper_of = [&](const QElement& Z) { return H.upper_action(Z); };

    for (std::size_t a = 0; a < lower.size() && rep.verified; ++a)
        for (std::size_t b = 0; b < lower.size() && rep.verified; ++b) {
            GradedOperator got = superbracket(lower[a].oper, lower[b].oper);
            GradedOperator want = lower_of(q_bracket(lower[a].elem, lower[b].elem));
            if (!(got - want).is_zero())
                rep.fail("lower bracket mismatch at generator pair (" + std::to_string(a) +
                         "," + std::to_string(b) + ")");
        }

    for (std::size_t a = 0; a < upper.size() && rep.verified; ++a)
        for (std::size_t b = 0; b < upper.size() && rep.verified; ++b) {
            GradedOperator got = superbracket(upper[a].oper, upper[b].oper);
            QElement bracket = q_bracket(upper[a].elem, upper[b].elem);
            GradedOperator want = upper_of(bracket);
            // Odd-odd structure constants of the upper copy are negated
            // relative to the matrix realization (the B -> iB twist).
            if (upper[a].elem.parity() && upper[b].elem.parity()) want = want * Rat(-1);
            if (!(got - want).is_zero())
                rep.fail("upper bracket mismatch at generator pair (" + std::to_string(a) +
                         "," + std::to_string(b) + ")");
        }

    for (std::size_t a = 0; a < lower.size() && rep.verified; ++a)
        for (std::size_t b = 0; b < upper.size() && rep.verified; ++b) {
            if (!superbracket(lower[a].oper, upper[b].oper).is_zero())
                rep.fail("lower generator " + std::to_string(a) +
                         " fails to supercommute with upper generator " + std::to_string(b));
        }

    if (rep.verified)
        rep.detail = "dim S^" + std::to_string(k) + "(C^{" + std::to_string(m * n) + "|" +
                     std::to_string(m * n) + "}) = " + std::to_string(H.dimension());
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

std::vector<SparseVec> singular_vectors(const std::vector<GradedOperator>& raising,
                                        const SuperModule& V,
                                        const std::vector<int>& weight) {
    if (!V.has_weights()) throw std::invalid_argument("singular_vectors: module lacks weights");
    std::vector<int> support;
    for (int i = 0; i < V.dimension(); ++i)
        if (V.weights[static_cast<std::size_t>(i)] == weight) support.push_back(i);

    std::vector<SparseVec> constraints;
    for (const auto& op : raising) {
        std::map<int, SparseVec> rows;
        for (std::size_t t = 0; t < support.size(); ++t)
            for (const auto& [r, v] : op.col[static_cast<std::size_t>(support[t])])
                rows[r][static_cast<int>(t)] += v;
        for (auto& [r, row] : rows) {
            std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
            if (!row.empty()) constraints.push_back(std::move(row));
        }
    }
    std::vector<SparseVec> sol = nullspace(std::move(constraints), static_cast<int>(support.size()));
    std::vector<SparseVec> out;
    for (const auto& v : sol) {
        SparseVec lifted;
        for (const auto& [t, c] : v) lifted[support[static_cast<std::size_t>(t)]] = c;
        out.push_back(std::move(lifted));
    }
    return out;
}

Subspace cyclic_module(const SuperModule& V, const SparseVec& v,
                       const std::vector<GradedOperator>& algebra_ops,
                       const std::vector<GradedOperator>& raising) {
    for (const auto& op : raising)
        if (!op.apply(v).empty())
            throw std::invalid_argument("cyclic_module: seed is not singular");
    return invariant_closure(V, {v}, algebra_ops);
}

TruncatedPolynomial character(const Subspace& M, int offset, int count, int degree_bound) {
    TruncatedPolynomial ch(count, degree_bound);
    for (int i = 0; i < M.dimension(); ++i) {
        std::vector<int> w = M.vector_weight(i);
        Exponents e(w.begin() + offset, w.begin() + offset + count);
        for (int x : e)
            if (x < 0) throw std::logic_error("character: negative weight entry");
        ch.add_term(e, 1);
    }
    return ch;
}

} // namespace qhowe
