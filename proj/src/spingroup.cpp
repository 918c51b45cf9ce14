#include "qhowe/spingroup.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace qhowe {

namespace {

/// Sorts an a-letter word with a_i a_j = -a_j a_i (i != j), a_i^2 = -1.
/// Returns the sign and leaves `word` strictly increasing.
int normalize_word(std::vector<int>& word) {
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] == word[i + 1]) {
                word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
                sign = -sign;
                changed = true;
                break;
            }
            if (word[i] > word[i + 1]) {
                std::swap(word[i], word[i + 1]);
                sign = -sign;
                changed = true;
            }
        }
    }
    return sign;
}

/// Factorization of sigma into adjacent transpositions: sorting the
/// one-line form right-multiplies by each recorded s_j, so sigma =
/// s_{j_r} o ... o s_{j_1} with the list in recording order j_1, ..., j_r
/// (earliest entry applied first).
std::vector<int> adjacent_factorization(std::vector<int> arr) {
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < arr.size(); ++i)
            if (arr[i] > arr[i + 1]) {
                std::swap(arr[i], arr[i + 1]);
                swaps.push_back(static_cast<int>(i));
                changed = true;
            }
    }
    return swaps;
}

GradedOperator act_a(int i, const TensorSpace& V) {
    const int dim = V.dimension();
    const int m = V.m;
    GradedOperator op(dim, dim, 1);
    for (int t = 0; t < dim; ++t) {
        int prefix = 0;
        for (int pos = 0; pos < i; ++pos) prefix += V.slot_parity(V.digit(t, pos));
        const int d = V.digit(t, i);
        // P(e_j) = -f_j, P(f_j) = e_j.
        const int image = d < m ? d + m : d - m;
        int sign = (prefix & 1) ? -1 : 1;
        if (d < m) sign = -sign;
        op.add_entry(V.with_digit(t, i, image), t, sign);
    }
    return op;
}

GradedOperator act_adjacent(int i, const TensorSpace& V) {
    const int dim = V.dimension();
    GradedOperator op(dim, dim, 0);
    for (int t = 0; t < dim; ++t) {
        const int d1 = V.digit(t, i);
        const int d2 = V.digit(t, i + 1);
        const int u = V.with_digit(V.with_digit(t, i, d2), i + 1, d1);
        const int sign = (V.slot_parity(d1) && V.slot_parity(d2)) ? -1 : 1;
        op.add_entry(u, t, sign);
    }
    return op;
}

} // namespace

SpinGroupElement SpinGroupElement::identity(int k) {
    SpinGroupElement g;
    g.k = k;
    g.eps.assign(static_cast<std::size_t>(k), 0);
    g.perm.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) g.perm[static_cast<std::size_t>(i)] = i;
    return g;
}

SpinGroupElement SpinGroupElement::generator_a(int k, int i) {
    SpinGroupElement g = identity(k);
    g.eps[static_cast<std::size_t>(i)] = 1;
    return g;
}

SpinGroupElement SpinGroupElement::transposition(int k, int i, int j) {
    SpinGroupElement g = identity(k);
    std::swap(g.perm[static_cast<std::size_t>(i)], g.perm[static_cast<std::size_t>(j)]);
    return g;
}

int SpinGroupElement::parity() const {
    int p = 0;
    for (auto e : eps) p += e;
    return p % 2;
}

std::string SpinGroupElement::to_string() const {
    std::ostringstream os;
    if (coeff == -1)
        os << "-";
    else if (coeff != 1)
        os << coeff << "*";
    bool wrote = false;
    for (int i = 0; i < k; ++i)
        if (eps[static_cast<std::size_t>(i)]) {
            if (wrote) os << "*";
            os << "a" << i + 1;
            wrote = true;
        }
    bool trivial_perm = true;
    for (int i = 0; i < k; ++i)
        if (perm[static_cast<std::size_t>(i)] != i) trivial_perm = false;
    if (!trivial_perm) {
        if (wrote) os << "*";
        os << "s[";
        for (int i = 0; i < k; ++i) {
            if (i) os << ",";
            os << perm[static_cast<std::size_t>(i)] + 1;
        }
        os << "]";
        wrote = true;
    }
    if (!wrote) os << "1";
    return os.str();
}

SpinGroupElement multiply(const SpinGroupElement& g, const SpinGroupElement& h) {
    if (g.k != h.k) throw std::invalid_argument("multiply: size mismatch");
    const int k = g.k;
    // g h = c_g c_h * a^{eps_g} * (sigma_g a^{eps_h} sigma_g^{-1}) * sigma_g sigma_h.
    std::vector<int> word;
    for (int i = 0; i < k; ++i)
        if (g.eps[static_cast<std::size_t>(i)]) word.push_back(i);
    std::vector<int> conj;
    for (int i = 0; i < k; ++i)
        if (h.eps[static_cast<std::size_t>(i)]) conj.push_back(g.perm[static_cast<std::size_t>(i)]);
    std::sort(conj.begin(), conj.end()); // conjugated letters pairwise distinct;
    // sorting them first costs a sign per inversion
    int sign = 1;
    {
        std::vector<int> raw;
        for (int i = 0; i < k; ++i)
            if (h.eps[static_cast<std::size_t>(i)])
                raw.push_back(g.perm[static_cast<std::size_t>(i)]);
        for (std::size_t a = 0; a < raw.size(); ++a)
            for (std::size_t b = a + 1; b < raw.size(); ++b)
                if (raw[a] > raw[b]) sign = -sign;
    }
    word.insert(word.end(), conj.begin(), conj.end());
    sign *= normalize_word(word);

    SpinGroupElement r = SpinGroupElement::identity(k);
    r.coeff = g.coeff * h.coeff * sign;
    for (int i : word) r.eps[static_cast<std::size_t>(i)] = 1;
    for (int i = 0; i < k; ++i)
        r.perm[static_cast<std::size_t>(i)] =
            g.perm[static_cast<std::size_t>(h.perm[static_cast<std::size_t>(i)])];
    return r;
}

SpinGroupElement parse_spin_element(int k, const std::string& text) {
    SpinGroupElement r = SpinGroupElement::identity(k);
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, '*')) {
        while (!token.empty() && token.front() == ' ') token.erase(token.begin());
        while (!token.empty() && token.back() == ' ') token.pop_back();
        if (token.empty()) continue;
        if (token == "z") {
            r.coeff = -r.coeff;
            continue;
        }
        if (token == "1" || token == "e") continue;
        if (token.size() < 2 || (token[0] != 'a' && token[0] != 's'))
            throw std::invalid_argument("parse_spin_element: bad token '" + token + "'");
        int i = std::stoi(token.substr(1));
        if (token[0] == 'a') {
            if (i < 1 || i > k) throw std::invalid_argument("parse_spin_element: a-index out of range");
            r = multiply(r, SpinGroupElement::generator_a(k, i - 1));
        } else {
            if (i < 1 || i >= k) throw std::invalid_argument("parse_spin_element: s-index out of range");
            r = multiply(r, SpinGroupElement::transposition(k, i - 1, i));
        }
    }
    return r;
}

GradedOperator act_tensor(const SpinGroupElement& g, const TensorSpace& V) {
    if (V.k != g.k) throw std::invalid_argument("act_tensor: strand count mismatch");
    // Rightmost factor of the normal form acts first.
    GradedOperator result = GradedOperator::identity(V.dimension());
    for (int sw : adjacent_factorization(g.perm)) result = act_adjacent(sw, V).compose(result);
    for (int i = g.k - 1; i >= 0; --i)
        if (g.eps[static_cast<std::size_t>(i)]) result = act_a(i, V).compose(result);
    return result * g.coeff;
}

std::vector<GradedOperator> sergeev_generators(const TensorSpace& V) {
    std::vector<GradedOperator> ops;
    for (int i = 0; i < V.k; ++i)
        ops.push_back(act_tensor(SpinGroupElement::generator_a(V.k, i), V));
    for (int i = 0; i + 1 < V.k; ++i)
        ops.push_back(act_tensor(SpinGroupElement::transposition(V.k, i, i + 1), V));
    return ops;
}

DeltaInvariants::DeltaInvariants(int k, int m, int n) : left(m, k), right(n, k) {
    const int dl = left.dimension(), dr = right.dimension();
    product.labels.reserve(static_cast<std::size_t>(dl) * static_cast<std::size_t>(dr));
    for (int a = 0; a < dl; ++a)
        for (int b = 0; b < dr; ++b) {
            product.labels.push_back(left.module.labels[static_cast<std::size_t>(a)] + " (x) " +
                                     right.module.labels[static_cast<std::size_t>(b)]);
            product.parity.push_back((left.module.parity[static_cast<std::size_t>(a)] +
                                      right.module.parity[static_cast<std::size_t>(b)]) %
                                     2);
            std::vector<int> w = left.module.weights[static_cast<std::size_t>(a)];
            const auto& wr = right.module.weights[static_cast<std::size_t>(b)];
            w.insert(w.end(), wr.begin(), wr.end());
            product.weights.push_back(std::move(w));
        }

    // Twisted diagonal action g.(v (x) w) = (-1)^{p(g)(p(v)+p(w))} gv (x) gw
    // of a generating set; invariants = joint kernel of {action - id}.
    auto diagonal = [&](const SpinGroupElement& g) {
        GradedOperator gl = act_tensor(g, left);
        GradedOperator gr = act_tensor(g, right);
        GradedOperator op(product.dimension(), product.dimension(), 0);
        const int gp = g.parity();
        for (int a = 0; a < dl; ++a)
            for (int b = 0; b < dr; ++b) {
                int tw = gp && ((left.module.parity[static_cast<std::size_t>(a)] +
                                 right.module.parity[static_cast<std::size_t>(b)]) %
                                2)
                             ? -1
                             : 1;
                for (const auto& [ia, va] : gl.col[static_cast<std::size_t>(a)])
                    for (const auto& [ib, vb] : gr.col[static_cast<std::size_t>(b)])
                        op.add_entry(ia * dr + ib, pair_index(a, b), tw * va * vb);
            }
        return op;
    };

    std::vector<GradedOperator> constraints;
    const GradedOperator id = GradedOperator::identity(product.dimension());
    constraints.push_back(diagonal(SpinGroupElement::generator_a(k, 0)) - id);
    for (int i = 0; i + 1 < k; ++i)
        constraints.push_back(diagonal(SpinGroupElement::transposition(k, i, i + 1)) - id);

    Subspace raw;
    raw.ambient = &product;
    Echelon e;
    for (auto& v : joint_kernel(constraints, product.dimension())) e.insert(std::move(v));
    raw.basis = e.reduced_basis();
    invariants = weight_homogenize(raw);
    invariants.ambient = &product;
}

GradedOperator symmetrization_matrix(const HoweSpace& H, const DeltaInvariants& D) {
    const int m = H.m, n = H.n, k = H.k;
    const int dr = D.right.dimension();
    GradedOperator phi(D.product.dimension(), H.dimension(), 0);

    struct Letter {
        int i, j;
        bool odd;
    };
    for (int c = 0; c < H.dimension(); ++c) {
        const SymMonomial& mono = H.space.basis[static_cast<std::size_t>(c)];
        // Uniform sum over all k! arrangements: that (and not the
        // distinct-word normalization) is the derivation-equivariant
        // symmetrization.
        std::vector<Letter> letters;
        const Rat scale = 1;
        for (int v = 0; v < m * n; ++v) {
            const int e = mono.even_exp[static_cast<std::size_t>(v)];
            for (int r = 0; r < e; ++r) letters.push_back({v / n, v % n, false});
        }
        for (int s : mono.odd_set) letters.push_back({s / n, s % n, true});

        std::vector<int> order(letters.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end());
        do {
            // Koszul sign of placing letter order[pos] at slot pos.
            int sign = 1;
            for (std::size_t p1 = 0; p1 < order.size(); ++p1)
                for (std::size_t p2 = p1 + 1; p2 < order.size(); ++p2)
                    if (order[p1] > order[p2] &&
                        letters[static_cast<std::size_t>(order[p1])].odd &&
                        letters[static_cast<std::size_t>(order[p2])].odd)
                        sign = -sign;

            // Expand the product of per-letter embeddings
            // x_ij -> e_i (x) e'_j + f_i (x) f'_j,
            // xi_ij -> e_i (x) f'_j + f_i (x) e'_j
            // over term choices, with the interleave -> block reorder sign.
            const int slots = static_cast<int>(letters.size());
            std::vector<int> choice(static_cast<std::size_t>(slots), 0);
            while (true) {
                int iL = 0, iR = 0, lstride = 1, rstride = 1;
                std::vector<int> pl(static_cast<std::size_t>(slots)), pr(static_cast<std::size_t>(slots));
                for (int pos = 0; pos < slots; ++pos) {
                    const Letter& L = letters[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])];
                    const bool second = choice[static_cast<std::size_t>(pos)] != 0;
                    const int dl = second ? L.i + m : L.i;
                    const int drg = L.odd ? (second ? L.j : L.j + n) : (second ? L.j + n : L.j);
                    pl[static_cast<std::size_t>(pos)] = dl >= m ? 1 : 0;
                    pr[static_cast<std::size_t>(pos)] = drg >= n ? 1 : 0;
                    iL += dl * lstride;
                    iR += drg * rstride;
                    lstride *= 2 * m;
                    rstride *= 2 * n;
                }
                int reorder = 1;
                for (int a = 0; a < slots; ++a)
                    for (int b = a + 1; b < slots; ++b)
                        if (pr[static_cast<std::size_t>(a)] && pl[static_cast<std::size_t>(b)])
                            reorder = -reorder;
                // Extra block-form sign: the twisted a_1 of the diagonal
                // action is stated on V^k (x) W^k, and conjugating the
                // interleaved symmetrization into that form contributes
                // (-1)^{C(t,2)} with t = odd letters on the right block.
                int tr = 0;
                for (int a = 0; a < slots; ++a) tr += pr[static_cast<std::size_t>(a)];
                if ((tr * (tr - 1) / 2) & 1) reorder = -reorder;
                phi.add_entry(iL * dr + iR, c, scale * sign * reorder);

                int pos = 0;
                for (; pos < slots; ++pos) {
                    if (choice[static_cast<std::size_t>(pos)] == 0) {
                        choice[static_cast<std::size_t>(pos)] = 1;
                        break;
                    }
                    choice[static_cast<std::size_t>(pos)] = 0;
                }
                if (pos == slots) break;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return phi;
}

VerificationReport iso_to_symk(int k, int m, int n, const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.check_name = "invariants_iso";
    rep.parameters = {{"k", std::to_string(k)},
                      {"m", std::to_string(m)},
                      {"n", std::to_string(n)}};

    HoweSpace H(m, n, k);
    DeltaInvariants D(k, m, n);
    GradedOperator phi = symmetrization_matrix(H, D);
    if (opts.tamper) phi.add_entry(0, 0, 1);

    rep.require(D.invariants.dimension() == H.dimension(),
                "dim invariants = " + std::to_string(D.invariants.dimension()) +
                    " but dim S^k = " + std::to_string(H.dimension()));

    Echelon rank;
    for (int c = 0; c < H.dimension() && rep.verified; ++c) {
        const auto& image = phi.col[static_cast<std::size_t>(c)];
        if (!D.invariants.coordinates(image).has_value())
            rep.fail("image of monomial " +
                     H.space.module.labels[static_cast<std::size_t>(c)] +
                     " is not a diagonal invariant");
        else if (!rank.insert(image))
            rep.fail("symmetrization is not injective at monomial " +
                     H.space.module.labels[static_cast<std::size_t>(c)]);
    }

    // Intertwining: q(m) acts on the left tensor factor, q(n) on the right
    // with the odd-action twist g -> -(1 (x) g) o grading sign; targets use
    // the first-order operators on S^k.
    const int dl = D.left.dimension(), dr = D.right.dimension();
    auto lift_left = [&](const GradedOperator& op) {
        GradedOperator out(dl * dr, dl * dr, op.parity);
        for (int a = 0; a < dl; ++a)
            for (const auto& [ia, va] : op.col[static_cast<std::size_t>(a)])
                for (int b = 0; b < dr; ++b) out.add_entry(ia * dr + b, a * dr + b, va);
        return out;
    };
    auto lift_right = [&](const GradedOperator& op) {
        GradedOperator out(dl * dr, dl * dr, op.parity);
        for (int b = 0; b < dr; ++b)
            for (const auto& [ib, vb] : op.col[static_cast<std::size_t>(b)])
                for (int a = 0; a < dl; ++a) {
                    Rat v = vb;
                    if (op.parity) {
                        // -(1 (x) Y) composed with the grading involution.
                        int psum = (D.left.module.parity[static_cast<std::size_t>(a)] +
                                    D.right.module.parity[static_cast<std::size_t>(b)]) %
                                   2;
                        v = psum ? v : -v;
                    }
                    out.add_entry(a * dr + ib, a * dr + b, v);
                }
        return out;
    };

    for (int p = 0; p < m && rep.verified; ++p)
        for (int q = 0; q < m && rep.verified; ++q)
            for (int odd = 0; odd < 2 && rep.verified; ++odd) {
                QElement X = odd ? q_gen_B(m, p, q) : q_gen_A(m, p, q);
                GradedOperator src = lift_left(D.left.action(X));
                GradedOperator tgt = odd ? H.op(HoweKind::BLower, p, q) : H.op(HoweKind::ALower, p, q);
                if (!(src.compose(phi) - phi.compose(tgt)).is_zero())
                    rep.fail("lower intertwining fails at " + std::string(odd ? "B" : "A") + "(" +
                             std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");
            }
    for (int p = 0; p < n && rep.verified; ++p)
        for (int q = 0; q < n && rep.verified; ++q)
            for (int odd = 0; odd < 2 && rep.verified; ++odd) {
                QElement Y = odd ? q_gen_B(n, p, q) : q_gen_A(n, p, q);
                GradedOperator src = lift_right(D.right.action(Y));
                GradedOperator tgt = odd ? H.op(HoweKind::BUpper, p, q) : H.op(HoweKind::AUpper, p, q);
                if (!(src.compose(phi) - phi.compose(tgt)).is_zero())
                    rep.fail("upper intertwining fails at " + std::string(odd ? "B" : "A") + "(" +
                             std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");
            }

    if (rep.verified)
        rep.detail = "dim = " + std::to_string(H.dimension());
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace qhowe
