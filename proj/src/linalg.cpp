#include "qhowe/linalg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qhowe {

void Echelon::reduce(SparseVec& v) const {
    // a stored row only touches indices >= its pivot, so one forward sweep
    auto it = v.begin();
    while (it != v.end()) {
        auto rit = rows_.find(it->first);
        if (rit == rows_.end()) {
            ++it;
            continue;
        }
        Rat c = it->second;
        int p = it->first;
        vec_axpy(v, -c, rit->second);
        it = v.upper_bound(p);
    }
}

bool Echelon::insert(SparseVec v) {
    reduce(v);
    if (v.empty()) return false;
    Rat lead = v.begin()->second;
    if (lead != 1)
        for (auto& [i, c] : v) c /= lead;
    int piv = v.begin()->first;
    rows_.emplace(piv, std::move(v));
    return true;
}

bool Echelon::contains(SparseVec v) const {
    reduce(v);
    return v.empty();
}

std::vector<SparseVec> Echelon::reduced_basis() {
    // back-substitute, largest pivot first
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        SparseVec& row = it->second;
        for (auto e = row.upper_bound(it->first); e != row.end();) {
            auto rit = rows_.find(e->first);
            if (rit == rows_.end()) {
                ++e;
                continue;
            }
            Rat c = e->second;
            int pos = e->first;
            vec_axpy(row, -c, rit->second);
            e = row.upper_bound(pos);
        }
    }
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (auto& [p, row] : rows_) out.push_back(row);
    return out;
}

std::vector<SparseVec> nullspace(std::vector<SparseVec> constraints, int unknowns) {
    std::stable_sort(constraints.begin(), constraints.end(),
                     [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
    Echelon ech;
    for (auto& c : constraints) ech.insert(std::move(c));
    std::vector<SparseVec> rref = ech.reduced_basis();
    std::vector<char> is_pivot(static_cast<std::size_t>(unknowns), 0);
    for (const auto& row : rref) is_pivot[static_cast<std::size_t>(row.begin()->first)] = 1;
    std::vector<SparseVec> basis;
    for (int f = 0; f < unknowns; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        SparseVec v;
        v[f] = 1;
        for (const auto& row : rref) {
            auto it = row.find(f);
            if (it != row.end()) v[row.begin()->first] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<SparseVec> joint_kernel(const std::vector<GradedOperator>& ops, int dimension) {
    std::vector<SparseVec> constraints;
    for (const auto& op : ops) {
        // rows of op as functionals on the domain
        std::map<int, SparseVec> rows;
        for (int j = 0; j < op.cols; ++j)
            for (const auto& [i, v] : op.col[static_cast<std::size_t>(j)]) rows[i][j] = v;
        for (auto& [i, r] : rows) constraints.push_back(std::move(r));
    }
    return nullspace(std::move(constraints), dimension);
}

namespace {

bool is_diagonal_even(const GradedOperator& g) {
    if (g.parity != 0) return false;
    for (int j = 0; j < g.cols; ++j) {
        const auto& c = g.col[static_cast<std::size_t>(j)];
        if (c.size() > 1) return false;
        if (c.size() == 1 && c.begin()->first != j) return false;
    }
    return true;
}

std::vector<GradedOperator> commutant_of_parity(const std::vector<GradedOperator>& gens,
                                                const SuperModule& V, int pz) {
    int dim = V.dimension();
    std::vector<const GradedOperator*> diag, rest;
    for (const auto& g : gens)
        (is_diagonal_even(g) ? diag : rest).push_back(&g);

    // unknowns: positions (i,j) compatible with parity pz and with every
    // diagonal generator's eigenvalues
    std::vector<std::pair<int, int>> positions;
    std::map<std::pair<int, int>, int> unknown_id;
    auto diag_entry = [](const GradedOperator& g, int j) {
        const auto& c = g.col[static_cast<std::size_t>(j)];
        return c.empty() ? Rat(0) : c.begin()->second;
    };
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if ((V.parity[static_cast<std::size_t>(i)] +
                 V.parity[static_cast<std::size_t>(j)]) % 2 != pz)
                continue;
            bool ok = true;
            for (const auto* g : diag)
                if (diag_entry(*g, i) != diag_entry(*g, j)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            unknown_id[{i, j}] = static_cast<int>(positions.size());
            positions.emplace_back(i, j);
        }
    }

    std::vector<SparseVec> constraints;
    for (const auto* gp : rest) {
        const GradedOperator& g = *gp;
        Rat eps = (pz && g.parity) ? -1 : 1;
        // row-major view of g
        std::map<int, std::vector<std::pair<int, Rat>>> grow;
        for (int j = 0; j < dim; ++j)
            for (const auto& [i, v] : g.col[static_cast<std::size_t>(j)])
                grow[i].emplace_back(j, v);
        std::map<std::pair<int, int>, SparseVec> eqs;
        for (std::size_t u = 0; u < positions.size(); ++u) {
            auto [a, b] = positions[u];
            auto rit = grow.find(b);
            if (rit != grow.end())
                for (const auto& [j, v] : rit->second)
                    eqs[{a, j}][static_cast<int>(u)] += v; // (Z g)_{a j}
            for (const auto& [i, v] : g.col[static_cast<std::size_t>(a)]) {
                auto& e = eqs[{i, b}];                     // -eps (g Z)_{i b}
                e[static_cast<int>(u)] -= eps * v;
                if (e[static_cast<int>(u)] == 0) e.erase(static_cast<int>(u));
            }
        }
        for (auto& [pos, e] : eqs) {
            std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
            if (!e.empty()) constraints.push_back(std::move(e));
        }
    }

    std::vector<SparseVec> sols = nullspace(std::move(constraints),
                                            static_cast<int>(positions.size()));
    std::vector<GradedOperator> out;
    for (const auto& s : sols) {
        GradedOperator Z(dim, dim, pz);
        for (const auto& [u, v] : s) {
            auto [i, j] = positions[static_cast<std::size_t>(u)];
            Z.col[static_cast<std::size_t>(j)][i] = v;
        }
        out.push_back(std::move(Z));
    }
    return out;
}

SparseVec flatten(const GradedOperator& op) {
    SparseVec flat;
    for (int j = 0; j < op.cols; ++j)
        for (const auto& [i, v] : op.col[static_cast<std::size_t>(j)])
            flat[i * op.cols + j] = v;
    return flat;
}

GradedOperator unflatten(const SparseVec& flat, int rows, int cols) {
    GradedOperator op(rows, cols, 0);
    for (const auto& [k, v] : flat) op.col[static_cast<std::size_t>(k % cols)][k / cols] = v;
    return op;
}

} // namespace

GradedCommutant commutant(const std::vector<GradedOperator>& gens, const SuperModule& V) {
    GradedCommutant c;
    c.even = commutant_of_parity(gens, V, 0);
    c.odd = commutant_of_parity(gens, V, 1);
    return c;
}

bool span_equal(const std::vector<GradedOperator>& A, const std::vector<GradedOperator>& B) {
    Echelon ea, eb;
    for (const auto& op : A) ea.insert(flatten(op));
    for (const auto& op : B) eb.insert(flatten(op));
    if (ea.rank() != eb.rank()) return false;
    for (const auto& op : B)
        if (ea.insert(flatten(op))) return false;
    return true;
}

int algebra_span_dimension(const std::vector<GradedOperator>& gens, int dimension,
                           int stop_at) {
    Echelon ech;
    std::deque<GradedOperator> work;
    auto try_insert = [&](const GradedOperator& op) {
        SparseVec flat = flatten(op);
        ech.reduce(flat);
        if (flat.empty()) return false;
        Rat lead = flat.begin()->second;
        if (lead != 1)
            for (auto& [i, v] : flat) v /= lead;
        GradedOperator reduced = unflatten(flat, dimension, dimension);
        ech.insert(std::move(flat));
        work.push_back(std::move(reduced));
        return true;
    };
    try_insert(GradedOperator::identity(dimension));
    for (const auto& g : gens) {
        try_insert(g);
        if (stop_at >= 0 && ech.rank() >= stop_at) return ech.rank();
    }
    std::size_t head = 0;
    while (head < work.size()) {
        // deque may reallocate on push_back; take a copy of the current op
        GradedOperator op = work[head++];
        for (const auto& g : gens) {
            try_insert(op.compose(g));
            if (stop_at >= 0 && ech.rank() >= stop_at) return ech.rank();
        }
    }
    return ech.rank();
}

std::map<std::vector<Rat>, std::vector<int>> weight_decompose(
    const std::vector<GradedOperator>& torus_ops, const SuperModule& V) {
    int dim = V.dimension();
    for (const auto& op : torus_ops)
        if (!is_diagonal_even(op))
            throw std::invalid_argument("weight_decompose: operator not diagonal on basis");
    std::map<std::vector<Rat>, std::vector<int>> out;
    for (int i = 0; i < dim; ++i) {
        std::vector<Rat> w;
        w.reserve(torus_ops.size());
        for (const auto& op : torus_ops) {
            const auto& c = op.col[static_cast<std::size_t>(i)];
            w.push_back(c.empty() ? Rat(0) : c.begin()->second);
        }
        out[w].push_back(i);
    }
    return out;
}

int Subspace::vector_parity(int i) const {
    const SparseVec& v = basis[static_cast<std::size_t>(i)];
    int p = ambient->parity[static_cast<std::size_t>(v.begin()->first)];
    for (const auto& [k, c] : v)
        if (ambient->parity[static_cast<std::size_t>(k)] != p)
            throw std::logic_error("Subspace: basis vector not parity-homogeneous");
    return p;
}

std::vector<int> Subspace::vector_weight(int i) const {
    const SparseVec& v = basis[static_cast<std::size_t>(i)];
    const auto& w = ambient->weights[static_cast<std::size_t>(v.begin()->first)];
    for (const auto& [k, c] : v)
        if (ambient->weights[static_cast<std::size_t>(k)] != w)
            throw std::logic_error("Subspace: basis vector not weight-homogeneous");
    return w;
}

std::optional<SparseVec> Subspace::coordinates(const SparseVec& v) const {
    SparseVec w = v, coords;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        int piv = basis[i].begin()->first;
        auto it = w.find(piv);
        if (it == w.end()) continue;
        Rat c = it->second;
        coords[static_cast<int>(i)] = c;
        vec_axpy(w, -c, basis[i]);
    }
    if (!w.empty()) return std::nullopt;
    return coords;
}

std::optional<GradedOperator> Subspace::restrict_operator(const GradedOperator& op) const {
    int d = dimension();
    GradedOperator r(d, d, op.parity);
    for (int j = 0; j < d; ++j) {
        SparseVec img = op.apply(basis[static_cast<std::size_t>(j)]);
        auto coords = coordinates(img);
        if (!coords) return std::nullopt;
        r.col[static_cast<std::size_t>(j)] = std::move(*coords);
    }
    return r;
}

SuperModule Subspace::induced_module() const {
    SuperModule M;
    int d = dimension();
    for (int i = 0; i < d; ++i) {
        M.labels.push_back("v" + std::to_string(i));
        M.parity.push_back(vector_parity(i));
    }
    if (ambient->has_weights())
        for (int i = 0; i < d; ++i) M.weights.push_back(vector_weight(i));
    return M;
}

Subspace invariant_closure(const SuperModule& V, const std::vector<SparseVec>& seed,
                           const std::vector<GradedOperator>& ops) {
    Echelon ech;
    std::deque<SparseVec> work;
    auto try_insert = [&](SparseVec v) {
        ech.reduce(v);
        if (v.empty()) return;
        Rat lead = v.begin()->second;
        if (lead != 1)
            for (auto& [i, c] : v) c /= lead;
        work.push_back(v);
        ech.insert(std::move(v));
    };
    for (const auto& s : seed) try_insert(s);
    std::size_t head = 0;
    while (head < work.size()) {
        SparseVec v = work[head++];
        for (const auto& op : ops) try_insert(op.apply(v));
    }
    Subspace sub;
    sub.ambient = &V;
    sub.basis = ech.reduced_basis();
    return sub;
}

Subspace weight_homogenize(const Subspace& sub) {
    Echelon ech;
    for (const auto& v : sub.basis) {
        std::map<std::vector<int>, SparseVec> parts;
        for (const auto& [k, c] : v)
            parts[sub.ambient->weights[static_cast<std::size_t>(k)]][k] = c;
        for (auto& [w, comp] : parts) {
            if (!sub.coordinates(comp))
                throw std::logic_error(
                    "weight_homogenize: subspace is not torus-invariant");
            ech.insert(std::move(comp));
        }
    }
    Subspace out;
    out.ambient = sub.ambient;
    out.basis = ech.reduced_basis();
    if (out.dimension() != sub.dimension())
        throw std::logic_error("weight_homogenize: dimension changed");
    return out;
}

} // namespace qhowe
