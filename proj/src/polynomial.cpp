#include "qhowe/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhowe {

namespace {
int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }
} // namespace

TruncatedPolynomial TruncatedPolynomial::constant(int vars, int bound, const Rat& c) {
    TruncatedPolynomial p(vars, bound);
    p.add_term(Exponents(static_cast<std::size_t>(vars), 0), c);
    return p;
}

TruncatedPolynomial TruncatedPolynomial::variable(int vars, int bound, int index) {
    if (index < 0 || index >= vars) throw std::out_of_range("variable index");
    TruncatedPolynomial p(vars, bound);
    Exponents e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, 1);
    return p;
}

Rat TruncatedPolynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TruncatedPolynomial::add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != vars_) throw std::invalid_argument("exponent arity mismatch");
    if (total_degree(e) > bound_) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TruncatedPolynomial TruncatedPolynomial::operator+(const TruncatedPolynomial& o) const {
    TruncatedPolynomial r = *this;
    r += o;
    return r;
}

TruncatedPolynomial TruncatedPolynomial::operator-(const TruncatedPolynomial& o) const {
    TruncatedPolynomial r = *this;
    r -= o;
    return r;
}

TruncatedPolynomial TruncatedPolynomial::operator*(const TruncatedPolynomial& o) const {
    TruncatedPolynomial r(vars_, std::min(bound_, o.bound_));
    Exponents e(static_cast<std::size_t>(vars_), 0);
    for (const auto& [ea, ca] : terms_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : o.terms_) {
            if (da + total_degree(eb) > r.bound_) continue;
            for (int i = 0; i < vars_; ++i)
                e[static_cast<std::size_t>(i)] =
                    ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

TruncatedPolynomial TruncatedPolynomial::operator*(const Rat& c) const {
    TruncatedPolynomial r(vars_, bound_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

bool TruncatedPolynomial::operator==(const TruncatedPolynomial& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

Rat TruncatedPolynomial::eval_ones() const {
    Rat s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string TruncatedPolynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    // graded lex: sort keys by (total degree, lex)
    std::vector<const std::pair<const Exponents, Rat>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        int da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da < db;
        return a->first > b->first; // x1-heavy monomials first within a degree
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const Rat& c = t->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rat ac = abs(c);
        bool unit = (ac == 1) && total_degree(t->first) > 0;
        if (!unit) os << ac;
        bool star = !unit;
        for (int i = 0; i < vars_; ++i) {
            int e = t->first[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (star) os << "*";
            star = true;
            if (static_cast<std::size_t>(i) < names.size())
                os << names[static_cast<std::size_t>(i)];
            else
                os << "x" << (i + 1);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace qhowe
