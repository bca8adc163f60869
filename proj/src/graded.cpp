#include "tpk/graded.hpp"

#include <algorithm>
#include <sstream>

#include "tpk/errors.hpp"

namespace tpk {

namespace {

void check_compatible(const Graded& a, const Graded& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("graded objects have different dimension");
    if (a.kind() != b.kind())
        throw KindMismatch("graded objects have different kind");
}

// Sorts idx in place; returns the permutation sign, or 0 on a repeat.
int sort_sign(Graded::Indices& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1])
            return 0;
    return sign;
}

} // namespace

Graded::Graded(Kind kind, int dim, int degree) : kind_(kind), dim_(dim), degree_(degree) {
    if (degree < 0 || degree > dim)
        throw IndexError("degree out of range for dimension");
}

Graded Graded::function(Kind kind, int dim, RationalFunction f) {
    Graded g(kind, dim, 0);
    g.add_term({}, f);
    return g;
}

Graded Graded::basis(Kind kind, int dim, int i) {
    if (i < 0 || i >= dim)
        throw IndexError("basis index out of range");
    Graded g(kind, dim, 1);
    g.add_term({i}, RationalFunction::constant(dim, Rational(1)));
    return g;
}

RationalFunction Graded::coefficient(Indices idx) const {
    int sign = sort_sign(idx);
    if (sign == 0)
        return RationalFunction(dim_);
    auto it = terms_.find(idx);
    if (it == terms_.end())
        return RationalFunction(dim_);
    return sign > 0 ? it->second : -it->second;
}

void Graded::add_term(Indices idx, const RationalFunction& c) {
    if (static_cast<int>(idx.size()) != degree_)
        throw IndexError("index tuple length does not match degree");
    if (c.dim() != dim_)
        throw DimensionMismatch("coefficient dimension does not match");
    if (c.is_zero())
        return;
    int sign = sort_sign(idx);
    if (sign == 0)
        return;
    for (int i : idx)
        if (i < 0 || i >= dim_)
            throw IndexError("term index out of range");
    RationalFunction v = sign > 0 ? c : -c;
    auto [it, inserted] = terms_.emplace(std::move(idx), v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

RationalFunction Graded::scalar() const {
    if (degree_ != 0)
        throw IndexError("scalar() on object of positive degree");
    auto it = terms_.find({});
    return it == terms_.end() ? RationalFunction(dim_) : it->second;
}

Graded Graded::operator-() const {
    Graded r(kind_, dim_, degree_);
    for (const auto& [idx, c] : terms_)
        r.terms_.emplace(idx, -c);
    return r;
}

Graded& Graded::operator+=(const Graded& o) {
    check_compatible(*this, o);
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (degree_ != o.degree_)
        throw IndexError("adding graded objects of different degree");
    for (const auto& [idx, c] : o.terms_)
        add_term(idx, c);
    return *this;
}

Graded& Graded::operator-=(const Graded& o) { return *this += -o; }

Graded operator*(const Graded& a, const RationalFunction& c) {
    Graded r(a.kind(), a.dim(), a.degree());
    if (c.is_zero())
        return r;
    for (const auto& [idx, ca] : a.terms())
        r.add_term(idx, ca * c);
    return r;
}

Graded operator*(const Graded& a, const Rational& c) {
    return a * RationalFunction::constant(a.dim(), c);
}

bool operator==(const Graded& a, const Graded& b) {
    return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.degree_ == b.degree_ &&
           a.terms_ == b.terms_;
}

bool Graded::value_equal(const Graded& o) const {
    check_compatible(*this, o);
    if (is_zero())
        return o.is_zero();
    if (o.is_zero())
        return is_zero();
    if (degree_ != o.degree_)
        return false;
    return (*this - o).is_zero();
}

std::string Graded::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    const char* base = kind_ == Kind::form ? "dx" : "e";
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first)
            out << " + ";
        out << "(" << c.str() << ")";
        for (int i : idx)
            out << "^" << base << (i + 1);
        first = false;
    }
    return out.str();
}

Graded wedge(const Graded& a, const Graded& b) {
    check_compatible(a, b);
    int deg = a.degree() + b.degree();
    if (deg > a.dim())
        return Graded(a.kind(), a.dim(), 0); // zero object
    Graded r(a.kind(), a.dim(), deg);
    Graded::Indices idx;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(idx, ca * cb);
        }
    return r;
}

RationalFunction full_contract(const Graded& form, const Graded& mv) {
    if (form.kind() != Kind::form || mv.kind() != Kind::multivector)
        throw KindMismatch("full_contract expects a form and a multivector");
    if (form.dim() != mv.dim())
        throw DimensionMismatch("dimension mismatch in contraction");
    if (form.degree() != mv.degree())
        throw IndexError("full contraction requires equal degrees");
    RationalFunction acc(form.dim());
    const auto& big = form.term_count() <= mv.term_count() ? form : mv;
    const auto& other = &big == &form ? mv : form;
    for (const auto& [idx, c] : big.terms()) {
        auto it = other.terms().find(idx);
        if (it != other.terms().end())
            acc += c * it->second;
    }
    return acc;
}

Graded contract_basis(const Graded& a, int j) {
    if (j < 0 || j >= a.dim())
        throw IndexError("contraction index out of range");
    if (a.degree() == 0)
        return Graded(a.kind(), a.dim(), 0);
    Graded r(a.kind(), a.dim(), a.degree() - 1);
    for (const auto& [idx, c] : a.terms()) {
        auto pos = std::find(idx.begin(), idx.end(), j);
        if (pos == idx.end())
            continue;
        int p = static_cast<int>(pos - idx.begin());
        Graded::Indices rest;
        rest.reserve(idx.size() - 1);
        for (int i : idx)
            if (i != j)
                rest.push_back(i);
        r.add_term(rest, (p % 2 == 0) ? c : -c);
    }
    return r;
}

Graded interior_product(const Graded& a, const Graded& b) {
    if (a.kind() == b.kind())
        throw KindMismatch("interior product requires opposite kinds");
    if (a.dim() != b.dim())
        throw DimensionMismatch("dimension mismatch in interior product");
    if (a.degree() > b.degree())
        throw IndexError("interior product needs deg(a) <= deg(b)");
    Graded r(b.kind(), b.dim(), b.degree() - a.degree());
    for (const auto& [idx, c] : a.terms()) {
        Graded piece = b;
        for (int i : idx)
            piece = contract_basis(piece, i);
        r += piece * c;
    }
    return r;
}

RationalFunction evaluate_on(const Graded& w, std::span<const Graded> args) {
    if (static_cast<int>(args.size()) != w.degree())
        throw IndexError("argument count must equal degree");
    Graded acc = w;
    for (const auto& v : args)
        acc = interior_product(v, acc);
    return acc.scalar();
}

Graded de_rham_d(const Graded& w) {
    if (w.kind() != Kind::form)
        throw KindMismatch("exterior derivative acts on forms");
    if (w.degree() == w.dim()) // top forms have zero differential
        return Graded(Kind::form, w.dim(), 0);
    Graded r(Kind::form, w.dim(), w.degree() + 1);
    Graded::Indices idx;
    for (const auto& [iw, c] : w.terms())
        for (int j = 0; j < w.dim(); ++j) {
            RationalFunction dc = c.derivative(j);
            if (dc.is_zero())
                continue;
            idx.clear();
            idx.push_back(j);
            idx.insert(idx.end(), iw.begin(), iw.end());
            r.add_term(idx, dc);
        }
    return r;
}

namespace {

// Right derivative with respect to the odd coordinate theta_k: on a term
// theta_{i1}^..^theta_{ip} with k at position t, the sign is (-1)^(p-1-t).
Graded theta_right_derivative(const Graded& P, int k) {
    Graded r(P.kind(), P.dim(), P.degree() == 0 ? 0 : P.degree() - 1);
    if (P.degree() == 0)
        return r;
    for (const auto& [idx, c] : P.terms()) {
        auto pos = std::find(idx.begin(), idx.end(), k);
        if (pos == idx.end())
            continue;
        int t = static_cast<int>(pos - idx.begin());
        int p = static_cast<int>(idx.size());
        Graded::Indices rest;
        rest.reserve(idx.size() - 1);
        for (int i : idx)
            if (i != k)
                rest.push_back(i);
        r.add_term(rest, ((p - 1 - t) % 2 == 0) ? c : -c);
    }
    return r;
}

Graded coefficient_derivative(const Graded& P, int k) {
    Graded r(P.kind(), P.dim(), P.degree());
    for (const auto& [idx, c] : P.terms())
        r.add_term(idx, c.derivative(k));
    return r;
}

} // namespace

Graded schouten_bracket(const Graded& P, const Graded& Q) {
    if (P.kind() != Kind::multivector || Q.kind() != Kind::multivector)
        throw KindMismatch("Schouten bracket acts on multivector fields");
    if (P.dim() != Q.dim())
        throw DimensionMismatch("dimension mismatch in Schouten bracket");
    int n = P.dim();
    int p = P.degree(), q = Q.degree();
    int deg = p + q - 1;
    if (deg < 0)
        return Graded(Kind::multivector, n, 0); // [f, g] = 0
    Graded r(Kind::multivector, n, deg);
    for (int k = 0; k < n; ++k) {
        Graded dP = theta_right_derivative(P, k);
        if (!dP.is_zero())
            r += wedge(dP, coefficient_derivative(Q, k));
        Graded dQ = theta_right_derivative(Q, k);
        if (!dQ.is_zero()) {
            Graded t = wedge(dQ, coefficient_derivative(P, k));
            // graded antisymmetry factor -(-1)^((p-1)(q-1))
            if (((p - 1) * (q - 1)) % 2 == 0)
                r -= t;
            else
                r += t;
        }
    }
    return r;
}

Graded lie_derivative(const Graded& X, const Graded& T) {
    if (X.kind() != Kind::multivector || X.degree() != 1)
        throw KindMismatch("Lie derivative needs a vector field");
    if (X.dim() != T.dim())
        throw DimensionMismatch("dimension mismatch in Lie derivative");
    if (T.kind() == Kind::multivector)
        return schouten_bracket(X, T);
    Graded r = interior_product(X, de_rham_d(T));
    if (T.degree() == 0)
        return r; // L_X f = X(f)
    return r + de_rham_d(interior_product(X, T));
}

std::map<Graded::Indices, double> evaluate_terms(const Graded& g,
                                                 std::span<const double> point,
                                                 double pole_eps) {
    std::map<Graded::Indices, double> out;
    for (const auto& [idx, c] : g.terms())
        out[idx] = c.evaluate(point, pole_eps);
    return out;
}

} // namespace tpk
