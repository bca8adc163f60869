#include "tpk/polynomial.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tpk/errors.hpp"

namespace tpk {

namespace {
std::atomic<int> g_degree_cap{64};
}

int degree_cap() { return g_degree_cap.load(); }

void set_degree_cap(int cap) {
    if (cap < 1)
        throw InputError("degree cap must be positive");
    g_degree_cap.store(cap);
}

Polynomial Polynomial::constant(int dim, Rational c) {
    Polynomial p(dim);
    p.add_term(Exponents(dim, 0), c);
    return p;
}

Polynomial Polynomial::variable(int dim, int i) {
    if (i < 0 || i >= dim)
        throw IndexError("variable index out of range");
    Exponents e(dim, 0);
    e[i] = 1;
    return monomial(dim, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(int dim, Exponents exp, Rational c) {
    if (static_cast<int>(exp.size()) != dim)
        throw DimensionMismatch("exponent vector length does not match dim");
    Polynomial p(dim);
    p.add_term(exp, c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(dim_, 0);
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Exponents(dim_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    int deg = 0;
    for (const auto& [exp, c] : terms_) {
        int d = std::accumulate(exp.begin(), exp.end(), 0);
        deg = std::max(deg, d);
    }
    return deg;
}

void Polynomial::add_term(const Exponents& exp, const Rational& c) {
    if (static_cast<int>(exp.size()) != dim_)
        throw DimensionMismatch("exponent vector length does not match dim");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Polynomial::check_same_dim(const Polynomial& o) const {
    if (dim_ != o.dim_)
        throw DimensionMismatch("polynomial dimensions differ");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(dim_);
    for (const auto& [exp, c] : terms_)
        r.terms_.emplace(exp, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_dim(o);
    for (const auto& [exp, c] : o.terms_)
        add_term(exp, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_dim(o);
    for (const auto& [exp, c] : o.terms_)
        add_term(exp, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_dim(b);
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.dim_);
    if (a.total_degree() + b.total_degree() > degree_cap())
        throw DegreeCapExceeded("product degree " +
                                std::to_string(a.total_degree() + b.total_degree()) +
                                " exceeds cap " + std::to_string(degree_cap()));
    Polynomial r(a.dim_);
    Polynomial::Exponents exp(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.dim_; ++i)
                exp[i] = ea[i] + eb[i];
            r.add_term(exp, ca * cb);
        }
    return r;
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
    Polynomial r(a.dim());
    if (c.is_zero())
        return r;
    for (const auto& [exp, ca] : a.terms())
        r.add_term(exp, ca * c);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::derivative(int i) const {
    if (i < 0 || i >= dim_)
        throw IndexError("derivative index out of range");
    Polynomial r(dim_);
    for (const auto& [exp, c] : terms_) {
        if (exp[i] == 0)
            continue;
        Exponents e = exp;
        e[i] -= 1;
        r.add_term(e, c * Rational(static_cast<long>(exp[i])));
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(dim_, Rational(1));
    for (unsigned k = 0; k < e; ++k)
        r = r * *this;
    return r;
}

Polynomial Polynomial::reduce_square(int var, const Polynomial& value) const {
    if (var < 0 || var >= dim_)
        throw IndexError("variable index out of range");
    check_same_dim(value);
    Polynomial r(dim_);
    for (const auto& [exp, c] : terms_) {
        unsigned e = exp[var];
        Exponents rest = exp;
        rest[var] = e % 2;
        r += Polynomial::monomial(dim_, rest, c) * value.pow(e / 2);
    }
    return r;
}

double Polynomial::evaluate(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw DimensionMismatch("evaluation point has wrong dimension");
    double acc = 0.0;
    for (const auto& [exp, c] : terms_) {
        double t = c.to_double();
        for (int i = 0; i < dim_; ++i)
            for (unsigned k = 0; k < exp[i]; ++k)
                t *= point[i];
        acc += t;
    }
    return acc;
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, c] : terms_) {
        std::string cs = c.str();
        if (!first)
            out << (cs[0] == '-' ? " - " : " + ");
        else if (cs[0] == '-')
            out << "-";
        std::string mag = (cs[0] == '-') ? cs.substr(1) : cs;
        std::string vars;
        for (int i = 0; i < dim_; ++i) {
            if (exp[i] == 0)
                continue;
            if (!vars.empty())
                vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (exp[i] > 1)
                vars += "^" + std::to_string(exp[i]);
        }
        if (vars.empty())
            out << mag;
        else if (mag == "1")
            out << vars;
        else
            out << mag << "*" << vars;
        first = false;
    }
    return out.str();
}

Rational Polynomial::content() const {
    Rational g(0);
    for (const auto& [exp, c] : terms_)
        g = gcd(g, c);
    return g;
}

} // namespace tpk
