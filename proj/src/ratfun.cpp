#include "tpk/ratfun.hpp"

#include <cmath>

#include "tpk/errors.hpp"

namespace tpk {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.dim() != den_.dim())
        throw DimensionMismatch("numerator and denominator dimensions differ");
    if (den_.is_zero())
        throw Error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(den_.dim(), Rational(1));
        return;
    }
    Rational g = gcd(num_.content(), den_.content());
    // Fix the sign using the denominator's leading stored term.
    if (den_.terms().begin()->second.sign() < 0)
        g = -g;
    Rational inv = Rational(1) / g;
    num_ = num_ * inv;
    den_ = den_ * inv;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(dim());
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_)
        return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero())
        return RationalFunction(a.dim());
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero())
        throw Error("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("comparing rational functions of different dimension");
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction RationalFunction::derivative(int i) const {
    if (is_polynomial()) {
        Rational c = Rational(1) / den_.constant_value();
        return RationalFunction(num_.derivative(i) * c);
    }
    return RationalFunction(num_.derivative(i) * den_ - num_ * den_.derivative(i),
                            den_ * den_);
}

double RationalFunction::evaluate(std::span<const double> point, double pole_eps) const {
    double d = den_.evaluate(point);
    if (std::abs(d) < pole_eps)
        throw PoleError("denominator " + den_.str() + " vanishes at evaluation point");
    return num_.evaluate(point) / d;
}

std::string RationalFunction::str() const {
    if (is_polynomial() && den_.constant_value() == Rational(1))
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace tpk
