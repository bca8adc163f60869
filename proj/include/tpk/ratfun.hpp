#ifndef TPK_RATFUN_HPP
#define TPK_RATFUN_HPP

#include <span>
#include <string>

#include "tpk/polynomial.hpp"

namespace tpk {

// Fraction of multivariate polynomials. Never reduced to lowest terms
// (no multivariate gcd); instead the scalar content is divided out and the
// denominator sign is fixed, which keeps coefficient growth in check.
// Equality is decided by cross-multiplication: a/b == c/d iff a*d == c*b.
class RationalFunction {
  public:
    explicit RationalFunction(int dim)
        : num_(dim), den_(Polynomial::constant(dim, Rational(1))) {}
    RationalFunction(Polynomial num) // NOLINT: implicit by design
        : num_(std::move(num)), den_(Polynomial::constant(num_.dim(), Rational(1))) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction constant(int dim, Rational c) {
        return RationalFunction(Polynomial::constant(dim, std::move(c)));
    }
    static RationalFunction variable(int dim, int i) {
        return RationalFunction(Polynomial::variable(dim, i));
    }

    int dim() const { return num_.dim(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend RationalFunction operator*(const RationalFunction& a, const Rational& c) {
        return a * RationalFunction::constant(a.dim(), c);
    }

    // Cross-multiplication identity of values.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    RationalFunction derivative(int i) const;

    double evaluate(std::span<const double> point, double pole_eps = 1e-12) const;

    std::string str() const;

  private:
    void normalize();
    Polynomial num_, den_;
};

} // namespace tpk

#endif
