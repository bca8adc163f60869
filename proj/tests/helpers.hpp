#ifndef TPK_TESTS_HELPERS_HPP
#define TPK_TESTS_HELPERS_HPP

#include "tpk/graded.hpp"

namespace tpk::testing {

inline Polynomial X(int dim, int i) { return Polynomial::variable(dim, i); }

inline RationalFunction Xf(int dim, int i) {
    return RationalFunction(Polynomial::variable(dim, i));
}

inline RationalFunction C(int dim, long num, long den = 1) {
    return RationalFunction::constant(dim, Rational(num, den));
}

inline Graded dx(int dim, int i) { return Graded::basis(Kind::form, dim, i); }
inline Graded dd(int dim, int i) { return Graded::basis(Kind::multivector, dim, i); }

inline Graded fn(int dim, RationalFunction f) {
    return Graded::function(Kind::form, dim, std::move(f));
}

// pi = x1 e2^e3 + x2 e3^e1 + x3 e1^e2  (Lie-Poisson so(3))
inline Graded so3_pi() {
    Graded pi(Kind::multivector, 3, 2);
    pi.add_term({1, 2}, Xf(3, 0));
    pi.add_term({2, 0}, Xf(3, 1));
    pi.add_term({0, 1}, Xf(3, 2));
    return pi;
}

// B = lambda (x1 dx2^dx3 + x2 dx3^dx1 + x3 dx1^dx2)
inline Graded example1_B(Rational lambda) {
    Graded B(Kind::form, 3, 2);
    RationalFunction l = RationalFunction::constant(3, lambda);
    B.add_term({1, 2}, Xf(3, 0) * l);
    B.add_term({2, 0}, Xf(3, 1) * l);
    B.add_term({0, 1}, Xf(3, 2) * l);
    return B;
}

// phi = 3 lambda dx1^dx2^dx3
inline Graded example1_phi(Rational lambda) {
    Graded phi(Kind::form, 3, 3);
    phi.add_term({0, 1, 2}, RationalFunction::constant(3, lambda * Rational(3)));
    return phi;
}

// r^2 = x1^2 + x2^2 + x3^2
inline RationalFunction r_squared() {
    Polynomial p(3);
    for (int i = 0; i < 3; ++i)
        p += X(3, i) * X(3, i);
    return RationalFunction(p);
}

// omega = dx1^dx2 + dx3^dx4 + x3 dx1^dx4 on R^4
inline Graded twisted_symplectic_omega() {
    Graded w(Kind::form, 4, 2);
    w.add_term({0, 1}, C(4, 1));
    w.add_term({2, 3}, C(4, 1));
    w.add_term({0, 3}, Xf(4, 2));
    return w;
}

} // namespace tpk::testing

#endif
