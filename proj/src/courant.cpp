#include "tpk/courant.hpp"

#include "tpk/errors.hpp"

namespace tpk {

CourantSection CourantSection::make(Graded X, Graded xi) {
    if (X.dim() != xi.dim())
        throw DimensionMismatch("section components have different dimension");
    if (X.kind() != Kind::multivector || xi.kind() != Kind::form)
        throw KindMismatch("section needs a vector field and a 1-form");
    if ((X.degree() != 1 && !X.is_zero()) || (xi.degree() != 1 && !xi.is_zero()))
        throw IndexError("section components must have degree 1");
    return {std::move(X), std::move(xi)};
}

CourantSection CourantSection::zero(int dim) {
    return {Graded(Kind::multivector, dim, 1), Graded(Kind::form, dim, 1)};
}

TwistedCourantAlgebroid::TwistedCourantAlgebroid(int dim, Graded phi)
    : dim_(dim), phi_(std::move(phi)) {
    if (phi_.dim() != dim)
        throw DimensionMismatch("twist form dimension mismatch");
    if (phi_.kind() != Kind::form || (phi_.degree() != 3 && !phi_.is_zero()))
        throw KindMismatch("twist must be a 3-form");
    if (!de_rham_d(phi_).is_zero())
        throw Error("twist 3-form is not closed");
}

TwistedCourantAlgebroid::TwistedCourantAlgebroid(unchecked_t, int dim, Graded phi)
    : dim_(dim), phi_(std::move(phi)) {}

TwistedCourantAlgebroid TwistedCourantAlgebroid::unchecked(int dim, Graded phi) {
    return TwistedCourantAlgebroid(unchecked_t{}, dim, std::move(phi));
}

RationalFunction pairing(const CourantSection& e1, const CourantSection& e2) {
    if (e1.dim() != e2.dim())
        throw DimensionMismatch("pairing sections of different dimension");
    return full_contract(e1.xi, e2.X) + full_contract(e2.xi, e1.X);
}

Graded anchor(const CourantSection& e) { return e.X; }

CourantSection bracket(const TwistedCourantAlgebroid& E, const CourantSection& e1,
                       const CourantSection& e2) {
    if (e1.dim() != E.dim() || e2.dim() != E.dim())
        throw DimensionMismatch("section dimension does not match algebroid");
    Graded X = schouten_bracket(e1.X, e2.X);
    Graded xi = lie_derivative(e1.X, e2.xi) - interior_product(e2.X, de_rham_d(e1.xi));
    if (!E.phi().is_zero())
        xi += interior_product(e2.X, interior_product(e1.X, E.phi()));
    return {std::move(X), std::move(xi)};
}

CourantSection D_operator(const TwistedCourantAlgebroid& E, const RationalFunction& f) {
    Graded df = de_rham_d(Graded::function(Kind::form, E.dim(), f));
    return {Graded(Kind::multivector, E.dim(), 1), df * Rational(1, 2)};
}

std::string AxiomCheck::residual_summary() const {
    if (pass)
        return "0";
    int terms = 0, maxdeg = 0;
    for (const auto& g : residual)
        for (const auto& [idx, c] : g.terms()) {
            ++terms;
            maxdeg = std::max(maxdeg, std::max(c.num().total_degree(),
                                               c.den().total_degree()));
        }
    return "terms=" + std::to_string(terms) + ",maxdeg=" + std::to_string(maxdeg);
}

bool AxiomReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

AxiomReport verify_axioms(const TwistedCourantAlgebroid& E, const CourantSection& e1,
                          const CourantSection& e2, const CourantSection& e3,
                          const RationalFunction& f) {
    AxiomReport rep;

    // 1. [e1,[e2,e3]] = [[e1,e2],e3] + [e2,[e1,e3]]
    CourantSection r1 = bracket(E, e1, bracket(E, e2, e3)) -
                        bracket(E, bracket(E, e1, e2), e3) -
                        bracket(E, e2, bracket(E, e1, e3));
    rep.checks[0] = {1, r1.is_zero(), "Leibniz form of the Jacobi identity",
                     {r1.X, r1.xi}};

    // 2. rho[e1,e2] = [rho e1, rho e2]
    Graded r2 = anchor(bracket(E, e1, e2)) - schouten_bracket(e1.X, e2.X);
    rep.checks[1] = {2, r2.is_zero(), "anchor is bracket-compatible", {r2}};

    // 3. [e1, f e2] = f [e1,e2] + (rho(e1) f) e2
    RationalFunction e1f =
        full_contract(de_rham_d(Graded::function(Kind::form, E.dim(), f)), e1.X);
    CourantSection r3 =
        bracket(E, e1, e2 * f) - bracket(E, e1, e2) * f - e2 * e1f;
    rep.checks[2] = {3, r3.is_zero(), "Leibniz rule in the second argument",
                     {r3.X, r3.xi}};

    // 4. rho(e1)(e2,e3) = ([e1,e2],e3) + (e2,[e1,e3])
    Graded d_pair =
        de_rham_d(Graded::function(Kind::form, E.dim(), pairing(e2, e3)));
    RationalFunction r4 = full_contract(d_pair, e1.X) -
                          pairing(bracket(E, e1, e2), e3) -
                          pairing(e2, bracket(E, e1, e3));
    rep.checks[3] = {4, r4.is_zero(), "invariance of the pairing",
                     {Graded::function(Kind::form, E.dim(), r4)}};

    // 5. [e,e] = D(e,e)
    CourantSection r5 = bracket(E, e1, e1) - D_operator(E, pairing(e1, e1));
    rep.checks[4] = {5, r5.is_zero(), "symmetric part is exact", {r5.X, r5.xi}};

    return rep;
}

CourantSection tau_B(const CourantSection& e, const Graded& B) {
    if (B.dim() != e.dim())
        throw DimensionMismatch("gauge 2-form dimension mismatch");
    return {e.X, e.xi + flat(B).apply(e.X)};
}

CourantSection verify_gauge_morphism(const Graded& phi, const Graded& B,
                                     const CourantSection& e1,
                                     const CourantSection& e2) {
    int n = phi.dim();
    TwistedCourantAlgebroid source = TwistedCourantAlgebroid::unchecked(n, phi);
    TwistedCourantAlgebroid target =
        TwistedCourantAlgebroid::unchecked(n, phi - de_rham_d(B));
    CourantSection lhs = tau_B(bracket(source, e1, e2), B);
    CourantSection rhs = bracket(target, tau_B(e1, B), tau_B(e2, B));
    return lhs - rhs;
}

} // namespace tpk
