#include "tpk/dirac.hpp"

#include <Eigen/SVD>

#include "tpk/errors.hpp"
#include "tpk/random_gen.hpp"

namespace tpk {

namespace {

void require_closed(const Graded& phi) {
    if (!de_rham_d(phi).is_zero())
        throw Error("background 3-form is not closed");
}

Graded d_function(int dim, const RationalFunction& f) {
    return de_rham_d(Graded::function(Kind::form, dim, f));
}

} // namespace

BivectorGraph::BivectorGraph(Graded pi_, Graded phi_)
    : pi(std::move(pi_)), phi(std::move(phi_)) {
    require_closed(phi);
}

TwoFormGraph::TwoFormGraph(Graded omega_, Graded phi_)
    : omega(std::move(omega_)), phi(std::move(phi_)) {
    require_closed(phi);
}

DefectResult is_phi_poisson(const Graded& pi, const Graded& phi) {
    require_closed(phi);
    Graded defect =
        schouten_bracket(pi, pi) - raise_all(pi, phi) * Rational(kCalibration);
    return {defect.is_zero(), std::move(defect)};
}

DefectResult is_phi_closed(const Graded& omega, const Graded& phi) {
    Graded defect = de_rham_d(omega) - phi;
    return {defect.is_zero(), std::move(defect)};
}

GraphClosureReport graph_closed_under_bracket(const BivectorGraph& L, int trials,
                                              uint64_t seed) {
    GraphClosureReport rep;
    rep.trials = trials;
    rep.seed = seed;
    Gen gen(seed);
    int n = L.pi.dim();
    LinearMap p = sharp(L.pi);
    TwistedCourantAlgebroid E = TwistedCourantAlgebroid::unchecked(n, L.phi);
    for (int t = 0; t < trials; ++t) {
        Graded a1 = gen.form(n, 1);
        Graded a2 = gen.form(n, 1);
        CourantSection s1{p.apply(a1), a1};
        CourantSection s2{p.apply(a2), a2};
        CourantSection br = bracket(E, s1, s2);
        Graded off = br.X - p.apply(br.xi);
        if (!off.is_zero()) {
            rep.closed = false;
            rep.witness = GraphWitness{s1, s2,
                                       CourantSection{off, Graded(Kind::form, n, 1)}};
            return rep;
        }
    }
    return rep;
}

GraphClosureReport graph_closed_under_bracket(const TwoFormGraph& L, int trials,
                                              uint64_t seed) {
    GraphClosureReport rep;
    rep.trials = trials;
    rep.seed = seed;
    Gen gen(seed);
    int n = L.omega.dim();
    LinearMap w = flat(L.omega);
    TwistedCourantAlgebroid E = TwistedCourantAlgebroid::unchecked(n, L.phi);
    for (int t = 0; t < trials; ++t) {
        Graded X1 = gen.vector_field(n);
        Graded X2 = gen.vector_field(n);
        CourantSection s1{X1, w.apply(X1)};
        CourantSection s2{X2, w.apply(X2)};
        CourantSection br = bracket(E, s1, s2);
        Graded off = br.xi - w.apply(br.X);
        if (!off.is_zero()) {
            rep.closed = false;
            rep.witness = GraphWitness{
                s1, s2, CourantSection{Graded(Kind::multivector, n, 1), off}};
            return rep;
        }
    }
    return rep;
}

RationalFunction poisson_bracket(const Graded& pi, const RationalFunction& f,
                                 const RationalFunction& g) {
    int n = pi.dim();
    return full_contract(wedge(d_function(n, f), d_function(n, g)), pi);
}

Graded hamiltonian_field(const Graded& pi, const RationalFunction& f) {
    return -sharp(pi).apply(d_function(pi.dim(), f));
}

RationalFunction twisted_jacobiator(const Graded& pi, const Graded& phi,
                                    const RationalFunction& f, const RationalFunction& g,
                                    const RationalFunction& h) {
    RationalFunction cyc = poisson_bracket(pi, poisson_bracket(pi, f, g), h) +
                           poisson_bracket(pi, poisson_bracket(pi, g, h), f) +
                           poisson_bracket(pi, poisson_bracket(pi, h, f), g);
    if (phi.is_zero())
        return cyc;
    std::array<Graded, 3> hs = {hamiltonian_field(pi, f), hamiltonian_field(pi, g),
                                hamiltonian_field(pi, h)};
    return cyc + evaluate_on(phi, hs);
}

Graded cotangent_bracket(const Graded& pi, const Graded& phi, const Graded& w1,
                         const Graded& w2) {
    LinearMap p = sharp(pi);
    Graded X1 = p.apply(w1);
    Graded X2 = p.apply(w2);
    Graded r = lie_derivative(X1, w2) - lie_derivative(X2, w1) -
               d_function(pi.dim(), full_contract(wedge(w1, w2), pi));
    if (!phi.is_zero())
        r += interior_product(X2, interior_product(X1, phi));
    return r;
}

Graded hamiltonian_anomaly(const Graded& pi, const Graded& phi,
                           const RationalFunction& f, const RationalFunction& g) {
    Graded hf = hamiltonian_field(pi, f);
    Graded hg = hamiltonian_field(pi, g);
    Graded r = hamiltonian_field(pi, poisson_bracket(pi, f, g)) +
               schouten_bracket(hf, hg);
    if (!phi.is_zero()) {
        Graded eta = interior_product(hg, interior_product(hf, phi));
        r -= sharp(pi).apply(eta);
    }
    return r;
}

Graded d_pi_phi(const Graded& pi, const Graded& phi, const Graded& T) {
    require_closed(phi);
    Graded r = schouten_bracket(pi, T);
    if (T.degree() == 0 || phi.is_zero())
        return r;
    Rational half_calib(kCalibration, 2);
    for (const auto& [v, dx] : raise_two_of_three(pi, phi)) {
        Graded contracted = interior_product(dx, T);
        Graded piece = wedge(v, contracted);
        if (!piece.is_zero())
            r += piece * half_calib;
    }
    return r;
}

RationalFunction lhf_pi_identity(const Graded& pi, const Graded& phi,
                                 const RationalFunction& f, const Graded& w1,
                                 const Graded& w2) {
    Graded hf = hamiltonian_field(pi, f);
    Graded lhs = lie_derivative(hf, pi);
    RationalFunction left = evaluate_on(lhs, std::array<Graded, 2>{w1, w2});
    LinearMap p = sharp(pi);
    std::array<Graded, 3> args = {p.apply(w1), p.apply(w2), hf};
    RationalFunction right = evaluate_on(phi, args);
    return left - right * Rational(kCalibration, 2);
}

GaugeResult gauge_bivector(const Graded& pi, const Graded& B) {
    if (pi.dim() != B.dim())
        throw DimensionMismatch("bivector and 2-form dimensions differ");
    int n = pi.dim();
    LinearMap p = sharp(pi);
    // 1 + pi~ B~ as an endomorphism of TM; det(1 + pi~ B~) = det(1 + B~ pi~)
    // and pi~ (1 + B~ pi~)^{-1} = (1 + pi~ B~)^{-1} pi~.
    LinearMap e = LinearMap::identity(n) + compose(p, flat(B));
    GaugeResult res{false, false, e.determinant(), std::nullopt};
    if (res.det.is_zero()) {
        res.singular = true;
        return res;
    }
    LinearMap m = compose(e.adjugate(), p); // det * pi~'
    Graded pi_prime(Kind::multivector, n, 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            // pi'(dx_a, dx_b) = (pi~' dx_a)_b
            RationalFunction c = RationalFunction(m.at(b, a)) / res.det;
            pi_prime.add_term({a, b}, c);
        }
    // antisymmetry of the gauged matrix, entrywise as rational functions
    for (int a = 0; a < n; ++a)
        for (int b = 0; b <= a; ++b)
            if (!(m.at(a, b) + m.at(b, a)).is_zero())
                throw Error("gauged bivector matrix failed antisymmetry");
    res.ok = true;
    res.pi_prime = std::move(pi_prime);
    return res;
}

LeafData leaf_data_at(const Graded& pi, const Graded& phi,
                      std::span<const double> point, double sv_threshold) {
    (void)phi; // pointwise leaf data depends on pi only; phi twists the leaf form upstream
    int n = pi.dim();
    LinearMap p = sharp(pi);
    Eigen::MatrixXd P(n, n);
    std::vector<double> pt(point.begin(), point.end());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            P(r, c) = p.at(r, c).evaluate(pt);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(P, Eigen::ComputeFullU | Eigen::ComputeFullV);
    int rank = 0;
    for (int i = 0; i < n; ++i)
        if (svd.singularValues()(i) > sv_threshold)
            ++rank;

    LeafData leaf;
    leaf.point = pt;
    leaf.rank = rank;
    leaf.leaf_basis = svd.matrixU().leftCols(rank);
    // two_form[i][j] = omega(u_i, u_j) = alpha_i(u_j) where pi~ alpha_i = u_i;
    // alpha_i = V.col(i) / sigma_i from the SVD pseudo-inverse.
    leaf.leaf_two_form = Eigen::MatrixXd::Zero(rank, rank);
    if (rank > 0) {
        Eigen::MatrixXd alphas(n, rank);
        for (int i = 0; i < rank; ++i)
            alphas.col(i) = svd.matrixV().col(i) / svd.singularValues()(i);
        leaf.leaf_two_form = alphas.transpose() * leaf.leaf_basis;
        // clean antisymmetry against roundoff
        leaf.leaf_two_form =
            0.5 * (leaf.leaf_two_form - leaf.leaf_two_form.transpose().eval());
    }
    return leaf;
}

} // namespace tpk
