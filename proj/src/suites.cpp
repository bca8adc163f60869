#include "tpk/suites.hpp"

#include <chrono>
#include <cmath>

#include "tpk/json_io.hpp"

namespace tpk {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

std::string graded_residual(const Graded& g) {
    if (g.is_zero())
        return "0";
    int maxdeg = 0;
    for (const auto& [idx, c] : g.terms())
        maxdeg = std::max(maxdeg,
                          std::max(c.num().total_degree(), c.den().total_degree()));
    return "terms=" + std::to_string(g.term_count()) +
           ",maxdeg=" + std::to_string(maxdeg);
}

std::string float_residual(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

Graded zero_three_form(int dim) { return Graded(Kind::form, dim, 3); }

} // namespace

VerificationReport run_verify_suite(const Graded& pi, const Graded& phi, int trials,
                                    uint64_t seed) {
    Stopwatch watch;
    VerificationReport rep;
    rep.suite = "verify";
    rep.seed = seed;
    int n = pi.dim();

    Graded dphi = de_rham_d(phi);
    if (!dphi.is_zero()) {
        rep.add(CheckResult::fail("01_phi_closed", graded_residual(dphi),
                                  {{"dphi", to_json(dphi)}}));
        rep.timing_ms = watch.ms();
        return rep; // nothing downstream is meaningful
    }
    rep.add(CheckResult::pass("01_phi_closed"));

    DefectResult pp = is_phi_poisson(pi, phi);
    if (pp.ok)
        rep.add(CheckResult::pass("02_phi_poisson"));
    else
        rep.add(CheckResult::fail("02_phi_poisson", graded_residual(pp.defect),
                                  {{"defect", to_json(pp.defect)}}));

    Gen gen(seed);
    bool jac_ok = true;
    for (int t = 0; t < trials && jac_ok; ++t) {
        RationalFunction f = gen.function(n);
        RationalFunction g = gen.function(n);
        RationalFunction h = gen.function(n);
        RationalFunction j = twisted_jacobiator(pi, phi, f, g, h);
        if (!j.is_zero()) {
            jac_ok = false;
            rep.add(CheckResult::fail(
                "03_jacobiator", j.str(),
                {{"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}}));
        }
    }
    if (jac_ok)
        rep.add(CheckResult::pass("03_jacobiator"));

    BivectorGraph L(pi, phi);
    GraphClosureReport closure = graph_closed_under_bracket(L, trials, seed);
    if (closure.closed)
        rep.add(CheckResult::pass("04_graph_closure"));
    else
        rep.add(CheckResult::fail("04_graph_closure",
                                  graded_residual(closure.witness->residual.X) + ";" +
                                      graded_residual(closure.witness->residual.xi),
                                  {{"s1", to_json(closure.witness->s1)},
                                   {"s2", to_json(closure.witness->s2)}}));

    bool dd_ok = true;
    Graded worst(Kind::multivector, n, 0);
    for (int i = 0; i < n && dd_ok; ++i) {
        Graded fi = Graded::function(Kind::multivector, n,
                                     RationalFunction::variable(n, i));
        Graded once = d_pi_phi(pi, phi, fi);
        Graded twice = d_pi_phi(pi, phi, once);
        if (!twice.is_zero()) {
            dd_ok = false;
            worst = twice;
        }
        Graded vecd = d_pi_phi(pi, phi, d_pi_phi(pi, phi, Graded::basis(Kind::multivector, n, i)));
        if (!vecd.is_zero()) {
            dd_ok = false;
            worst = vecd;
        }
    }
    if (dd_ok)
        rep.add(CheckResult::pass("05_d_squared"));
    else
        rep.add(CheckResult::fail("05_d_squared", graded_residual(worst),
                                  {{"residual", to_json(worst)}}));

    rep.timing_ms = watch.ms();
    return rep;
}

VerificationReport run_axioms_suite(int dim, const Graded& phi, int trials,
                                    uint64_t seed) {
    Stopwatch watch;
    VerificationReport rep;
    rep.suite = "axioms";
    rep.seed = seed;

    TwistedCourantAlgebroid E = TwistedCourantAlgebroid::unchecked(dim, phi);
    Gen gen(seed);
    std::array<bool, 5> ok;
    ok.fill(true);
    std::array<std::string, 5> residuals;
    residuals.fill("0");
    std::array<nlohmann::json, 5> witnesses;

    for (int t = 0; t < trials; ++t) {
        CourantSection e1{gen.vector_field(dim), gen.form(dim, 1)};
        CourantSection e2{gen.vector_field(dim), gen.form(dim, 1)};
        CourantSection e3{gen.vector_field(dim), gen.form(dim, 1)};
        RationalFunction f = gen.function(dim);
        AxiomReport ar = verify_axioms(E, e1, e2, e3, f);
        for (int a = 0; a < 5; ++a) {
            if (ar.checks[a].pass || !ok[a])
                continue;
            ok[a] = false;
            residuals[a] = ar.checks[a].residual_summary();
            witnesses[a] = {{"trial", t},
                            {"e1", to_json(e1)},
                            {"e2", to_json(e2)},
                            {"e3", to_json(e3)},
                            {"f", to_json(f)}};
        }
    }
    for (int a = 0; a < 5; ++a) {
        std::string id = "axiom" + std::to_string(a + 1);
        if (trials == 0)
            rep.add(CheckResult::pass(id, "no trials"));
        else if (ok[a])
            rep.add(CheckResult::pass(id));
        else
            rep.add(CheckResult::fail(id, residuals[a], witnesses[a]));
    }
    rep.timing_ms = watch.ms();
    return rep;
}

GaugeOutcome run_gauge(const Graded& pi, const Graded& B, const Graded& phi,
                       uint64_t seed) {
    Stopwatch watch;
    GaugeOutcome out{{}, gauge_bivector(pi, B)};
    VerificationReport& rep = out.report;
    rep.suite = "gauge";
    rep.seed = seed;

    if (out.result.singular) {
        rep.add(CheckResult::pass("01_gauge", "det identically zero; Dirac structure only"));
        rep.timing_ms = watch.ms();
        return out;
    }
    rep.add(CheckResult::pass("01_gauge", "det=" + out.result.det.str()));

    // transported background: tau_B carries E_phi to E_{phi - dB}
    Graded phi_prime = phi - de_rham_d(B);
    DefectResult check = is_phi_poisson(*out.result.pi_prime, phi_prime);
    if (check.ok)
        rep.add(CheckResult::pass("02_result_poisson"));
    else
        rep.add(CheckResult::fail("02_result_poisson", graded_residual(check.defect),
                                  {{"defect", to_json(check.defect)}}));
    rep.timing_ms = watch.ms();
    return out;
}

VerificationReport run_example_lie_poisson(const Rational& lambda, int samples,
                                           uint64_t seed) {
    Stopwatch watch;
    VerificationReport rep;
    rep.suite = "example/lie-poisson";
    rep.seed = seed;

    const int n = 3;
    Graded pi(Kind::multivector, n, 2);
    pi.add_term({1, 2}, RationalFunction::variable(n, 0));
    pi.add_term({2, 0}, RationalFunction::variable(n, 1));
    pi.add_term({0, 1}, RationalFunction::variable(n, 2));

    Graded B(Kind::form, n, 2);
    RationalFunction l = RationalFunction::constant(n, lambda);
    B.add_term({1, 2}, RationalFunction::variable(n, 0) * l);
    B.add_term({2, 0}, RationalFunction::variable(n, 1) * l);
    B.add_term({0, 1}, RationalFunction::variable(n, 2) * l);
    Graded phi = de_rham_d(B);

    Polynomial r2(n);
    for (int i = 0; i < n; ++i)
        r2 += Polynomial::variable(n, i) * Polynomial::variable(n, i);
    RationalFunction denom = RationalFunction(Polynomial::constant(n, Rational(1))) +
                             RationalFunction(r2) * lambda;

    // 1. the twist is admissible and pi is phi-Poisson for it
    if (de_rham_d(phi).is_zero() && is_phi_poisson(pi, phi).ok)
        rep.add(CheckResult::pass("01_twist_valid"));
    else
        rep.add(CheckResult::fail("01_twist_valid", "unexpected defect"));

    // 2. gauge identity tau_{-B} pi = pi / (1 + lambda r^2), exact
    GaugeResult gauged = gauge_bivector(pi, -B);
    bool identity_ok = gauged.ok;
    if (identity_ok) {
        Graded expected(Kind::multivector, n, 2);
        expected.add_term({1, 2}, RationalFunction::variable(n, 0) / denom);
        expected.add_term({2, 0}, RationalFunction::variable(n, 1) / denom);
        expected.add_term({0, 1}, RationalFunction::variable(n, 2) / denom);
        identity_ok = (*gauged.pi_prime - expected).is_zero();
    }
    rep.add(identity_ok ? CheckResult::pass("02_gauge_identity")
                        : CheckResult::fail("02_gauge_identity", "mismatch"));

    // 3. determinant is exactly (1 + lambda r^2)^2
    bool det_ok = gauged.det == denom * denom;
    rep.add(det_ok ? CheckResult::pass("03_determinant", "(1+lambda r^2)^2")
                   : CheckResult::fail("03_determinant", gauged.det.str()));

    // 4. singular locus: for lambda < 0 the determinant vanishes identically
    //    on the sphere r^2 = -1/lambda of radius (-lambda)^{-1/2}
    if (lambda.sign() < 0) {
        Polynomial repl = Polynomial::constant(n, Rational(-1) / lambda) -
                          Polynomial::variable(n, 0) * Polynomial::variable(n, 0) -
                          Polynomial::variable(n, 1) * Polynomial::variable(n, 1);
        bool on_sphere = gauged.det.num().reduce_square(2, repl).is_zero();
        double radius = 1.0 / std::sqrt(-lambda.to_double());
        rep.add(on_sphere
                    ? CheckResult::pass("04_singular_locus",
                                        "radius=" + float_residual(radius))
                    : CheckResult::fail("04_singular_locus", "locus mismatch"));
    } else {
        rep.add(CheckResult::pass("04_singular_locus", "empty (lambda >= 0)"));
    }

    // 5. Casimir preservation: {r^2, g}_{pi'} = 0 exactly
    Gen gen(seed);
    bool casimir_ok = gauged.ok;
    for (int t = 0; t < 10 && casimir_ok; ++t)
        casimir_ok = poisson_bracket(*gauged.pi_prime, RationalFunction(r2),
                                     gen.function(n))
                         .is_zero();
    rep.add(casimir_ok ? CheckResult::pass("05_casimir")
                       : CheckResult::fail("05_casimir", "nonzero bracket"));

    // 6. pointwise leaf ranks agree away from the singular locus
    bool ranks_ok = gauged.ok;
    int checked = 0;
    for (int t = 0; t < samples && ranks_ok; ++t) {
        std::array<double, 3> pt = {gen.real(-2, 2), gen.real(-2, 2), gen.real(-2, 2)};
        double d;
        try {
            d = gauged.det.evaluate(pt);
        } catch (const PoleError&) {
            continue;
        }
        if (std::abs(d) < 1e-6)
            continue; // too close to the singular sphere
        try {
            LeafData a = leaf_data_at(pi, zero_three_form(n), pt);
            LeafData b = leaf_data_at(*gauged.pi_prime, zero_three_form(n), pt);
            ranks_ok = a.rank == b.rank;
            ++checked;
        } catch (const PoleError&) {
            continue;
        }
    }
    rep.add(ranks_ok ? CheckResult::pass("06_leaf_ranks",
                                         "points=" + std::to_string(checked))
                     : CheckResult::fail("06_leaf_ranks", "rank mismatch"));

    rep.timing_ms = watch.ms();
    return rep;
}

VerificationReport run_example_group(const std::string& algebra, int samples,
                                     uint64_t seed, double tol, double fd_step) {
    Stopwatch watch;
    VerificationReport rep;
    rep.suite = "example/group";
    rep.seed = seed;

    QuadraticLieAlgebra A = algebra_by_name(algebra);
    int d = A.dim;
    Gen gen(seed);

    // 1. algebra laws: Jacobi, metric invariance, commutator match
    double law_defect = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Eigen::MatrixXd comm = A.generators[i] * A.generators[j] -
                                   A.generators[j] * A.generators[i];
            law_defect = std::max(
                law_defect,
                (comm - A.realize(A.bracket(Eigen::VectorXd::Unit(d, i),
                                            Eigen::VectorXd::Unit(d, j))))
                    .norm());
            for (int k = 0; k < d; ++k) {
                Eigen::VectorXd u = Eigen::VectorXd::Unit(d, i);
                Eigen::VectorXd v = Eigen::VectorXd::Unit(d, j);
                Eigen::VectorXd w = Eigen::VectorXd::Unit(d, k);
                Eigen::VectorXd jac = A.bracket(u, A.bracket(v, w)) +
                                      A.bracket(v, A.bracket(w, u)) +
                                      A.bracket(w, A.bracket(u, v));
                law_defect = std::max(law_defect, jac.norm());
                law_defect = std::max(law_defect,
                                      std::abs(A.pair(A.bracket(u, v), w) +
                                               A.pair(v, A.bracket(u, w))));
            }
        }
    rep.add(law_defect < 1e-12
                ? CheckResult::pass("01_algebra_laws", float_residual(law_defect))
                : CheckResult::fail("01_algebra_laws", float_residual(law_defect)));

    // 2. isotropy of the e_a family, exact from the invariant rules
    bool isotropy_ok = true;
    for (int t = 0; t < samples && isotropy_ok; ++t) {
        GroupPoint g = random_point(A, gen);
        for (int a = 0; a < d && isotropy_ok; ++a)
            for (int b = 0; b < d && isotropy_ok; ++b)
                isotropy_ok = pairing_invariant(A, g, e_section(A, Eigen::VectorXd::Unit(d, a)),
                                                e_section(A, Eigen::VectorXd::Unit(d, b))) == 0.0;
    }
    rep.add(isotropy_ok ? CheckResult::pass("02_isotropy_exact")
                        : CheckResult::fail("02_isotropy_exact", "nonzero pairing"));

    // 3. E_{-phi} closure: [e_a, e_b] = e_{[a,b]} at sampled points
    double worst_closure = 0.0;
    for (int t = 0; t < samples; ++t) {
        GroupPoint g = random_point(A, gen);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                SectionValue br = courant_bracket_at(
                    A, g, e_section(A, Eigen::VectorXd::Unit(d, a)),
                    e_section(A, Eigen::VectorXd::Unit(d, b)), -1.0);
                SectionValue target = evaluate_at(
                    A, g,
                    e_section(A, A.bracket(Eigen::VectorXd::Unit(d, a),
                                           Eigen::VectorXd::Unit(d, b))));
                worst_closure = std::max(worst_closure, (br - target).norm());
            }
    }
    rep.add(worst_closure < tol
                ? CheckResult::pass("03_closure_e_sections", float_residual(worst_closure))
                : CheckResult::fail("03_closure_e_sections", float_residual(worst_closure)));

    // 4. graph property of pi~ at regular points
    double worst_graph = 0.0;
    int regular = 0;
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);
    Eigen::MatrixXd Minv = A.metric.partialPivLu().inverse();
    for (int t = 0; t < samples; ++t) {
        GroupPoint g = random_point(A, gen);
        Eigen::MatrixXd P;
        try {
            P = pi_tilde_at(A, g);
        } catch (const SingularError&) {
            continue;
        }
        ++regular;
        Eigen::MatrixXd Ainv = Ad_at(A, g).partialPivLu().inverse();
        for (int k = 0; k < 2; ++k) {
            Eigen::VectorXd alpha =
                Eigen::VectorXd::NullaryExpr(d, [&](int) { return gen.real(-1, 1); });
            Eigen::VectorXd coeff = 2.0 * (I + Ainv).partialPivLu().solve(Minv * alpha);
            worst_graph = std::max(
                worst_graph, (P * (Minv * alpha) - (I - Ainv) * coeff).norm());
        }
        worst_graph =
            std::max(worst_graph, (P.transpose() * A.metric + A.metric * P).norm() / 10);
    }
    rep.add(worst_graph < tol
                ? CheckResult::pass("04_pi_tilde_graph",
                                    float_residual(worst_graph) + ";points=" +
                                        std::to_string(regular))
                : CheckResult::fail("04_pi_tilde_graph", float_residual(worst_graph)));

    // 5. invariant rules against the finite-difference oracle
    double worst_fd = 0.0;
    int fd_samples = std::min(samples, 25);
    for (int t = 0; t < fd_samples; ++t) {
        GroupPoint g = random_point(A, gen);
        InvariantSection s1{
            Eigen::VectorXd::NullaryExpr(d, [&](int) { return gen.real(-1, 1); }),
            Eigen::VectorXd::NullaryExpr(d, [&](int) { return gen.real(-1, 1); }),
            Eigen::VectorXd::NullaryExpr(d, [&](int) { return gen.real(-1, 1); }),
            Eigen::VectorXd::NullaryExpr(d, [&](int) { return gen.real(-1, 1); })};
        InvariantSection s2{
            Eigen::VectorXd::NullaryExpr(d, [&](int) { return gen.real(-1, 1); }),
            Eigen::VectorXd::NullaryExpr(d, [&](int) { return gen.real(-1, 1); }),
            Eigen::VectorXd::NullaryExpr(d, [&](int) { return gen.real(-1, 1); }),
            Eigen::VectorXd::NullaryExpr(d, [&](int) { return gen.real(-1, 1); })};
        SectionValue exact = courant_bracket_at(A, g, s1, s2, -1.0);
        SectionValue fd = courant_bracket_fd(A, g, s1, s2, -1.0, fd_step);
        worst_fd = std::max(worst_fd, (exact - fd).norm());
    }
    double fd_tol = std::max(1e-7, 10 * fd_step * fd_step);
    rep.add(worst_fd < fd_tol
                ? CheckResult::pass("05_invariant_vs_fd", float_residual(worst_fd))
                : CheckResult::fail("05_invariant_vs_fd", float_residual(worst_fd)));

    // 6. quasi-Poisson companion: Schouten square on the Cartan line, with a
    //    point-independent multiple (measured 0 on the shipped groups)
    double worst_res = 0.0, fit_lo = 0.0, fit_hi = 0.0;
    bool first = true;
    int qp_samples = std::min(samples, 25);
    for (int t = 0; t < qp_samples; ++t) {
        GroupPoint g = random_point(A, gen);
        QuasiPoissonDefect qp = quasi_poisson_defect(A, g, fd_step);
        worst_res = std::max(worst_res, qp.residual_rel);
        fit_lo = first ? qp.fitted : std::min(fit_lo, qp.fitted);
        fit_hi = first ? qp.fitted : std::max(fit_hi, qp.fitted);
        first = false;
    }
    double spread = fit_hi - fit_lo;
    bool qp_ok = worst_res < 1e-5 && spread < 1e-5 * std::max(1.0, std::abs(fit_hi));
    rep.add(qp_ok ? CheckResult::pass("06_quasi_poisson",
                                      "fitted=" + float_residual(0.5 * (fit_lo + fit_hi)) +
                                          ";spread=" + float_residual(spread))
                  : CheckResult::fail("06_quasi_poisson", float_residual(worst_res)));

    rep.timing_ms = watch.ms();
    return rep;
}

} // namespace tpk
