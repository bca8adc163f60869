#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "tpk/errors.hpp"
#include "tpk/liegroup.hpp"

using namespace tpk;

namespace {

const std::vector<QuadraticLieAlgebra>& shipped() {
    static std::vector<QuadraticLieAlgebra> all = {so3(), su2_realified(), sl2r()};
    return all;
}

Eigen::VectorXd unit(int d, int i) { return Eigen::VectorXd::Unit(d, i); }

} // namespace

TEST_CASE("shipped algebras satisfy the quadratic Lie algebra laws") {
    for (const auto& A : shipped()) {
        CAPTURE(A.name);
        int d = A.dim;
        // structure constants match matrix commutators
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Eigen::MatrixXd comm = A.generators[i] * A.generators[j] -
                                       A.generators[j] * A.generators[i];
                Eigen::MatrixXd rec = A.realize(A.bracket(unit(d, i), unit(d, j)));
                CHECK((comm - rec).norm() < 1e-12);
            }
        // antisymmetry and Jacobi
        Gen gen(31);
        for (int t = 0; t < 10; ++t) {
            Eigen::VectorXd u = Eigen::VectorXd::NullaryExpr(
                d, [&](int) { return gen.real(-1, 1); });
            Eigen::VectorXd v = Eigen::VectorXd::NullaryExpr(
                d, [&](int) { return gen.real(-1, 1); });
            Eigen::VectorXd w = Eigen::VectorXd::NullaryExpr(
                d, [&](int) { return gen.real(-1, 1); });
            CHECK((A.bracket(u, v) + A.bracket(v, u)).norm() < 1e-12);
            CHECK((A.bracket(u, u)).norm() < 1e-12);
            Eigen::VectorXd jac = A.bracket(u, A.bracket(v, w)) +
                                  A.bracket(v, A.bracket(w, u)) +
                                  A.bracket(w, A.bracket(u, v));
            CHECK(jac.norm() < 1e-12);
            // metric invariance <[u,v],w> + <v,[u,w]> = 0
            CHECK(A.pair(A.bracket(u, v), w) + A.pair(v, A.bracket(u, w)) ==
                  doctest::Approx(0.0).epsilon(1e-12));
        }
        // basis is metric-orthonormal up to signs
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                double s = A.trace_scale * (A.generators[i] * A.generators[j]).trace();
                CHECK(s == doctest::Approx(A.metric(i, j)).epsilon(1e-12));
            }
    }
    CHECK(sl2r().metric(2, 2) == -1.0); // indefinite path really is indefinite
}

TEST_CASE("so(3) structure constants are the standard ones") {
    QuadraticLieAlgebra A = so3();
    CHECK((A.bracket(unit(3, 0), unit(3, 1)) - unit(3, 2)).norm() < 1e-14);
    CHECK((A.bracket(unit(3, 1), unit(3, 2)) - unit(3, 0)).norm() < 1e-14);
    CHECK((A.bracket(unit(3, 2), unit(3, 0)) - unit(3, 1)).norm() < 1e-14);
}

TEST_CASE("group point validation") {
    QuadraticLieAlgebra A = so3();
    Gen gen(5);
    GroupPoint g = random_point(A, gen);
    CHECK(A.group_defect(g.g) < 1e-9);
    Eigen::MatrixXd bad = g.g;
    bad(0, 0) += 1e-3;
    CHECK_THROWS_AS(checked_point(A, bad), InputError);

    QuadraticLieAlgebra B = su2_realified();
    GroupPoint h = random_point(B, gen);
    CHECK(B.group_defect(h.g) < 1e-9);

    QuadraticLieAlgebra C = sl2r();
    GroupPoint k = random_point(C, gen);
    CHECK(C.group_defect(k.g) < 1e-9);
}

TEST_CASE("Ad basics and the rotation oracle") {
    QuadraticLieAlgebra A = so3();
    GroupPoint e{Eigen::MatrixXd::Identity(3, 3)};
    CHECK((Ad_at(A, e) - Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-14);

    // Ad_{exp(theta e3)} rotates the (e1, e2) plane by theta
    double theta = 0.7;
    GroupPoint g = exp_point(A, theta * unit(3, 2));
    Eigen::MatrixXd ad = Ad_at(A, g);
    CHECK(ad(0, 0) == doctest::Approx(std::cos(theta)));
    CHECK(ad(1, 0) == doctest::Approx(std::sin(theta)));
    CHECK(ad(2, 2) == doctest::Approx(1.0));

    // matrix-exponential oracle: Ad_{exp x} = exp(ad_x), all groups
    Gen gen(6);
    for (const auto& B : shipped()) {
        for (int t = 0; t < 6; ++t) {
            Eigen::VectorXd x = Eigen::VectorXd::NullaryExpr(
                B.dim, [&](int) { return gen.real(-1, 1); });
            GroupPoint p = exp_point(B, x);
            Eigen::MatrixXd lhs = Ad_at(B, p);
            Eigen::MatrixXd rhs = B.ad(x).exp();
            CHECK((lhs - rhs).norm() < 1e-9);
        }
        // homomorphism and metric orthogonality
        for (int t = 0; t < 6; ++t) {
            GroupPoint p = random_point(B, gen);
            GroupPoint q = random_point(B, gen);
            Eigen::MatrixXd prod = Ad_at(B, GroupPoint{p.g * q.g});
            CHECK((prod - Ad_at(B, p) * Ad_at(B, q)).norm() < 1e-9);
            Eigen::MatrixXd ad = Ad_at(B, p);
            CHECK((ad.transpose() * B.metric * ad - B.metric).norm() < 1e-9);
        }
    }
}

TEST_CASE("Cartan 3-form") {
    QuadraticLieAlgebra A = so3();
    CHECK(cartan_form(A, unit(3, 0), unit(3, 1), unit(3, 2)) == doctest::Approx(0.5));

    Gen gen(7);
    for (const auto& B : shipped()) {
        for (int t = 0; t < 8; ++t) {
            Eigen::VectorXd u = Eigen::VectorXd::NullaryExpr(
                B.dim, [&](int) { return gen.real(-1, 1); });
            Eigen::VectorXd v = Eigen::VectorXd::NullaryExpr(
                B.dim, [&](int) { return gen.real(-1, 1); });
            Eigen::VectorXd w = Eigen::VectorXd::NullaryExpr(
                B.dim, [&](int) { return gen.real(-1, 1); });
            // total antisymmetry
            CHECK(cartan_form(B, u, v, w) ==
                  doctest::Approx(-cartan_form(B, v, u, w)).epsilon(1e-12));
            CHECK(cartan_form(B, u, v, w) ==
                  doctest::Approx(-cartan_form(B, u, w, v)).epsilon(1e-12));
            CHECK(cartan_form(B, u, u, v) == doctest::Approx(0.0));
        }
    }
}

TEST_CASE("isotropy of the e_a family is exact") {
    Gen gen(8);
    for (const auto& A : shipped()) {
        CAPTURE(A.name);
        for (int t = 0; t < 10; ++t) {
            GroupPoint g = random_point(A, gen);
            for (int a = 0; a < A.dim; ++a)
                for (int b = 0; b < A.dim; ++b) {
                    double val = pairing_invariant(A, g, e_section(A, unit(A.dim, a)),
                                                   e_section(A, unit(A.dim, b)));
                    CHECK(val == 0.0); // exact, not approximate
                }
        }
    }
}

TEST_CASE("pairing_invariant matches the pointwise pairing on generic sections") {
    Gen gen(9);
    QuadraticLieAlgebra A = so3();
    for (int t = 0; t < 10; ++t) {
        GroupPoint g = random_point(A, gen);
        InvariantSection s1{Eigen::Vector3d::Random(), Eigen::Vector3d::Random(),
                            Eigen::Vector3d::Random(), Eigen::Vector3d::Random()};
        InvariantSection s2{Eigen::Vector3d::Random(), Eigen::Vector3d::Random(),
                            Eigen::Vector3d::Random(), Eigen::Vector3d::Random()};
        SectionValue v1 = evaluate_at(A, g, s1);
        SectionValue v2 = evaluate_at(A, g, s2);
        double pointwise = v1.form.dot(v2.vec) + v2.form.dot(v1.vec);
        CHECK(pairing_invariant(A, g, s1, s2) ==
              doctest::Approx(pointwise).epsilon(1e-11));
    }
}

TEST_CASE("E_{-phi} closure: [e_a, e_b] = e_{[a,b]}") {
    Gen gen(42);
    for (const auto& A : shipped()) {
        CAPTURE(A.name);
        double worst = 0.0;
        for (int t = 0; t < 40; ++t) {
            GroupPoint g = random_point(A, gen);
            for (int a = 0; a < A.dim; ++a)
                for (int b = 0; b < A.dim; ++b) {
                    InvariantSection ea = e_section(A, unit(A.dim, a));
                    InvariantSection eb = e_section(A, unit(A.dim, b));
                    SectionValue br = courant_bracket_at(A, g, ea, eb, -1.0);
                    SectionValue target = evaluate_at(
                        A, g, e_section(A, A.bracket(unit(A.dim, a), unit(A.dim, b))));
                    worst = std::max(worst, (br - target).norm());
                }
        }
        CHECK(worst < 1e-9);
    }

    // with the opposite twist the defect is visibly nonzero
    QuadraticLieAlgebra A = so3();
    GroupPoint g = exp_point(A, Eigen::Vector3d(0.4, -0.3, 0.8));
    SectionValue wrong = courant_bracket_at(A, g, e_section(A, unit(3, 0)),
                                            e_section(A, unit(3, 1)), +1.0);
    SectionValue target =
        evaluate_at(A, g, e_section(A, A.bracket(unit(3, 0), unit(3, 1))));
    CHECK((wrong - target).norm() > 1e-3);
}

TEST_CASE("a = b reproduces the axiom-5 shape") {
    Gen gen(10);
    QuadraticLieAlgebra A = su2_realified();
    for (int t = 0; t < 5; ++t) {
        GroupPoint g = random_point(A, gen);
        InvariantSection ea = e_section(A, Eigen::Vector3d(1.0, -0.5, 0.25));
        SectionValue br = courant_bracket_at(A, g, ea, ea, -1.0);
        // [a,a] = 0, and the pairing (e_a, e_a) is constant, so D term drops
        CHECK(br.vec.norm() < 1e-10);
        CHECK(br.form.norm() < 1e-10);
    }
}

TEST_CASE("vector part of e_a vanishes at the identity") {
    QuadraticLieAlgebra A = so3();
    GroupPoint e{Eigen::MatrixXd::Identity(3, 3)};
    SectionValue v = evaluate_at(A, e, e_section(A, Eigen::Vector3d(0.3, 0.7, -1.0)));
    CHECK(v.vec.norm() < 1e-14);
}

TEST_CASE("invariant rules agree with the finite-difference oracle") {
    Gen gen(12);
    for (const auto& A : shipped()) {
        CAPTURE(A.name);
        double worst = 0.0;
        for (int t = 0; t < 12; ++t) {
            GroupPoint g = random_point(A, gen);
            InvariantSection s1{
                Eigen::VectorXd::NullaryExpr(A.dim, [&](int) { return gen.real(-1, 1); }),
                Eigen::VectorXd::NullaryExpr(A.dim, [&](int) { return gen.real(-1, 1); }),
                Eigen::VectorXd::NullaryExpr(A.dim, [&](int) { return gen.real(-1, 1); }),
                Eigen::VectorXd::NullaryExpr(A.dim, [&](int) { return gen.real(-1, 1); })};
            InvariantSection s2{
                Eigen::VectorXd::NullaryExpr(A.dim, [&](int) { return gen.real(-1, 1); }),
                Eigen::VectorXd::NullaryExpr(A.dim, [&](int) { return gen.real(-1, 1); }),
                Eigen::VectorXd::NullaryExpr(A.dim, [&](int) { return gen.real(-1, 1); }),
                Eigen::VectorXd::NullaryExpr(A.dim, [&](int) { return gen.real(-1, 1); })};
            double twist = gen.pick(2) ? -1.0 : 1.0;
            SectionValue exact = courant_bracket_at(A, g, s1, s2, twist);
            SectionValue fd = courant_bracket_fd(A, g, s1, s2, twist, 1e-5);
            worst = std::max(worst, (exact - fd).norm());
        }
        CHECK(worst < 1e-7);
    }
    QuadraticLieAlgebra A = so3();
    Gen g2(1);
    GroupPoint g = random_point(A, g2);
    InvariantSection s = e_section(A, unit(3, 0));
    CHECK_THROWS_AS(courant_bracket_fd(A, g, s, s, -1.0, 0.5), StepError);
}

TEST_CASE("pi_tilde at regular and singular points") {
    QuadraticLieAlgebra A = so3();
    GroupPoint e{Eigen::MatrixXd::Identity(3, 3)};
    CHECK(pi_tilde_at(A, e).norm() < 1e-12); // identity class is a point

    // rotation by pi about e3: Ad_g + 1 singular
    GroupPoint flip = exp_point(A, M_PI * unit(3, 2));
    CHECK_THROWS_AS(pi_tilde_at(A, flip), SingularError);

    // metric antisymmetry and the graph property at regular points
    Gen gen(13);
    for (const auto& B : shipped()) {
        CAPTURE(B.name);
        double worst = 0.0;
        for (int t = 0; t < 12; ++t) {
            GroupPoint g = random_point(B, gen);
            Eigen::MatrixXd P;
            try {
                P = pi_tilde_at(B, g);
            } catch (const SingularError&) {
                continue;
            }
            CHECK((P.transpose() * B.metric + B.metric * P).norm() < 1e-8);

            Eigen::MatrixXd AdG = Ad_at(B, g);
            Eigen::MatrixXd Ainv = AdG.partialPivLu().inverse();
            Eigen::MatrixXd I = Eigen::MatrixXd::Identity(B.dim, B.dim);
            Eigen::MatrixXd Minv = B.metric.partialPivLu().inverse();
            for (int k = 0; k < B.dim; ++k) {
                Eigen::VectorXd alpha = Eigen::VectorXd::NullaryExpr(
                    B.dim, [&](int) { return gen.real(-1, 1); });
                // solve the e_a combination from the covector component
                Eigen::VectorXd coeff =
                    2.0 * (I + Ainv).partialPivLu().solve(Minv * alpha);
                Eigen::VectorXd vec_target = (I - Ainv) * coeff;
                worst = std::max(worst, (P * (Minv * alpha) - vec_target).norm());
            }
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("leaf tangents are the conjugacy-class tangents") {
    QuadraticLieAlgebra A = so3();
    GroupPoint e{Eigen::MatrixXd::Identity(3, 3)};
    CHECK(leaf_tangent_at(A, e).cols() == 0);

    Gen gen(14);
    for (const auto& B : shipped()) {
        for (int t = 0; t < 8; ++t) {
            GroupPoint g = random_point(B, gen);
            Eigen::MatrixXd basis = leaf_tangent_at(B, g);
            Eigen::MatrixXd AdG = Ad_at(B, g);
            Eigen::MatrixXd K = AdG - Eigen::MatrixXd::Identity(B.dim, B.dim);
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(K);
            int rank_ad = 0;
            for (int i = 0; i < B.dim; ++i)
                if (svd.singularValues()(i) > 1e-9)
                    ++rank_ad;
            CHECK(basis.cols() == rank_ad);
            // span check: basis columns lie in the image of (1 - Ad_{g^{-1}})
            Eigen::MatrixXd img = Eigen::MatrixXd::Identity(B.dim, B.dim) -
                                  AdG.partialPivLu().inverse();
            for (int c = 0; c < basis.cols(); ++c) {
                Eigen::VectorXd x = img.colPivHouseholderQr().solve(basis.col(c));
                CHECK((img * x - basis.col(c)).norm() < 1e-8);
            }
        }
    }

    // generic rotation: 2-dimensional conjugacy class
    GroupPoint g = exp_point(A, Eigen::Vector3d(0.3, 0.4, 0.5));
    CHECK(leaf_tangent_at(A, g).cols() == 2);
}

// Pre-build oracle for the quasi-Poisson constant. On the shipped
// 3-dimensional groups the conjugation orbits have dimension <= 2, so the
// Schouten square of the Ad-bivector vanishes identically: the measured
// multiple of the Cartan trivector is 0, point- and group-independently.
TEST_CASE("quasi-Poisson defect and the measured constant") {
    Gen gen(15);
    for (const auto& name : {"so3", "su2"}) {
        QuadraticLieAlgebra A = algebra_by_name(name);
        CAPTURE(A.name);
        double max_fit = 0.0, max_res = 0.0;
        for (int t = 0; t < 10; ++t) {
            GroupPoint g = random_point(A, gen);
            QuasiPoissonDefect d = quasi_poisson_defect(A, g, 1e-4);
            max_fit = std::max(max_fit, std::abs(d.fitted));
            max_res = std::max(max_res, d.residual_rel);
        }
        CHECK(max_res < 1e-5);
        CHECK(max_fit < 1e-5); // the recorded constant: 0
    }
    QuadraticLieAlgebra A = so3();
    GroupPoint g = random_point(A, gen);
    CHECK_THROWS_AS(quasi_poisson_defect(A, g, 0.0), StepError);
}

TEST_CASE("algebra JSON round trip") {
    for (const auto& A : shipped()) {
        QuadraticLieAlgebra B = algebra_from_json(to_json(A));
        CHECK(B.name == A.name);
        CHECK(B.dim == A.dim);
        CHECK((B.metric - A.metric).norm() == 0.0);
        for (int i = 0; i < A.dim; ++i)
            CHECK((B.generators[i] - A.generators[i]).norm() == 0.0);
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j)
                for (int k = 0; k < A.dim; ++k)
                    CHECK(B.c[i][j][k] == A.c[i][j][k]);
    }
}
