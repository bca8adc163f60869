#include "tpk/liegroup.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "tpk/errors.hpp"

namespace tpk {

Eigen::VectorXd QuadraticLieAlgebra::bracket(const Eigen::VectorXd& u,
                                             const Eigen::VectorXd& v) const {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < dim; ++i) {
        if (u(i) == 0.0)
            continue;
        for (int j = 0; j < dim; ++j) {
            if (v(j) == 0.0)
                continue;
            for (int k = 0; k < dim; ++k)
                w(k) += u(i) * v(j) * c[i][j][k];
        }
    }
    return w;
}

Eigen::MatrixXd QuadraticLieAlgebra::realize(const Eigen::VectorXd& u) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(generators[0].rows(), generators[0].cols());
    for (int i = 0; i < dim; ++i)
        m += u(i) * generators[i];
    return m;
}

Eigen::VectorXd QuadraticLieAlgebra::coordinates(const Eigen::MatrixXd& m) const {
    Eigen::VectorXd pairs(dim);
    for (int b = 0; b < dim; ++b)
        pairs(b) = trace_scale * (m * generators[b]).trace();
    return metric.partialPivLu().solve(pairs);
}

Eigen::MatrixXd QuadraticLieAlgebra::ad(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd m(dim, dim);
    for (int j = 0; j < dim; ++j)
        m.col(j) = bracket(x, Eigen::VectorXd::Unit(dim, j));
    return m;
}

namespace {

// Structure constants from the matrix realization.
void fill_structure(QuadraticLieAlgebra& A) {
    A.c.assign(A.dim, std::vector<std::vector<double>>(
                          A.dim, std::vector<double>(A.dim, 0.0)));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            Eigen::MatrixXd comm = A.generators[i] * A.generators[j] -
                                   A.generators[j] * A.generators[i];
            Eigen::VectorXd k = A.coordinates(comm);
            for (int l = 0; l < A.dim; ++l)
                A.c[i][j][l] = std::abs(k(l)) < 1e-14 ? 0.0 : k(l);
        }
}

Eigen::MatrixXd realify(const Eigen::Matrix2cd& m) {
    Eigen::MatrixXd r(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::complex<double> z = m(i, j);
            r(2 * i, 2 * j) = z.real();
            r(2 * i, 2 * j + 1) = -z.imag();
            r(2 * i + 1, 2 * j) = z.imag();
            r(2 * i + 1, 2 * j + 1) = z.real();
        }
    return r;
}

std::complex<double> complex_entry(const Eigen::MatrixXd& g, int i, int j) {
    return {g(2 * i, 2 * j), g(2 * i + 1, 2 * j)};
}

} // namespace

// <u,v> = -tr(uv)/2; the rotation generators are orthonormal.
QuadraticLieAlgebra so3() {
    QuadraticLieAlgebra A;
    A.name = "so3";
    A.dim = 3;
    A.trace_scale = -0.5;
    A.metric = Eigen::Matrix3d::Identity();
    for (int k = 0; k < 3; ++k) {
        Eigen::Matrix3d L = Eigen::Matrix3d::Zero();
        int i = (k + 1) % 3, j = (k + 2) % 3;
        L(j, i) = 1.0;
        L(i, j) = -1.0;
        A.generators.push_back(L);
    }
    fill_structure(A);
    A.group_defect = [](const Eigen::MatrixXd& g) {
        return (g.transpose() * g - Eigen::Matrix3d::Identity()).norm() +
               std::abs(g.determinant() - 1.0);
    };
    return A;
}

// <u,v> = -tr_R(uv) on the realified matrices; -i sigma_a / 2 orthonormal.
QuadraticLieAlgebra su2_realified() {
    QuadraticLieAlgebra A;
    A.name = "su2";
    A.dim = 3;
    A.trace_scale = -1.0;
    A.metric = Eigen::Matrix3d::Identity();
    using namespace std::complex_literals;
    Eigen::Matrix2cd s1, s2, s3;
    s1 << 0, 1, 1, 0;
    s2 << 0, -1i, 1i, 0;
    s3 << 1, 0, 0, -1;
    for (const auto& s : {s1, s2, s3})
        A.generators.push_back(realify(-0.5i * s));
    fill_structure(A);
    Eigen::MatrixXd J = realify(1i * Eigen::Matrix2cd::Identity());
    A.group_defect = [J](const Eigen::MatrixXd& g) {
        double d = (g.transpose() * g - Eigen::MatrixXd::Identity(4, 4)).norm() +
                   (g * J - J * g).norm();
        std::complex<double> det = complex_entry(g, 0, 0) * complex_entry(g, 1, 1) -
                                   complex_entry(g, 0, 1) * complex_entry(g, 1, 0);
        return d + std::abs(det - 1.0);
    };
    return A;
}

// <u,v> = tr(uv), signature (+,+,-); basis H, E+F, E-F over sqrt(2).
QuadraticLieAlgebra sl2r() {
    QuadraticLieAlgebra A;
    A.name = "sl2r";
    A.dim = 3;
    A.trace_scale = 1.0;
    A.metric = Eigen::Vector3d(1, 1, -1).asDiagonal();
    double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2d H, E, F;
    H << 1, 0, 0, -1;
    E << 0, 1, 0, 0;
    F << 0, 0, 1, 0;
    A.generators.push_back(r * H);
    A.generators.push_back(r * (E + F));
    A.generators.push_back(r * (E - F));
    fill_structure(A);
    A.group_defect = [](const Eigen::MatrixXd& g) {
        return std::abs(g.determinant() - 1.0);
    };
    return A;
}

QuadraticLieAlgebra algebra_by_name(const std::string& name) {
    if (name == "so3")
        return so3();
    if (name == "su2")
        return su2_realified();
    if (name == "sl2r")
        return sl2r();
    throw InputError("unknown algebra '" + name + "' (so3, su2, sl2r)");
}

nlohmann::json to_json(const QuadraticLieAlgebra& A) {
    auto mat = [](const Eigen::MatrixXd& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < m.cols(); ++j)
                row.push_back(m(i, j));
            rows.push_back(row);
        }
        return rows;
    };
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : A.generators)
        gens.push_back(mat(g));
    return {{"name", A.name},     {"dim", A.dim},
            {"structure", A.c},   {"metric", mat(A.metric)},
            {"generators", gens}, {"trace_scale", A.trace_scale}};
}

QuadraticLieAlgebra algebra_from_json(const nlohmann::json& j) {
    QuadraticLieAlgebra base = algebra_by_name(j.at("name").get<std::string>());
    auto mat = [](const nlohmann::json& rows) {
        Eigen::MatrixXd m(rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t k = 0; k < rows[i].size(); ++k)
                m(i, k) = rows[i][k].get<double>();
        return m;
    };
    QuadraticLieAlgebra A = base; // group_defect comes from the named group
    A.dim = j.at("dim").get<int>();
    A.c = j.at("structure").get<std::vector<std::vector<std::vector<double>>>>();
    A.metric = mat(j.at("metric"));
    A.trace_scale = j.at("trace_scale").get<double>();
    A.generators.clear();
    for (const auto& g : j.at("generators"))
        A.generators.push_back(mat(g));
    return A;
}

GroupPoint checked_point(const QuadraticLieAlgebra& A, Eigen::MatrixXd g, double tol) {
    double defect = A.group_defect(g);
    if (!(defect < tol))
        throw InputError(A.name + " group relations violated (defect " +
                         std::to_string(defect) + ")");
    return GroupPoint{std::move(g)};
}

GroupPoint exp_point(const QuadraticLieAlgebra& A, const Eigen::VectorXd& coeffs) {
    Eigen::MatrixXd m = A.realize(coeffs);
    return checked_point(A, m.exp());
}

GroupPoint random_point(const QuadraticLieAlgebra& A, Gen& gen, double radius) {
    Eigen::VectorXd coeffs(A.dim);
    for (int i = 0; i < A.dim; ++i)
        coeffs(i) = gen.real(-radius, radius);
    return exp_point(A, coeffs);
}

Eigen::VectorXd ad_bracket(const QuadraticLieAlgebra& A, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v) {
    return A.bracket(u, v);
}

Eigen::MatrixXd Ad_at(const QuadraticLieAlgebra& A, const GroupPoint& g) {
    Eigen::MatrixXd ginv = g.g.partialPivLu().inverse();
    Eigen::MatrixXd ad(A.dim, A.dim);
    for (int a = 0; a < A.dim; ++a)
        ad.col(a) = A.coordinates(g.g * A.generators[a] * ginv);
    return ad;
}

double cartan_form(const QuadraticLieAlgebra& A, const Eigen::VectorXd& u,
                   const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
    return 0.5 * A.pair(A.bracket(u, v), w);
}

InvariantSection e_section(const QuadraticLieAlgebra& A, const Eigen::VectorXd& a) {
    (void)A;
    return {a, -a, 0.5 * a, 0.5 * a};
}

SectionValue evaluate_at(const QuadraticLieAlgebra& A, const GroupPoint& g,
                         const InvariantSection& s) {
    Eigen::MatrixXd AdG = Ad_at(A, g);
    Eigen::MatrixXd Ainv = AdG.partialPivLu().inverse();
    SectionValue out;
    out.vec = s.u + Ainv * s.v;
    out.form = A.metric * s.p + AdG.transpose() * A.metric * s.q;
    return out;
}

double pairing_invariant(const QuadraticLieAlgebra& A, const GroupPoint& g,
                         const InvariantSection& s1, const InvariantSection& s2) {
    // coefficients of <E_i, E_j> and <E_i, Ad_g E_j>; cancellations happen
    // here, before any Ad numerics enter
    Eigen::MatrixXd S = s1.p * s2.u.transpose() + s1.q * s2.v.transpose() +
                        s2.p * s1.u.transpose() + s2.q * s1.v.transpose();
    Eigen::MatrixXd R = s2.v * s1.p.transpose() + s1.q * s2.u.transpose() +
                        s1.v * s2.p.transpose() + s2.q * s1.u.transpose();
    double acc = 0.0;
    if (!S.isZero(0.0))
        acc += S.cwiseProduct(A.metric).sum();
    if (!R.isZero(0.0))
        acc += R.cwiseProduct(A.metric * Ad_at(A, g)).sum();
    return acc;
}

SectionValue courant_bracket_at(const QuadraticLieAlgebra& A, const GroupPoint& g,
                                const InvariantSection& s1, const InvariantSection& s2,
                                double twist_sign) {
    int d = A.dim;
    Eigen::MatrixXd AdG = Ad_at(A, g);
    Eigen::MatrixXd Ainv = AdG.partialPivLu().inverse();
    Eigen::VectorXd xhat1 = s1.u + Ainv * s1.v;
    Eigen::VectorXd xhat2 = s2.u + Ainv * s2.v;

    SectionValue out;
    out.vec = A.bracket(s1.u, s2.u) - Ainv * A.bracket(s1.v, s2.v);
    out.form.resize(d);

    for (int ci = 0; ci < d; ++ci) {
        Eigen::VectorXd w = Eigen::VectorXd::Unit(d, ci);
        // i_{X1} d xi2 (w^L), from the six invariant rules
        double d1 = -A.pair(s2.p, A.bracket(s1.u, w)) +
                    A.pair(s2.p, A.bracket(w, Ainv * s1.v)) +
                    A.pair(s2.q, AdG * A.bracket(s1.u, w)) +
                    A.pair(s2.q, A.bracket(s1.v, AdG * w));
        // d(xi2(X1))(w^L)
        double d2 = -A.pair(s2.p, A.bracket(w, Ainv * s1.v)) +
                    A.pair(s2.q, AdG * A.bracket(w, s1.u));
        // i_{X2} d xi1 (w^L)
        double d3 = -A.pair(s1.p, A.bracket(s2.u, w)) +
                    A.pair(s1.p, A.bracket(w, Ainv * s2.v)) +
                    A.pair(s1.q, AdG * A.bracket(s2.u, w)) +
                    A.pair(s1.q, A.bracket(s2.v, AdG * w));
        double tw = twist_sign * 0.5 * A.pair(A.bracket(xhat1, xhat2), w);
        out.form(ci) = d1 + d2 - d3 + tw;
    }
    return out;
}

namespace {

// d exp correction: left-trivialized frame of the chart x -> g exp(x) is
// J(x) = sum_m (-ad_x)^m / (m+1)!.
Eigen::MatrixXd dexp_jacobian(const QuadraticLieAlgebra& A, const Eigen::VectorXd& x) {
    Eigen::MatrixXd adx = A.ad(x);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(A.dim, A.dim);
    Eigen::MatrixXd J = term;
    for (int m = 1; m < 40; ++m) {
        term = (-adx) * term / (m + 1.0);
        J += term;
        if (term.norm() < 1e-300)
            break;
    }
    return J;
}

struct ChartValues {
    Eigen::VectorXd x_ch1, x_ch2; // chart components of the two vector parts
    Eigen::VectorXd xi_ch1, xi_ch2;
};

ChartValues chart_eval(const QuadraticLieAlgebra& A, const GroupPoint& g,
                       const InvariantSection& s1, const InvariantSection& s2,
                       const Eigen::VectorXd& x) {
    Eigen::MatrixXd gx = g.g * A.realize(x).exp();
    GroupPoint px{gx};
    Eigen::MatrixXd AdGx = Ad_at(A, px);
    Eigen::MatrixXd Ainv = AdGx.partialPivLu().inverse();
    Eigen::MatrixXd J = dexp_jacobian(A, x);
    auto lu = J.partialPivLu();

    ChartValues v;
    v.x_ch1 = lu.solve(s1.u + Ainv * s1.v);
    v.x_ch2 = lu.solve(s2.u + Ainv * s2.v);
    v.xi_ch1 = J.transpose() * (A.metric * s1.p + AdGx.transpose() * A.metric * s1.q);
    v.xi_ch2 = J.transpose() * (A.metric * s2.p + AdGx.transpose() * A.metric * s2.q);
    return v;
}

} // namespace

SectionValue courant_bracket_fd(const QuadraticLieAlgebra& A, const GroupPoint& g,
                                const InvariantSection& s1, const InvariantSection& s2,
                                double twist_sign, double step) {
    if (!(step > 0) || step > 0.1)
        throw StepError("finite-difference step must lie in (0, 0.1]");
    int d = A.dim;
    ChartValues at0 = chart_eval(A, g, s1, s2, Eigen::VectorXd::Zero(d));

    // dX1[i] = partial_i of chart components, by central differences
    std::vector<ChartValues> plus(d), minus(d);
    for (int i = 0; i < d; ++i) {
        plus[i] = chart_eval(A, g, s1, s2, step * Eigen::VectorXd::Unit(d, i));
        minus[i] = chart_eval(A, g, s1, s2, -step * Eigen::VectorXd::Unit(d, i));
    }
    auto dX1 = [&](int i) { return ((plus[i].x_ch1 - minus[i].x_ch1) / (2 * step)).eval(); };
    auto dX2 = [&](int i) { return ((plus[i].x_ch2 - minus[i].x_ch2) / (2 * step)).eval(); };
    auto dXi1 = [&](int i) { return ((plus[i].xi_ch1 - minus[i].xi_ch1) / (2 * step)).eval(); };
    auto dXi2 = [&](int i) { return ((plus[i].xi_ch2 - minus[i].xi_ch2) / (2 * step)).eval(); };

    SectionValue out;
    out.vec = Eigen::VectorXd::Zero(d);
    out.form = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < d; ++i) {
        out.vec += at0.x_ch1(i) * dX2(i) - at0.x_ch2(i) * dX1(i);
        // L_{X1} xi2: X1^i d_i xi2_j + xi2_i d_j X1^i
        out.form += at0.x_ch1(i) * dXi2(i);
        // i_{X2} d xi1: X2^i (d_i xi1_j - d_j xi1_i)
        out.form -= at0.x_ch2(i) * dXi1(i);
    }
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            out.form(j) += at0.xi_ch2(i) * dX1(j)(i);
            out.form(j) += at0.x_ch2(i) * dXi1(j)(i);
        }
    }
    // twist term, algebraic at the base point
    Eigen::MatrixXd AdG = Ad_at(A, g);
    Eigen::MatrixXd Ainv = AdG.partialPivLu().inverse();
    Eigen::VectorXd xhat1 = s1.u + Ainv * s1.v;
    Eigen::VectorXd xhat2 = s2.u + Ainv * s2.v;
    for (int j = 0; j < d; ++j)
        out.form(j) += twist_sign * 0.5 *
                       A.pair(A.bracket(xhat1, xhat2), Eigen::VectorXd::Unit(d, j));
    if (!out.vec.allFinite() || !out.form.allFinite())
        throw StepError("finite-difference bracket produced non-finite values");
    return out;
}

Eigen::MatrixXd pi_tilde_at(const QuadraticLieAlgebra& A, const GroupPoint& g,
                            double cond_limit) {
    Eigen::MatrixXd AdG = Ad_at(A, g);
    Eigen::MatrixXd M = AdG + Eigen::MatrixXd::Identity(A.dim, A.dim);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    double smin = svd.singularValues().minCoeff();
    double smax = svd.singularValues().maxCoeff();
    if (!(smin > 0) || smax / smin > cond_limit)
        throw SingularError("Ad_g + 1 is singular here: no bivector at this point");
    return 2.0 * (AdG - Eigen::MatrixXd::Identity(A.dim, A.dim)) *
           M.partialPivLu().inverse();
}

Eigen::MatrixXd leaf_tangent_at(const QuadraticLieAlgebra& A, const GroupPoint& g,
                                double sv_threshold) {
    Eigen::MatrixXd AdG = Ad_at(A, g);
    Eigen::MatrixXd K = Eigen::MatrixXd::Identity(A.dim, A.dim) -
                        AdG.partialPivLu().inverse();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(K, Eigen::ComputeFullU);
    int rank = 0;
    for (int i = 0; i < A.dim; ++i)
        if (svd.singularValues()(i) > sv_threshold)
            ++rank;
    return svd.matrixU().leftCols(rank);
}

QuasiPoissonDefect quasi_poisson_defect(const QuadraticLieAlgebra& A,
                                        const GroupPoint& g, double fd_step) {
    if (!(fd_step > 0) || fd_step > 0.1)
        throw StepError("finite-difference step must lie in (0, 0.1]");
    int d = A.dim;
    Eigen::MatrixXd Minv = A.metric.partialPivLu().inverse();

    auto pi_chart = [&](const Eigen::VectorXd& x) {
        Eigen::MatrixXd gx = g.g * A.realize(x).exp();
        Eigen::MatrixXd AdGx = Ad_at(A, GroupPoint{gx});
        Eigen::MatrixXd op = 0.5 * (AdGx - AdGx.partialPivLu().inverse());
        Eigen::MatrixXd Ct = dexp_jacobian(A, x).transpose().partialPivLu().inverse();
        // pi^{ij} = (C e_j)^T op Minv (C e_i) with C = J^{-T}
        Eigen::MatrixXd core = Ct.transpose() * op * Minv * Ct;
        return Eigen::MatrixXd(core.transpose());
    };

    Eigen::MatrixXd Pi0 = pi_chart(Eigen::VectorXd::Zero(d));
    std::vector<Eigen::MatrixXd> dPi(d);
    for (int m = 0; m < d; ++m) {
        Eigen::VectorXd e = fd_step * Eigen::VectorXd::Unit(d, m);
        dPi[m] = (pi_chart(e) - pi_chart(-e)) / (2 * fd_step);
    }

    // D^{pqr} = [pi,pi]^{pqr}/2 = sum_m pi^{pm} d_m pi^{qr} + cyclic
    std::vector<double> D, chi;
    for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q)
            for (int r = q + 1; r < d; ++r) {
                double acc = 0.0;
                for (int m = 0; m < d; ++m)
                    acc += Pi0(p, m) * dPi[m](q, r) + Pi0(q, m) * dPi[m](r, p) +
                           Pi0(r, m) * dPi[m](p, q);
                D.push_back(acc);
                chi.push_back(cartan_form(A, Minv.col(p), Minv.col(q), Minv.col(r)));
            }

    double dot = 0.0, chi2 = 0.0, d2 = 0.0;
    for (size_t i = 0; i < D.size(); ++i) {
        dot += D[i] * chi[i];
        chi2 += chi[i] * chi[i];
        d2 += D[i] * D[i];
    }
    QuasiPoissonDefect out;
    out.defect_norm = std::sqrt(d2);
    if (chi2 == 0.0)
        throw Error("Cartan trivector vanishes; projection undefined");
    out.fitted = dot / chi2;
    double perp2 = 0.0;
    for (size_t i = 0; i < D.size(); ++i) {
        double p = D[i] - out.fitted * chi[i];
        perp2 += p * p;
    }
    out.residual_rel = std::sqrt(perp2 / chi2);
    return out;
}

} // namespace tpk
