#ifndef TPK_LIEGROUP_HPP
#define TPK_LIEGROUP_HPP

#include <Eigen/Dense>
#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "tpk/random_gen.hpp"

namespace tpk {

// Matrix Lie algebra with an invariant metric, the numeric backend for the
// group example. Basis vectors are metric-orthonormal up to signs; the
// metric matrix is diagonal +-1 in that basis.
struct QuadraticLieAlgebra {
    std::string name;
    int dim = 0;
    std::vector<Eigen::MatrixXd> generators;          // matrix realization
    std::vector<std::vector<std::vector<double>>> c;  // [e_i,e_j] = sum_k c[i][j][k] e_k
    Eigen::MatrixXd metric;                           // d x d, on the basis
    double trace_scale = 1.0;                         // <u,v> = trace_scale * tr(u v)
    std::function<double(const Eigen::MatrixXd&)> group_defect; // 0 on the group

    Eigen::VectorXd bracket(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
    double pair(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
        return u.dot(metric * v);
    }
    Eigen::MatrixXd realize(const Eigen::VectorXd& u) const;   // sum u_i G_i
    Eigen::VectorXd coordinates(const Eigen::MatrixXd& m) const;

    // ad_x as a d x d matrix on coordinates.
    Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;
};

QuadraticLieAlgebra so3();
QuadraticLieAlgebra su2_realified();
QuadraticLieAlgebra sl2r();
QuadraticLieAlgebra algebra_by_name(const std::string& name);

nlohmann::json to_json(const QuadraticLieAlgebra& A);
QuadraticLieAlgebra algebra_from_json(const nlohmann::json& j);

struct GroupPoint {
    Eigen::MatrixXd g;
};

// exp of a Lie algebra element given by coordinates; validates the result.
GroupPoint exp_point(const QuadraticLieAlgebra& A, const Eigen::VectorXd& coeffs);
GroupPoint checked_point(const QuadraticLieAlgebra& A, Eigen::MatrixXd g,
                         double tol = 1e-9);
GroupPoint random_point(const QuadraticLieAlgebra& A, Gen& gen, double radius = 1.2);

// [u, v] by structure constants; matches the matrix commutator of the
// realizations to machine precision.
Eigen::VectorXd ad_bracket(const QuadraticLieAlgebra& A, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v);

// Matrix of v -> g v g^{-1} on the basis; metric-orthogonal.
Eigen::MatrixXd Ad_at(const QuadraticLieAlgebra& A, const GroupPoint& g);

// phi(u,v,w) = <[u,v], w> / 2
double cartan_form(const QuadraticLieAlgebra& A, const Eigen::VectorXd& u,
                   const Eigen::VectorXd& v, const Eigen::VectorXd& w);

// Section u^L + v^R with 1-form part theta^L_p + theta^R_q (constant
// coefficients); e_a = (a^L - a^R, (a^L + a^R)/2) under the metric duality.
struct InvariantSection {
    Eigen::VectorXd u, v, p, q;
};

InvariantSection e_section(const QuadraticLieAlgebra& A, const Eigen::VectorXd& a);

// Value of a section at a point, in the left-trivialized frame: vec holds
// the vector components, form the covector components xi(E_c^L).
struct SectionValue {
    Eigen::VectorXd vec;
    Eigen::VectorXd form;
    double norm() const { return std::sqrt(vec.squaredNorm() + form.squaredNorm()); }
    SectionValue operator-(const SectionValue& o) const { return {vec - o.vec, form - o.form}; }
};

SectionValue evaluate_at(const QuadraticLieAlgebra& A, const GroupPoint& g,
                         const InvariantSection& s);

// Pairing assembled coefficient-first so that structural cancellations
// (isotropy of the e_a family) yield an exact 0.0 before any Ad numerics.
double pairing_invariant(const QuadraticLieAlgebra& A, const GroupPoint& g,
                         const InvariantSection& s1, const InvariantSection& s2);

// E_{t phi} bracket of invariant sections evaluated at g by the exact
// invariant-calculus rules (t = twist_sign).
SectionValue courant_bracket_at(const QuadraticLieAlgebra& A, const GroupPoint& g,
                                const InvariantSection& s1, const InvariantSection& s2,
                                double twist_sign);

// The same bracket assembled from central finite differences in the
// exponential chart at g; the universal oracle for the invariant rules.
SectionValue courant_bracket_fd(const QuadraticLieAlgebra& A, const GroupPoint& g,
                                const InvariantSection& s1, const InvariantSection& s2,
                                double twist_sign, double step = 1e-5);

// 2 (Ad_g - 1)(Ad_g + 1)^{-1} on the left-trivialized tangent space; the
// map alpha -> pi_tilde_at(..) * metric^{-1} * alpha sends covector to
// vector components. Throws SingularError where Ad_g + 1 is not invertible.
Eigen::MatrixXd pi_tilde_at(const QuadraticLieAlgebra& A, const GroupPoint& g,
                            double cond_limit = 1e8);

// Columns span the conjugacy-class tangent Im(1 - Ad_{g^{-1}}) at g.
Eigen::MatrixXd leaf_tangent_at(const QuadraticLieAlgebra& A, const GroupPoint& g,
                                double sv_threshold = 1e-9);

struct QuasiPoissonDefect {
    double fitted = 0.0;       // coefficient of the Cartan trivector
    double residual_rel = 0.0; // off-line component relative to |cartan|
    double defect_norm = 0.0;  // |[pi1,pi1]/2|
};

// pi1 is the antisymmetric part of Ad_g (left-trivialized); the Schouten
// square is estimated by finite differences in the exponential chart and
// projected on the metric-raised Cartan trivector.
QuasiPoissonDefect quasi_poisson_defect(const QuadraticLieAlgebra& A,
                                        const GroupPoint& g, double fd_step = 1e-4);

} // namespace tpk

#endif
