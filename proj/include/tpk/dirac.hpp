#ifndef TPK_DIRAC_HPP
#define TPK_DIRAC_HPP

#include <Eigen/Dense>
#include <optional>

#include "tpk/courant.hpp"

namespace tpk {

// Frozen normalization constants tying together the Schouten conventions,
// sharp(), raise_all() and the twisted Jacobi identity:
//
//   ([pi,pi] - CALIB * ^3pi~(phi))(df,dg,dh)
//       = CALIB * ( {{f,g},h} + c.p. + phi(H_f,H_g,H_h) )
//
// identically in pi, phi, f, g, h, with CALIB = -2. The cochain term of
// d_{pi,phi} carries CALIB/2 = -1 so that d_{pi,phi}^2 = 0 on phi-Poisson
// structures.
inline constexpr int kCalibration = -2;

// Graph of pi~: T*M -> TM inside E_phi.
struct BivectorGraph {
    Graded pi;
    Graded phi;
    BivectorGraph(Graded pi_, Graded phi_);
};

// Graph of omega~: TM -> T*M inside E_phi.
struct TwoFormGraph {
    Graded omega;
    Graded phi;
    TwoFormGraph(Graded omega_, Graded phi_);
};

struct DefectResult {
    bool ok;
    Graded defect;
};

// [pi,pi] - CALIB * ^3pi~(phi) == 0  (the phi-Poisson condition).
DefectResult is_phi_poisson(const Graded& pi, const Graded& phi);

// d(omega) - phi == 0 (the phi-closed condition; note that under the
// bracket conventions fixed here, the graph of omega is closed in E_{-phi},
// see graph_closed_under_bracket).
DefectResult is_phi_closed(const Graded& omega, const Graded& phi);

struct GraphWitness {
    CourantSection s1, s2;
    CourantSection residual; // component of the bracket off the graph
};

struct GraphClosureReport {
    bool closed = true;
    int trials = 0;
    uint64_t seed = 0;
    std::optional<GraphWitness> witness;
};

GraphClosureReport graph_closed_under_bracket(const BivectorGraph& L, int trials,
                                              uint64_t seed);
GraphClosureReport graph_closed_under_bracket(const TwoFormGraph& L, int trials,
                                              uint64_t seed);

// {f,g} = pi(df,dg)
RationalFunction poisson_bracket(const Graded& pi, const RationalFunction& f,
                                 const RationalFunction& g);

// H_f = {., f} = -pi~(df)
Graded hamiltonian_field(const Graded& pi, const RationalFunction& f);

// {{f,g},h} + c.p. + phi(H_f,H_g,H_h)
RationalFunction twisted_jacobiator(const Graded& pi, const Graded& phi,
                                    const RationalFunction& f, const RationalFunction& g,
                                    const RationalFunction& h);

// L_{pi~ w1} w2 - L_{pi~ w2} w1 - d(pi(w1,w2)) + phi(pi~ w1, pi~ w2, .)
Graded cotangent_bracket(const Graded& pi, const Graded& phi, const Graded& w1,
                         const Graded& w2);

// H_{{f,g}} + [H_f,H_g] - pi~(phi(H_f,H_g,.)); zero for phi-Poisson pi.
// (The sign of the pi~ term is the one forced by the frozen calibration.)
Graded hamiltonian_anomaly(const Graded& pi, const Graded& phi,
                           const RationalFunction& f, const RationalFunction& g);

// d_{pi,phi} T = [pi, T] + (CALIB/2) * (^2pi~ (x) 1)(phi) . T
Graded d_pi_phi(const Graded& pi, const Graded& phi, const Graded& T);

// (L_{H_f} pi)(w1,w2) - (CALIB/2) * phi(pi~ w1, pi~ w2, H_f); zero for
// phi-Poisson pi.
RationalFunction lhf_pi_identity(const Graded& pi, const Graded& phi,
                                 const RationalFunction& f, const Graded& w1,
                                 const Graded& w2);

struct GaugeResult {
    bool ok = false;        // a bivector was produced
    bool singular = false;  // det identically zero: graph is still Dirac
    RationalFunction det;   // det(1 + B~ pi~), always filled in
    std::optional<Graded> pi_prime;
};

// pi~' = pi~ (1 + B~ pi~)^{-1} via the exact adjugate formula.
GaugeResult gauge_bivector(const Graded& pi, const Graded& B);

struct LeafData {
    std::vector<double> point;
    int rank = 0;
    Eigen::MatrixXd leaf_basis;    // n x rank, columns span Im pi~ at the point
    Eigen::MatrixXd leaf_two_form; // rank x rank, antisymmetric, nondegenerate
};

// Pointwise twisted-symplectic leaf data: rank and image of pi~ evaluated at
// the point, plus the inverse 2-form on the image (its value on (pi~ a, pi~ b)
// is -pi(a, b), the sign fixed by the frozen conventions).
LeafData leaf_data_at(const Graded& pi, const Graded& phi,
                      std::span<const double> point, double sv_threshold = 1e-10);

} // namespace tpk

#endif
