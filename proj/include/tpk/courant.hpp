#ifndef TPK_COURANT_HPP
#define TPK_COURANT_HPP

#include <array>
#include <optional>
#include <string>

#include "tpk/graded.hpp"
#include "tpk/linmap.hpp"

namespace tpk {

// Element (X, xi) of TM + T*M.
struct CourantSection {
    Graded X;  // vector field
    Graded xi; // 1-form

    static CourantSection make(Graded X, Graded xi);
    static CourantSection zero(int dim);

    int dim() const { return X.dim(); }
    bool is_zero() const { return X.is_zero() && xi.is_zero(); }

    CourantSection operator-() const { return {-X, -xi}; }
    friend CourantSection operator+(const CourantSection& a, const CourantSection& b) {
        return {a.X + b.X, a.xi + b.xi};
    }
    friend CourantSection operator-(const CourantSection& a, const CourantSection& b) {
        return {a.X - b.X, a.xi - b.xi};
    }
    friend CourantSection operator*(const CourantSection& a, const RationalFunction& f) {
        return {a.X * f, a.xi * f};
    }
};

// TM + T*M with the bracket twisted by a closed 3-form phi.
class TwistedCourantAlgebroid {
  public:
    TwistedCourantAlgebroid(int dim, Graded phi);

    // Skips the d(phi) = 0 check; for exercising the failure mode.
    static TwistedCourantAlgebroid unchecked(int dim, Graded phi);

    int dim() const { return dim_; }
    const Graded& phi() const { return phi_; }

  private:
    struct unchecked_t {};
    TwistedCourantAlgebroid(unchecked_t, int dim, Graded phi);
    int dim_;
    Graded phi_;
};

// ((X1,xi1),(X2,xi2)) = xi1(X2) + xi2(X1)
RationalFunction pairing(const CourantSection& e1, const CourantSection& e2);

Graded anchor(const CourantSection& e);

// ([X1,X2], L_{X1} xi2 - i_{X2} d xi1 + phi(X1,X2,.))
CourantSection bracket(const TwistedCourantAlgebroid& E, const CourantSection& e1,
                       const CourantSection& e2);

// D f = (0, df/2); (D f, e) = rho(e) f / 2 for every section e.
CourantSection D_operator(const TwistedCourantAlgebroid& E, const RationalFunction& f);

struct AxiomCheck {
    int axiom = 0;
    bool pass = false;
    std::string description;
    std::vector<Graded> residual; // empty or zero objects when passing
    std::string residual_summary() const;
};

struct AxiomReport {
    std::array<AxiomCheck, 5> checks;
    bool all_pass() const;
};

// Evaluates the five Courant algebroid axioms symbolically on the given
// sections; each residual is exactly zero when d(phi) = 0.
AxiomReport verify_axioms(const TwistedCourantAlgebroid& E, const CourantSection& e1,
                          const CourantSection& e2, const CourantSection& e3,
                          const RationalFunction& f);

// tau_B(X, xi) = (X, xi + B~(X))
CourantSection tau_B(const CourantSection& e, const Graded& B);

// tau_B([e1,e2]_{E_phi}) - [tau_B e1, tau_B e2]_{E_{phi-dB}}; identically zero.
CourantSection verify_gauge_morphism(const Graded& phi, const Graded& B,
                                     const CourantSection& e1, const CourantSection& e2);

} // namespace tpk

#endif
