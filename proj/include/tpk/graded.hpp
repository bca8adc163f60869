#ifndef TPK_GRADED_HPP
#define TPK_GRADED_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tpk/ratfun.hpp"

namespace tpk {

enum class Kind { multivector, form };

// Homogeneous graded antisymmetric tensor on R^n with rational-function
// coefficients: a multivector field on the basis dx_{i1}^..^dx_{ik} duals
// or a differential form. Index tuples are strictly increasing, zero-based.
//
// Evaluation convention: (dx_{i1}^..^dx_{ik})(e_{j1},..,e_{jk}) =
// det(delta_{i a, j b}), and symmetrically for multivectors on covectors.
class Graded {
  public:
    using Indices = std::vector<int>;
    using TermMap = std::map<Indices, RationalFunction>;

    Graded(Kind kind, int dim, int degree);

    static Graded function(Kind kind, int dim, RationalFunction f);
    static Graded basis(Kind kind, int dim, int i); // dx_i or d/dx_i

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Coefficient on a (not necessarily sorted) index tuple, with sign.
    RationalFunction coefficient(Indices idx) const;
    void add_term(Indices idx, const RationalFunction& c);

    RationalFunction scalar() const; // degree-0 content

    Graded operator-() const;
    Graded& operator+=(const Graded& o);
    Graded& operator-=(const Graded& o);
    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
    friend Graded operator*(const Graded& a, const RationalFunction& c);
    friend Graded operator*(const Graded& a, const Rational& c);

    // Structural equality of the exact representation (num/den pairs as
    // stored); for value equality compare the difference against zero or
    // use value_equal.
    friend bool operator==(const Graded& a, const Graded& b);
    bool value_equal(const Graded& o) const;

    std::string str() const;

  private:
    Kind kind_;
    int dim_;
    int degree_;
    TermMap terms_;
};

Graded wedge(const Graded& a, const Graded& b);

// Full contraction of a form with a multivector of equal degree.
RationalFunction full_contract(const Graded& form, const Graded& mv);

// i_{e_j} on forms / i_{dx_j} on multivectors (single basis contraction).
Graded contract_basis(const Graded& a, int j);

// Interior product i_A B with A, B of opposite kinds, deg A <= deg B,
// extended from (i_X w)(Y1,..) = w(X, Y1,..) by i_{X^Y} = i_Y o i_X.
Graded interior_product(const Graded& a, const Graded& b);

// Evaluation w(V1,..,Vk) of a degree-k object on k arguments of the
// opposite kind and degree one.
RationalFunction evaluate_on(const Graded& w, std::span<const Graded> args);

Graded de_rham_d(const Graded& form);

// Cartan formula on forms; Schouten bracket [X, T] on multivectors.
Graded lie_derivative(const Graded& X, const Graded& T);

// Schouten-Nijenhuis bracket with the conventions [X, f] = X(f),
// [X, Y] = vector-field commutator, [P, Q^R] = [P,Q]^R + (-1)^((p-1)q) Q^[P,R]
// and [P,Q] = -(-1)^((p-1)(q-1)) [Q,P].
Graded schouten_bracket(const Graded& P, const Graded& Q);

// Numeric evaluation of every coefficient at a point.
std::map<Graded::Indices, double> evaluate_terms(const Graded& g,
                                                 std::span<const double> point,
                                                 double pole_eps = 1e-12);

} // namespace tpk

#endif
