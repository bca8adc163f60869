#ifndef TPK_LINMAP_HPP
#define TPK_LINMAP_HPP

#include <vector>

#include "tpk/graded.hpp"

namespace tpk {

enum class MapTag { forms_to_vectors, vectors_to_forms, vectors_to_vectors };

// Pointwise linear bundle map with exact rational-function entries.
// apply() contracts against degree-1 objects: out[r] = sum_c M[r][c] in[c].
class LinearMap {
  public:
    LinearMap(MapTag tag, int dim);

    MapTag tag() const { return tag_; }
    int dim() const { return dim_; }
    const RationalFunction& at(int row, int col) const { return m_[row][col]; }
    RationalFunction& at(int row, int col) { return m_[row][col]; }

    Kind domain_kind() const;
    Kind codomain_kind() const;

    Graded apply(const Graded& v) const;

    static LinearMap identity(int dim); // vectors -> vectors
    friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
    friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
    // Composition a(b(.)); tags must chain.
    friend LinearMap compose(const LinearMap& a, const LinearMap& b);

    bool is_antisymmetric() const; // entrywise M^T = -M

    // Exact determinant / adjugate (endomorphisms only).
    RationalFunction determinant() const;
    LinearMap adjugate() const;

  private:
    MapTag tag_;
    int dim_;
    std::vector<std::vector<RationalFunction>> m_;
};

// Index-raising map pi~ of a bivector: sharp(pi)(a)(b) = pi(a, b).
LinearMap sharp(const Graded& pi);

// Index-lowering map B~ of a 2-form: flat(B)(X)(Y) = B(X, Y).
LinearMap flat(const Graded& B);

// (^k pi~)(phi): value on (a_1,..,a_k) is phi(pi~ a_1,.., pi~ a_k).
Graded raise_all(const Graded& pi, const Graded& phi);

// (^2 pi~ (x) 1)(phi) for a 3-form phi, stored as (bivector, 1-form) pairs;
// contraction of the 1-form parts against a vector X yields the bivector
// (w1, w2) -> phi(pi~ w1, pi~ w2, X).
std::vector<std::pair<Graded, Graded>> raise_two_of_three(const Graded& pi,
                                                          const Graded& phi);

} // namespace tpk

#endif
