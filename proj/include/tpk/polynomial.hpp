#ifndef TPK_POLYNOMIAL_HPP
#define TPK_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tpk/rational.hpp"

namespace tpk {

// Total-degree guardrail against expression blowup. Multiplications whose
// result would exceed the cap throw DegreeCapExceeded.
int degree_cap();
void set_degree_cap(int cap);

// Exact multivariate polynomial over the rationals. Terms are stored sparsely
// on exponent vectors of length dim(); zero coefficients are never stored.
class Polynomial {
  public:
    using Exponents = std::vector<uint32_t>;
    using TermMap = std::map<Exponents, Rational>;

    explicit Polynomial(int dim) : dim_(dim) {}

    static Polynomial constant(int dim, Rational c);
    static Polynomial variable(int dim, int i); // x_i, zero-based
    static Polynomial monomial(int dim, Exponents exp, Rational c);

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // 0 for the zero polynomial
    int total_degree() const;        // 0 for the zero polynomial

    void add_term(const Exponents& exp, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Rational& c);

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial derivative(int i) const;
    Polynomial pow(unsigned e) const;

    // Replaces every x_var^(2k+r) by value^k * x_var^r.
    Polynomial reduce_square(int var, const Polynomial& value) const;

    double evaluate(std::span<const double> point) const;

    // Human-readable form for reports and witnesses, e.g. "3*x1^2*x2 - 1/2".
    std::string str() const;

    // Greatest common divisor of all coefficients (>= 0); 0 for zero poly.
    Rational content() const;

  private:
    void check_same_dim(const Polynomial& o) const;
    int dim_;
    TermMap terms_;
};

} // namespace tpk

#endif
