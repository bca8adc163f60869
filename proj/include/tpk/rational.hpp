#ifndef TPK_RATIONAL_HPP
#define TPK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "tpk/errors.hpp"

namespace tpk {

// Exact rational number, always canonical: gcd(num, den) = 1, den > 0.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { canonicalize(); }
    explicit Rational(mpq_class v) : v_(std::move(v)) { canonicalize(); }

    // Accepts "p", "-p" and "p/q" with arbitrary-precision decimal integers.
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    double to_double() const { return v_.get_d(); }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

  private:
    void canonicalize() { v_.canonicalize(); }
    mpq_class v_;
};

Rational gcd(const Rational& a, const Rational& b);

} // namespace tpk

#endif
