#include "tpk/rational.hpp"

namespace tpk {

Rational Rational::parse(const std::string& s) {
    if (s.empty())
        throw InputError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(mpq_class(mpz_class(s)));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (sgn(den) == 0)
            throw InputError("zero denominator in rational literal '" + s + "'");
        return Rational(mpq_class(num, den));
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational gcd(const Rational& a, const Rational& b) {
    if (a.is_zero())
        return Rational(mpq_class(abs(b.raw())));
    if (b.is_zero())
        return Rational(mpq_class(abs(a.raw())));
    // gcd(p/q, r/s) = gcd(p, r) / lcm(q, s)
    mpz_class num = gcd(a.numerator(), b.numerator());
    mpz_class den = lcm(a.denominator(), b.denominator());
    return Rational(mpq_class(num, den));
}

} // namespace tpk
