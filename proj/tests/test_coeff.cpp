#include <doctest.h>

#include "helpers.hpp"
#include "tpk/errors.hpp"
#include "tpk/json_io.hpp"
#include "tpk/random_gen.hpp"

using namespace tpk;
using namespace tpk::testing;

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("3/2").str() == "3/2");
    CHECK(Rational::parse("-4/2").str() == "-2");
    CHECK(Rational::parse("6/-4").str() == "-3/2");
    CHECK(Rational::parse("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("abc"), InputError);
}

TEST_CASE("polynomial arithmetic on the spec examples") {
    Polynomial x1 = X(1, 0);
    CHECK((x1 + x1) == x1 * Rational(2));

    Polynomial a = X(2, 0) + X(2, 1);
    Polynomial b = X(2, 0) - X(2, 1);
    CHECK(a * b == X(2, 0) * X(2, 0) - X(2, 1) * X(2, 1));

    Polynomial zero(2);
    CHECK((a * zero).is_zero());
    CHECK((a * zero).terms().empty());

    CHECK_THROWS_AS(a + X(3, 0), DimensionMismatch);
}

TEST_CASE("partial derivatives") {
    // d/dx1 (x1^2 x2) = 2 x1 x2
    Polynomial p = X(2, 0) * X(2, 0) * X(2, 1);
    CHECK(p.derivative(0) == X(2, 0) * X(2, 1) * Rational(2));

    CHECK(Polynomial::constant(2, Rational(5)).derivative(1).is_zero());

    Polynomial r2(3);
    for (int i = 0; i < 3; ++i)
        r2 += X(3, i) * X(3, i);
    CHECK(r2.derivative(2) == X(3, 2) * Rational(2));

    CHECK_THROWS_AS(p.derivative(5), IndexError);
}

TEST_CASE("derivatives commute on random polynomials") {
    Gen gen(42);
    for (int t = 0; t < 30; ++t) {
        Polynomial p = gen.polynomial(4, 5);
        int i = static_cast<int>(gen.pick(4));
        int j = static_cast<int>(gen.pick(4));
        CHECK(p.derivative(i).derivative(j) == p.derivative(j).derivative(i));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    Gen gen(7);
    for (int t = 0; t < 25; ++t) {
        Polynomial a = gen.polynomial(3, 3);
        Polynomial b = gen.polynomial(3, 3);
        Polynomial c = gen.polynomial(3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("rational function equality is cross-multiplication") {
    // x1/1 == x1^2/x1
    RationalFunction a(X(1, 0));
    RationalFunction b(X(1, 0) * X(1, 0), X(1, 0));
    CHECK(a == b);

    // 1/(1+x1) == (1-x1)/(1-x1^2)
    Polynomial one = Polynomial::constant(1, Rational(1));
    RationalFunction c(one, one + X(1, 0));
    RationalFunction d(one - X(1, 0), one - X(1, 0) * X(1, 0));
    CHECK(c == d);

    CHECK_FALSE(RationalFunction(X(2, 0)) == RationalFunction(X(2, 1)));
}

TEST_CASE("ratfun equality is an equivalence relation") {
    Gen gen(11);
    for (int t = 0; t < 15; ++t) {
        Polynomial n = gen.polynomial(2, 2);
        Polynomial d = gen.polynomial(2, 2);
        Polynomial s = gen.polynomial(2, 1);
        RationalFunction a(n, d);
        RationalFunction b(n * s, d * s); // same value, different representative
        RationalFunction c(n * d, d * d);
        CHECK(a == a);
        CHECK(b == a);
        CHECK(a == b);
        CHECK((a == b && b == c ? a == c : true));
    }
}

TEST_CASE("rational function arithmetic stays exact") {
    Gen gen(13);
    for (int t = 0; t < 10; ++t) {
        RationalFunction a(gen.polynomial(2, 2), gen.polynomial(2, 2));
        RationalFunction b(gen.polynomial(2, 2), gen.polynomial(2, 2));
        CHECK(a + b - b == a);
        if (!b.is_zero())
            CHECK((a * b) / b == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("quotient-rule derivative") {
    // d/dx (x^2 - 1)/(x - 1) = d/dx (x + 1) = 1 as a value identity
    Polynomial one = Polynomial::constant(1, Rational(1));
    Polynomial x = X(1, 0);
    RationalFunction f(x * x - one, x - one);
    CHECK(f.derivative(0) == RationalFunction(one));
}

TEST_CASE("evaluation and the singular sphere") {
    // 1/(1 + lambda r^2) at (0,0,1) with lambda = -1 sits on the sphere
    Polynomial one = Polynomial::constant(3, Rational(1));
    Polynomial r2(3);
    for (int i = 0; i < 3; ++i)
        r2 += X(3, i) * X(3, i);
    RationalFunction f(one, one - r2);
    double pt[3] = {0.0, 0.0, 1.0};
    CHECK_THROWS_AS(f.evaluate(pt), PoleError);

    RationalFunction g(X(2, 0) * X(2, 1));
    double pq[2] = {2.0, 3.0};
    CHECK(g.evaluate(pq) == doctest::Approx(6.0));

    Polynomial x = X(1, 0);
    Polynomial one1 = Polynomial::constant(1, Rational(1));
    RationalFunction h(x * x - one1, x - one1);
    double p1[1] = {2.0};
    CHECK(h.evaluate(p1) == doctest::Approx(3.0));
}

TEST_CASE("degree guardrail") {
    int old_cap = degree_cap();
    set_degree_cap(16);
    Polynomial x = X(1, 0);
    Polynomial p = x.pow(10);
    CHECK_THROWS_AS(p * p, DegreeCapExceeded);
    set_degree_cap(old_cap);
    CHECK_NOTHROW(p * p);
}

TEST_CASE("reduce_square substitutes a squared variable") {
    // x3^2 -> 1 - x1^2 - x2^2 turns r^2 - 1 into 0
    Polynomial r2(3);
    for (int i = 0; i < 3; ++i)
        r2 += X(3, i) * X(3, i);
    Polynomial one = Polynomial::constant(3, Rational(1));
    Polynomial target = one - X(3, 0) * X(3, 0) - X(3, 1) * X(3, 1);
    CHECK((r2 - one).reduce_square(2, target).is_zero());
}

TEST_CASE("JSON round trip for polynomials and rational functions") {
    Gen gen(17);
    for (int t = 0; t < 10; ++t) {
        Polynomial p = gen.polynomial(3, 3);
        CHECK(polynomial_from_json(to_json(p)) == p);
        RationalFunction f(gen.polynomial(3, 2), gen.polynomial(3, 2));
        CHECK(ratfun_from_json(to_json(f)) == f);
    }
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json{{"dim", 2}}), InputError);
}
