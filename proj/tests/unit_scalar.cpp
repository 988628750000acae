#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "malp/parse.hpp"
#include "malp/polynomial.hpp"
#include "malp/ratfunc.hpp"
#include "malp/rational.hpp"

using namespace malp;

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(7, 5) / Rational(7, 5) == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(-5, 3) < Rational(-1, 2));
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
    CHECK(Rational(-5, 3).sign() == -1);
}

TEST_CASE("rational parse, powers, exact square roots") {
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/0"));

    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));

    CHECK(Rational(49, 9).sqrt() == Rational(7, 3));
    CHECK(Rational(0).sqrt() == Rational(0));
    CHECK(!Rational(2).sqrt());
    CHECK(!Rational(-4).sqrt());
    CHECK(!Rational(4, 7).sqrt());
}

TEST_CASE("polynomial arithmetic and derivatives") {
    std::vector<std::string> vs{"x", "y"};
    Polynomial x = Polynomial::variable(vs, "x");
    Polynomial y = Polynomial::variable(vs, "y");
    Polynomial one = Polynomial::constant(vs, Rational(1));

    Polynomial p = (x + y).pow(2);
    Polynomial q = x * x + x * y * Rational(2) + y * y;
    CHECK(p == q);

    CHECK(p.diff("x") == (x + y) * Rational(2));
    CHECK((x * x * y).diff("y") == x * x);
    CHECK(one.diff("x").is_zero());

    CHECK(p.eval({Rational(1), Rational(2)}) == Rational(9));
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in("x") == 2);
    CHECK(p.depends_on("y"));
    CHECK(!x.depends_on("y"));
}

TEST_CASE("polynomial content carries the lex-leading sign") {
    std::vector<std::string> vs{"x", "y"};
    Polynomial x = Polynomial::variable(vs, "x");
    Polynomial y = Polynomial::variable(vs, "y");

    CHECK((x * Rational(4) + y * Rational(6)).content() == Rational(2));
    CHECK((x * Rational(-4) - y * Rational(6)).content() == Rational(-2));
    CHECK((x * Rational(1, 2) + y * Rational(1, 3)).content() == Rational(1, 6));
    CHECK(Polynomial::constant(vs, Rational(0)).content() == Rational(0));
}

TEST_CASE("rational function normalization keeps the denominator primitive") {
    std::vector<std::string> vs{"x"};
    Polynomial x = Polynomial::variable(vs, "x");
    Polynomial one = Polynomial::constant(vs, Rational(1));

    RationalFunction f(x, x * Rational(2) + one * Rational(2));
    /* denominator content 2 moves into the numerator */
    CHECK(f.den() == x + one);
    CHECK(f.num() == x * Rational(1, 2));

    RationalFunction g(x, -x + one);
    /* leading coefficient of the denominator is made positive */
    CHECK(g.den() == x - one);
    CHECK(g.num() == -x);

    RationalFunction z(Polynomial::constant(vs, Rational(0)), x);
    CHECK(z.is_zero());
    CHECK(z.den() == one);
}

TEST_CASE("rational function arithmetic against cross-multiplied oracles") {
    std::vector<std::string> vs{"x"};
    Polynomial x = Polynomial::variable(vs, "x");
    Polynomial one = Polynomial::constant(vs, Rational(1));

    RationalFunction a(one, x);
    RationalFunction b(one, x + one);
    RationalFunction sum = a + b;
    /* 1/x + 1/(x+1) = (2x+1)/(x^2+x) */
    CHECK(equivalent(sum, RationalFunction(x * Rational(2) + one, x * x + x)));

    RationalFunction prod = a * b;
    CHECK(equivalent(prod, RationalFunction(one, x * x + x)));

    RationalFunction quot = a / b;
    CHECK(equivalent(quot, RationalFunction(x + one, x)));

    /* one-sided exact division cancels on construction */
    CHECK(RationalFunction(x * x - one, x - one) == RationalFunction(x + one, one));
    CHECK(RationalFunction(x + one, x * x - one) == RationalFunction(one, x - one));

    /* structural equality stays finer than equivalence when neither side
     * divides the other: (x^2-1)/(x+1)^2 versus (x-1)/(x+1) */
    RationalFunction unreduced(x * x - one, x * x + x * Rational(2) + one);
    RationalFunction reduced(x - one, x + one);
    CHECK(equivalent(unreduced, reduced));
    CHECK(!(unreduced == reduced));
}

TEST_CASE("rational function derivative and variable dependence") {
    std::vector<std::string> vs{"x", "y"};
    Polynomial x = Polynomial::variable(vs, "x");
    Polynomial y = Polynomial::variable(vs, "y");
    Polynomial one = Polynomial::constant(vs, Rational(1));

    RationalFunction f(one, x);
    RationalFunction fx = f.diff("x");
    CHECK(equivalent(fx, RationalFunction(-one, x * x)));

    /* (x y)/y does not depend on y even though y appears */
    RationalFunction g(x * y, y);
    CHECK(!g.depends_on("y"));
    CHECK(g.depends_on("x"));

    RationalFunction h(x + y, x - y);
    CHECK(h.depends_on("y"));

    CHECK(f.eval({Rational(2), Rational(0)}) == Rational(1, 2));
    CHECK(!f.eval({Rational(0), Rational(0)}));
}

TEST_CASE("substitution composes exactly and rejects poles") {
    std::vector<std::string> vs{"x", "y"};
    std::vector<std::string> ts{"u", "v"};
    Polynomial x = Polynomial::variable(vs, "x");
    Polynomial y = Polynomial::variable(vs, "y");
    Polynomial u = Polynomial::variable(ts, "u");
    Polynomial v = Polynomial::variable(ts, "v");
    Polynomial tone = Polynomial::constant(ts, Rational(1));

    std::map<std::string, RationalFunction> sub;
    sub["x"] = RationalFunction(u + v);
    sub["y"] = RationalFunction(tone, v);

    /* (x + y)|_{x = u+v, y = 1/v} = (uv + v^2 + 1)/v */
    RationalFunction out = substitute(x + y, ts, sub);
    CHECK(equivalent(out, RationalFunction(u * v + v * v + tone, v)));

    RationalFunction f(x, y);
    RationalFunction g = substitute(f, ts, sub);
    CHECK(equivalent(g, RationalFunction(u * v + v * v, tone)));

    std::map<std::string, RationalFunction> bad;
    bad["x"] = RationalFunction(u);
    CHECK_THROWS_AS(substitute(x + y, ts, bad), std::invalid_argument);

    /* composed denominator identically zero */
    RationalFunction pole(Polynomial::constant(vs, Rational(1)), x);
    std::map<std::string, RationalFunction> zero_sub;
    zero_sub["x"] = RationalFunction(Polynomial::constant(ts, Rational(0)));
    zero_sub["y"] = RationalFunction(v);
    CHECK_THROWS_AS(substitute(pole, ts, zero_sub), std::domain_error);
}

TEST_CASE("scalar parser round trips") {
    std::vector<std::string> vs{"x", "y", "p1"};
    auto rt = [&](const std::string& s) {
        RationalFunction f = parse_scalar(vs, s);
        RationalFunction g = parse_scalar(vs, f.str());
        CHECK(equivalent(f, g));
        return f;
    };

    CHECK(equivalent(rt("3*x^2 - 1/2*y + 4"),
                     rt("4 + 3*x*x - y*1/2")));
    CHECK(rt("(x + y)^2").num() == parse_poly(vs, "x^2 + 2*x*y + y^2"));
    CHECK(equivalent(rt("(x : y)"), RationalFunction(parse_poly(vs, "x"), parse_poly(vs, "y"))));
    CHECK(equivalent(rt("(1 : 1 + p1^2)"),
                     RationalFunction(parse_poly(vs, "1"), parse_poly(vs, "1 + p1^2"))));
    CHECK(equivalent(rt("-x + 2"), rt("2 - x")));
    /* nested grouped division */
    CHECK(equivalent(rt("((x : y) + 1)*y"), rt("x + y")));

    CHECK_THROWS(parse_scalar(vs, "z + 1"));
    CHECK_THROWS(parse_scalar(vs, "x +"));
    CHECK_THROWS(parse_scalar(vs, "x ^ y"));
    CHECK_THROWS(parse_poly(vs, "(x : y)"));
}
