#include "latcurve/poly2.hpp"

#include <doctest.h>

#include <random>

using namespace latcurve;

namespace {

BivariatePolynomial P(const char* s) { return parse_polynomial(s); }

BivariatePolynomial random_poly(std::mt19937_64& rng, unsigned deg, int span)
{
    BivariatePolynomial out;
    for (unsigned i = 0; i <= deg; ++i)
        for (unsigned j = 0; i + j <= deg; ++j)
            if (rng() % 2) out = out + BivariatePolynomial::monomial({i, j}, static_cast<int>(rng() % (2 * span + 1)) - span);
    return out;
}

} // namespace

TEST_CASE("parsing")
{
    const auto e = P("y^2 - x^3 - 2*x - 3");
    CHECK(e.degree() == 3);
    CHECK(e.term_count() == 4);

    const auto h = P("x*y - 12");
    CHECK(h.term_count() == 2);
    CHECK(h.coefficient({1, 1}) == 1);
    CHECK(h.coefficient({0, 0}) == -12);

    const auto q = P("(1/2)*x^2");
    CHECK(q.term_count() == 1);
    CHECK(q.coefficient({2, 0}) == Rational(1, 2));

    CHECK(P("3/4 * (x + y)^2") == P("(3/4)*x^2 + (3/2)*x*y + (3/4)*y^2"));
}

TEST_CASE("parse errors carry a position")
{
    CHECK_THROWS_WITH_AS(P("x + z"), "syntax error at position 4: unknown variable 'z' (only x and y are allowed)", InputError);
    CHECK_THROWS_AS(P("x +"), InputError);
    CHECK_THROWS_AS(P("(x + y"), InputError);
    CHECK_THROWS_AS(P(""), InputError);
    CHECK_THROWS_AS(P("x^y"), InputError);
    CHECK_THROWS_AS(P("1/0"), InputError);
}

TEST_CASE("printing round-trips through the parser")
{
    CHECK(P("y^2 - x^3").to_string() == "-x^3 + y^2");
    CHECK(P("x*y - 12").to_string() == "x*y - 12");
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        auto p = random_poly(rng, 1 + rng() % 4, 6).scaled(Rational(1, 1 + static_cast<long>(rng() % 4)));
        const auto text = p.to_string();
        CHECK(P(text.c_str()) == p);
        CHECK(P(text.c_str()).to_string() == text);
    }
}

TEST_CASE("evaluation")
{
    CHECK(P("x^2 + y^2 - 25").evaluate(3, 4) == 0);
    CHECK(P("y^2 - x^3").evaluate(1, 2) == 3);
    CHECK(P("x*y - 12").evaluate(3, 4) == 0);
}

TEST_CASE("partial derivatives")
{
    CHECK(P("y^2 - x^3").partial(Variable::y) == P("2*y"));
    CHECK(P("y^2 - x^3").partial(Variable::x) == P("-3*x^2"));
    CHECK(P("7").partial(Variable::x).is_zero());

    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
        const auto p = random_poly(rng, 5, 9);
        CHECK(p.partial(Variable::x).partial(Variable::y) == p.partial(Variable::y).partial(Variable::x));
    }
}

TEST_CASE("resultant eliminating y")
{
    CHECK(resultant_eliminating_y(P("x^2 + y^2 - 25"), P("y - 3")) == UnivariatePolynomial({-16, 0, 1}));
    const auto r = resultant_eliminating_y(P("x^2 + y^2 - 25"), P("x - y"));
    REQUIRE(r.degree() == 2);
    CHECK(r.coeff(2) * -25 == r.coeff(0) * 2);
    CHECK(r.coeff(1) == 0);
    CHECK(resultant_eliminating_y(P("y - x^2"), P("y - x^2")).is_zero());
    CHECK_THROWS_WITH(resultant_eliminating_y(P("x^2 - 1"), P("y")), "resultant requires positive y-degree");
}

TEST_CASE("resultant vanishes at common zeros")
{
    std::mt19937_64 rng(8);
    int found = 0;
    for (int t = 0; t < 200; ++t) {
        const long x0 = static_cast<long>(rng() % 7) - 3, y0 = static_cast<long>(rng() % 7) - 3;
        auto p = random_poly(rng, 1 + rng() % 3, 4);
        auto q = random_poly(rng, 1 + rng() % 3, 4);
        p = p - BivariatePolynomial(p.evaluate(x0, y0));
        q = q - BivariatePolynomial(q.evaluate(x0, y0));
        if (p.degree_in(Variable::y) < 1 || q.degree_in(Variable::y) < 1) continue;
        ++found;
        CHECK(resultant_eliminating_y(p, q).eval(x0) == 0);
    }
    CHECK(found > 100);
}

TEST_CASE("divisibility")
{
    CHECK(divides(P("y - x"), P("y^2 - x^2")));
    CHECK_FALSE(divides(P("y - x"), P("y^2 + x^2")));
    CHECK_FALSE(divides(P("x^2 + y^2 - 25"), P("y - 3")));
    CHECK_THROWS_AS(divides(BivariatePolynomial(), P("x")), InputError);

    // A multiple of F vanishes wherever F does.
    std::mt19937_64 rng(12);
    for (int t = 0; t < 50; ++t) {
        auto a = random_poly(rng, 3, 5);
        BivariatePolynomial ax; // keep only the x-part so F = y - a(x) is linear in y
        for (const auto& [e, c] : a.terms())
            if (e.j2 == 0) ax = ax + BivariatePolynomial::monomial(e, c);
        const auto F = P("y") - ax;
        const auto G = F * random_poly(rng, 2, 5);
        REQUIRE(divides(F, G));
        const Rational x0(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 5));
        const Rational y0 = ax.evaluate(x0, 0);
        CHECK(F.evaluate(x0, y0) == 0);
        CHECK(G.evaluate(x0, y0) == 0);
    }
}

TEST_CASE("corner index")
{
    CHECK(corner_index(P("x^2 + y^2 - 25")) == 2);
    CHECK(corner_index(P("y^2 - x^3")) == 0);
    CHECK(corner_index(P("x*y - 12")) == 1);
    CHECK_THROWS_AS(corner_index(P("5")), InputError);
}
