#include <doctest.h>

#include <cmath>

#include "newtonloj/errors.hpp"
#include "newtonloj/poly.hpp"
#include "support/random_poly.hpp"

using namespace newtonloj;

namespace {

const char* kMainExample = "X^2+X^4+X*Y^3+X*Y^6+X^7*Y+X^4*Y^8+X^9*Y^4+X^9*Y^6+X^7*Y^8";

}  // namespace

TEST_CASE("parse two monomials")
{
    const SparsePoly p = parse_polynomial("X^2 + Y");
    CHECK(p.size() == 2);
    CHECK(p.coeff({2, 0}) == GaussianRational(1));
    CHECK(p.coeff({0, 1}) == GaussianRational(1));
}

TEST_CASE("parse worked example support")
{
    const SparsePoly p = parse_polynomial(kMainExample);
    std::vector<ExponentPair> expected = {{2, 0}, {4, 0}, {1, 3}, {1, 6}, {7, 1}, {4, 8}, {9, 4}, {9, 6}, {7, 8}};
    CHECK(p.size() == 9);
    for (const auto& e : expected)
        CHECK(p.coeff(e) == GaussianRational(1));
}

TEST_CASE("cancellation gives zero")
{
    CHECK(parse_polynomial("X - X").is_zero());
    CHECK(parse_polynomial("X - X").to_string() == "0");
}

TEST_CASE("gaussian rational coefficients")
{
    const SparsePoly p = parse_polynomial("(3/2+1/2i)*X^2*Y - i*Y + 2/4");
    CHECK(p.coeff({2, 1}) == GaussianRational(make_rational(3, 2), make_rational(1, 2)));
    CHECK(p.coeff({0, 1}) == GaussianRational(0, -1));
    CHECK(p.coeff({0, 0}) == GaussianRational(make_rational(1, 2)));
    CHECK(parse_polynomial("(X+Y)^2") == parse_polynomial("x^2 + 2*x*y + y^2"));
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_polynomial("X^-1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1.5*X"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2X"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("X Y"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("sqrt(2)*X"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("X +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(X"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0"), ParseError);
    try {
        parse_polynomial("X + Y ^ -2");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
}

TEST_CASE("json input")
{
    const SparsePoly p = parse_polynomial_json(R"([[2,0,"1","0"],[0,1,"-3/2","1"],[2,0,"1","0"]])");
    CHECK(p.coeff({2, 0}) == GaussianRational(2));
    CHECK(p.coeff({0, 1}) == GaussianRational(make_rational(-3, 2), 1));
    CHECK_THROWS_AS(parse_polynomial_json(R"([[-1,0,"1","0"]])"), ParseError);
    CHECK_THROWS_AS(parse_polynomial_json(R"([[1,0,"0.5","0"]])"), ParseError);
    CHECK_THROWS_AS(parse_polynomial_json("{"), ParseError);
}

TEST_CASE("partial derivatives of the derivative-structure examples")
{
    const SparsePoly h = parse_polynomial("X^2*Y^2+X^7+X*Y^6+X^8*Y^3+X^3*Y^9+X^9*Y^6+X^6*Y^9");
    CHECK(partial_derivative(h, Var::Y) ==
          parse_polynomial("2*X^2*Y+6*X*Y^5+3*X^8*Y^2+9*X^3*Y^8+6*X^9*Y^5+9*X^6*Y^8"));
    CHECK(partial_derivative(parse_polynomial("Y^3"), Var::X).is_zero());
    const SparsePoly h2 = parse_polynomial("Y + X*Y^2 + X^4*Y^3 + Y^9 + X^3*Y^7 + X^8*Y^5 + X^8*Y^7");
    CHECK(partial_derivative(h2, Var::X) == parse_polynomial("Y^2+4*X^3*Y^3+3*X^2*Y^7+8*X^7*Y^5+8*X^7*Y^7"));
}

TEST_CASE("degree stats")
{
    const DegreeStats z = degree_stats(SparsePoly());
    CHECK(z.deg.is_minus_infinity());
    CHECK(z.deg_x.is_minus_infinity());
    CHECK(z.ord.is_plus_infinity());
    CHECK(z.ord_y.is_plus_infinity());

    const DegreeStats s = degree_stats(parse_polynomial("X + X^2*Y"));
    CHECK(s.ord_x == ExtRational(1));
    CHECK(s.deg_x == ExtRational(2));
    CHECK(s.ord_y == ExtRational(0));
    CHECK(s.deg_y == ExtRational(1));

    const DegreeStats m = degree_stats(parse_polynomial(kMainExample));
    CHECK(m.deg_y == ExtRational(8));
    CHECK(m.ord_y == ExtRational(0));
}

TEST_CASE("complex evaluation")
{
    CHECK(std::abs(eval_complex(parse_polynomial("X*Y"), 2.0, 3.0).value - std::complex<double>(6.0)) < 1e-12);
    CHECK(std::abs(eval_complex(parse_polynomial("X^2-Y"), 2.0, 4.0).value) < 1e-12);
    // Root of 1 + x^4 - y^2 at x = 10 is sqrt(10001).
    const double y0 = std::sqrt(10001.0);
    CHECK(std::abs(eval_complex(parse_polynomial("1+X^4-Y^2"), 10.0, y0).value) < 1e-6 * 1e4);
    CHECK_FALSE(eval_complex(parse_polynomial("X^400"), 1e300, 1.0).finite);
    CHECK(std::abs(eval_complex(parse_polynomial("i*X^3*Y^2 + (1/2)*Y"), {1.0, 1.0}, {0.5, -2.0}).value -
                   (std::complex<double>(0, 1) * std::pow(std::complex<double>(1, 1), 3) *
                        std::pow(std::complex<double>(0.5, -2.0), 2) +
                    0.5 * std::complex<double>(0.5, -2.0))) < 1e-12);
}

TEST_CASE("print then parse is the identity")
{
    testsupport::RandomPolys gen(testsupport::corpus_seed());
    for (int i = 0; i < 200; ++i) {
        SparsePoly p = gen.poly(8, 10);
        if (i % 3 == 0)
            p = GaussianRational(make_rational(1, 3), make_rational(-2, 7)) * p;
        CHECK(parse_polynomial(p.to_string()) == p);
    }
}

TEST_CASE("derivative linearity, Leibniz rule and product degree")
{
    testsupport::RandomPolys gen(testsupport::corpus_seed() + 1);
    for (int i = 0; i < 100; ++i) {
        const SparsePoly p = gen.poly(6, 6);
        const SparsePoly q = gen.poly(6, 6);
        for (Var v : {Var::X, Var::Y}) {
            CHECK(partial_derivative(p + GaussianRational(3) * q, v) ==
                  partial_derivative(p, v) + GaussianRational(3) * partial_derivative(q, v));
            CHECK(partial_derivative(p * q, v) == partial_derivative(p, v) * q + p * partial_derivative(q, v));
        }
        SparsePoly expected;
        for (const auto& [e, c] : p.terms())
            if (e.beta >= 1)
                expected.add_term({e.alpha, e.beta - 1}, GaussianRational(e.beta) * c);
        CHECK(partial_derivative(p, Var::Y) == expected);
        const DegreeStats dp = degree_stats(p), dq = degree_stats(q), dpq = degree_stats(p * q);
        CHECK(dpq.deg.value() == dp.deg.value() + dq.deg.value());
    }
}
