#include "qschub/polyring.hpp"

#include <gtest/gtest.h>

using namespace qschub;

TEST(Parse, TwoTermsOfWeightThree)
{
    Poly p = parse("x1^2*x2 + q1*x1", 3);
    EXPECT_EQ(p.size(), 2u);
    for (auto& [m, c] : p.terms()) EXPECT_EQ(m.degree(), 3);
    EXPECT_EQ(p.weighted_degree(), 3);
}

TEST(Parse, ZeroAndCancellation)
{
    EXPECT_TRUE(parse("0", 3).is_zero());
    EXPECT_TRUE(parse("x1 - x1", 3).is_zero());
}

TEST(Parse, RoundTripThroughStr)
{
    for (auto s : {"x1^2*x2 + q1*x1", "-q1 + x1^2 + x1*y1 + x1*y2 + y1*y2", "3/2*x1*t1^4 - q1*q2", "1", "0"}) {
        Poly p = parse(s, 3);
        EXPECT_EQ(parse(p.str(), 3), p) << s;
    }
}

TEST(Parse, ErrorsCarryOffsets)
{
    try {
        parse("x1^", 3);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 3u);
    }
    EXPECT_THROW(parse("x4", 3), ParseError);
    EXPECT_THROW(parse("q3", 3), ParseError);
    EXPECT_NO_THROW(parse("q2*t1", 3));
    EXPECT_THROW(parse("z1", 3), ParseError);
}

TEST(Arithmetic, DoubleProductMinusQ)
{
    int n = 3;
    Poly p = (Poly::x(n, 1) + Poly::y(n, 1)) * (Poly::x(n, 1) + Poly::y(n, 2)) - Poly::q(n, 1);
    EXPECT_EQ(p, parse("x1^2 + x1*y2 + x1*y1 + y1*y2 - q1", n));
    EXPECT_EQ(p * Poly(n, 1), p);
    EXPECT_TRUE((p + (-p)).is_zero());
}

TEST(Arithmetic, MixedContextsThrow)
{
    EXPECT_THROW(Poly::x(3, 1) + Poly::x(4, 1), ContextError);
}

TEST(Substitute, SpecializeY)
{
    Poly p = parse("x1^2 + x1*y2 + x1*y1 + y1*y2 - q1", 3);
    EXPECT_EQ(p.substitute({{Y(1), Poly(3)}, {Y(2), Poly(3)}}), parse("x1^2 - q1", 3));
    EXPECT_EQ(p.set_zero(Family::Y), parse("x1^2 - q1", 3));
    EXPECT_EQ(parse("x1*x2 + q1", 3).substitute({{Q(1), Poly(3)}}), parse("x1*x2", 3));
    EXPECT_EQ(p.substitute({{X(1), Poly::x(3, 1)}}), p);
}

TEST(Degree, WeightedDegree)
{
    EXPECT_EQ(parse("x1^2*x2 + q1*x1", 3).weighted_degree(), 3);
    EXPECT_EQ(parse("1", 3).weighted_degree(), 0);
    EXPECT_FALSE(parse("x1 + x1^2", 3).weighted_degree().has_value());
}

TEST(Print, CanonicalOrderAndLatex)
{
    Poly p = parse("q1*x1 + x1^2*x2", 3);
    EXPECT_EQ(p.str(), "x1^2*x2 + q1*x1");
    EXPECT_EQ(parse("x1 + x2", 3).latex(), "x_{1} + x_{2}");
}

TEST(Integral, Detection)
{
    EXPECT_TRUE(parse("2*x1 - q1", 3).is_integral());
    EXPECT_FALSE(parse("1/2*x1", 3).is_integral());
}

TEST(Evaluate, AtPoint)
{
    Poly p = parse("x1^2*x2 + q1*x1", 3);
    double v = p.evaluate<double>([](int s) { return s == slot_of(X(1)) ? 2.0 : s == slot_of(X(2)) ? 3.0 : 1.0; });
    EXPECT_DOUBLE_EQ(v, 14.0);
}

TEST(Symmetric, ElementaryAndComplete)
{
    EXPECT_EQ(elementary(3, 2, xs(1, 3)), parse("x1*x2 + x1*x3 + x2*x3", 3));
    EXPECT_EQ(complete(3, 2, xs(1, 2)), parse("x1^2 + x1*x2 + x2^2", 3));
    EXPECT_EQ(swap_xy(parse("x1 + 2*y2", 3)), parse("y1 + 2*x2", 3));
}

TEST(Parse, Parentheses)
{
    EXPECT_EQ(parse("(x1 + y1)*(x1 + y2) - q1", 3), parse("x1^2 + x1*y1 + x1*y2 + y1*y2 - q1", 3));
    EXPECT_EQ(parse("-(x1 - x2)^2", 3), parse("-x1^2 + 2*x1*x2 - x2^2", 3));
    EXPECT_EQ(parse("2*(1/2*x1)", 3), Poly::x(3, 1));
    EXPECT_THROW(parse("(x1 + x2", 3), ParseError);
    EXPECT_THROW(parse("x1)", 3), ParseError);
    EXPECT_THROW(parse("()", 3), ParseError);
}
