#include "qschub/divdiff.hpp"

#include <gtest/gtest.h>

using namespace qschub;

TEST(DividedDifference, Basics)
{
    EXPECT_EQ(ddiff(1, parse("x1^2", 3)), parse("x1 + x2", 3));
    EXPECT_TRUE(ddiff(1, parse("x1*x2 + q1", 2)).is_zero());
}

TEST(DividedDifference, BraidRelation)
{
    Poly f = x_delta(3);
    EXPECT_EQ(ddiff_word({2, 1, 2}, f), ddiff_word({1, 2, 1}, f));
    for (auto& m : {"x1^3*x2", "x1^2*x3^2 + x2", "x1*x2^3*x3"}) {
        Poly g = parse(m, 4);
        EXPECT_EQ(ddiff_word({2, 3, 2}, g), ddiff_word({3, 2, 3}, g));
        EXPECT_EQ(ddiff_word({1, 3}, g), ddiff_word({3, 1}, g));
        EXPECT_TRUE(ddiff_word({1, 1}, g).is_zero());
    }
}

TEST(DividedDifference, LongestOnStaircase)
{
    EXPECT_EQ(ddiff_w(Perm::longest(3), x_delta(3)), Poly(3, 1));
}

TEST(DividedDifference, WordTableEntries)
{
    EXPECT_EQ(eta(ddiff_word({1, 2, 1, 3}, parse("x1^2*x2*x3", 5))), Poly(5, 1));
    EXPECT_EQ(eta(ddiff_word({1, 2, 1, 3}, parse("x1^2*x2*x4", 5))), Poly(5, -1));
}

TEST(Schubert, SmallCases)
{
    EXPECT_EQ(schubert(Perm::from_word({1, 2}, 3)), parse("x1*x2", 3));
    EXPECT_EQ(schubert(Perm::identity(3)), Poly(3, 1));
    EXPECT_EQ(double_schubert(Perm::simple(1, 3)), parse("x1 + y1", 3));
    for (auto& w : all_perms(4)) EXPECT_EQ(schubert(w), schubert_direct(w));
}

TEST(Schubert, LeadingMonomialIsCode)
{
    for (auto& w : all_perms(4)) EXPECT_NE(schubert(w).coeff(x_power(4, w.code()).terms().front().first), 0);
}

TEST(ScalarProduct, Orthogonality)
{
    int n = 3;
    Perm w0 = Perm::longest(n);
    for (auto& u : all_perms(n))
        for (auto& v : all_perms(n))
            if (u.length() + v.length() == w0.length())
                EXPECT_EQ(scalar_product(schubert(u), schubert(v)), Poly(n, u == w0 * v ? 1 : 0));
    EXPECT_EQ(scalar_product(x_delta(n), Poly(n, 1)), Poly(n, 1));
}

TEST(Cauchy, ClassicalProduct)
{
    for (int n = 2; n <= 4; ++n) {
        Perm w0 = Perm::longest(n);
        Poly s(n);
        for (auto& w : all_perms(n)) s += schubert(w) * swap_xy(schubert(w * w0));
        EXPECT_EQ(s, classical_top_double(n));
    }
}

TEST(Eta, DualBasis)
{
    for (auto& u : all_perms(3))
        for (auto& v : all_perms(3)) EXPECT_EQ(eta(ddiff_w(v, schubert(u))), Poly(3, u == v ? 1 : 0));
    EXPECT_EQ(eta(parse("1 + x1", 3)), Poly(3, 1));
}

TEST(Eta, ElementaryCoefficient)
{
    // the coefficient of e_2211 in S_51423 comes from x^(delta - I); e_2211 itself has degree 6 > 4
    std::vector<int> I = {2, 2, 1, 1, 0};
    auto d = delta(5);
    std::vector<int> a(5);
    for (int k = 0; k < 5; ++k) a[k] = d[k] - I[k];
    EXPECT_EQ(eta(ddiff_word({1, 2, 1, 3}, x_power(5, a))), Poly(5, 1));
    Poly e(5, 1);
    for (int k = 1; k <= 4; ++k) e = e * elementary(5, I[k - 1], xs(1, 5 - k));
    EXPECT_EQ(ddiff_word({1, 2, 1, 3}, e), elementary(5, 2, xs(1, 4)));
    EXPECT_TRUE(eta(ddiff_word({1, 2, 1, 3}, e)).is_zero());
}
