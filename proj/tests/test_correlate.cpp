#include "qschub/correlate.hpp"
#include "qschub/golden.hpp"

#include <gtest/gtest.h>

using namespace qschub;

TEST(Correlator, Basics)
{
    EXPECT_EQ(correlator(Poly(3, 1), 1), Poly(3, 6));
    EXPECT_EQ(correlator(Poly(4, 1), 1), Poly(4, 24));
    EXPECT_EQ(correlator(parse("x1^5", 3), 0), Poly::q(3, 1));
    for (int g = 1; g <= 2; ++g)
        for (auto P : {"1", "x1", "x1^2*x2"}) EXPECT_EQ(correlator(parse(P, 3), g), correlator_by_recursion(parse(P, 3), g));
}

TEST(ThreePoint, InitialDataAndNormalization)
{
    int n = 3;
    ThreePointTable T(n);
    Perm w0 = Perm::longest(n);
    for (int k = 1; k < n; ++k) EXPECT_EQ(T.at(Perm::simple(k, n), Perm::simple(k, n), w0), Poly::q(n, k));
    for (auto& v : all_perms(n))
        for (auto& w : all_perms(n)) EXPECT_EQ(T.at(Perm::identity(n), v, w), Poly(n, w == w0 * v ? 1 : 0));
}

TEST(ThreePoint, Wdvv)
{
    ThreePointTable T3(3);
    auto r = wdvv_check(T3);
    EXPECT_EQ(r.checked, 1296);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(degree_check(T3).ok());
    ThreePointTable T4(4);
    EXPECT_TRUE(wdvv_check(T4, 200, 7).ok());
    EXPECT_TRUE(degree_check(T4).ok());
}

TEST(CharPoly, SymmetricThree)
{
    EXPECT_EQ(char_poly(3, 1), golden::s3_f1());
    EXPECT_EQ(char_poly(3, 2), golden::s3_f2());
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(char_poly(3, i, classical_mask(3)), Poly::t(3).pow(6));
    EXPECT_EQ(t_coefficients(char_poly(3, 1)).size(), 7u);
}

TEST(Resolvent, PrintedRows)
{
    auto g = resolvent_expand(3, 1), h = resolvent_expand(3, 2);
    Perm w0 = Perm::longest(3);
    EXPECT_EQ(g.at(w0), parse("q1*t1", 3));
    EXPECT_EQ(h.at(w0), parse("(q2 - q1)*t1", 3));
    int match = 0;
    for (auto& row : golden::s3_resolvent_rows()) {
        std::vector<int> a;
        if (row.word != "id")
            for (char c : row.word) a.push_back(c - '0');
        auto& src = row.i == 1 ? g : h;
        Perm v = Perm::from_word(a, 3);
        Poly got = src.count(v) ? src.at(v) : Poly(3);
        if (got * row.denominator == row.numerator) ++match;
    }
    EXPECT_EQ(match, 8);
}

TEST(Resolvent, UnivariateResidue)
{
    Poly f = char_poly(3, 1);
    Poly t = Poly::t(3);
    EXPECT_EQ(univariate_residue(t.pow(5), f), Poly(3, 1));
    EXPECT_TRUE(univariate_residue(t.pow(4), f).is_zero());
}

TEST(Psi, Coefficients)
{
    auto s = psi_series(3, 6);
    EXPECT_EQ(s.count({0, 0}), 0u);
    EXPECT_EQ(s.at({2, 1}), Poly(3, 1));
    EXPECT_EQ(s.at({5, 0}), Poly::q(3, 1));
}

TEST(Psi, DifferentialEquations)
{
    auto C = c_matrix_solved(6);
    EXPECT_TRUE(c_matrix_identity(C));
    EXPECT_FALSE(c_matrix_identity(c_matrix_closed_form(6, 6)));
    EXPECT_FALSE(c_matrix_identity(c_matrix_closed_form(6, 3)));
    for (int i = 1; i <= 2; ++i) {
        EXPECT_TRUE(d_operator_defect(3, i, 8).empty());
        EXPECT_TRUE(d_operator_defect(3, i, 8, classical_mask(3)).empty());
    }
    auto D1 = d_operator(char_poly(3, 1), C);
    auto P1 = golden::s3_printed_d(1);
    for (auto& [k, m] : P1)
        for (auto& [e, c] : m) EXPECT_EQ(D1.at(k).at(e), c);
}

TEST(Numeric, RootSums)
{
    EXPECT_NEAR(correlator_numeric(x_delta(3), 0, {1.0, 1.0}), 1.0, 1e-8);
    EXPECT_NEAR(correlator_numeric(parse("x1^5", 3), 0, {2.0, 3.0}), 2.0, 1e-8);
    EXPECT_NEAR(correlator_numeric(Poly(3, 1), 1, {0.7, 1.3}), 6.0, 1e-8);
    auto roots = solve_quantum_system(3, {0.5, 1.5});
    EXPECT_EQ(roots.points.size(), 6u);
}
