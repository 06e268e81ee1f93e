#include "qschub/symgroup.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>

using namespace qschub;

namespace {
Perm w(const char* s, int n) { return Perm::parse(s, n); }
Perm word(std::vector<int> a, int n) { return Perm::from_word(a, n); }
}  // namespace

TEST(Perm, ParseForms)
{
    EXPECT_EQ(w("2431", 4), w("2,4,3,1", 4));
    EXPECT_TRUE(w("id", 4).is_identity());
    EXPECT_THROW(w("2231", 4), std::invalid_argument);
}

TEST(Perm, Code)
{
    EXPECT_EQ(Perm::identity(4).code(), (std::vector<int>{0, 0, 0, 0}));
    EXPECT_EQ(Perm::longest(4).code(), (std::vector<int>{3, 2, 1, 0}));
    EXPECT_EQ(w("24531", 5).code(), (std::vector<int>{1, 2, 2, 1, 0}));
    for (auto& u : all_perms(4)) EXPECT_EQ(Perm::from_code(u.code()), u);
}

TEST(Perm, ReducedWordIsLexSmallest)
{
    EXPECT_EQ(Perm::simple(1, 3).reduced_word(), (std::vector<int>{1}));
    EXPECT_EQ(Perm::longest(3).reduced_word(), (std::vector<int>{1, 2, 1}));
    // the word 1213 spells the permutation 32415; the one-line string 42135 is its inverse
    EXPECT_EQ(w("32415", 5).reduced_word(), (std::vector<int>{1, 2, 1, 3}));
    EXPECT_EQ(word({1, 2, 1, 3}, 5), w("32415", 5));
    EXPECT_EQ(w("42135", 5).inverse(), w("32415", 5));
    EXPECT_EQ(w("42135", 5).reduced_word(), (std::vector<int>{1, 3, 2, 1}));
    for (auto& u : all_perms(4)) {
        auto r = u.reduced_word();
        EXPECT_EQ(static_cast<int>(r.size()), u.length());
        EXPECT_EQ(word(r, 4), u);
    }
}

TEST(Perm, WordStringAndOrders)
{
    EXPECT_EQ(word_str({}), "id");
    EXPECT_EQ(word_str({1, 2, 1}), "121");
    auto all = all_perms(3);
    EXPECT_EQ(all.size(), 6u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(staircase(3).size(), 6u);
    EXPECT_EQ(delta(4), (std::vector<int>{3, 2, 1, 0}));
}

TEST(Perm, CompositionAndTranspositions)
{
    Perm u = w("231", 3), v = w("213", 3);
    EXPECT_EQ((u * v)(1), u(v(1)));
    EXPECT_EQ(u.times_transposition(1, 2), u * Perm::transposition(1, 2, 3));
    EXPECT_EQ(word({2, 1}, 3), Perm::simple(2, 3) * Perm::simple(1, 3));
}

TEST(Perm, EmbedRestrict)
{
    Perm u = w("2143", 4);
    EXPECT_EQ(u.embed(5).restrict_to(4), u);
    EXPECT_EQ(u.support(), 4);
    EXPECT_EQ(w("2134", 4).support(), 2);
}

TEST(Arrows, IntoIdentityForS3)
{
    int n = 3;
    std::map<Perm, Poly> into;
    for (auto& v : all_perms(n))
        for (auto& a : extended_arrows(v))
            if (!a.up && a.to.is_identity()) into.emplace(a.from, a.weight);
    ASSERT_EQ(into.size(), 3u);
    EXPECT_EQ(into.at(Perm::simple(1, n)), Poly::q(n, 1));
    EXPECT_EQ(into.at(Perm::simple(2, n)), Poly::q(n, 2));
    EXPECT_EQ(into.at(Perm::longest(n)), Poly::q(n, 1) * Poly::q(n, 2));
}

TEST(Arrows, UpArrowsFromIdentity)
{
    std::set<Perm> up;
    for (auto& a : extended_arrows(Perm::identity(3)))
        if (a.up) up.insert(a.to);
    EXPECT_EQ(up, (std::set<Perm>{Perm::simple(1, 3), Perm::simple(2, 3)}));
}

TEST(Arrows, S3ArrowSet)
{
    // up arrows v -> v t (length +1) and down arrows with their q-weights
    int n = 3;
    auto P = [&](std::vector<int> a) { return word(a, n); };
    std::set<std::pair<Perm, Perm>> up_expected = {
        {P({}), P({2})},     {P({2}), P({2, 1})},  {P({2, 1}), P({1, 2, 1})}, {P({}), P({1})},
        {P({1}), P({1, 2})}, {P({1, 2}), P({1, 2, 1})}, {P({2}), P({1, 2})},  {P({1}), P({2, 1})}};
    std::set<std::tuple<Perm, Perm, std::string>> down_expected = {
        {P({1, 2, 1}), P({}), "q1*q2"}, {P({2}), P({}), "q2"},         {P({1}), P({}), "q1"},
        {P({2, 1}), P({2}), "q1"},      {P({1, 2, 1}), P({2, 1}), "q2"}, {P({1, 2, 1}), P({1, 2}), "q1"},
        {P({1, 2}), P({1}), "q2"}};
    std::set<std::pair<Perm, Perm>> up;
    std::set<std::tuple<Perm, Perm, std::string>> down;
    for (auto& v : all_perms(n))
        for (auto& a : extended_arrows(v)) {
            if (a.up)
                up.insert({a.from, a.to});
            else
                down.insert({a.from, a.to, a.weight.str()});
        }
    EXPECT_EQ(up, up_expected);
    EXPECT_EQ(down, down_expected);
}

TEST(Arrows, Colors)
{
    for (auto& v : all_perms(4))
        for (int k = 1; k < 4; ++k)
            for (auto& a : extended_arrows(v, k)) {
                EXPECT_TRUE(a.i <= k && k < a.j);
                EXPECT_TRUE(a.has_color(k));
            }
}

TEST(Paths, LengthZeroIsEmptyPath)
{
    auto ps = be_paths(Perm::simple(1, 3), 1, 0, true);
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_EQ(ps[0].end(), Perm::simple(1, 3));
    EXPECT_EQ(ps[0].weight(), Poly(3, 1));
}
