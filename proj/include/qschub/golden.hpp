#pragma once

#include "polyring.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qschub::golden {

/** Quantum double Schubert polynomials for S_4 as printed, labelled by reduced words. The top one is given in product form. */
struct DoubleEntry {
    std::string_view word;
    std::string_view poly;
};

inline constexpr std::array<DoubleEntry, 24> kS4Double{{
    {"121321", ""},
    {"21321", "q1^2*x1 + q1*q2*x1 - q2*x1^3 + 2*q1*x1^2*x2 + x1^3*x2^2 + q1*x1^2*y1 - q2*x1^2*y1 + q1*x1*x2*y1 + x1^3*x2*y1 + x1^2*x2^2*y1 + q1*x1*y1^2 + x1^2*x2*y1^2 + q1*x1^2*y2 - q2*x1^2*y2 + q1*x1*x2*y2 + x1^3*x2*y2 + x1^2*x2^2*y2 - q2*x1*y1*y2 + x1^3*y1*y2 + 2*x1^2*x2*y1*y2 + x1*x2^2*y1*y2 + x1^2*y1^2*y2 + x1*x2*y1^2*y2 + q1*x1*y2^2 + x1^2*x2*y2^2 + x1^2*y1*y2^2 + x1*x2*y1*y2^2 + x1*y1^2*y2^2 + q1^2*y3 + q1*q2*y3 - q2*x1^2*y3 + 2*q1*x1*x2*y3 + x1^2*x2^2*y3 + q1*x1*y1*y3 - q2*x1*y1*y3 + q1*x2*y1*y3 + x1^2*x2*y1*y3 + x1*x2^2*y1*y3 + q1*y1^2*y3 + x1*x2*y1^2*y3 + q1*x1*y2*y3 - q2*x1*y2*y3 + q1*x2*y2*y3 + x1^2*x2*y2*y3 + x1*x2^2*y2*y3 - q2*y1*y2*y3 + x1^2*y1*y2*y3 + 2*x1*x2*y1*y2*y3 + x2^2*y1*y2*y3 + x1*y1^2*y2*y3 + x2*y1^2*y2*y3 + q1*y2^2*y3 + x1*x2*y2^2*y3 + x1*y1*y2^2*y3 + x2*y1*y2^2*y3 + y1^2*y2^2*y3"},
    {"12321", "-q1*q2*x1 + q2*x1^3 - q1^2*x3 + q1*x1^2*x3 - q1*x1*x2*x3 + x1^3*x2*x3 - q1^2*y1 - q1*q2*y1 + q1*x1^2*y1 + q2*x1^2*y1 - q1*x1*x2*y1 + x1^3*x2*y1 - q1*x1*x3*y1 + x1^3*x3*y1 - q1*x2*x3*y1 + x1^2*x2*x3*y1 - q1*x1*y1^2 + x1^3*y1^2 - q1*x2*y1^2 + x1^2*x2*y1^2 - q1*x3*y1^2 + x1^2*x3*y1^2 - q1*y1^3 + x1^2*y1^3 + q2*x1^2*y2 + q1*x1*x3*y2 + x1^2*x2*x3*y2 + q1*x1*y1*y2 + q2*x1*y1*y2 + x1^2*x2*y1*y2 + x1^2*x3*y1*y2 + x1*x2*x3*y1*y2 + x1^2*y1^2*y2 + x1*x2*y1^2*y2 + x1*x3*y1^2*y2 + x1*y1^3*y2 + q2*x1^2*y3 + q1*x1*x3*y3 + x1^2*x2*x3*y3 + q1*x1*y1*y3 + q2*x1*y1*y3 + x1^2*x2*y1*y3 + x1^2*x3*y1*y3 + x1*x2*x3*y1*y3 + x1^2*y1^2*y3 + x1*x2*y1^2*y3 + x1*x3*y1^2*y3 + x1*y1^3*y3 + q2*x1*y2*y3 + q1*x3*y2*y3 + x1*x2*x3*y2*y3 + q1*y1*y2*y3 + q2*y1*y2*y3 + x1*x2*y1*y2*y3 + x1*x3*y1*y2*y3 + x2*x3*y1*y2*y3 + x1*y1^2*y2*y3 + x2*y1^2*y2*y3 + x3*y1^2*y2*y3 + y1^3*y2*y3"},
    {"12132", "q1*q2*x1 + q2*x1^2*x2 + q1^2*x3 + 2*q1*x1*x2*x3 + x1^2*x2^2*x3 + q1^2*y1 + q1*q2*y1 + 2*q1*x1*x2*y1 + q2*x1*x2*y1 + x1^2*x2^2*y1 + q1*x1*x3*y1 + q1*x2*x3*y1 + x1^2*x2*x3*y1 + x1*x2^2*x3*y1 + q1*x1*y1^2 + q1*x2*y1^2 + x1^2*x2*y1^2 + x1*x2^2*y1^2 + q1*x3*y1^2 + x1*x2*x3*y1^2 + q1*y1^3 + x1*x2*y1^3 + q2*x1^2*y2 + q2*x1*x2*y2 + q1*x1*x3*y2 + q1*x2*x3*y2 + x1^2*x2*x3*y2 + x1*x2^2*x3*y2 + q1*x1*y1*y2 + q2*x1*y1*y2 + q1*x2*y1*y2 + q2*x2*y1*y2 + x1^2*x2*y1*y2 + x1*x2^2*y1*y2 + x1^2*x3*y1*y2 + 2*x1*x2*x3*y1*y2 + x2^2*x3*y1*y2 + x1^2*y1^2*y2 + 2*x1*x2*y1^2*y2 + x2^2*y1^2*y2 + x1*x3*y1^2*y2 + x2*x3*y1^2*y2 + x1*y1^3*y2 + x2*y1^3*y2 + q2*x1*y2^2 + q1*x3*y2^2 + x1*x2*x3*y2^2 + q1*y1*y2^2 + q2*y1*y2^2 + x1*x2*y1*y2^2 + x1*x3*y1*y2^2 + x2*x3*y1*y2^2 + x1*y1^2*y2^2 + x2*y1^2*y2^2 + x3*y1^2*y2^2 + y1^3*y2^2"},
    {"1321", "-q1^2 - q1*q2 + q1*x1^2 - q1*x1*x2 + x1^3*x2 - q1*x1*y1 + x1^3*y1 - q1*x2*y1 + x1^2*x2*y1 - q1*y1^2 + x1^2*y1^2 + q1*x1*y2 + x1^2*x2*y2 + x1^2*y1*y2 + x1*x2*y1*y2 + x1*y1^2*y2 + q1*x1*y3 + x1^2*x2*y3 + x1^2*y1*y3 + x1*x2*y1*y3 + x1*y1^2*y3 + q1*y2*y3 + x1*x2*y2*y3 + x1*y1*y2*y3 + x2*y1*y2*y3 + y1^2*y2*y3"},
    {"2321", "-q1^2 - q1*q2 + q1*x1^2 - q1*x1*x2 + x1^3*x2 - 2*q1*x1*x3 + x1^3*x3 - q1*x2*x3 - q1*x1*y1 + x1^3*y1 - q1*x2*y1 + x1^2*x2*y1 - q1*x3*y1 + x1^2*x3*y1 - q1*y1^2 + x1^2*y1^2 - q1*x1*y2 + x1^3*y2 - q1*x2*y2 + x1^2*x2*y2 - q1*x3*y2 + x1^2*x3*y2 - q1*y1*y2 + 2*x1^2*y1*y2 + x1*x2*y1*y2 + x1*x3*y1*y2 + x1*y1^2*y2 - q1*y2^2 + x1^2*y2^2 + x1*y1*y2^2 + q1*x1*y3 + x1^2*x2*y3 - q1*x3*y3 + x1^2*x3*y3 + x1^2*y1*y3 + x1*x2*y1*y3 + x1*x3*y1*y3 + x1*y1^2*y3 + x1^2*y2*y3 + x1*x2*y2*y3 + x1*x3*y2*y3 + 2*x1*y1*y2*y3 + x2*y1*y2*y3 + x3*y1*y2*y3 + y1^2*y2*y3 + x1*y2^2*y3 + y1*y2^2*y3"},
    {"2132", "q1^2 + q1*q2 - q2*x1^2 + 2*q1*x1*x2 + x1^2*x2^2 + q1*x1*y1 - q2*x1*y1 + q1*x2*y1 + x1^2*x2*y1 + x1*x2^2*y1 + q1*y1^2 + x1*x2*y1^2 + q1*x1*y2 - q2*x1*y2 + q1*x2*y2 + x1^2*x2*y2 + x1*x2^2*y2 - q2*y1*y2 + x1^2*y1*y2 + 2*x1*x2*y1*y2 + x2^2*y1*y2 + x1*y1^2*y2 + x2*y1^2*y2 + q1*y2^2 + x1*x2*y2^2 + x1*y1*y2^2 + x2*y1*y2^2 + y1^2*y2^2"},
    {"1213", "q2*x1^2 + q1*x1*x3 + x1^2*x2*x3 + q1*x1*y1 + q2*x1*y1 + x1^2*x2*y1 + x1^2*x3*y1 + x1*x2*x3*y1 + x1^2*y1^2 + x1*x2*y1^2 + x1*x3*y1^2 + x1*y1^3 + q2*x1*y2 + q1*x3*y2 + x1*x2*x3*y2 + q1*y1*y2 + q2*y1*y2 + x1*x2*y1*y2 + x1*x3*y1*y2 + x2*x3*y1*y2 + x1*y1^2*y2 + x2*y1^2*y2 + x3*y1^2*y2 + y1^3*y2"},
    {"1232", "q2*x1^2 + q2*x1*x2 + q1*x1*x3 + q1*x2*x3 + x1^2*x2*x3 + x1*x2^2*x3 + q1*x1*y1 + q2*x1*y1 + q1*x2*y1 + q2*x2*y1 + x1^2*x2*y1 + x1*x2^2*y1 + x1^2*x3*y1 + 2*x1*x2*x3*y1 + x2^2*x3*y1 + x1^2*y1^2 + 2*x1*x2*y1^2 + x2^2*y1^2 + x1*x3*y1^2 + x2*x3*y1^2 + x1*y1^3 + x2*y1^3 + q2*x1*y2 + q1*x3*y2 + x1*x2*x3*y2 + q1*y1*y2 + q2*y1*y2 + x1*x2*y1*y2 + x1*x3*y1*y2 + x2*x3*y1*y2 + x1*y1^2*y2 + x2*y1^2*y2 + x3*y1^2*y2 + y1^3*y2 + q2*x1*y3 + q1*x3*y3 + x1*x2*x3*y3 + q1*y1*y3 + q2*y1*y3 + x1*x2*y1*y3 + x1*x3*y1*y3 + x2*x3*y1*y3 + x1*y1^2*y3 + x2*y1^2*y3 + x3*y1^2*y3 + y1^3*y3"},
    {"121", "q1*x1 + x1^2*x2 + x1^2*y1 + x1*x2*y1 + x1*y1^2 + q1*y2 + x1*x2*y2 + x1*y1*y2 + x2*y1*y2 + y1^2*y2"},
    {"132", "q1*x1 - q2*x1 + q1*x2 + x1^2*x2 + x1*x2^2 - q2*y1 + x1^2*y1 + 2*x1*x2*y1 + x2^2*y1 + x1*y1^2 + x2*y1^2 + q1*y2 + x1*x2*y2 + x1*y1*y2 + x2*y1*y2 + y1^2*y2 + q1*y3 + x1*x2*y3 + x1*y1*y3 + x2*y1*y3 + y1^2*y3"},
    {"232", "q1*x1 + q1*x2 + q2*x2 + x1^2*x2 + x1*x2^2 - q1*x3 + x1^2*x3 + x1*x2*x3 + x2^2*x3 + x1^2*y1 + 2*x1*x2*y1 + x2^2*y1 + x1*x3*y1 + x2*x3*y1 + x1*y1^2 + x2*y1^2 + x1^2*y2 + 2*x1*x2*y2 + x2^2*y2 + x1*x3*y2 + x2*x3*y2 + 2*x1*y1*y2 + 2*x2*y1*y2 + x3*y1*y2 + y1^2*y2 + x1*y2^2 + x2*y2^2 + y1*y2^2 + q1*y3 + q2*y3 + x1*x2*y3 + x1*x3*y3 + x2*x3*y3 + x1*y1*y3 + x2*y1*y3 + x3*y1*y3 + y1^2*y3 + x1*y2*y3 + x2*y2*y3 + x3*y2*y3 + y1*y2*y3 + y2^2*y3"},
    {"123", "q2*x1 + q1*x3 + x1*x2*x3 + q1*y1 + q2*y1 + x1*x2*y1 + x1*x3*y1 + x2*x3*y1 + x1*y1^2 + x2*y1^2 + x3*y1^2 + y1^3"},
    {"213", "q1*x1 + x1^2*x2 - q1*x3 + x1^2*x3 + x1^2*y1 + x1*x2*y1 + x1*x3*y1 + x1*y1^2 + x1^2*y2 + x1*x2*y2 + x1*x3*y2 + 2*x1*y1*y2 + x2*y1*y2 + x3*y1*y2 + y1^2*y2 + x1*y2^2 + y1*y2^2"},
    {"321", "-2*q1*x1 + x1^3 - q1*x2 - q1*y1 + x1^2*y1 - q1*y2 + x1^2*y2 + x1*y1*y2 - q1*y3 + x1^2*y3 + x1*y1*y3 + x1*y2*y3 + y1*y2*y3"},
    {"23", "q1 + q2 + x1*x2 + x1*x3 + x2*x3 + x1*y1 + x2*y1 + x3*y1 + y1^2 + x1*y2 + x2*y2 + x3*y2 + y1*y2 + y2^2"},
    {"32", "-q1 - q2 + x1^2 + x1*x2 + x2^2 + x1*y1 + x2*y1 + x1*y2 + x2*y2 + y1*y2 + x1*y3 + x2*y3 + y1*y3 + y2*y3"},
    {"13", "x1^2 + x1*x2 + x1*x3 + 2*x1*y1 + x2*y1 + x3*y1 + y1^2 + x1*y2 + y1*y2 + x1*y3 + y1*y3"},
    {"12", "q1 + x1*x2 + x1*y1 + x2*y1 + y1^2"},
    {"21", "-q1 + x1^2 + x1*y1 + x1*y2 + y1*y2"},
    {"3", "x1 + x2 + x3 + y1 + y2 + y3"},
    {"2", "x1 + x2 + y1 + y2"},
    {"1", "x1 + y1"},
    {"id", "1"},
}};

/** Characteristic polynomials of x_1, x_2 for n = 3, in t1, as printed. */
inline Poly s3_f1()
{
    Poly t = Poly::t(3), q1 = Poly::q(3, 1), q2 = Poly::q(3, 2);
    return (t * t - q1).pow(3) - q1 * q1 * q2;
}

inline Poly s3_f2()
{
    return parse("t1^6 - 3*q1*t1^4 - 3*q2*t1^4 + 3*q1^2*t1^2 + 3*q1*q2*t1^2 + 3*q2^2*t1^2 - q1^3 + q1^2*q2 + q1*q2^2 - q2^3", 3);
}

/** A printed product f_i g_v or f_i h_v, given as numerator / denominator in t1 and q. */
struct ResolventRow {
    int i;
    std::string word;
    Poly numerator;
    Poly denominator;
};

inline std::vector<ResolventRow> s3_resolvent_rows()
{
    auto P = [](const char* s) { return parse(s, 3); };
    Poly t = Poly::t(3), q1 = Poly::q(3, 1), q2 = Poly::q(3, 2), one(3, 1);
    Poly den = q1 - q2;
    std::vector<ResolventRow> r;
    r.push_back({1, "121", q1 * t, one});
    r.push_back({1, "12", q1 * t * t, one});
    r.push_back({1, "21", t * t * (t * t - q1), one});
    r.push_back({1, "2", q1 * t * (t * t - q1), one});
    r.push_back({1, "1", t * (t.pow(4) - q1 * t * t + q1 * q1), one});
    r.push_back({1, "id", t * t * (t.pow(4) - q1 * t * t + q1 * q1), one});
    r.push_back({2, "121", (q2 - q1) * t, one});
    r.push_back({2, "12", t * t * (q1 * 2 + q2 - t * t), one});
    r.push_back({2, "21", t * t * (q1 + q2 * 2 - t * t), one});
    r.push_back({2, "2", (q1 + q2) * t.pow(5) - q1 * (q1 + q2) * t.pow(3) + q1 * q2 * (q2 * 2 - q1) * t, den});
    r.push_back({2, "1", -t.pow(5) + (q1 * 2 + q2) * t.pow(3) + q1 * (q2 - q1) * t, one});
    r.push_back({2, "id", (q1 + q2) * t.pow(6) - q1 * t * t * 2 + P("q1^3 + 2*q1^2*q2 - q2^3") * t * t, den});
    return r;
}

/** The printed operators D_1, D_2 for n = 3: derivative order -> t-exponent -> coefficient. */
inline std::map<int, std::map<int, Poly>> s3_printed_d(int i)
{
    Poly q1 = Poly::q(3, 1), q2 = Poly::q(3, 2), one(3, 1);
    auto r = [](long a, long b) { return mpq_class(a, b); };
    std::map<int, std::map<int, Poly>> D;
    auto add = [&](int k, int e, const Poly& c) {
        auto [it, fresh] = D[k].try_emplace(e, c);
        if (!fresh) it->second += c;
    };
    Poly f = i == 1 ? s3_f1() : s3_f2();
    for (auto& [m, c] : f.terms()) {
        Monomial rest = m;
        int e = rest.e[kTOff];
        rest.e[kTOff] = 0;
        add(6, e - 1, Poly::monomial(3, rest, c * r(1, 720)));
    }
    Poly A = i == 1 ? q1.pow(3) + q1 * q1 * q2 : q1.pow(3) - q1 * q1 * q2 - q1 * q2 * q2 + q2.pow(3);
    Poly s1 = i == 1 ? q1 : q1 + q2;
    Poly s2 = i == 1 ? q1 * q1 : q1 * q1 + q1 * q2 + q2 * q2;
    Poly c5 = i == 1 ? s1 * r(-3, 40) : s1 * r(3, 40);
    add(5, -2, A * r(1, 120));
    add(5, 0, s2 * r(1, 40));
    add(5, 2, c5);
    add(5, 4, one * r(1, 24));
    add(4, -3, A * r(-1, 24));
    add(4, 1, s1 * r(-3, 8));
    add(4, 3, one * r(5, 12));
    add(3, -4, A * r(1, 6));
    add(3, 0, s1 * r(-1, 2));
    add(3, 2, one * r(5, 3));
    add(2, -5, A * r(-1, 2));
    add(2, 1, one * r(5, 2));
    add(1, -6, A);
    add(1, 0, one);
    add(0, -7, -A);
    return D;
}

/** The quantum Schubert polynomials of S_3 as printed, by reduced word. */
struct S3Entry {
    std::string_view word;
    std::string_view single;
};

inline std::vector<S3Entry> s3_examples()
{
    return {
        {"121", "x1^2*x2 + q1*x1"},
        {"21", "x1^2 - q1"},
        {"12", "x1*x2 + q1"},
        {"1", "x1"},
        {"2", "x1 + x2"},
        {"id", "1"},
    };
}

/** The printed S_3 double polynomials, built from their factored forms. */
inline Poly s3_double(std::string_view word)
{
    auto x = [](int i) { return Poly::x(3, i); };
    auto y = [](int i) { return Poly::y(3, i); };
    Poly q1 = Poly::q(3, 1);
    if (word == "121") return (x(1) + y(2)) * (x(1) + y(1)) * (x(2) + y(1)) + q1 * (x(1) + y(2));
    if (word == "21") return (x(1) + y(1)) * (x(1) + y(2)) - q1;
    if (word == "12") return (x(1) + y(1)) * (x(2) + y(1)) + q1;
    if (word == "1") return x(1) + y(1);
    if (word == "2") return x(1) + x(2) + y(1) + y(2);
    return Poly(3, 1);
}

}  // namespace qschub::golden
