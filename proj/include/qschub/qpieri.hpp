#pragma once

#include "polyring.hpp"
#include "qring.hpp"
#include "qschub.hpp"
#include "qsym.hpp"
#include "symgroup.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschub {

/** An element of the quotient in the S~ basis: permutation -> coefficient in Z[q] (and passengers). */
using SchubertVector = std::map<Perm, Poly>;

inline void accumulate(SchubertVector& v, const Perm& w, const Poly& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = v.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

inline QuotientElement to_element(const SchubertVector& v, int n)
{
    QuotientElement e;
    e.basis = QuotientElement::Basis::QSchubert;
    e.n = n;
    for (auto& [w, c] : v) e.add(w.one_line(), c);
    return e;
}

inline Poly to_poly(const SchubertVector& v, int n)
{
    Poly r(n);
    for (auto& [w, c] : v) r += c * qschubert(w);
    return r;
}

/**
 * f S~_w = sum_{a<b} (alpha_a - alpha_b) [S~_{w t_ab} if l(w t_ab) = l(w) + 1;
 * q_ab S~_{w t_ab} if l(w) = l(w t_ab) + l(t_ab)] modulo the ideal, for f = sum alpha_i x_i.
 */
inline SchubertVector quantum_monk(const std::vector<mpq_class>& alpha, const Perm& w, QMask mask = kQuantum)
{
    int n = w.n();
    if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("coefficient vector has wrong size");
    SchubertVector out;
    for (auto& a : extended_arrows(w)) {
        mpq_class c = alpha[a.i - 1] - alpha[a.j - 1];
        if (c == 0) continue;
        accumulate(out, a.to, apply_mask(a.weight, mask) * c);
    }
    return out;
}

inline std::vector<mpq_class> linear_coefficients(const Poly& f)
{
    int n = f.n();
    std::vector<mpq_class> alpha(n);
    for (auto& [m, c] : f.terms()) {
        int k = 0;
        for (int i = 1; i <= n; ++i)
            if (m.x(i) == 1) k = i;
        if (m.degree() != 1 || !k) throw std::invalid_argument("quantum Monk needs a linear form in x");
        alpha[k - 1] += c;
    }
    return alpha;
}

inline SchubertVector quantum_monk(const Poly& f, const Perm& w, QMask mask = kQuantum)
{
    return quantum_monk(linear_coefficients(f), w, mask);
}

/** v * x_i in the S~ basis. */
inline SchubertVector times_x(const SchubertVector& v, int i, QMask mask = kQuantum)
{
    SchubertVector out;
    for (auto& [w, c] : v) {
        std::vector<mpq_class> alpha(w.n());
        alpha[i - 1] = 1;
        for (auto& [u, d] : quantum_monk(alpha, w, mask)) accumulate(out, u, c * d);
    }
    return out;
}

/** Class of P in the quotient, expanded in S~ by repeated quantum Monk multiplication. */
inline SchubertVector quotient_eval(const Poly& P, QMask mask = kQuantum)
{
    int n = P.n();
    std::map<std::vector<int>, SchubertVector> memo;
    memo[std::vector<int>(n, 0)] = {{Perm::identity(n), Poly(n, 1)}};
    std::function<const SchubertVector&(const std::vector<int>&)> of = [&](const std::vector<int>& a) -> const SchubertVector& {
        auto it = memo.find(a);
        if (it != memo.end()) return it->second;
        int i = n - 1;
        while (a[i] == 0) --i;
        auto b = a;
        --b[i];
        SchubertVector v = times_x(of(b), i + 1, mask);
        return memo.emplace(a, std::move(v)).first->second;
    };
    SchubertVector out;
    for (auto& [m, c] : P.terms()) {
        auto a = x_exponents(m, n);
        Monomial rest = m;
        for (int k = 0; k < n; ++k) rest.e[kXOff + k] = 0;
        Poly coef = apply_mask(Poly::monomial(n, rest, c), mask);
        if (coef.is_zero()) continue;
        for (auto& [w, d] : of(a)) accumulate(out, w, coef * d);
    }
    return out;
}

/** Product of two classes via quotient_eval of the first applied to S~_w of the second. */
inline SchubertVector quotient_multiply(const SchubertVector& u, const SchubertVector& v, int n, QMask mask = kQuantum)
{
    SchubertVector out;
    Poly pu = to_poly(u, n);
    for (auto& [w, c] : v) {
        for (auto& [x, d] : quotient_eval(pu * qschubert(w), mask)) accumulate(out, x, c * d);
    }
    return out;
}

/** Oracle: expansion through the normal form and the residue pairing. */
inline SchubertVector expand_oracle(const Poly& f, QMask mask = kQuantum)
{
    SchubertVector out;
    auto e = expand_qschubert(f, mask);
    for (auto& [k, c] : e.coeffs) accumulate(out, Perm(k), c);
    return out;
}

// ---------------------------------------------------------------------------
// Grassmannian permutations and the Pieri rule

/**
 * [b,d]: the Grassmannian permutation with S_{[b,d]} = e_d(x_1..x_{b-1}),
 * whose inverse is (1, .., b-d-1, b, b-d, .., b-1, b+1, .., n). 1 <= d <= b-1.
 */
inline Perm grassmann(int b, int d, int n)
{
    if (b < 2 || b > n || d < 1 || d > b - 1) throw std::invalid_argument("Grassmannian index out of range");
    std::vector<int> inv;
    for (int i = 1; i <= b - d - 1; ++i) inv.push_back(i);
    inv.push_back(b);
    for (int i = b - d; i <= b - 1; ++i) inv.push_back(i);
    for (int i = b + 1; i <= n; ++i) inv.push_back(i);
    return Perm(inv).inverse();
}

/** How the path conditions of the Pieri rule are read. */
struct PieriConvention {
    /** Paths have color b + color_shift. */
    int color_shift = -1;
    enum class Indices { Distinct, Increasing, Decreasing } indices = Indices::Distinct;
    /** Order imposed on the larger indices j_l along the path. */
    enum class Upper { Any, NonDecreasing, NonIncreasing } upper = Upper::NonDecreasing;

    std::string str() const
    {
        std::string s = "color b" + (color_shift ? std::to_string(color_shift) : std::string());
        switch (indices) {
        case Indices::Distinct: s += ", distinct i"; break;
        case Indices::Increasing: s += ", increasing i"; break;
        case Indices::Decreasing: s += ", decreasing i"; break;
        }
        switch (upper) {
        case Upper::Any: break;
        case Upper::NonDecreasing: s += ", non-decreasing j"; break;
        case Upper::NonIncreasing: s += ", non-increasing j"; break;
        }
        return s;
    }
};

inline std::vector<PieriConvention> pieri_conventions()
{
    std::vector<PieriConvention> out;
    for (int shift : {0, -1})
        for (auto up : {PieriConvention::Upper::Any, PieriConvention::Upper::NonDecreasing,
                        PieriConvention::Upper::NonIncreasing})
            for (auto ind : {PieriConvention::Indices::Distinct, PieriConvention::Indices::Increasing,
                             PieriConvention::Indices::Decreasing})
                out.push_back({shift, ind, up});
    return out;
}

inline SchubertVector pieri_paths(int b, int d, const Perm& v, const PieriConvention& conv, QMask mask = kQuantum)
{
    int color = b + conv.color_shift;
    SchubertVector out;
    if (color < 1 || color >= v.n()) return out;
    for (auto& p : be_paths(v, color, d, conv.indices == PieriConvention::Indices::Distinct)) {
        bool ok = true;
        for (std::size_t l = 1; l < p.arrows.size() && ok; ++l) {
            if (conv.indices == PieriConvention::Indices::Increasing) ok = p.arrows[l - 1].i < p.arrows[l].i;
            if (conv.indices == PieriConvention::Indices::Decreasing) ok = p.arrows[l - 1].i > p.arrows[l].i;
            if (ok && conv.upper == PieriConvention::Upper::NonDecreasing) ok = p.arrows[l - 1].j <= p.arrows[l].j;
            if (ok && conv.upper == PieriConvention::Upper::NonIncreasing) ok = p.arrows[l - 1].j >= p.arrows[l].j;
        }
        if (ok) accumulate(out, p.end(), apply_mask(p.weight(), mask));
    }
    return out;
}

/** Number of ([b,d], v) in S_n where the path sum differs from the normal-form oracle. */
inline int pieri_mismatches(int n, const PieriConvention& conv)
{
    int bad = 0;
    for (int b = 2; b <= n; ++b)
        for (int d = 1; d <= b - 1; ++d) {
            Poly g = qschubert(grassmann(b, d, n));
            for (auto& [v, s] : qschubert_table(n))
                if (pieri_paths(b, d, v, conv) != expand_oracle(g * s)) ++bad;
        }
    return bad;
}

/** First convention (the literal reading comes first) matching the oracle on S_2..S_n, or nullopt. */
inline std::optional<PieriConvention> calibrate_pieri(int n)
{
    for (auto& conv : pieri_conventions()) {
        bool ok = true;
        for (int m = 2; m <= n && ok; ++m) ok = pieri_mismatches(m, conv) == 0;
        if (ok) return conv;
    }
    return std::nullopt;
}

/** The convention used by pieri_multiply; calibrate_pieri(4) returns it. */
inline constexpr PieriConvention kPieriConvention{-1, PieriConvention::Indices::Distinct,
                                                  PieriConvention::Upper::NonDecreasing};

inline bool operator==(const PieriConvention& a, const PieriConvention& b)
{
    return a.color_shift == b.color_shift && a.indices == b.indices && a.upper == b.upper;
}

/** S~_{[b,d]} S~_v as a sum over colored BE-paths. */
inline SchubertVector pieri_multiply(int b, int d, const Perm& v, QMask mask = kQuantum)
{
    grassmann(b, d, v.n());
    return pieri_paths(b, d, v, kPieriConvention, mask);
}

// ---------------------------------------------------------------------------
// equivariant identities

/**
 * x_j S~_w + y_{w(j)} S~_w - sum_{j<k} [S~_{w t_jk} or q_jk S~_{w t_jk}]
 * + sum_{i<j} [S~_{w t_ij} or q_ij S~_{w t_ij}], which lies in J~.
 */
inline Poly equivariant_pieri_defect(const Perm& w, int j)
{
    int n = w.n();
    if (j < 1 || j > n) throw std::out_of_range("index out of range");
    Poly f = (Poly::x(n, j) + Poly::y(n, w(j))) * qdouble(w);
    int l = w.length();
    for (int k = 1; k <= n; ++k) {
        if (k == j) continue;
        int a = std::min(j, k), b = std::max(j, k);
        Perm u = w.times_transposition(a, b);
        Poly term(n);
        if (u.length() == l + 1)
            term = qdouble(u);
        else if (l == u.length() + 2 * (b - a) - 1)
            term = q_interval(n, a, b) * qdouble(u);
        if (k > j)
            f -= term;
        else
            f += term;
    }
    return f;
}

struct EquivariantCheck {
    bool ok = true;
    QuotientElement remainder;
};

inline EquivariantCheck equivariant_pieri_check(const Perm& w, int j)
{
    EquivariantCheck c;
    c.remainder = reduce_equivariant(equivariant_pieri_defect(w, j));
    c.ok = c.remainder.is_zero();
    return c;
}

/** The top case (x_j + y_{n+1-j}) S~_{w0}(x,y). */
inline EquivariantCheck equivariant_pieri_check(int n, int j) { return equivariant_pieri_check(Perm::longest(n), j); }

}  // namespace qschub
