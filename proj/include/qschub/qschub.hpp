#pragma once

#include "divdiff.hpp"
#include "linalg.hpp"
#include "polyring.hpp"
#include "qring.hpp"
#include "qsym.hpp"
#include "symgroup.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschub {

/** prod_{i=1}^{n-1} Delta_i(y_{n-i} | x_1..x_i) */
inline Poly qdouble_top(int n)
{
    Poly p(n, 1);
    for (int i = 1; i <= n - 1; ++i) p = p * Delta(n, i, Poly::y(n, n - i));
    return p;
}

/** S~_w(x,y) = d^{(y)}_{w w0} S~_{w0}(x,y), for all w in S_n. */
inline const std::map<Perm, Poly>& qdouble_table(int n)
{
    static std::map<int, std::map<Perm, Poly>> store;
    static std::mutex mu;
    return detail::cached_table(store, mu, n, [](int m) {
        std::map<Perm, Poly> t;
        t.emplace(Perm::longest(m), qdouble_top(m));
        auto ps = all_perms(m);
        std::sort(ps.begin(), ps.end(), [](const Perm& a, const Perm& b) { return a.length() > b.length(); });
        for (auto& w : ps) {
            if (t.count(w)) continue;
            // a with l(s_a w) = l(w) + 1
            Perm inv = w.inverse();
            for (int a = 1; a < m; ++a)
                if (inv(a) < inv(a + 1)) {
                    t.emplace(w, ddiff(a, t.at(Perm::simple(a, m) * w), Family::Y));
                    break;
                }
        }
        return t;
    });
}

inline Poly qdouble(const Perm& w) { return qdouble_table(w.n()).at(w); }

/** S~_w(x) = S~_w(x,0), for all w in S_n. */
inline const std::map<Perm, Poly>& qschubert_table(int n)
{
    static std::map<int, std::map<Perm, Poly>> store;
    static std::mutex mu;
    return detail::cached_table(store, mu, n, [](int m) {
        std::map<Perm, Poly> t;
        for (auto& [w, p] : qdouble_table(m)) t.emplace(w, p.set_zero(Family::Y));
        return t;
    });
}

inline Poly qschubert(const Perm& w) { return qschubert_table(w.n()).at(w); }

/** e~_I with every factor restricted to x_1..x_n, q_1..q_{n-1} (the context rank). */
inline Poly quantum_e_restricted(int n, const std::vector<int>& I, int N)
{
    Poly r(n, 1);
    for (std::size_t kk = 0; kk < I.size(); ++kk) {
        int k = static_cast<int>(kk) + 1;
        if (!I[kk]) continue;
        int m = std::min(n, N - k);
        if (I[kk] > m) return Poly(n);
        r = r * quantum_e(n, I[kk], m);
    }
    return r;
}

/**
 * S~_w = sum_{I in staircase} e~_I eta(d_{w w0} x^{delta - I}), for w in S_N,
 * with the result restricted to rank n <= N. Evaluated in a context of N variables.
 */
inline Poly qschubert_elementary(const Perm& w, int n)
{
    int N = w.n();
    if (N > kMaxN) throw std::out_of_range("permutation too large");
    Perm u = w * Perm::longest(N);
    auto word = u.reduced_word();
    Poly r(n);
    auto d = delta(N);
    for (auto& I : staircase(N)) {
        int s = 0;
        for (int v : I) s += v;
        if (s != w.length()) continue;
        std::vector<int> a(N);
        for (int k = 0; k < N; ++k) a[k] = d[k] - I[k];
        Poly c = eta(ddiff_word(word, x_power(N, a)));
        if (c.is_zero()) continue;
        r += quantum_e_restricted(n, I, N) * c.constant_term();
    }
    return r;
}

inline const std::map<Perm, Poly>& qschubert_elementary_table(int n)
{
    static std::map<int, std::map<Perm, Poly>> store;
    static std::mutex mu;
    return detail::cached_table(store, mu, n, [](int m) {
        std::map<Perm, Poly> t;
        for (auto& w : all_perms(m)) t.emplace(w, qschubert_elementary(w, m));
        return t;
    });
}

// ---------------------------------------------------------------------------
// characterization by orthogonality and unitriangularity

/**
 * Monomials q^b x^I of weighted degree l(w) with I below c(w): smaller total
 * degree, or equal degree and smaller with the last coordinate most significant.
 */
inline std::vector<Monomial> lower_monomials(const Perm& w, QMask mask)
{
    int n = w.n();
    auto cw = w.code();
    std::vector<int> slots;
    for (int i = 1; i < n; ++i)
        if (!(mask >> (i - 1) & 1u)) slots.push_back(kQOff + i - 1);
    std::vector<Monomial> out;
    for (auto& I : staircase(n)) {
        int s = 0;
        for (int v : I) s += v;
        if (s > w.length() || (s == w.length() && !colex_less(I, cw))) continue;
        int left = w.length() - s;
        if (left < 0 || left % 2) continue;
        for (auto& qm : detail::monomials_of_degree(left, slots)) {
            Monomial m = qm;
            for (int k = 0; k < n; ++k) m.e[kXOff + k] = static_cast<std::uint8_t>(I[k]);
            out.push_back(m);
        }
    }
    return out;
}

struct TriangularReport {
    int pairs_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/** Check orthogonality <S_u, S_v>_Q = [v = w0 u] and unitriangularity for a family. */
inline TriangularReport triangular_check(const std::map<Perm, Poly>& fam, int n, QMask mask = kQuantum)
{
    TriangularReport rep;
    Perm w0 = Perm::longest(n);
    auto& eng = nf_engine(n, mask);
    std::map<Perm, Poly> nf;
    for (auto& [w, p] : fam) {
        nf.emplace(w, eng.reduce(p));
        Poly rest = p - x_power(n, w.code());
        auto allowed = lower_monomials(w, mask);
        std::set<std::array<std::uint8_t, kSlots>> ok;
        for (auto& m : allowed) ok.insert(m.e);
        for (auto& [m, c] : rest.terms())
            if (!ok.count(m.e)) {
                rep.failures.push_back("triangularity " + w.str() + ": " + p.str());
                break;
            }
    }
    for (auto& [u, pu] : nf)
        for (auto& [v, pv] : nf) {
            if (v < u) continue;
            ++rep.pairs_checked;
            Poly val = residue(pu * pv, mask);
            Poly want(n, v == w0 * u ? 1 : 0);
            if (val != want)
                rep.failures.push_back("pairing " + u.str() + "," + v.str() + " = " + val.str());
        }
    return rep;
}

struct GramSchmidtResult {
    std::map<Perm, Poly> family;
    /** Free parameters left at each step (set to zero). */
    std::map<Perm, int> free_parameters;
    bool consistent = true;
    int total_free() const
    {
        int s = 0;
        for (auto& [w, k] : free_parameters) s += k;
        return s;
    }
};

/**
 * Sequential orthogonalization: for w in order of length (then code), solve
 * <S_w, S_v>_Q = [v = w0 w] against every earlier v with S_w of the
 * triangular shape; undetermined coefficients are set to zero.
 */
inline GramSchmidtResult gram_schmidt(int n, QMask mask = kQuantum)
{
    GramSchmidtResult res;
    Perm w0 = Perm::longest(n);
    auto& eng = nf_engine(n, mask);
    auto order = perms_by_code(n);
    std::stable_sort(order.begin(), order.end(),
                     [](const Perm& a, const Perm& b) { return a.length() < b.length(); });
    std::vector<std::pair<Perm, Poly>> done;
    for (auto& w : order) {
        auto monos = lower_monomials(w, mask);
        Poly lead = x_power(n, w.code());
        // rows indexed by (earlier v, q-monomial of the residue)
        std::map<std::pair<int, std::array<std::uint8_t, kSlots>>, std::pair<std::vector<mpq_class>, mpq_class>> rows;
        int nu = static_cast<int>(monos.size());
        auto row = [&](int vi, const Monomial& qm) -> auto& {
            auto key = std::make_pair(vi, qm.e);
            auto it = rows.find(key);
            if (it == rows.end()) it = rows.emplace(key, std::make_pair(std::vector<mpq_class>(nu), mpq_class(0))).first;
            return it->second;
        };
        for (std::size_t vi = 0; vi < done.size(); ++vi) {
            auto& [v, pv] = done[vi];
            Poly target(n, v == w0 * w ? 1 : 0);
            Poly r0 = residue(lead * pv, mask);
            for (auto& [m, c] : (target - r0).terms()) row(static_cast<int>(vi), m).second += c;
            for (int j = 0; j < nu; ++j) {
                Poly rj = residue(Poly::monomial(n, monos[j]) * pv, mask);
                for (auto& [m, c] : rj.terms()) row(static_cast<int>(vi), m).first[j] += c;
            }
            row(static_cast<int>(vi), Monomial{});
        }
        std::vector<std::vector<mpq_class>> A;
        std::vector<mpq_class> b;
        for (auto& [k, rb] : rows) {
            A.push_back(rb.first);
            b.push_back(rb.second);
        }
        auto sol = solve_linear(A, b, nu);
        Poly p = lead;
        if (!sol) {
            res.consistent = false;
            res.free_parameters[w] = -1;
        } else {
            for (int j = 0; j < nu; ++j)
                if (sol->z[j] != 0) p += Poly::monomial(n, monos[j], sol->z[j]);
            res.free_parameters[w] = sol->nullity;
        }
        res.family.emplace(w, p);
        done.emplace_back(w, eng.reduce(p));
    }
    return res;
}

/**
 * Dimension of the space of first-order deformations of a family that keep
 * both conditions: delta_u stays in the lower span and
 * <delta_u, S_v> + <S_u, delta_v> = 0 for all pairs.
 */
inline int triangular_tangent_dimension(const std::map<Perm, Poly>& fam, int n, QMask mask = kQuantum)
{
    auto& eng = nf_engine(n, mask);
    std::vector<Perm> ws;
    std::vector<Poly> nf;
    std::vector<std::vector<Monomial>> monos;
    std::vector<int> offset;
    int nu = 0;
    for (auto& [w, p] : fam) {
        ws.push_back(w);
        nf.push_back(eng.reduce(p));
        monos.push_back(lower_monomials(w, mask));
        offset.push_back(nu);
        nu += static_cast<int>(monos.back().size());
    }
    // pairing of each unknown monomial with each family member
    std::vector<std::vector<std::vector<Poly>>> pr(ws.size());
    for (std::size_t u = 0; u < ws.size(); ++u)
        for (auto& m : monos[u]) {
            std::vector<Poly> col;
            Poly mn = eng.reduce(Poly::monomial(n, m));
            for (std::size_t v = 0; v < ws.size(); ++v) col.push_back(residue(mn * nf[v], mask));
            pr[u].push_back(std::move(col));
        }
    SparseEchelon ech;
    int tag = 0;
    for (std::size_t u = 0; u < ws.size(); ++u)
        for (std::size_t v = u; v < ws.size(); ++v) {
            std::map<std::array<std::uint8_t, kSlots>, SparseEchelon::Vec> eqs;
            for (std::size_t j = 0; j < monos[u].size(); ++j)
                for (auto& [m, c] : pr[u][j][v].terms()) eqs[m.e][offset[u] + static_cast<int>(j)] += c;
            for (std::size_t j = 0; j < monos[v].size(); ++j)
                for (auto& [m, c] : pr[v][j][u].terms()) eqs[m.e][offset[v] + static_cast<int>(j)] += c;
            for (auto& [k, row] : eqs) ech.insert(row, tag++);
        }
    return nu - static_cast<int>(ech.rank());
}

/**
 * A second family with the same two properties, obtained from a given one by
 * S_u += a S_v, S_{w0 v} -= a S_{w0 u}, with v = id, u the first permutation
 * of length 2 and a = q_1.
 */
inline std::map<Perm, Poly> triangular_alternative(const std::map<Perm, Poly>& fam, int n)
{
    if (n < 3) throw std::invalid_argument("needs n >= 3");
    Perm w0 = Perm::longest(n), id = Perm::identity(n);
    Perm u = id;
    for (auto& w : perms_by_code(n))
        if (w.length() == 2) {
            u = w;
            break;
        }
    auto out = fam;
    Poly a = Poly::q(n, 1);
    out.at(u) = fam.at(u) + a * fam.at(id);
    out.at(w0 * id) = fam.at(w0 * id) - a * fam.at(w0 * u);
    return out;
}

// ---------------------------------------------------------------------------
// quantization

namespace detail {

/** eta(d_w f) for every w with nonzero value, by breadth-first search over left extensions. */
inline std::map<Perm, mpq_class> eta_derivatives(const Poly& f)
{
    int C = kMaxN;
    Poly g0 = f.with_n(C);
    std::map<Perm, mpq_class> out;
    std::map<Perm, Poly> layer{{Perm::identity(C), g0}};
    while (!layer.empty()) {
        std::map<Perm, Poly> next;
        for (auto& [w, g] : layer) {
            Poly e = eta(g);
            if (!e.is_zero()) {
                if (!e.is_constant()) throw std::invalid_argument("quantize expects a polynomial in x only");
                out.emplace(w, e.constant_term());
            }
            int top = 0;
            for (auto& [m, c] : g.terms())
                for (int i = C; i >= 1; --i)
                    if (m.x(i)) {
                        top = std::max(top, i);
                        break;
                    }
            if (top >= C) throw std::out_of_range("quantization needs more variables than supported");
            Perm inv = w.inverse();
            for (int a = 1; a <= top; ++a) {
                if (inv(a) > inv(a + 1)) continue;  // s_a w shorter
                Perm sw = Perm::simple(a, C) * w;
                if (next.count(sw)) continue;
                Poly h = ddiff(a, g);
                if (!h.is_zero()) next.emplace(sw, std::move(h));
            }
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace detail

/** S~_w for w in some S_N, restricted to rank n. */
inline Poly qschubert_restricted(const Perm& w, int n)
{
    int N = w.support();
    if (N <= n) return qschubert(w.embed(std::max(N, n)).restrict_to(n));
    return qschubert_elementary(w.restrict_to(N), n);
}

/** f~ = sum_w eta(d_w f) S~_w, restricted to rank f.n(). */
inline Poly quantize(const Poly& f)
{
    int n = f.n();
    Poly r(n);
    for (auto& [w, c] : detail::eta_derivatives(f)) r += qschubert_restricted(w, n) * c;
    return r;
}

/** Largest group S_N needed to quantize f. */
inline int quantize_support(const Poly& f)
{
    int N = 1;
    for (auto& [w, c] : detail::eta_derivatives(f)) N = std::max(N, w.support());
    return N;
}

// ---------------------------------------------------------------------------
// expansions

/** f = sum_w a_w S~_w mod the ideal, with a_w = <f, S~_{w0 w}>_Q. */
inline QuotientElement expand_qschubert(const Poly& f, QMask mask = kQuantum)
{
    int n = f.n();
    QuotientElement e;
    e.basis = QuotientElement::Basis::QSchubert;
    e.n = n;
    Perm w0 = Perm::longest(n);
    auto& eng = nf_engine(n, mask);
    Poly nf = eng.reduce(f);
    for (auto& [w, s_unused] : qschubert_table(n)) e.add(w.one_line(), residue(nf * eng.reduce(qschubert_table(n).at(w0 * w)), mask));
    return e;
}

/**
 * Exact expansion of f in the basis {q^b e~_I} (or {q^b e_I} if classical),
 * as a polynomial identity. Keys are the index sequences I.
 */
inline QuotientElement expand_elementary(const Poly& f, bool quantum = true)
{
    int n = f.n();
    std::vector<std::vector<int>> Is = staircase(n);
    std::vector<Poly> gens;
    for (auto& I : Is) gens.push_back(factor_poly(quantum ? FactorKind::QElementary : FactorKind::Elementary, I, n));
    std::unordered_map<Monomial, int, MonomialHash> col;
    auto vec = [&](const Poly& p) {
        SparseEchelon::Vec v;
        for (auto& [m, c] : p.terms()) {
            auto [it, fresh] = col.emplace(m, static_cast<int>(col.size()));
            v[it->second] += c;
        }
        return v;
    };
    std::vector<int> qslots;
    for (int i = 1; i < n; ++i) qslots.push_back(kQOff + i - 1);
    SparseEchelon ech;
    std::vector<std::pair<int, Monomial>> tags;
    int maxd = f.max_degree();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        int dI = gens[k].max_degree();
        for (int left = 0; dI + left <= maxd && (quantum || left == 0); left += 2)
            for (auto& qm : detail::monomials_of_degree(left, qslots)) {
                tags.emplace_back(static_cast<int>(k), qm);
                ech.insert(vec(gens[k].mul_term(qm, 1)), static_cast<int>(tags.size()) - 1);
            }
    }
    auto [resid, comb] = ech.reduce(vec(f));
    if (!resid.empty()) throw std::invalid_argument("polynomial is not in the span of the elementary basis");
    QuotientElement e;
    e.n = n;
    for (auto& [t, c] : comb) e.add(Is[tags[t].first], Poly::monomial(n, tags[t].second, c));
    return e;
}

// ---------------------------------------------------------------------------
// Cauchy identities and the canonical element

/** sum_w S~_w(x) S_{w w0}(y) */
inline Poly cauchy_lhs(int n)
{
    Perm w0 = Perm::longest(n);
    Poly r(n);
    for (auto& [w, p] : qschubert_table(n)) r += p * swap_xy(schubert(w * w0));
    return r;
}

/** C^{(q,q')}(x,y) = sum_w S~^{(q)}_w(x) S~^{(q')}_{w0 w}(y); q'_i is stored as q_{n-1+i}. */
inline Poly canonical_element(int n)
{
    Perm w0 = Perm::longest(n);
    Poly r(n);
    for (auto& [w, p] : qschubert_table(n)) r += p * to_second_alphabet(swap_xy(qschubert(w0 * w)));
    return r;
}

/** C^{(q,q)}(x,x) */
inline Poly canonical_element_diagonal(int n)
{
    Poly c = merge_alphabets(canonical_element(n));
    std::vector<std::pair<VarId, Poly>> b;
    for (int i = 1; i <= n; ++i) b.push_back({Y(i), Poly::x(n, i)});
    return c.substitute(b);
}

}  // namespace qschub
