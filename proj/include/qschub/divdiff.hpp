#pragma once

#include "polyring.hpp"
#include "symgroup.hpp"

#include <map>
#include <mutex>

namespace qschub {

/** Divided difference in x_i, x_{i+1} (or y_i, y_{i+1}). */
inline Poly ddiff(int i, const Poly& f, Family family = Family::X)
{
    int n = f.n();
    if (i < 1 || i >= n) throw std::out_of_range("divided difference index out of range");
    int a = slot_of({family, i});
    int b = slot_of({family, i + 1});
    std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
    for (auto& [m, c] : f.terms()) {
        int p = m.e[a], r = m.e[b];
        if (p == r) continue;
        int lo = std::min(p, r), hi = std::max(p, r);
        mpq_class sc = p > r ? c : mpq_class(-c);
        Monomial base = m;
        for (int k = 0; k < hi - lo; ++k) {
            base.e[a] = static_cast<std::uint8_t>(lo + (hi - lo - 1 - k));
            base.e[b] = static_cast<std::uint8_t>(lo + k);
            acc[base] += sc;
        }
    }
    return Poly::from_map(n, acc);
}

/** d_{a1} d_{a2} ... d_{ap} f, applying d_{ap} first. */
inline Poly ddiff_word(const std::vector<int>& word, const Poly& f, Family family = Family::X)
{
    Poly g = f;
    for (auto it = word.rbegin(); it != word.rend() && !g.is_zero(); ++it) g = ddiff(*it, g, family);
    return g;
}

inline Poly ddiff_w(const Perm& w, const Poly& f, Family family = Family::X)
{
    return ddiff_word(w.reduced_word(), f, family);
}

/** Constant term with respect to x and y. */
inline Poly eta(const Poly& f)
{
    return f.filter([](const Monomial& m) {
        for (int s = kXOff; s < kQOff; ++s)
            if (m.e[s]) return false;
        return true;
    });
}

inline Poly x_delta(int n) { return x_power(n, delta(n)); }

inline Poly classical_top_double(int n)
{
    Poly p(n, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j) p = p * (Poly::x(n, i) + Poly::y(n, j));
    return p;
}

inline Poly schubert_direct(const Perm& w)
{
    int n = w.n();
    return ddiff_w(w.inverse() * Perm::longest(n), x_delta(n));
}

namespace detail {

template <class Build>
const std::map<Perm, Poly>& cached_table(std::map<int, std::map<Perm, Poly>>& store, std::mutex& mu, int n,
                                         Build&& build)
{
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = store.find(n);
        if (it != store.end()) return it->second;
    }
    auto table = build(n);
    std::lock_guard<std::mutex> lock(mu);
    return store.emplace(n, std::move(table)).first->second;
}

/** Fill a table top-down: entry(w) = d_a entry(w s_a) with l(w s_a) = l(w) + 1. */
template <class Top>
std::map<Perm, Poly> descend_right(int n, Top&& top, Family family)
{
    std::map<Perm, Poly> t;
    Perm w0 = Perm::longest(n);
    t.emplace(w0, top);
    auto byLen = all_perms(n);
    std::sort(byLen.begin(), byLen.end(), [](const Perm& a, const Perm& b) { return a.length() > b.length(); });
    for (auto& w : byLen) {
        if (t.count(w)) continue;
        for (int a = 1; a < n; ++a)
            if (!w.right_descent(a)) {
                t.emplace(w, ddiff(a, t.at(w.times_transposition(a, a + 1)), family));
                break;
            }
    }
    return t;
}

}  // namespace detail

/** Schubert polynomials S_w(x) for all w in S_n. */
inline const std::map<Perm, Poly>& schubert_table(int n)
{
    static std::map<int, std::map<Perm, Poly>> store;
    static std::mutex mu;
    return detail::cached_table(store, mu, n, [](int m) { return detail::descend_right(m, x_delta(m), Family::X); });
}

inline const std::map<Perm, Poly>& double_schubert_table(int n)
{
    static std::map<int, std::map<Perm, Poly>> store;
    static std::mutex mu;
    return detail::cached_table(store, mu, n,
                                [](int m) { return detail::descend_right(m, classical_top_double(m), Family::X); });
}

inline Poly schubert(const Perm& w) { return schubert_table(w.n()).at(w); }
inline Poly double_schubert(const Perm& w) { return double_schubert_table(w.n()).at(w); }

/**
 * Schubert polynomial of an arbitrary permutation, by climbing to a dominant
 * permutation (whose Schubert polynomial is the monomial x^code) and
 * descending with divided differences. The context ring may be smaller
 * than the permutation's group as long as the variables fit.
 */
inline Poly schubert_dominant(const Perm& w, int ctx_n)
{
    std::vector<int> word;
    Perm cur = w;
    while (true) {
        auto c = cur.code();
        int i = 0;
        for (int k = 0; k + 1 < cur.n(); ++k)
            if (c[k] < c[k + 1]) {
                i = k + 1;
                break;
            }
        if (!i) break;
        word.push_back(i);
        cur = cur.times_transposition(i, i + 1);
    }
    auto c = cur.code();
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (static_cast<int>(c.size()) > ctx_n) throw std::out_of_range("Schubert polynomial needs more variables");
    Poly p = x_power(ctx_n, c);
    p = ddiff_word(word, p);
    return p;
}

/** <f, g> = d_{w0}(f g) */
inline Poly scalar_product(const Poly& f, const Poly& g)
{
    int n = f.n();
    return ddiff_w(Perm::longest(n), f * g);
}

}  // namespace qschub
