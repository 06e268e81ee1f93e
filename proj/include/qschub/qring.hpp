#pragma once

#include "divdiff.hpp"
#include "linalg.hpp"
#include "polyring.hpp"
#include "qsym.hpp"
#include "symgroup.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace qschub {

/** Bit i-1 set means q_i is specialized to zero. */
using QMask = unsigned;

inline QMask classical_mask(int n) { return n <= 1 ? 0u : (1u << (n - 1)) - 1; }
constexpr QMask kQuantum = 0;

/** Drop every term containing a masked q (first alphabet only). */
inline Poly apply_mask(const Poly& f, QMask mask)
{
    if (!mask) return f;
    return f.filter([mask](const Monomial& m) {
        for (int i = 0; i < kMaxN - 1; ++i)
            if ((mask >> i & 1u) && m.e[kQOff + i]) return false;
        return true;
    });
}

inline Poly quantum_e_masked(int n, int k, int m, QMask mask) { return apply_mask(quantum_e(n, k, m), mask); }

/**
 * Element of the quotient ring in a declared basis. Keys are exponent vectors
 * I with I_k <= n-k (monomial basis) or one-line permutations (Schubert basis).
 */
struct QuotientElement {
    enum class Basis { Monomial, QSchubert };
    Basis basis = Basis::Monomial;
    int n = 1;
    std::map<std::vector<int>, Poly> coeffs;

    Poly at(const std::vector<int>& key) const
    {
        auto it = coeffs.find(key);
        return it == coeffs.end() ? Poly(n) : it->second;
    }
    Poly at(const Perm& w) const { return at(w.one_line()); }

    void add(const std::vector<int>& key, const Poly& c)
    {
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const QuotientElement& o) const
    {
        return basis == o.basis && n == o.n && coeffs == o.coeffs;
    }

    /** Back to a polynomial, given the basis polynomials. */
    template <class BasisPoly>
    Poly to_poly(BasisPoly&& b) const
    {
        Poly r(n);
        for (auto& [k, c] : coeffs) r += c * b(k);
        return r;
    }
};

namespace detail {

/** Monomials of weighted degree d in the given slots. */
inline std::vector<Monomial> monomials_of_degree(int d, const std::vector<int>& slots)
{
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == slots.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        int w = slot_weight(slots[k]);
        for (int e = 0; e * w <= left; ++e) {
            cur.e[slots[k]] = static_cast<std::uint8_t>(e);
            rec(k + 1, left - e * w);
        }
        cur.e[slots[k]] = 0;
    };
    rec(0, d);
    return out;
}

inline bool x_part_under_staircase(const Monomial& m, int n)
{
    for (int i = 1; i <= n; ++i)
        if (m.x(i) > n - i) return false;
    return true;
}

inline Monomial x_part(const Monomial& m)
{
    Monomial r;
    for (int s = kXOff; s < kXOff + kMaxN; ++s) r.e[s] = m.e[s];
    return r;
}

inline Monomial non_x_part(const Monomial& m)
{
    Monomial r = m;
    for (int s = kXOff; s < kXOff + kMaxN; ++s) r.e[s] = 0;
    return r;
}

/**
 * Per-degree elimination in span{q^a x^K e~_i}. Sparse echelon rows over
 * columns ranked so that monomials outside the staircase come first.
 */
class LinearReducer {
public:
    LinearReducer(int n, QMask mask, int d) : n_(n)
    {
        std::vector<int> slots;
        for (int i = 1; i <= n; ++i) slots.push_back(kXOff + i - 1);
        for (int i = 1; i < n; ++i)
            if (!(mask >> (i - 1) & 1u)) slots.push_back(kQOff + i - 1);
        auto monos = monomials_of_degree(d, slots);
        std::stable_partition(monos.begin(), monos.end(),
                              [n](const Monomial& m) { return !x_part_under_staircase(m, n); });
        for (std::size_t c = 0; c < monos.size(); ++c) {
            rank_.emplace(monos[c], static_cast<int>(c));
            if (x_part_under_staircase(monos[c], n) && first_basis_ < 0) first_basis_ = static_cast<int>(c);
        }
        if (first_basis_ < 0) first_basis_ = static_cast<int>(monos.size());
        cols_ = monos;
        for (int i = 1; i <= n; ++i) {
            if (i > d) break;
            Poly e = quantum_e_masked(n, i, n, mask);
            for (auto& m : monomials_of_degree(d - i, slots)) insert(e.mul_term(m, 1));
        }
        for (auto& [c, row] : pivots_)
            if (c >= first_basis_) throw std::logic_error("relation among staircase monomials");
    }

    /** Normal form of a homogeneous polynomial of this degree in x and unmasked q. */
    Poly reduce(const Poly& f) const
    {
        std::map<int, mpq_class> v = vectorize(f);
        while (!v.empty() && v.begin()->first < first_basis_) {
            if (v.begin()->second == 0) {
                v.erase(v.begin());
                continue;
            }
            auto p = pivots_.find(v.begin()->first);
            if (p == pivots_.end()) throw std::logic_error("staircase monomials do not span the quotient");
            mpq_class f0 = v.begin()->second;
            for (auto& [c, a] : p->second) v[c] -= f0 * a;
        }
        std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
        for (auto& [c, a] : v)
            if (a != 0) acc[cols_[c]] += a;
        return Poly::from_map(n_, acc);
    }

private:
    std::map<int, mpq_class> vectorize(const Poly& f) const
    {
        std::map<int, mpq_class> v;
        for (auto& [m, c] : f.terms()) {
            auto it = rank_.find(m);
            if (it == rank_.end()) throw std::invalid_argument("term outside the reducer's degree or variables");
            v[it->second] += c;
        }
        return v;
    }

    void insert(const Poly& g)
    {
        std::map<int, mpq_class> v = vectorize(g);
        while (true) {
            while (!v.empty() && v.begin()->second == 0) v.erase(v.begin());
            if (v.empty()) return;
            auto p = pivots_.find(v.begin()->first);
            if (p == pivots_.end()) break;
            mpq_class f0 = v.begin()->second;
            for (auto& [c, a] : p->second) v[c] -= f0 * a;
        }
        for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
        mpq_class inv = 1 / v.begin()->second;
        for (auto& [c, a] : v) a *= inv;
        pivots_.emplace(v.begin()->first, std::move(v));
    }

    int n_;
    int first_basis_ = -1;
    std::vector<Monomial> cols_;
    std::unordered_map<Monomial, int, MonomialHash> rank_;
    std::map<int, std::map<int, mpq_class>> pivots_;
};

struct XKey {
    std::array<std::uint8_t, kMaxN> a{};
    auto operator<=>(const XKey&) const = default;
};

inline XKey xkey(const Monomial& m, int off)
{
    XKey k;
    for (int i = 0; i < kMaxN; ++i) k.a[i] = m.e[off + i];
    return k;
}

}  // namespace detail

/**
 * Normal form modulo the (possibly partially degenerate) quantum ideal,
 * with respect to the staircase basis {x^I : I_k <= n-k}. Each x_j^{n+1-j}
 * is replaced by its normal form; the leading powers are coprime, so the
 * rewriting is confluent. Non-x variables are carried along as coefficients.
 */
class NormalFormEngine {
public:
    NormalFormEngine(int n, QMask mask) : n_(n), mask_(mask)
    {
        Poly::check_n(n);
        for (int j = 1; j <= n; ++j) {
            int k = n + 1 - j;
            detail::LinearReducer red(n, mask, k);
            tails_.push_back(red.reduce(Poly::var(n, X(j), k)));
        }
    }

    int n() const { return n_; }
    QMask mask() const { return mask_; }

    /** Normal form of x_j^{n+1-j}. */
    const Poly& tail(int j) const { return tails_.at(j - 1); }

    Poly reduce(const Poly& f) const
    {
        f.same_context(Poly(n_));
        Poly g = apply_mask(f, mask_);
        std::map<Monomial, Poly, MonoLess> groups;
        for (auto& [m, c] : g.terms()) {
            Monomial rest = detail::non_x_part(m);
            auto [it, fresh] = groups.try_emplace(rest, Poly(n_));
            it->second += Poly::monomial(n_, detail::x_part(m), c);
        }
        std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
        for (auto& [rest, xpoly] : groups)
            for (auto& [xm, c] : xpoly.terms())
                for (Poly red = reduce_monomial(xm); auto& [m, a] : red.terms()) acc[m * rest] += c * a;
        return Poly::from_map(n_, acc);
    }

    /** Normal form of a pure x-monomial. */
    Poly reduce_monomial(const Monomial& xm) const
    {
        detail::XKey key = detail::xkey(xm, kXOff);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        Poly r(n_);
        int j = 0;
        for (int i = n_; i >= 1; --i)
            if (xm.x(i) > n_ - i) {
                j = i;
                break;
            }
        if (!j) {
            r = Poly::monomial(n_, xm);
        } else {
            Monomial rest = xm;
            rest.e[kXOff + j - 1] = static_cast<std::uint8_t>(rest.e[kXOff + j - 1] - (n_ + 1 - j));
            std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
            for (auto& [tm, tc] : tails_[j - 1].terms()) {
                Monomial prod = rest * detail::x_part(tm);
                Monomial qpart = detail::non_x_part(tm);
                for (Poly red = reduce_monomial(prod); auto& [m, a] : red.terms()) acc[m * qpart] += tc * a;
            }
            r = Poly::from_map(n_, acc);
        }
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(key, r);
        return r;
    }

private:
    struct MonoLess {
        bool operator()(const Monomial& a, const Monomial& b) const { return a.e < b.e; }
    };

    int n_;
    QMask mask_;
    std::vector<Poly> tails_;
    mutable std::mutex mu_;
    mutable std::map<detail::XKey, Poly> memo_;
};

inline const NormalFormEngine& nf_engine(int n, QMask mask = kQuantum)
{
    static std::map<std::pair<int, QMask>, std::unique_ptr<NormalFormEngine>> store;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = store.find({n, mask});
        if (it != store.end()) return *it->second;
    }
    auto e = std::make_unique<NormalFormEngine>(n, mask);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = store.emplace(std::make_pair(n, mask), std::move(e));
    return *it->second;
}

/** Normal form as a polynomial in the staircase monomials. */
inline Poly normal_form_poly(const Poly& f, QMask mask = kQuantum) { return nf_engine(f.n(), mask).reduce(f); }

/** Normal form by direct per-degree linear algebra; x and q variables only. */
inline Poly normal_form_linear(const Poly& f, QMask mask = kQuantum)
{
    int n = f.n();
    Poly g = apply_mask(f, mask);
    Poly r(n);
    static std::map<std::tuple<int, QMask, int>, std::shared_ptr<detail::LinearReducer>> store;
    static std::mutex mu;
    for (int d : g.degrees()) {
        std::shared_ptr<detail::LinearReducer> red;
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = store.find({n, mask, d});
            if (it != store.end()) red = it->second;
        }
        if (!red) {
            red = std::make_shared<detail::LinearReducer>(n, mask, d);
            std::lock_guard<std::mutex> lock(mu);
            store.emplace(std::make_tuple(n, mask, d), red);
        }
        r += red->reduce(g.component(d));
    }
    return r;
}

inline QuotientElement to_monomial_coords(const Poly& nf)
{
    QuotientElement e;
    e.n = nf.n();
    for (auto& [m, c] : nf.terms())
        e.add(x_exponents(m, nf.n()), Poly::monomial(nf.n(), detail::non_x_part(m), c));
    return e;
}

inline QuotientElement normal_form(const Poly& f, QMask mask = kQuantum)
{
    return to_monomial_coords(normal_form_poly(f, mask));
}

/** Product in the quotient. */
inline Poly qmul(const Poly& f, const Poly& g, QMask mask = kQuantum)
{
    auto& e = nf_engine(f.n(), mask);
    return e.reduce(e.reduce(f) * e.reduce(g));
}

/** Residue: the coefficient of x^delta in the normal form. */
inline Poly residue(const Poly& f, QMask mask = kQuantum)
{
    int n = f.n();
    Poly nf = normal_form_poly(f, mask);
    Monomial top;
    for (int i = 1; i <= n; ++i) top.e[kXOff + i - 1] = static_cast<std::uint8_t>(n - i);
    Poly r(n);
    for (auto& [m, c] : nf.terms())
        if (detail::x_part(m) == top) r += Poly::monomial(n, detail::non_x_part(m), c);
    return r;
}

inline Poly residue(const Poly& f, bool quantum) { return residue(f, quantum ? kQuantum : classical_mask(f.n())); }

inline Poly qpair(const Poly& f, const Poly& g, QMask mask = kQuantum)
{
    auto& e = nf_engine(f.n(), mask);
    return residue(e.reduce(f) * e.reduce(g), mask);
}

inline Poly qpair(const Poly& f, const Poly& g, bool quantum)
{
    return qpair(f, g, quantum ? kQuantum : classical_mask(f.n()));
}

/** det(d e~_i / d x_j) */
inline Poly jacobian(int n, QMask mask = kQuantum)
{
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly(n)));
    for (int i = 1; i <= n; ++i) {
        Poly e = quantum_e_masked(n, i, n, mask);
        for (int j = 1; j <= n; ++j) M[i - 1][j - 1] = e.derivative(X(j));
    }
    return det(M, n);
}

/**
 * Residue through the Jacobian: f is compared with H / n! on the top
 * staircase monomial, where H = det(d e~_i / d x_j).
 */
inline Poly residue_via_jacobian(const Poly& f, QMask mask = kQuantum)
{
    int n = f.n();
    Poly h = residue(jacobian(n, mask), mask);
    if (!h.is_constant() || h.constant_term() == 0) throw std::logic_error("Jacobian has no constant top coefficient");
    mpz_class fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return residue(f, mask) * mpq_class(fact / h.constant_term());
}

/**
 * Reduction modulo J~ = (e~_i(x|q) + (-1)^{i-1} e_i(y)), i.e. e~_i(x) = e_i(-y).
 * The quotient is free over Z[x,q] on {y^I : I_k <= n-k}; y_j^{n+1-j} is
 * rewritten with sum_{i=0}^{k} e~_i(x) h_{k-i}(y_1..y_j) = 0 for k = n+1-j.
 */
class EquivariantReducer {
public:
    EquivariantReducer(int n, QMask mask) : n_(n)
    {
        for (int j = 1; j <= n; ++j) {
            int k = n + 1 - j;
            Poly rel(n);
            for (int i = 0; i <= k; ++i) {
                Poly e = i == 0 ? Poly(n, 1) : quantum_e_masked(n, i, n, mask);
                Poly h = complete(n, k - i, ys(1, j));
                rel += e * h;
            }
            tails_.push_back(Poly::var(n, Y(j), k) - rel);
        }
    }

    Poly reduce(const Poly& f) const
    {
        std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
        for (auto& [m, c] : f.terms()) {
            Monomial ym, rest = m;
            for (int i = 0; i < kMaxN; ++i) {
                ym.e[kYOff + i] = m.e[kYOff + i];
                rest.e[kYOff + i] = 0;
            }
            for (Poly red = reduce_monomial(ym); auto& [r, a] : red.terms()) acc[r * rest] += c * a;
        }
        return Poly::from_map(n_, acc);
    }

    Poly reduce_monomial(const Monomial& ym) const
    {
        detail::XKey key = detail::xkey(ym, kYOff);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        int j = 0;
        for (int i = n_; i >= 1; --i)
            if (ym.y(i) > n_ - i) {
                j = i;
                break;
            }
        Poly r(n_);
        if (!j) {
            r = Poly::monomial(n_, ym);
        } else {
            Monomial rest = ym;
            rest.e[kYOff + j - 1] = static_cast<std::uint8_t>(rest.e[kYOff + j - 1] - (n_ + 1 - j));
            std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
            for (auto& [tm, tc] : tails_[j - 1].terms()) {
                Monomial yp, other = tm;
                for (int i = 0; i < kMaxN; ++i) {
                    yp.e[kYOff + i] = tm.e[kYOff + i];
                    other.e[kYOff + i] = 0;
                }
                for (Poly red = reduce_monomial(rest * yp); auto& [m, a] : red.terms()) acc[m * other] += tc * a;
            }
            r = Poly::from_map(n_, acc);
        }
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(key, r);
        return r;
    }

private:
    int n_;
    std::vector<Poly> tails_;
    mutable std::mutex mu_;
    mutable std::map<detail::XKey, Poly> memo_;
};

inline const EquivariantReducer& equivariant_reducer(int n, QMask mask = kQuantum)
{
    static std::map<std::pair<int, QMask>, std::unique_ptr<EquivariantReducer>> store;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = store.find({n, mask});
        if (it != store.end()) return *it->second;
    }
    auto e = std::make_unique<EquivariantReducer>(n, mask);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = store.emplace(std::make_pair(n, mask), std::move(e));
    return *it->second;
}

/** f = sum_I c_I(x,q) y^I mod J~; f lies in J~ iff the result is zero. Keys are the y-exponents. */
inline QuotientElement reduce_equivariant(const Poly& f, QMask mask = kQuantum)
{
    int n = f.n();
    if (n > 4) throw std::out_of_range("equivariant reduction supports n <= 4");
    Poly r = equivariant_reducer(n, mask).reduce(f);
    QuotientElement e;
    e.n = n;
    for (auto& [m, c] : r.terms()) {
        std::vector<int> I(n);
        Monomial rest = m;
        for (int i = 0; i < n; ++i) {
            I[i] = m.e[kYOff + i];
            rest.e[kYOff + i] = 0;
        }
        e.add(I, Poly::monomial(n, rest, c));
    }
    return e;
}

}  // namespace qschub
