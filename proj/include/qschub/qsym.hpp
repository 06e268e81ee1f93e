#pragma once

#include "linalg.hpp"
#include "polyring.hpp"

#include <stdexcept>
#include <vector>

namespace qschub {

/** e~_0 .. e~_m of x_1..x_m with q_1..q_{m-1}, by the three-term recurrence. */
inline std::vector<Poly> quantum_e_all(int n, int m)
{
    if (m < 0 || m > n) throw std::out_of_range("number of variables out of range");
    std::vector<std::vector<Poly>> E(m + 1);
    E[0] = {Poly(n, 1)};
    for (int N = 1; N <= m; ++N) {
        E[N].assign(N + 1, Poly(n));
        Poly xN = Poly::x(n, N);
        for (int k = 0; k <= N; ++k) {
            Poly v(n);
            if (k <= N - 1) v += E[N - 1][k];
            if (k >= 1) v += xN * E[N - 1][k - 1];
            if (N >= 2 && k >= 2 && k - 2 <= N - 2) v += Poly::q(n, N - 1) * E[N - 2][k - 2];
            E[N][k] = v;
        }
    }
    return E[m];
}

/** e~_k(x_1..x_m | q_1..q_{m-1}); zero outside 0 <= k <= m. */
inline Poly quantum_e(int n, int k, int m)
{
    if (k < 0 || k > m) return Poly(n);
    return quantum_e_all(n, m)[k];
}

/** Tridiagonal determinant with diagonal x_i + t, q_i above, -1 below. */
inline Poly delta_determinant(int n, int m, VarId t = T(1))
{
    std::vector<std::vector<Poly>> M(m, std::vector<Poly>(m, Poly(n)));
    for (int i = 0; i < m; ++i) {
        M[i][i] = Poly::x(n, i + 1) + Poly::var(n, t);
        if (i + 1 < m) {
            M[i][i + 1] = Poly::q(n, i + 1);
            M[i + 1][i] = Poly(n, -1);
        }
    }
    return det(M, n);
}

/** e~_k read off the determinant: coefficient of t^{m-k}. */
inline Poly quantum_e_det(int n, int k, int m)
{
    if (k < 0 || k > m) return Poly(n);
    return delta_determinant(n, m).coeff_of(T(1), m - k);
}

/** Delta_m(s | x_1..x_m) = sum_j s^{m-j} e~_j for a polynomial s. */
inline Poly Delta(int n, int m, const Poly& s)
{
    auto e = quantum_e_all(n, m);
    Poly r(n), sp(n, 1);
    for (int j = m; j >= 0; --j) {
        r += sp * e[j];
        sp = sp * s;
    }
    return r;
}

/** h~_k(x_1..x_m) = det(e~_{j-i+1}) */
inline Poly quantum_h(int n, int k, int m)
{
    if (k < 0) return Poly(n);
    if (k == 0) return Poly(n, 1);
    auto e = quantum_e_all(n, m);
    auto ent = [&](int j) { return (j < 0 || j > m) ? Poly(n) : e[j]; };
    std::vector<std::vector<Poly>> M(k, std::vector<Poly>(k, Poly(n)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) M[i][j] = ent(j - i + 1);
    return det(M, n);
}

/**
 * det(e~^{m+k-i}_{j-i+1}): the form of h~_k(x_1..x_m) that is the
 * quantization of h_k(x_1..x_m). Needs m + k - 1 <= n.
 */
inline Poly quantum_h_stable(int n, int k, int m)
{
    if (k < 0) return Poly(n);
    if (k == 0) return Poly(n, 1);
    if (m + k - 1 > n) throw std::out_of_range("number of variables out of range");
    std::vector<std::vector<Poly>> M(k, std::vector<Poly>(k, Poly(n)));
    for (int i = 1; i <= k; ++i) {
        auto e = quantum_e_all(n, m + k - i);
        for (int j = 1; j <= k; ++j) {
            int d = j - i + 1;
            if (d >= 0 && d < static_cast<int>(e.size())) M[i - 1][j - 1] = e[d];
        }
    }
    return det(M, n);
}

/** h~_0..h~_k via inversion of sum_j t^j e~_j(-x). */
inline std::vector<Poly> quantum_h_series(int n, int k, int m)
{
    auto e = quantum_e_all(n, m);
    std::vector<std::pair<VarId, Poly>> neg;
    for (int i = 1; i <= m; ++i) neg.push_back({X(i), -Poly::x(n, i)});
    std::vector<Poly> a;
    for (auto& p : e) a.push_back(p.substitute(neg));
    std::vector<Poly> c{Poly(n, 1)};
    for (int d = 1; d <= k; ++d) {
        Poly s(n);
        for (int j = 1; j <= std::min(d, m); ++j) s += a[j] * c[d - j];
        c.push_back(-s);
    }
    return c;
}

enum class FactorKind { Elementary, Complete, QElementary, QComplete };

/**
 * e_I = prod_k e_{i_k}(x_1..x_{n-k}),   h_I = prod_k h_{i_k}(x_1..x_k),
 * and their quantum versions (h~ in the stable determinant form).
 */
inline Poly factor_poly(FactorKind kind, const std::vector<int>& I, int n)
{
    if (static_cast<int>(I.size()) > n) throw std::invalid_argument("index sequence too long");
    Poly r(n, 1);
    for (std::size_t kk = 0; kk < I.size(); ++kk) {
        int k = static_cast<int>(kk) + 1;
        int i = I[kk];
        if (i < 0) throw std::invalid_argument("negative index");
        if (i == 0) continue;
        switch (kind) {
        case FactorKind::Elementary:
            if (i > n - k) throw std::invalid_argument("index out of range");
            r = r * elementary(n, i, xs(1, n - k));
            break;
        case FactorKind::QElementary:
            if (i > n - k) throw std::invalid_argument("index out of range");
            r = r * quantum_e(n, i, n - k);
            break;
        case FactorKind::Complete:
            if (k > n) throw std::invalid_argument("index out of range");
            r = r * complete(n, i, xs(1, k));
            break;
        case FactorKind::QComplete:
            if (k > n) throw std::invalid_argument("index out of range");
            r = r * quantum_h_stable(n, i, k);
            break;
        }
    }
    return r;
}

/** Variable-reversing involution: x_i -> x_{n+1-i}, y_i -> y_{n+1-i}, q_i -> q_{n-i}. */
inline Poly omega(const Poly& f)
{
    int n = f.n();
    return f.map_monomials([n](const Monomial& m) {
        Monomial r = m;
        for (int i = 1; i <= n; ++i) {
            r.e[kXOff + i - 1] = m.e[kXOff + n - i];
            r.e[kYOff + i - 1] = m.e[kYOff + n - i];
        }
        for (int i = 1; i <= n - 1; ++i) {
            r.e[kQOff + i - 1] = m.e[kQOff + n - 1 - i];
            r.e[kQOff + n - 2 + i] = m.e[kQOff + 2 * n - 3 - (i - 1)];
        }
        return r;
    });
}

}  // namespace qschub
