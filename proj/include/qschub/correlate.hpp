#pragma once

#include "linalg.hpp"
#include "polyring.hpp"
#include "qpieri.hpp"
#include "qring.hpp"
#include "qschub.hpp"
#include "qsym.hpp"
#include "symgroup.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschub {

inline mpz_class factorial(int n)
{
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/** n! S~_{w0} */
inline Poly top_multiple(int n) { return qschubert(Perm::longest(n)) * mpq_class(factorial(n)); }

/**
 * Phi = det(d e~_i / d x_j), which is congruent to C(x,x) and to sum_w S~_w S~_{w0 w}.
 * Equal to n! S~_{w0} modulo the ideal for n <= 3; at n = 4 the difference is 8 q1 q2 q3.
 */
inline Poly phi(int n, QMask mask = kQuantum) { return jacobian(n, mask); }

/** <P>_g = Res(P Phi^g) */
inline Poly correlator(const Poly& P, int g, QMask mask = kQuantum)
{
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    auto& e = nf_engine(P.n(), mask);
    Poly f = e.reduce(P);
    Poly ph = e.reduce(phi(P.n(), mask));
    for (int k = 0; k < g; ++k) f = e.reduce(f * ph);
    return residue(f, mask);
}

inline Poly three_point(const Perm& u, const Perm& v, const Perm& w, QMask mask = kQuantum)
{
    return residue(qmul(qmul(qschubert(u), qschubert(v), mask), qschubert(w), mask), mask);
}

/** sum_w <P S~_w S~_{w0 w}>_{g-1} */
inline Poly correlator_by_recursion(const Poly& P, int g, QMask mask = kQuantum)
{
    if (g < 1) throw std::invalid_argument("recursion needs genus >= 1");
    int n = P.n();
    Perm w0 = Perm::longest(n);
    Poly r(n);
    for (auto& [w, s] : qschubert_table(n)) r += correlator(qmul(P * s, qschubert(w0 * w), mask), g - 1, mask);
    return r;
}

// ---------------------------------------------------------------------------
// three-point functions

/** T[u][v][w] = <S~_u S~_v S~_w>, through structure constants and the pairing. */
class ThreePointTable {
public:
    explicit ThreePointTable(int n, QMask mask = kQuantum) : n_(n), perms_(perms_by_code(n))
    {
        for (std::size_t i = 0; i < perms_.size(); ++i) index_.emplace(perms_[i], static_cast<int>(i));
        std::size_t N = perms_.size();
        table_.assign(N * N * N, Poly(n));
        auto& eng = nf_engine(n, mask);
        std::vector<Poly> nf;
        for (auto& p : perms_) nf.push_back(eng.reduce(qschubert(p)));
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = a; b < N; ++b) {
                Poly ab = eng.reduce(nf[a] * nf[b]);
                for (std::size_t c = 0; c < N; ++c) {
                    Poly r = residue(ab * nf[c], mask);
                    for (auto [i, j, k] : {std::tuple{a, b, c}, {b, a, c}, {a, c, b}, {b, c, a}, {c, a, b}, {c, b, a}})
                        table_[(i * N + j) * N + k] = r;
                }
            }
    }

    const Poly& at(const Perm& u, const Perm& v, const Perm& w) const
    {
        std::size_t N = perms_.size();
        return table_[(index_.at(u) * N + index_.at(v)) * N + index_.at(w)];
    }
    const std::vector<Perm>& perms() const { return perms_; }
    int n() const { return n_; }

private:
    int n_;
    std::vector<Perm> perms_;
    std::map<Perm, std::size_t> index_;
    std::vector<Poly> table_;
};

struct WdvvReport {
    long checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline bool wdvv_holds(const ThreePointTable& T, const Perm& w1, const Perm& w2, const Perm& w3, const Perm& w4)
{
    int n = T.n();
    Perm w0 = Perm::longest(n);
    Poly lhs(n), rhs(n);
    for (auto& v : T.perms()) {
        lhs += T.at(w1, w2, v) * T.at(w0 * v, w3, w4);
        rhs += T.at(w2, w3, v) * T.at(w0 * v, w1, w4);
    }
    return lhs == rhs;
}

/** All quadruples if samples == 0, else that many random ones. */
inline WdvvReport wdvv_check(const ThreePointTable& T, long samples = 0, unsigned seed = 1)
{
    WdvvReport rep;
    auto& P = T.perms();
    auto name = [](const Perm& a, const Perm& b, const Perm& c, const Perm& d) {
        return a.str() + " " + b.str() + " " + c.str() + " " + d.str();
    };
    if (samples == 0) {
        for (auto& a : P)
            for (auto& b : P)
                for (auto& c : P)
                    for (auto& d : P) {
                        ++rep.checked;
                        if (!wdvv_holds(T, a, b, c, d)) rep.failures.push_back(name(a, b, c, d));
                    }
        return rep;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, P.size() - 1);
    for (long s = 0; s < samples; ++s) {
        auto &a = P[pick(rng)], &b = P[pick(rng)], &c = P[pick(rng)], &d = P[pick(rng)];
        ++rep.checked;
        if (!wdvv_holds(T, a, b, c, d)) rep.failures.push_back(name(a, b, c, d));
    }
    return rep;
}

/** <S~_u S~_v S~_w> vanishes unless the excess over l(w0) is even and nonnegative, and is then homogeneous of that q-degree. */
inline WdvvReport degree_check(const ThreePointTable& T)
{
    WdvvReport rep;
    int top = Perm::longest(T.n()).length();
    for (auto& u : T.perms())
        for (auto& v : T.perms())
            for (auto& w : T.perms()) {
                ++rep.checked;
                int ex = u.length() + v.length() + w.length() - top;
                const Poly& c = T.at(u, v, w);
                if (c.is_zero()) continue;
                auto d = c.weighted_degree();
                if (ex < 0 || ex % 2 || !d || *d != ex)
                    rep.failures.push_back(u.str() + " " + v.str() + " " + w.str() + ": " + c.str());
            }
    return rep;
}

// ---------------------------------------------------------------------------
// characteristic polynomials

/** Matrix of multiplication by x_i on the S~ basis (columns in code order): column w holds x_i S~_w. */
inline std::vector<std::vector<Poly>> multiplication_matrix(int n, int i, QMask mask = kQuantum)
{
    auto perms = perms_by_code(n);
    std::map<Perm, int> idx;
    for (std::size_t k = 0; k < perms.size(); ++k) idx.emplace(perms[k], static_cast<int>(k));
    std::size_t N = perms.size();
    std::vector<std::vector<Poly>> M(N, std::vector<Poly>(N, Poly(n)));
    for (std::size_t c = 0; c < N; ++c)
        for (auto& [w, a] : times_x({{perms[c], Poly(n, 1)}}, i, mask)) M[idx.at(w)][c] = a;
    return M;
}

/** det(t - A) by Faddeev-LeVerrier; returns the coefficients c_0..c_N (c_N = 1). */
inline std::vector<Poly> char_poly_coefficients(const std::vector<std::vector<Poly>>& A, int n)
{
    std::size_t N = A.size();
    auto mul = [&](const std::vector<std::vector<Poly>>& X, const std::vector<std::vector<Poly>>& Y) {
        std::vector<std::vector<Poly>> Z(N, std::vector<Poly>(N, Poly(n)));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                if (X[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < N; ++j)
                    if (!Y[k][j].is_zero()) Z[i][j] += X[i][k] * Y[k][j];
            }
        return Z;
    };
    std::vector<Poly> c(N + 1, Poly(n));
    c[N] = Poly(n, 1);
    std::vector<std::vector<Poly>> M(N, std::vector<Poly>(N, Poly(n)));  // M_0 = 0
    for (std::size_t k = 1; k <= N; ++k) {
        for (std::size_t i = 0; i < N; ++i) M[i][i] += c[N - k + 1];
        auto AM = mul(A, M);
        Poly tr(n);
        for (std::size_t i = 0; i < N; ++i) tr += AM[i][i];
        c[N - k] = tr * mpq_class(-1, static_cast<long>(k));
        M = std::move(AM);
    }
    return c;
}

/** f_i(t) = det(t - x_i) on the quotient, as a polynomial in t = t_1. */
inline Poly char_poly(int n, int i, QMask mask = kQuantum)
{
    auto c = char_poly_coefficients(multiplication_matrix(n, i, mask), n);
    Poly f(n);
    for (std::size_t k = 0; k < c.size(); ++k) f += c[k] * Poly::t(n).pow(static_cast<unsigned>(k));
    return f;
}

/** Coefficients of a polynomial in t_1 (other variables kept). */
inline std::vector<Poly> t_coefficients(const Poly& f)
{
    int d = f.degree_in(T(1));
    std::vector<Poly> c;
    for (int k = 0; k <= d; ++k) c.push_back(f.coeff_of(T(1), k));
    return c;
}

/** Replace t_1 by g. */
inline Poly substitute_t(const Poly& f, const Poly& g) { return f.substitute({{T(1), g}}); }

/** f(t) with t -> x_i. */
inline Poly at_x(const Poly& f, int i) { return substitute_t(f, Poly::x(f.n(), i)); }

/**
 * Sum over roots of f of R(mu)/f'(mu) for monic f in t: the coefficient of
 * t^{deg f - 1} in R mod f.
 */
inline Poly univariate_residue(const Poly& R, const Poly& f)
{
    auto fc = t_coefficients(f);
    int N = static_cast<int>(fc.size()) - 1;
    if (fc[N] != Poly(f.n(), 1)) throw std::invalid_argument("f must be monic in t");
    auto r = t_coefficients(R);
    for (int k = static_cast<int>(r.size()) - 1; k >= N; --k) {
        Poly lead = r[k];
        if (lead.is_zero()) continue;
        for (int j = 0; j <= N; ++j) r[k - N + j] -= lead * fc[j];
    }
    return N - 1 < static_cast<int>(r.size()) ? r[N - 1] : Poly(f.n());
}

// ---------------------------------------------------------------------------
// resolvents t/(t - x_i)

/** f(t) t/(t - x_i) in the S~ basis, using (f(t) - f(x_i))/(t - x_i). Result coefficients are polynomials in t, q. */
inline SchubertVector resolvent_expand(int n, int i, QMask mask = kQuantum)
{
    Poly f = char_poly(n, i, mask);
    auto c = t_coefficients(f);
    Poly t = Poly::t(n), x = Poly::x(n, i);
    Poly Q(n);
    for (std::size_t j = 1; j < c.size(); ++j)
        for (std::size_t a = 0; a < j; ++a)
            Q += c[j] * t.pow(static_cast<unsigned>(a)) * x.pow(static_cast<unsigned>(j - 1 - a));
    return quotient_eval(t * Q, mask);
}

// ---------------------------------------------------------------------------
// the generating function Psi and its differential equations

/** <x^nu> for nu in [0, order]^{n-1}, keyed by nu. */
inline std::map<std::vector<int>, Poly> psi_series(int n, int order, QMask mask = kQuantum)
{
    std::map<std::vector<int>, Poly> out;
    std::vector<int> nu(n - 1, 0);
    while (true) {
        std::vector<int> a(nu);
        a.push_back(0);
        Poly c = correlator(x_power(n, a), 0, mask);
        if (!c.is_zero()) out.emplace(nu, c);
        int k = 0;
        while (k < n - 1 && nu[k] == order) nu[k++] = 0;
        if (k == n - 1) break;
        ++nu[k];
    }
    return out;
}

/** c t^e */
struct TermT {
    mpq_class c;
    int e = 0;
};

/** (N+1) x (N+1) matrix of single t-powers; row r stands for x^r. */
using TMatrix = std::vector<std::vector<TermT>>;

/** v_0 = t (t - x)^N, v_k = (-1)^k k! x (t - x)^{N-k}, as polynomials in x = x_1, t = t_1. */
inline std::vector<Poly> resolvent_vector(int N)
{
    int ctx = 2;
    Poly x = Poly::x(ctx, 1), t = Poly::t(ctx), u = t - x;
    std::vector<Poly> v;
    v.push_back(t * u.pow(N));
    mpz_class f = 1;
    for (int k = 1; k <= N; ++k) {
        f *= k;
        v.push_back(x * u.pow(N - k) * mpq_class((k & 1) ? -f : f));
    }
    return v;
}

/** Check x^r = sum_k C_{rk} v_k for every row, as an identity in x and t. */
inline bool c_matrix_identity(const TMatrix& C)
{
    int N = static_cast<int>(C.size()) - 1;
    auto v = resolvent_vector(N);
    int shift = 0;
    for (auto& row : C)
        for (auto& e : row)
            if (e.c != 0) shift = std::max(shift, -e.e);
    Poly x = Poly::x(2, 1), t = Poly::t(2);
    for (int r = 0; r <= N; ++r) {
        Poly s(2);
        for (int k = 0; k <= N; ++k)
            if (C[r][k].c != 0) s += v[k] * t.pow(C[r][k].e + shift) * C[r][k].c;
        if (s != x.pow(r) * t.pow(shift)) return false;
    }
    return true;
}

/** The closed form with size parameter m: row 1 from the first rule, rows >= 2 from the binomial rule. */
inline TMatrix c_matrix_closed_form(int N, int m)
{
    TMatrix C(N + 1, std::vector<TermT>(N + 1));
    for (int i = 1; i <= N + 1; ++i)
        for (int j = 1; j <= N + 1; ++j) {
            mpq_class inv_fact(1, factorial(j - 1));
            if (i == 1) {
                C[0][j - 1] = {((j - 1) & 1 ? -inv_fact : inv_fact), m - j + 2};
            } else if (i + j >= m + 2 && m - j + 1 >= 0 && i - 2 >= m - j + 1) {
                mpz_class bin;
                mpz_bin_uiui(bin.get_mpz_t(), i - 2, m - j + 1);
                mpq_class c = inv_fact * bin;
                C[i - 1][j - 1] = {(m & 1) ? mpq_class(-c) : c, j - 2};
            }
        }
    return C;
}

/** C solved from the identity; by homogeneity C_{rk} = c_{rk} t^{r - deg v_k}. */
inline TMatrix c_matrix_solved(int N)
{
    auto v = resolvent_vector(N);
    std::vector<Poly> v1;
    for (auto& p : v) v1.push_back(p.substitute({{T(1), Poly(2, 1)}}));
    TMatrix C(N + 1, std::vector<TermT>(N + 1));
    for (int r = 0; r <= N; ++r) {
        std::vector<std::vector<mpq_class>> A(N + 2, std::vector<mpq_class>(N + 1));
        std::vector<mpq_class> b(N + 2);
        for (int k = 0; k <= N; ++k)
            for (auto& [m, c] : v1[k].terms()) A[m.x(1)][k] += c;
        b[r] = 1;
        auto sol = solve_linear(A, b, N + 1);
        if (!sol || sol->nullity) throw std::logic_error("resolvent identity is not uniquely solvable");
        for (int k = 0; k <= N; ++k) C[r][k] = {sol->z[k], r - (k == 0 ? N + 1 : N - k + 1)};
    }
    return C;
}

/** A differential operator sum_k a_k(t) (d/dt)^k with a_k given as t-exponent -> coefficient. */
using DOperator = std::map<int, std::map<int, Poly>>;

/** D_i = (coefficients of f_i) . C . (1, d/dt, .., (d/dt)^N). */
inline DOperator d_operator(const Poly& f, const TMatrix& C)
{
    int n = f.n();
    auto fc = t_coefficients(f);
    DOperator D;
    int N = static_cast<int>(C.size()) - 1;
    if (static_cast<int>(fc.size()) != N + 1) throw std::invalid_argument("size mismatch");
    for (int r = 0; r <= N; ++r)
        for (int k = 0; k <= N; ++k) {
            if (C[r][k].c == 0 || fc[r].is_zero()) continue;
            Poly& slot = D[k].try_emplace(C[r][k].e, Poly(n)).first->second;
            slot += fc[r] * C[r][k].c;
            if (slot.is_zero()) D[k].erase(C[r][k].e);
        }
    for (auto it = D.begin(); it != D.end();) it = it->second.empty() ? D.erase(it) : std::next(it);
    return D;
}

/**
 * Apply D (acting on t_var) to a series sum_nu c_nu t^{-nu}. Returns the
 * coefficient map of the result keyed by the exponent vector of t^{-1}
 * (entries may be negative for positive powers).
 */
inline std::map<std::vector<int>, Poly> apply_d_operator(const DOperator& D, int var,
                                                         const std::map<std::vector<int>, Poly>& series)
{
    std::map<std::vector<int>, Poly> out;
    for (auto& [nu, c] : series) {
        int m = nu[var];
        for (auto& [k, coeffs] : D) {
            // (d/dt)^k t^{-m} = (-m)(-m-1)...(-m-k+1) t^{-m-k}
            mpq_class fall = 1;
            for (int a = 0; a < k; ++a) fall *= -m - a;
            if (fall == 0) continue;
            for (auto& [e, a] : coeffs) {
                auto key = nu;
                key[var] = m + k - e;
                auto [it, fresh] = out.try_emplace(key, c.n());
                it->second += a * c * fall;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/** Coefficients of D_i Psi that are determined by Psi truncated at `order` and do not vanish. */
inline std::map<std::vector<int>, Poly> d_operator_defect(int n, int i, int order, QMask mask = kQuantum)
{
    auto psi = psi_series(n, order, mask);
    Poly f = char_poly(n, i, mask);
    int N = t_coefficients(f).size() - 1;
    auto D = d_operator(f, c_matrix_solved(N));
    auto r = apply_d_operator(D, i - 1, psi);
    std::map<std::vector<int>, Poly> bad;
    for (auto& [nu, c] : r) {
        bool safe = nu[i - 1] <= order + 1;
        for (std::size_t k = 0; k < nu.size(); ++k)
            if (static_cast<int>(k) != i - 1 && nu[k] > order) safe = false;
        if (safe) bad.emplace(nu, c);
    }
    return bad;
}

// ---------------------------------------------------------------------------
// numeric evaluation through the roots of e~_1 = .. = e~_n = 0

using Complex = std::complex<double>;

inline Complex evaluate(const Poly& p, const std::vector<Complex>& x, const std::vector<double>& q)
{
    return p.evaluate<Complex>([&](int s) -> Complex {
        if (s >= kXOff && s < kXOff + static_cast<int>(x.size())) return x[s - kXOff];
        if (s >= kQOff && s < kQOff + static_cast<int>(q.size())) return q[s - kQOff];
        return 0.0;
    });
}

struct NumericRoots {
    std::vector<std::vector<Complex>> points;
    double max_residual = 0;
};

/**
 * All n! common zeros of e~_1..e~_n at numeric q: eigenvalues of the
 * companion matrix of f_1, the remaining coordinates from the common
 * eigenvector of the multiplication matrices, then Newton refinement.
 */
inline NumericRoots solve_quantum_system(int n, const std::vector<double>& q)
{
    if (static_cast<int>(q.size()) != n - 1) throw std::invalid_argument("need n-1 values of q");
    auto evq = [&](const Poly& p) { return evaluate(p, {}, q); };
    // companion matrix of f_1
    auto fc = t_coefficients(char_poly(n, 1));
    int N = static_cast<int>(fc.size()) - 1;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(N, N);
    for (int k = 1; k < N; ++k) comp(k, k - 1) = 1.0;
    for (int k = 0; k < N; ++k) comp(k, N - 1) = -evq(fc[k]);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue computation failed");
    std::vector<Eigen::MatrixXcd> M;
    for (int i = 1; i <= n; ++i) {
        auto A = multiplication_matrix(n, i);
        Eigen::MatrixXcd E(N, N);
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) E(r, c) = evq(A[r][c]);
        M.push_back(E);
    }
    std::vector<Poly> e, J;
    for (int k = 1; k <= n; ++k) e.push_back(quantum_e(n, k, n));
    std::vector<std::vector<Poly>> dJ(n, std::vector<Poly>(n, Poly(n)));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) dJ[k][j] = e[k].derivative(X(j + 1));
    NumericRoots out;
    for (int r = 0; r < N; ++r) {
        Complex mu = es.eigenvalues()(r);
        // Newton on f_1
        for (int it = 0; it < 50; ++it) {
            Complex f = 0, df = 0;
            for (int k = N; k >= 0; --k) {
                df = df * mu + f;
                f = f * mu + evq(fc[k]);
            }
            if (df == 0.0) break;
            Complex step = f / df;
            mu -= step;
            if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(mu))) break;
        }
        Eigen::MatrixXcd S = M[0] - mu * Eigen::MatrixXcd::Identity(N, N);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(S, Eigen::ComputeFullV);
        Eigen::VectorXcd v = svd.matrixV().col(N - 1);
        Eigen::Index piv;
        v.cwiseAbs().maxCoeff(&piv);
        std::vector<Complex> x(n);
        x[0] = mu;
        for (int i = 1; i < n; ++i) x[i] = (M[i] * v)(piv) / v(piv);
        // Newton on the full system
        for (int it = 0; it < 50; ++it) {
            Eigen::VectorXcd F(n);
            Eigen::MatrixXcd Jm(n, n);
            for (int k = 0; k < n; ++k) {
                F(k) = evaluate(e[k], x, q);
                for (int j = 0; j < n; ++j) Jm(k, j) = evaluate(dJ[k][j], x, q);
            }
            Eigen::VectorXcd dx = Jm.fullPivLu().solve(F);
            double sz = 0;
            for (int j = 0; j < n; ++j) {
                x[j] -= dx(j);
                sz = std::max(sz, std::abs(dx(j)));
            }
            if (sz < 1e-15) break;
        }
        double res = 0;
        for (int k = 0; k < n; ++k) res = std::max(res, std::abs(evaluate(e[k], x, q)));
        out.max_residual = std::max(out.max_residual, res);
        out.points.push_back(x);
    }
    for (auto& p : out.points)
        for (auto& p2 : out.points)
            if (&p != &p2) {
                double d = 0;
                for (int j = 0; j < n; ++j) d = std::max(d, std::abs(p[j] - p2[j]));
                if (d < 1e-8) throw std::runtime_error("root finding produced a repeated point");
            }
    if (out.max_residual > 1e-10) throw std::runtime_error("residual at a computed root is too large");
    return out;
}

/** sum over roots of P J^{g-1}, J = det(d e~_i / d x_j). */
inline double correlator_numeric(const Poly& P, int g, const std::vector<double>& q)
{
    int n = P.n();
    auto roots = solve_quantum_system(n, q);
    Poly J = jacobian(n);
    Complex s = 0;
    for (auto& x : roots.points) s += evaluate(P, x, q) * std::pow(evaluate(J, x, q), g - 1);
    if (std::abs(s.imag()) > 1e-6 * std::max(1.0, std::abs(s.real())))
        throw std::runtime_error("root sum is not real");
    return s.real();
}

inline double evaluate_real(const Poly& p, const std::vector<double>& q) { return evaluate(p, {}, q).real(); }

}  // namespace qschub
