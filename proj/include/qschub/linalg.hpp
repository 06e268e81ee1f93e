#pragma once

#include "polyring.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qschub {

/** Determinant of a square matrix of polynomials by cofactor expansion over column subsets. */
inline Poly det(const std::vector<std::vector<Poly>>& a, int n_ctx)
{
    int m = static_cast<int>(a.size());
    if (m == 0) return Poly(n_ctx, 1);
    if (m > 20) throw std::invalid_argument("matrix too large for cofactor determinant");
    // minors[mask] = determinant of rows (m - popcount(mask))..m-1 with columns in mask
    std::map<unsigned, Poly> cur;
    for (int c = 0; c < m; ++c)
        if (!a[m - 1][c].is_zero()) cur.emplace(1u << c, a[m - 1][c]);
    for (int r = m - 2; r >= 0; --r) {
        std::map<unsigned, Poly> next;
        for (auto& [mask, minor] : cur)
            for (int c = 0; c < m; ++c) {
                if (mask & (1u << c) || a[r][c].is_zero()) continue;
                int below = __builtin_popcount(mask & ((1u << c) - 1));
                Poly term = a[r][c] * minor;
                if (below & 1) term = -term;
                auto [it, fresh] = next.emplace(mask | (1u << c), term);
                if (!fresh) it->second += term;
            }
        cur = std::move(next);
    }
    auto it = cur.find((1u << m) - 1);
    return it == cur.end() ? Poly(n_ctx) : it->second;
}

/** Dense matrix over Q with reduced row echelon form. */
struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<mpq_class>> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(r, std::vector<mpq_class>(c)) {}

    /** In-place RREF; returns pivot columns. Columns are scanned in the given priority order. */
    std::vector<int> rref(const std::vector<int>& col_order = {})
    {
        std::vector<int> order = col_order;
        if (order.empty())
            for (int c = 0; c < cols; ++c) order.push_back(c);
        std::vector<int> pivots;
        int r = 0;
        for (int c : order) {
            if (r == rows) break;
            int p = -1;
            for (int i = r; i < rows; ++i)
                if (a[i][c] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            std::swap(a[p], a[r]);
            mpq_class inv = 1 / a[r][c];
            for (auto& v : a[r]) v *= inv;
            for (int i = 0; i < rows; ++i) {
                if (i == r || a[i][c] == 0) continue;
                mpq_class f = a[i][c];
                for (int k = 0; k < cols; ++k)
                    if (a[r][k] != 0) a[i][k] -= f * a[r][k];
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }
};

/**
 * Solve A z = b exactly. Returns nullopt when inconsistent; otherwise one
 * solution (free variables zero) plus the dimension of the null space.
 */
struct LinearSolution {
    std::vector<mpq_class> z;
    int nullity = 0;
    std::vector<std::vector<mpq_class>> kernel;
};

inline std::optional<LinearSolution> solve_linear(const std::vector<std::vector<mpq_class>>& A,
                                                  const std::vector<mpq_class>& b, int unknowns)
{
    int m = static_cast<int>(A.size());
    QMatrix M(m, unknowns + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < unknowns; ++j) M.a[i][j] = A[i][j];
        M.a[i][unknowns] = b[i];
    }
    std::vector<int> order;
    for (int j = 0; j < unknowns; ++j) order.push_back(j);
    auto piv = M.rref(order);
    int rank = static_cast<int>(piv.size());
    for (int i = rank; i < m; ++i)
        if (M.a[i][unknowns] != 0) return std::nullopt;
    LinearSolution s;
    s.z.assign(unknowns, 0);
    for (int r = 0; r < rank; ++r) s.z[piv[r]] = M.a[r][unknowns];
    s.nullity = unknowns - rank;
    std::vector<bool> isPiv(unknowns, false);
    for (int c : piv) isPiv[c] = true;
    for (int f = 0; f < unknowns; ++f) {
        if (isPiv[f]) continue;
        std::vector<mpq_class> v(unknowns, 0);
        v[f] = 1;
        for (int r = 0; r < rank; ++r) v[piv[r]] = -M.a[r][f];
        s.kernel.push_back(std::move(v));
    }
    return s;
}

/**
 * Incremental sparse row echelon form over Q. Rows carry their combination
 * of the inserted generators, so a reduced target can be written back in
 * terms of the generators.
 */
class SparseEchelon {
public:
    using Vec = std::map<int, mpq_class>;

    /** Insert generator `tag`; returns false if it was dependent on earlier ones. */
    bool insert(Vec v, int tag)
    {
        Vec comb{{tag, 1}};
        sweep(v, comb, nullptr);
        if (v.empty()) return false;
        mpq_class inv = 1 / v.begin()->second;
        for (auto& [c, a] : v) a *= inv;
        for (auto& [c, a] : comb) a *= inv;
        int lead = v.begin()->first;
        rows_.emplace(lead, Row{std::move(v), std::move(comb)});
        return true;
    }

    /** Write target = sum comb[tag] * generator[tag] + residual. */
    std::pair<Vec, Vec> reduce(Vec v) const
    {
        Vec comb, residual;
        sweep(v, comb, &residual);
        for (auto& [t, a] : comb) a = -a;
        return {residual, comb};
    }

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        Vec v, comb;
    };

    static void axpy(Vec& y, const mpq_class& f, const Vec& x)
    {
        for (auto& [c, a] : x) {
            auto [it, fresh] = y.emplace(c, 0);
            it->second -= f * a;
            if (it->second == 0) y.erase(it);
        }
    }

    void sweep(Vec& v, Vec& comb, Vec* residual) const
    {
        for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
        while (!v.empty()) {
            auto lead = v.begin();
            auto p = rows_.find(lead->first);
            if (p == rows_.end()) {
                if (!residual) return;
                residual->emplace(lead->first, lead->second);
                v.erase(lead);
                continue;
            }
            mpq_class f = lead->second;
            axpy(v, f, p->second.v);
            axpy(comb, f, p->second.comb);
        }
    }

    std::map<int, Row> rows_;
};

}  // namespace qschub
