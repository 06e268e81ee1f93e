#pragma once

#include "polyring.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschub {

/**
 * Permutation in one-line notation. Products are composition,
 * (u*v)(i) = u(v(i)); right multiplication by a transposition t_ij swaps
 * the entries in positions i and j.
 */
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> one_line) : w_(std::move(one_line))
    {
        std::vector<bool> seen(w_.size() + 1, false);
        for (int v : w_) {
            if (v < 1 || v > static_cast<int>(w_.size()) || seen[v])
                throw std::invalid_argument("not a permutation");
            seen[v] = true;
        }
    }

    static Perm identity(int n)
    {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Perm(std::move(w));
    }
    static Perm longest(int n)
    {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = n - i;
        return Perm(std::move(w));
    }
    static Perm transposition(int i, int j, int n)
    {
        Perm p = identity(n);
        std::swap(p.w_[i - 1], p.w_[j - 1]);
        return p;
    }
    static Perm simple(int i, int n) { return transposition(i, i + 1, n); }

    /** s_{a1} s_{a2} ... s_{ap} */
    static Perm from_word(const std::vector<int>& word, int n)
    {
        Perm p = identity(n);
        for (int a : word) {
            if (a < 1 || a >= n) throw std::invalid_argument("reflection index out of range");
            p = p.times_transposition(a, a + 1);
        }
        return p;
    }

    static Perm from_code(const std::vector<int>& c)
    {
        int n = static_cast<int>(c.size());
        std::vector<int> avail(n);
        std::iota(avail.begin(), avail.end(), 1);
        std::vector<int> w;
        for (int i = 0; i < n; ++i) {
            if (c[i] < 0 || c[i] > n - 1 - i) throw std::invalid_argument("code entry out of range");
            w.push_back(avail[c[i]]);
            avail.erase(avail.begin() + c[i]);
        }
        return Perm(std::move(w));
    }

    /** Accepts "2431", "2,4,3,1" or "id" (with n). */
    static Perm parse(const std::string& s, int n)
    {
        if (s == "id" || s == "e") return identity(n);
        std::vector<int> w;
        if (s.find(',') != std::string::npos) {
            std::size_t pos = 0;
            while (pos <= s.size()) {
                std::size_t next = s.find(',', pos);
                if (next == std::string::npos) next = s.size();
                w.push_back(std::stoi(s.substr(pos, next - pos)));
                pos = next + 1;
            }
        } else {
            for (char ch : s) {
                if (ch < '0' || ch > '9') throw std::invalid_argument("bad permutation text");
                w.push_back(ch - '0');
            }
        }
        if (static_cast<int>(w.size()) != n) throw std::invalid_argument("permutation size does not match n");
        return Perm(std::move(w));
    }

    static std::vector<int> parse_word(const std::string& s)
    {
        std::vector<int> word;
        if (s == "id" || s.empty()) return word;
        if (s.find(',') != std::string::npos) {
            std::size_t pos = 0;
            while (pos <= s.size()) {
                std::size_t next = s.find(',', pos);
                if (next == std::string::npos) next = s.size();
                word.push_back(std::stoi(s.substr(pos, next - pos)));
                pos = next + 1;
            }
            return word;
        }
        for (char ch : s) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("bad word text");
            word.push_back(ch - '0');
        }
        return word;
    }

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    Perm operator*(const Perm& v) const
    {
        if (n() != v.n()) throw std::invalid_argument("permutation size mismatch");
        std::vector<int> r(n());
        for (int i = 0; i < n(); ++i) r[i] = w_[v.w_[i] - 1];
        return Perm(std::move(r));
    }

    Perm inverse() const
    {
        std::vector<int> r(n());
        for (int i = 0; i < n(); ++i) r[w_[i] - 1] = i + 1;
        return Perm(std::move(r));
    }

    Perm times_transposition(int i, int j) const
    {
        Perm p = *this;
        std::swap(p.w_[i - 1], p.w_[j - 1]);
        return p;
    }

    int length() const
    {
        int l = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (w_[i] > w_[j]) ++l;
        return l;
    }

    std::vector<int> code() const
    {
        std::vector<int> c(n(), 0);
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (w_[j] < w_[i]) ++c[i];
        return c;
    }

    /** Left descents a: l(s_a w) < l(w). */
    bool left_descent(int a) const
    {
        Perm inv = inverse();
        return inv(a) > inv(a + 1);
    }
    bool right_descent(int a) const { return w_[a - 1] > w_[a]; }

    /** Lexicographically smallest reduced word. */
    std::vector<int> reduced_word() const
    {
        std::vector<int> word;
        Perm cur = *this;
        while (true) {
            int a = 0;
            for (int k = 1; k < n(); ++k)
                if (cur.left_descent(k)) {
                    a = k;
                    break;
                }
            if (!a) break;
            word.push_back(a);
            cur = simple(a, n()) * cur;
        }
        return word;
    }

    /** Embed into S_m by fixing n+1..m. */
    Perm embed(int m) const
    {
        std::vector<int> r = w_;
        for (int i = n() + 1; i <= m; ++i) r.push_back(i);
        return Perm(std::move(r));
    }

    /** Smallest n' with this permutation in S_n'. */
    int support() const
    {
        int m = n();
        while (m > 1 && w_[m - 1] == m) --m;
        return m;
    }

    Perm restrict_to(int m) const
    {
        for (int i = m + 1; i <= n(); ++i)
            if (w_[i - 1] != i) throw std::invalid_argument("permutation does not lie in the smaller group");
        return Perm(std::vector<int>(w_.begin(), w_.begin() + m));
    }

    bool is_identity() const
    {
        for (int i = 0; i < n(); ++i)
            if (w_[i] != i + 1) return false;
        return true;
    }

    std::string str() const
    {
        std::string s;
        for (int i = 0; i < n(); ++i) {
            if (n() > 9 && i) s += ',';
            s += std::to_string(w_[i]);
        }
        return s;
    }

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> w_;
};

inline std::string word_str(const std::vector<int>& word)
{
    if (word.empty()) return "id";
    std::string s;
    for (int a : word) s += std::to_string(a);
    return s;
}

/** All of S_n in lexicographic order of one-line notation. */
inline std::vector<Perm> all_perms(int n)
{
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Perm> out;
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/** S_n in the colex order of codes (the order of unitriangularity). */
inline std::vector<Perm> perms_by_code(int n)
{
    auto ps = all_perms(n);
    std::sort(ps.begin(), ps.end(), [](const Perm& a, const Perm& b) { return colex_less(a.code(), b.code()); });
    return ps;
}

/** Exponent vectors I with I_k <= n-k, in colex order. */
inline std::vector<std::vector<int>> staircase(int n)
{
    std::vector<std::vector<int>> out;
    for (auto& w : perms_by_code(n)) out.push_back(w.code());
    return out;
}

inline std::vector<int> delta(int n)
{
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = n - 1 - i;
    return d;
}

inline bool under_staircase(const std::vector<int>& I, int n)
{
    for (int k = 0; k < n; ++k)
        if ((k < static_cast<int>(I.size()) ? I[k] : 0) > n - 1 - k) return false;
    return true;
}

/** q_i q_{i+1} ... q_{j-1} */
inline Poly q_interval(int n, int i, int j)
{
    Monomial m;
    for (int k = i; k < j; ++k) m.e[kQOff + k - 1]++;
    return Poly::monomial(n, m);
}

// ---------------------------------------------------------------------------
// extended Ehresman-Bruhat order

struct BEArrow {
    Perm from, to;
    int i = 0, j = 0;
    bool up = true;
    Poly weight;

    bool has_color(int k) const { return i <= k && k < j; }
};

enum class Direction { Any, Up, Down };

/** Down condition via lengths: l(w) = l(v) + l(t_ij) for w = v t_ij the longer element. */
inline bool down_by_length(const Perm& lower, int i, int j)
{
    Perm upper = lower.times_transposition(i, j);
    return upper.length() == lower.length() + 2 * (j - i) - 1;
}

/** Down condition via values: v(i) < v(k) < v(j) for all i < k < j. */
inline bool down_by_values(const Perm& lower, int i, int j)
{
    if (!(lower(i) < lower(j))) return false;
    for (int k = i + 1; k < j; ++k)
        if (!(lower(i) < lower(k) && lower(k) < lower(j))) return false;
    return true;
}

/** Arrows leaving v: up to v t_ij (length +1) or down to v t_ij (maximal drop). */
inline std::vector<BEArrow> extended_arrows(const Perm& v, std::optional<int> color = std::nullopt,
                                            Direction dir = Direction::Any)
{
    int n = v.n();
    int lv = v.length();
    std::vector<BEArrow> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (color && !(i <= *color && *color < j)) continue;
            Perm w = v.times_transposition(i, j);
            int lw = w.length();
            if (dir != Direction::Down && lw == lv + 1)
                out.push_back({v, w, i, j, true, Poly(n, 1)});
            if (dir != Direction::Up && lw < lv) {
                bool a = down_by_length(w, i, j);
                bool b = down_by_values(w, i, j);
                if (a != b) throw std::logic_error("down-arrow criteria disagree");
                if (a) {
                    // 2s = l(v) + 1 - l(w)
                    int s = (lv + 1 - lw) / 2;
                    out.push_back({v, w, i, j, false, q_interval(n, i, i + s)});
                }
            }
        }
    return out;
}

struct BEPath {
    Perm start;
    std::vector<BEArrow> arrows;

    const Perm& end() const { return arrows.empty() ? start : arrows.back().to; }
    Poly weight() const
    {
        Poly w(start.n(), 1);
        for (auto& a : arrows) w = w * a.weight;
        return w;
    }
    std::size_t length() const { return arrows.size(); }
};

/** Colored BE-paths of a given length from v; optionally with pairwise distinct smaller indices. */
inline std::vector<BEPath> be_paths(const Perm& v, int color, int length, bool distinct_i)
{
    std::vector<BEPath> done;
    std::vector<BEPath> frontier{BEPath{v, {}}};
    for (int step = 0; step < length; ++step) {
        std::vector<BEPath> next;
        for (auto& p : frontier)
            for (auto& a : extended_arrows(p.end(), color)) {
                if (distinct_i &&
                    std::any_of(p.arrows.begin(), p.arrows.end(), [&](const BEArrow& b) { return b.i == a.i; }))
                    continue;
                BEPath q = p;
                q.arrows.push_back(a);
                next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return frontier;
}

}  // namespace qschub
