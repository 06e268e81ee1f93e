#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qschub {

/** Largest number of x variables any context may carry. */
constexpr int kMaxN = 8;

enum class Family : std::uint8_t { X, Y, Q, T };

/** Slot layout of an exponent vector: x1..x8, y1..y8, q1..q14, t1..t6. */
constexpr int kXOff = 0;
constexpr int kYOff = 8;
constexpr int kQOff = 16;
constexpr int kQSlots = 14;
constexpr int kTOff = 30;
constexpr int kTSlots = 6;
constexpr int kSlots = 36;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class ContextError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct VarId {
    Family family;
    int index;  // 1-based

    bool operator==(const VarId&) const = default;
};

inline VarId X(int i) { return {Family::X, i}; }
inline VarId Y(int i) { return {Family::Y, i}; }
inline VarId Q(int i) { return {Family::Q, i}; }
inline VarId T(int i) { return {Family::T, i}; }

inline int slot_of(VarId v)
{
    int cap = 0, off = 0;
    switch (v.family) {
    case Family::X: cap = kMaxN; off = kXOff; break;
    case Family::Y: cap = kMaxN; off = kYOff; break;
    case Family::Q: cap = kQSlots; off = kQOff; break;
    case Family::T: cap = kTSlots; off = kTOff; break;
    }
    if (v.index < 1 || v.index > cap)
        throw std::out_of_range("variable index out of range");
    return off + v.index - 1;
}

inline VarId var_of_slot(int s)
{
    if (s < kYOff) return {Family::X, s - kXOff + 1};
    if (s < kQOff) return {Family::Y, s - kYOff + 1};
    if (s < kTOff) return {Family::Q, s - kQOff + 1};
    return {Family::T, s - kTOff + 1};
}

constexpr int slot_weight(int s) { return (s >= kQOff && s < kTOff) ? 2 : 1; }

inline std::string var_name(VarId v)
{
    static const char names[] = {'x', 'y', 'q', 't'};
    return names[static_cast<int>(v.family)] + std::to_string(v.index);
}

struct Monomial {
    std::array<std::uint8_t, kSlots> e{};

    int degree() const
    {
        int d = 0;
        for (int s = 0; s < kSlots; ++s) d += slot_weight(s) * e[s];
        return d;
    }
    int operator[](VarId v) const { return e[slot_of(v)]; }
    int x(int i) const { return e[kXOff + i - 1]; }
    int y(int i) const { return e[kYOff + i - 1]; }
    int q(int i) const { return e[kQOff + i - 1]; }
    int t(int i) const { return e[kTOff + i - 1]; }

    bool is_one() const
    {
        return std::all_of(e.begin(), e.end(), [](std::uint8_t a) { return a == 0; });
    }
    bool x_free() const
    {
        for (int s = kXOff; s < kXOff + kMaxN; ++s)
            if (e[s]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const
    {
        Monomial r;
        for (int s = 0; s < kSlots; ++s) {
            int v = e[s] + o.e[s];
            if (v > 255) throw std::overflow_error("exponent overflow");
            r.e[s] = static_cast<std::uint8_t>(v);
        }
        return r;
    }

    bool operator==(const Monomial&) const = default;

    static Monomial var(VarId v, int power = 1)
    {
        Monomial m;
        m.e[slot_of(v)] = static_cast<std::uint8_t>(power);
        return m;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const
    {
        std::uint64_t h = 1469598103934665603ull;
        for (auto b : m.e) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/** Canonical order: weighted degree first, then lex with slot 0 most significant. */
inline bool mono_greater(const Monomial& a, const Monomial& b)
{
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.e.begin(), b.e.end(), a.e.begin(), a.e.end());
}

/**
 * Order on pure exponent vectors used for unitriangularity of Schubert-type
 * bases: the last coordinate is most significant.
 */
inline bool colex_less(const std::vector<int>& a, const std::vector<int>& b)
{
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

class Poly {
public:
    using Term = std::pair<Monomial, mpq_class>;

    Poly() = default;
    explicit Poly(int n) : n_(n) { check_n(n); }
    Poly(int n, const mpq_class& c) : n_(n)
    {
        check_n(n);
        if (c != 0) terms_.push_back({Monomial{}, c});
    }
    Poly(int n, long c) : Poly(n, mpq_class(c)) {}

    static Poly var(int n, VarId v, int power = 1)
    {
        check_var(n, v);
        Poly p(n);
        p.terms_.push_back({Monomial::var(v, power), mpq_class(1)});
        return p;
    }
    static Poly x(int n, int i) { return var(n, X(i)); }
    static Poly y(int n, int i) { return var(n, Y(i)); }
    static Poly q(int n, int i) { return var(n, Q(i)); }
    static Poly t(int n, int i = 1) { return var(n, T(i)); }
    static Poly monomial(int n, const Monomial& m, const mpq_class& c = 1)
    {
        Poly p(n);
        if (c != 0) p.terms_.push_back({m, c});
        return p;
    }

    template <class Map>
    static Poly from_map(int n, Map&& acc)
    {
        Poly p(n);
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) p.terms_.push_back({m, c});
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& a, const Term& b) { return mono_greater(a.first, b.first); });
        return p;
    }

    int n() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

    mpq_class constant_term() const
    {
        if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
        return 0;
    }

    mpq_class coeff(const Monomial& m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) {
            return mono_greater(t.first, k);
        });
        if (it != terms_.end() && it->first == m) return it->second;
        return 0;
    }

    bool is_integral() const
    {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& t) { return t.second.get_den() == 1; });
    }

    /** Common weighted degree, or nullopt if inhomogeneous. Zero has degree 0. */
    std::optional<int> weighted_degree() const
    {
        if (terms_.empty()) return 0;
        int d = terms_.front().first.degree();
        for (auto& t : terms_)
            if (t.first.degree() != d) return std::nullopt;
        return d;
    }
    int max_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

    Poly component(int d) const
    {
        Poly r(n_);
        for (auto& t : terms_)
            if (t.first.degree() == d) r.terms_.push_back(t);
        return r;
    }
    std::vector<int> degrees() const
    {
        std::vector<int> ds;
        for (auto& t : terms_) {
            int d = t.first.degree();
            if (ds.empty() || ds.back() != d) ds.push_back(d);
        }
        return ds;
    }

    Poly with_n(int m) const
    {
        Poly r(m);
        for (auto& t : terms_) {
            for (int s = 0; s < kSlots; ++s)
                if (t.first.e[s]) check_var(m, var_of_slot(s));
        }
        r.terms_ = terms_;
        return r;
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = add(*this, o, 1); }
    Poly& operator-=(const Poly& o) { return *this = add(*this, o, -1); }
    Poly& operator*=(const Poly& o) { return *this = (*this) * o; }
    Poly& operator*=(const mpq_class& c)
    {
        if (c == 0) terms_.clear();
        else
            for (auto& t : terms_) t.second *= c;
        return *this;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return add(a, b, 1); }
    friend Poly operator-(const Poly& a, const Poly& b) { return add(a, b, -1); }
    friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }
    friend Poly operator*(const mpq_class& c, Poly a) { return a *= c; }
    friend Poly operator*(Poly a, long c) { return a *= mpq_class(c); }
    friend Poly operator*(long c, Poly a) { return a *= mpq_class(c); }
    friend Poly operator+(const Poly& a, long c) { return a + Poly(a.n(), c); }
    friend Poly operator-(const Poly& a, long c) { return a - Poly(a.n(), c); }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.same_context(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.n_);
        if (b.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
        if (a.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
        std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        mpq_class tmp;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                tmp = ca * cb;
                acc[ma * mb] += tmp;
            }
        return from_map(a.n_, acc);
    }

    Poly mul_term(const Monomial& m, const mpq_class& c) const
    {
        Poly r(n_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.push_back({t.first * m, t.second * c});
        // multiplying by a monomial preserves the canonical order
        return r;
    }

    Poly pow(unsigned k) const
    {
        Poly r(n_, 1), base = *this;
        while (k) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /** Apply a monomial map term by term; f returns a Poly for each monomial. */
    template <class F>
    Poly map_terms(F&& f) const
    {
        std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
        for (auto& [m, c] : terms_) {
            Poly img = f(m);
            for (auto& [mi, ci] : img.terms_) acc[mi] += c * ci;
        }
        return from_map(n_, acc);
    }

    /** Rename slots via a permutation-like map of monomials (exponent-preserving). */
    template <class F>
    Poly map_monomials(F&& f) const
    {
        std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
        for (auto& [m, c] : terms_) acc[f(m)] += c;
        return from_map(n_, acc);
    }

    /** Keep terms satisfying a predicate on the monomial. */
    template <class F>
    Poly filter(F&& pred) const
    {
        Poly r(n_);
        for (auto& t : terms_)
            if (pred(t.first)) r.terms_.push_back(t);
        return r;
    }

    /** Simultaneous substitution of variables by polynomials. */
    Poly substitute(const std::vector<std::pair<VarId, Poly>>& bindings) const
    {
        std::array<const Poly*, kSlots> img{};
        for (auto& [v, p] : bindings) {
            same_context(p);
            img[slot_of(v)] = &p;
        }
        std::array<std::vector<Poly>, kSlots> powers;
        Poly r(n_);
        std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
        for (auto& [m, c] : terms_) {
            Monomial kept = m;
            Poly factor(n_, c);
            for (int s = 0; s < kSlots; ++s) {
                if (!img[s] || !m.e[s]) continue;
                kept.e[s] = 0;
                auto& pw = powers[s];
                if (pw.empty()) pw.push_back(Poly(n_, 1));
                while (static_cast<int>(pw.size()) <= m.e[s]) pw.push_back(pw.back() * *img[s]);
                factor = factor * pw[m.e[s]];
            }
            for (auto& [mf, cf] : factor.terms_) acc[mf * kept] += cf;
        }
        return from_map(n_, acc);
    }

    /** Set every variable of the given family (optionally only some indices) to zero. */
    Poly set_zero(Family f, int from = 1, int to = kSlots) const
    {
        return filter([&](const Monomial& m) {
            for (int i = from; i <= to; ++i) {
                int s;
                try {
                    s = slot_of({f, i});
                } catch (const std::out_of_range&) {
                    break;
                }
                if (m.e[s]) return false;
            }
            return true;
        });
    }

    /** Coefficient of a power of one variable: returns the polynomial multiplying v^k. */
    Poly coeff_of(VarId v, int k) const
    {
        int s = slot_of(v);
        Poly r(n_);
        for (auto& t : terms_)
            if (t.first.e[s] == k) {
                Monomial m = t.first;
                m.e[s] = 0;
                r.terms_.push_back({m, t.second});
            }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return mono_greater(a.first, b.first); });
        return r;
    }
    int degree_in(VarId v) const
    {
        int s = slot_of(v), d = 0;
        for (auto& t : terms_) d = std::max<int>(d, t.first.e[s]);
        return d;
    }

    Poly derivative(VarId v) const
    {
        int s = slot_of(v);
        std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
        for (auto& [m, c] : terms_) {
            if (!m.e[s]) continue;
            Monomial d = m;
            d.e[s]--;
            acc[d] += c * m.e[s];
        }
        return from_map(n_, acc);
    }

    template <class Num, class Eval>
    Num evaluate(Eval&& value_of_slot) const
    {
        Num total = 0;
        for (auto& [m, c] : terms_) {
            Num term = c.get_d();
            for (int s = 0; s < kSlots; ++s)
                for (int k = 0; k < m.e[s]; ++k) term *= value_of_slot(s);
            total += term;
        }
        return total;
    }

    std::string str() const;
    std::string latex() const;

    void same_context(const Poly& o) const
    {
        if (n_ != o.n_) throw ContextError("polynomial context mismatch");
    }

    static void check_n(int n)
    {
        if (n < 1 || n > kMaxN) throw ContextError("unsupported rank n");
    }
    static void check_var(int n, VarId v)
    {
        int cap = 0;
        switch (v.family) {
        case Family::X:
        case Family::Y: cap = n; break;
        case Family::Q: cap = std::max(0, 2 * (n - 1)); break;
        case Family::T: cap = kTSlots; break;
        }
        if (v.index < 1 || v.index > cap) throw std::out_of_range("variable " + var_name(v) + " out of range for n");
    }

private:
    static Poly add(const Poly& a, const Poly& b, int sign)
    {
        a.same_context(b);
        Poly r(a.n_);
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && mono_greater(a.terms_[i].first, b.terms_[j].first))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.size() || mono_greater(b.terms_[j].first, a.terms_[i].first)) {
                r.terms_.push_back({b.terms_[j].first, sign > 0 ? b.terms_[j].second : mpq_class(-b.terms_[j].second)});
                ++j;
            } else {
                mpq_class c = sign > 0 ? mpq_class(a.terms_[i].second + b.terms_[j].second)
                                       : mpq_class(a.terms_[i].second - b.terms_[j].second);
                if (c != 0) r.terms_.push_back({a.terms_[i].first, c});
                ++i;
                ++j;
            }
        }
        return r;
    }

    int n_ = 1;
    std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// printing

namespace detail {

/** Print order inside a monomial: q, then x, then y, then t. */
inline std::vector<int> print_slots()
{
    std::vector<int> s;
    for (int i = 0; i < kQSlots; ++i) s.push_back(kQOff + i);
    for (int i = 0; i < kMaxN; ++i) s.push_back(kXOff + i);
    for (int i = 0; i < kMaxN; ++i) s.push_back(kYOff + i);
    for (int i = 0; i < kTSlots; ++i) s.push_back(kTOff + i);
    return s;
}

inline std::string monomial_text(const Monomial& m)
{
    static const std::vector<int> order = print_slots();
    std::string out;
    for (int s : order) {
        if (!m.e[s]) continue;
        if (!out.empty()) out += '*';
        out += var_name(var_of_slot(s));
        if (m.e[s] > 1) out += '^' + std::to_string(m.e[s]);
    }
    return out;
}

inline std::string monomial_latex(const Monomial& m)
{
    static const std::vector<int> order = print_slots();
    static const char names[] = {'x', 'y', 'q', 't'};
    std::string out;
    for (int s : order) {
        if (!m.e[s]) continue;
        VarId v = var_of_slot(s);
        if (!out.empty()) out += ' ';
        out += names[static_cast<int>(v.family)];
        out += "_{" + std::to_string(v.index) + "}";
        if (m.e[s] > 1) out += "^{" + std::to_string(m.e[s]) + "}";
    }
    return out;
}

}  // namespace detail

inline std::string Poly::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        mpq_class a = abs(c);
        bool neg = c < 0;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        std::string mono = detail::monomial_text(m);
        if (mono.empty()) out += a.get_str();
        else if (a == 1) out += mono;
        else out += a.get_str() + "*" + mono;
    }
    return out;
}

inline std::string Poly::latex() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        mpq_class a = abs(c);
        bool neg = c < 0;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        std::string coef = a.get_den() == 1 ? a.get_num().get_str()
                                            : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
        std::string mono = detail::monomial_latex(m);
        if (mono.empty()) out += coef;
        else if (a == 1) out += mono;
        else out += coef + " " + mono;
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace detail {

class Parser {
public:
    Parser(const std::string& s, int n) : s_(s), n_(n) {}

    Poly run()
    {
        Poly::check_n(n_);
        skip();
        if (pos_ >= s_.size()) throw ParseError(pos_, "empty input");
        Poly r = expr();
        skip();
        if (pos_ < s_.size()) throw ParseError(pos_, s_[pos_] == ')' ? "unmatched ')'" : "expected '+' or '-'");
        return r;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at(char ch)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == ch;
    }

    // expr := [+|-] term ((+|-) term)*
    Poly expr()
    {
        Poly r(n_);
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= s_.size() || s_[pos_] == ')') {
                if (first) throw ParseError(pos_, "expected a term");
                break;
            }
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError(pos_, "expected '+' or '-'");
            }
            first = false;
            Poly t = term();
            r = sign > 0 ? r + t : r - t;
        }
        return r;
    }

    // term := factor (* factor)*
    Poly term()
    {
        Poly r = factor();
        while (at('*')) {
            ++pos_;
            r = r * factor();
        }
        return r;
    }

    // factor := atom [^ int]
    Poly factor()
    {
        skip();
        if (pos_ >= s_.size()) throw ParseError(pos_, "expected a term");
        char ch = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) return Poly(n_, number());
        if (ch == '(') {
            std::size_t open = pos_++;
            Poly r = expr();
            if (!at(')')) throw ParseError(open, "unmatched '('");
            ++pos_;
            return r.pow(static_cast<unsigned>(exponent()));
        }
        if (ch == 'x' || ch == 'y' || ch == 'q' || ch == 't') {
            std::size_t start = pos_;
            VarId v = variable();
            int e = exponent();
            try {
                Poly::check_var(n_, v);
                if (v.family == Family::Q && v.index > n_ - 1)
                    throw std::out_of_range("variable " + var_name(v) + " out of range for n");
            } catch (const std::out_of_range& ex) {
                throw ParseError(start, ex.what());
            }
            if (e > 255) throw ParseError(start, "exponent too large");
            return Poly::var(n_, v, e);
        }
        throw ParseError(pos_, std::string("unexpected character '") + ch + "'");
    }

    mpq_class number()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t d0 = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (d0 == pos_) throw ParseError(pos_, "expected denominator");
            std::string den = s_.substr(d0, pos_ - d0);
            if (mpz_class(den) == 0) throw ParseError(d0, "zero denominator");
            mpq_class r{mpz_class(num), mpz_class(den)};
            r.canonicalize();
            return r;
        }
        return mpq_class(mpz_class(num));
    }

    VarId variable()
    {
        char ch = s_[pos_++];
        Family f = ch == 'x' ? Family::X : ch == 'y' ? Family::Y : ch == 'q' ? Family::Q : Family::T;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) {
            if (f == Family::T) return {f, 1};
            throw ParseError(start, "expected variable index");
        }
        if (pos_ - start > 3) throw ParseError(start, "variable index too large");
        return {f, std::stoi(s_.substr(start, pos_ - start))};
    }

    int exponent()
    {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
        ++pos_;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(start, "expected exponent");
        if (pos_ - start > 3) throw ParseError(start, "exponent too large");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

inline Poly parse(const std::string& text, int n) { return detail::Parser(text, n).run(); }

// ---------------------------------------------------------------------------
// small helpers shared by the other modules

/** Elementary symmetric polynomial e_k in the given variables. */
inline Poly elementary(int n, int k, const std::vector<VarId>& vars)
{
    if (k < 0 || k > static_cast<int>(vars.size())) return Poly(n);
    std::vector<Poly> e(k + 1, Poly(n));
    e[0] = Poly(n, 1);
    for (auto& v : vars) {
        Poly xv = Poly::var(n, v);
        for (int j = k; j >= 1; --j) e[j] += xv * e[j - 1];
    }
    return e[k];
}

/** Complete homogeneous symmetric polynomial h_k in the given variables. */
inline Poly complete(int n, int k, const std::vector<VarId>& vars)
{
    if (k < 0) return Poly(n);
    std::vector<Poly> h(k + 1, Poly(n));
    h[0] = Poly(n, 1);
    for (auto& v : vars) {
        Poly xv = Poly::var(n, v);
        for (int j = 1; j <= k; ++j) h[j] += xv * h[j - 1];
    }
    return h[k];
}

inline std::vector<VarId> xs(int from, int to)
{
    std::vector<VarId> v;
    for (int i = from; i <= to; ++i) v.push_back(X(i));
    return v;
}
inline std::vector<VarId> ys(int from, int to)
{
    std::vector<VarId> v;
    for (int i = from; i <= to; ++i) v.push_back(Y(i));
    return v;
}

/** x^a for an exponent vector a (a[0] is the exponent of x1). */
inline Poly x_power(int n, const std::vector<int>& a, const mpq_class& c = 1)
{
    Monomial m;
    for (std::size_t i = 0; i < a.size(); ++i) m.e[kXOff + i] = static_cast<std::uint8_t>(a[i]);
    return Poly::monomial(n, m, c);
}

inline std::vector<int> x_exponents(const Monomial& m, int n)
{
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = m.e[kXOff + i];
    return a;
}

/** Swap two variable families slot-for-slot, e.g. x <-> y. */
inline Poly swap_xy(const Poly& p)
{
    return p.map_monomials([](const Monomial& m) {
        Monomial r = m;
        for (int i = 0; i < kMaxN; ++i) std::swap(r.e[kXOff + i], r.e[kYOff + i]);
        return r;
    });
}

/** Move q_i to the second alphabet q'_i, stored at index n-1+i. */
inline Poly to_second_alphabet(const Poly& p)
{
    int n = p.n();
    return p.map_monomials([n](const Monomial& m) {
        Monomial r = m;
        for (int i = n - 1; i >= 1; --i) {
            r.e[kQOff + n - 2 + i] = m.e[kQOff + i - 1];
            r.e[kQOff + i - 1] = 0;
        }
        return r;
    });
}

/** Identify the second q-alphabet with the first. */
inline Poly merge_alphabets(const Poly& p)
{
    int n = p.n();
    return p.map_monomials([n](const Monomial& m) {
        Monomial r = m;
        for (int i = 1; i <= n - 1; ++i) {
            int v = r.e[kQOff + i - 1] + r.e[kQOff + n - 2 + i];
            r.e[kQOff + n - 2 + i] = 0;
            r.e[kQOff + i - 1] = static_cast<std::uint8_t>(v);
        }
        return r;
    });
}

}  // namespace qschub
