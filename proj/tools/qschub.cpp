#include "CLI11.hpp"

#include "qschub/correlate.hpp"
#include "qschub/divdiff.hpp"
#include "qschub/golden.hpp"
#include "qschub/json.hpp"
#include "qschub/polyring.hpp"
#include "qschub/qpieri.hpp"
#include "qschub/qring.hpp"
#include "qschub/qschub.hpp"
#include "qschub/suites.hpp"
#include "qschub/symgroup.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace qschub;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kSize = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    int n = 3;
    std::string perm, word, perm2, word2;
    std::string f, g;
    std::string q = "symbolic";
    int genus = 0;
    std::string format = "text";
    std::string suite = "all";
    int order = 8;
    bool quantum = false, classical = false, expand = false;
    int b = 0, d = 0;
    std::string kind = "qdouble";
    long samples = 200;
    unsigned seed = 1;
};

int max_n()
{
    int m = 4;
    if (const char* s = std::getenv("QSCHUB_MAX_N")) {
        try {
            m = std::stoi(s);
        } catch (...) {
            throw UsageError("QSCHUB_MAX_N must be an integer");
        }
    }
    return std::clamp(m, 2, 6);
}

void check_n(int n)
{
    if (n < 2) throw UsageError("--n must be at least 2");
    if (n > max_n()) throw SizeError("n = " + std::to_string(n) + " exceeds QSCHUB_MAX_N = " + std::to_string(max_n()));
}

Perm read_perm(const std::string& perm, const std::string& word, int n, const char* what)
{
    if (!word.empty()) {
        std::vector<int> w;
        if (word != "id")
            for (char c : word) {
                if (c == ',' || c == ' ') continue;
                if (c < '1' || c > '9') throw UsageError(std::string("bad reduced word for ") + what);
                w.push_back(c - '0');
            }
        for (int a : w)
            if (a >= n) throw UsageError(std::string("letter out of range in ") + what);
        return Perm::from_word(w, n);
    }
    if (!perm.empty()) {
        try {
            return Perm::parse(perm, n);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad permutation for ") + what + ": " + e.what());
        }
    }
    throw UsageError(std::string("missing permutation: give ") + what + " or the matching reduced-word flag");
}

Poly read_poly(const std::string& s, int n, const char* flag)
{
    if (s.empty()) throw UsageError(std::string("missing ") + flag);
    return parse(s, n);
}

std::string label(const Perm& w) { return word_str(w.reduced_word()); }

std::string fmt_real(double v)
{
    std::ostringstream o;
    o << std::setprecision(12) << v;
    return o.str();
}

void emit(const Poly& p, const Args& a)
{
    if (a.format == "json")
        std::cout << to_json(p).dump(2) << "\n";
    else if (a.format == "latex")
        std::cout << p.latex() << "\n";
    else
        std::cout << p.str() << "\n";
}

void emit(const SchubertVector& v, const Args& a)
{
    if (a.format == "json") {
        std::cout << to_json(v).dump(2) << "\n";
        return;
    }
    if (v.empty()) std::cout << "0\n";
    for (auto& [w, c] : v) {
        if (a.format == "latex")
            std::cout << "\\tilde{\\mathfrak{S}}_{" << label(w) << "}: " << c.latex() << "\n";
        else
            std::cout << label(w) << ": " << c.str() << "\n";
    }
}

std::optional<std::vector<double>> read_q(const std::string& s, int n)
{
    if (s == "symbolic") return std::nullopt;
    std::vector<double> q;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            q.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (...) {
            throw UsageError("bad --q entry: " + item);
        }
    }
    if (static_cast<int>(q.size()) != n - 1) throw UsageError("--q needs n - 1 values");
    return q;
}

QMask mask_of(const Args& a) { return a.classical ? classical_mask(a.n) : kQuantum; }

int run_table(const Args& a)
{
    std::vector<Perm> order;
    if (a.n == 4) {
        for (auto& e : golden::kS4Double) order.push_back(read_perm("", std::string(e.word), 4, "table"));
    } else {
        order = all_perms(a.n);
        std::stable_sort(order.begin(), order.end(), [](const Perm& x, const Perm& y) {
            if (x.length() != y.length()) return x.length() > y.length();
            return x.reduced_word() < y.reduced_word();
        });
    }
    auto poly_of = [&](const Perm& w) {
        if (a.kind == "qdouble") return qdouble(w);
        if (a.kind == "qschubert") return qschubert(w);
        if (a.kind == "schubert") return schubert(w);
        if (a.kind == "double") return double_schubert(w);
        throw UsageError("--kind must be qdouble, qschubert, schubert or double");
    };
    if (a.format == "json") {
        json rows = json::array();
        for (auto& w : order) rows.push_back({{"perm", to_json(w)}, {"poly", to_json(poly_of(w))}});
        std::cout << json{{"n", a.n}, {"kind", a.kind}, {"rows", rows}}.dump(2) << "\n";
        return kOk;
    }
    for (auto& w : order) {
        Poly p = poly_of(w);
        std::cout << label(w) << ": " << (a.format == "latex" ? p.latex() : p.str()) << "\n";
    }
    return kOk;
}

int run_verify(const Args& a, bool n_given)
{
    std::vector<std::string> names;
    if (a.suite == "all")
        names = suites::suite_names();
    else if (std::find(suites::suite_names().begin(), suites::suite_names().end(), a.suite) != suites::suite_names().end())
        names = {a.suite};
    else
        throw UsageError("unknown suite: " + a.suite);
    suites::Options opt;
    opt.n = n_given && a.suite != "all" ? a.n : 0;
    opt.samples = a.samples;
    opt.seed = a.seed;
    opt.order = a.order;
    bool ok = true;
    json all = json::array();
    for (auto& name : names) {
        suites::Report r;
        try {
            r = suites::run_suite(name, opt);
        } catch (const std::out_of_range& e) {
            throw SizeError(e.what());
        }
        ok = ok && r.ok();
        if (a.format == "json") {
            all.push_back(r.to_json());
            continue;
        }
        if (names.size() > 1) std::cout << name << ": ";
        std::cout << r.summary() << "\n";
        for (auto& c : r.cases)
            if (!c.pass) std::cout << "  FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        for (auto& s : r.notes) std::cout << "  note: " << s << "\n";
    }
    if (a.format == "json") std::cout << (names.size() == 1 ? all.front() : all).dump(2) << "\n";
    return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quantum Schubert calculus for flag manifolds"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_option("--n", a.n, "rank n of the flag manifold Fl_n");
    app.add_option("--perm", a.perm, "permutation in one-line notation, e.g. 2431, 2,4,3,1 or id");
    app.add_option("--word", a.word, "permutation as a reduced word, e.g. 121 or id");
    app.add_option("--perm2", a.perm2, "second permutation (multiply)");
    app.add_option("--word2", a.word2, "second permutation as a reduced word (multiply)");
    app.add_option("--f", a.f, "polynomial, e.g. x1^2*x2 + q1*x1");
    app.add_option("--g", a.g, "second polynomial");
    app.add_option("--q", a.q, "comma-separated real values of q_1..q_{n-1}, or symbolic");
    app.add_option("--genus", a.genus, "genus g of the correlator");
    app.add_option("--format", a.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--suite", a.suite, "verification suite, or all");
    app.add_option("--order", a.order, "truncation order of the psi series");
    app.add_option("--b", a.b, "Pieri index b");
    app.add_option("--d", a.d, "Pieri index d");
    app.add_option("--kind", a.kind, "table kind: qdouble, qschubert, schubert or double");
    app.add_option("--samples", a.samples, "random WDVV quadruples at n >= 4");
    app.add_option("--seed", a.seed, "random seed");
    app.add_flag("--quantum", a.quantum, "use the quantum pairing (pair)");
    app.add_flag("--classical", a.classical, "set q = 0");
    app.add_flag("--expand", a.expand, "expand the normal form in the quantum Schubert basis");

    auto* c_schubert = app.add_subcommand("schubert", "classical Schubert polynomial S_w (with --kind double: S_w(x,y))");
    auto* c_qschubert = app.add_subcommand("qschubert", "quantum Schubert polynomial S~_w");
    auto* c_qdouble = app.add_subcommand("qdouble", "quantum double Schubert polynomial S~_w(x,y)");
    auto* c_pair = app.add_subcommand("pair", "residue pairing <f, g> (classical unless --quantum)");
    auto* c_nf = app.add_subcommand("normal-form", "normal form of f modulo the quantum ideal");
    auto* c_mul = app.add_subcommand("multiply", "product f g (or S~_u S~_v) in the quantum Schubert basis");
    auto* c_cor = app.add_subcommand("correlate", "genus-g correlator <f>_g, exact or at numeric q");
    auto* c_pieri = app.add_subcommand("pieri", "S~_[b,d] S~_v via colored paths");
    auto* c_psi = app.add_subcommand("psi", "coefficients of the residue generating function");
    auto* c_table = app.add_subcommand("table", "table of polynomials for S_n");
    auto* c_verify = app.add_subcommand("verify", "run a verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        check_n(a.n);
        bool n_given = app.count("--n") > 0;
        if (c_schubert->parsed()) {
            Perm w = read_perm(a.perm, a.word, a.n, "--perm");
            emit(a.kind == "double" ? double_schubert(w) : schubert(w), a);
        } else if (c_qschubert->parsed()) {
            emit(qschubert(read_perm(a.perm, a.word, a.n, "--perm")), a);
        } else if (c_qdouble->parsed()) {
            emit(qdouble(read_perm(a.perm, a.word, a.n, "--perm")), a);
        } else if (c_pair->parsed()) {
            emit(qpair(read_poly(a.f, a.n, "--f"), read_poly(a.g, a.n, "--g"), a.quantum && !a.classical), a);
        } else if (c_nf->parsed()) {
            Poly f = read_poly(a.f, a.n, "--f");
            if (a.expand)
                emit(expand_oracle(f, mask_of(a)), a);
            else
                emit(normal_form_poly(f, mask_of(a)), a);
        } else if (c_mul->parsed()) {
            Poly f = a.f.empty() ? qschubert(read_perm(a.perm, a.word, a.n, "--perm")) : read_poly(a.f, a.n, "--f");
            Poly g = a.g.empty() ? qschubert(read_perm(a.perm2, a.word2, a.n, "--perm2")) : read_poly(a.g, a.n, "--g");
            emit(expand_oracle(f * g, mask_of(a)), a);
        } else if (c_cor->parsed()) {
            Poly P = read_poly(a.f, a.n, "--f");
            if (a.genus < 0) throw UsageError("--genus must be non-negative");
            auto q = read_q(a.q, a.n);
            if (!q) {
                emit(correlator(P, a.genus, mask_of(a)), a);
            } else {
                double exact = evaluate_real(correlator(P, a.genus), *q);
                double num = correlator_numeric(P, a.genus, *q);
                if (a.format == "json")
                    std::cout << json{{"exact", fmt_real(exact)}, {"numeric", fmt_real(num)}}.dump(2) << "\n";
                else
                    std::cout << fmt_real(exact) << "\n";
            }
        } else if (c_pieri->parsed()) {
            emit(pieri_multiply(a.b, a.d, read_perm(a.perm, a.word, a.n, "--perm"), mask_of(a)), a);
        } else if (c_psi->parsed()) {
            if (a.order < 0) throw UsageError("--order must be non-negative");
            auto s = psi_series(a.n, a.order, mask_of(a));
            if (a.format == "json") {
                json rows = json::array();
                for (auto& [nu, c] : s) rows.push_back({{"nu", nu}, {"value", to_json(c)}});
                std::cout << rows.dump(2) << "\n";
            } else {
                for (auto& [nu, c] : s) {
                    std::string k;
                    for (int v : nu) k += (k.empty() ? "" : ",") + std::to_string(v);
                    std::cout << "(" << k << "): " << (a.format == "latex" ? c.latex() : c.str()) << "\n";
                }
            }
        } else if (c_table->parsed()) {
            return run_table(a);
        } else if (c_verify->parsed()) {
            return run_verify(a, n_given);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const SizeError& e) {
        std::cerr << "unsupported size: " << e.what() << "\n";
        return kSize;
    } catch (const std::out_of_range& e) {
        std::cerr << "unsupported size: " << e.what() << "\n";
        return kSize;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}
