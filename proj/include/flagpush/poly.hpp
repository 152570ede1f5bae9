#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "flagpush/errors.hpp"
#include "flagpush/rational.hpp"

namespace flagpush {

// Variable classes. u-variables live on the classifying space of the torus,
// y-variables are their equivariant counterparts on the flag manifold, and
// z-variables are ordinary cohomology classes. The uy class holds 2*rank
// variables u_1..u_l, y_1..y_l. Cohomological degree is twice polynomial
// degree; all degree bookkeeping in the library is polynomial degree.
enum class VarClass { u, y, z, uy };

inline int var_count(VarClass c, int rank) { return c == VarClass::uy ? 2 * rank : rank; }

inline std::string var_name(VarClass c, int rank, int v) {
    switch (c) {
        case VarClass::u: return "u" + std::to_string(v + 1);
        case VarClass::y: return "y" + std::to_string(v + 1);
        case VarClass::z: return "z" + std::to_string(v + 1);
        case VarClass::uy:
            return v < rank ? "u" + std::to_string(v + 1) : "y" + std::to_string(v - rank + 1);
    }
    return {};
}

inline std::string var_class_name(VarClass c) {
    switch (c) {
        case VarClass::u: return "u";
        case VarClass::y: return "y";
        case VarClass::z: return "z";
        case VarClass::uy: return "uy";
    }
    return {};
}

using Exponents = std::vector<int>;

// Graded lexicographic order with x_1 > x_2 > ... > x_n, descending, so that
// map iteration starts at the leading term and matches canonical printing.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const long da = std::accumulate(a.begin(), a.end(), 0L);
        const long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Sparse multivariate polynomial over exact rationals. The term map is held
// behind a copy-on-write pointer: fixed-point calculus stores the same large
// polynomial (e.g. the full root product) at hundreds of fixed points, and
// value copies must stay cheap. Mutation clones a shared map first, so
// distinct Polynomial values never observe each other.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexDescending>;

    Polynomial() : terms_(empty_terms()) {}
    Polynomial(VarClass cls, int rank) : cls_(cls), rank_(rank), terms_(empty_terms()) {}

    static Polynomial constant(VarClass cls, int rank, const Rational& c) {
        Polynomial p(cls, rank);
        p.add_term(Exponents(static_cast<std::size_t>(var_count(cls, rank)), 0), c);
        return p;
    }
    static Polynomial zero(VarClass cls, int rank) { return Polynomial(cls, rank); }
    // v is a 0-based variable slot.
    static Polynomial variable(VarClass cls, int rank, int v) {
        Polynomial p(cls, rank);
        Exponents e(static_cast<std::size_t>(var_count(cls, rank)), 0);
        e[static_cast<std::size_t>(v)] = 1;
        p.add_term(std::move(e), Rational(1));
        return p;
    }

    VarClass var_class() const { return cls_; }
    int rank() const { return rank_; }
    int nvars() const { return var_count(cls_, rank_); }
    const TermMap& terms() const { return *terms_; }

    bool is_zero() const { return terms().empty(); }
    bool is_constant() const {
        return terms().empty() || (terms().size() == 1 && degree_of(terms().begin()->first) == 0);
    }
    // Total degree; -1 for the zero polynomial.
    long degree() const { return terms().empty() ? -1 : degree_of(terms().begin()->first); }

    // Coefficient of the constant monomial, i.e. the value at 0.
    Rational constant_term() const {
        Exponents zero_exp(static_cast<std::size_t>(nvars()), 0);
        auto it = terms().find(zero_exp);
        return it == terms().end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms().find(e);
        return it == terms().end() ? Rational(0) : it->second;
    }

    void add_term(Exponents e, const Rational& c) {
        if (c == 0) return;
        TermMap& t = mut();
        auto [it, fresh] = t.emplace(std::move(e), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_compatible(o);
        if (o.terms_ == terms_) { // aliasing-safe doubling
            *this *= Rational(2);
            return *this;
        }
        for (const auto& [e, c] : o.terms()) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_compatible(o);
        if (o.terms_ == terms_) {
            terms_ = empty_terms();
            return *this;
        }
        for (const auto& [e, c] : o.terms()) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r(cls_, rank_);
        TermMap& t = r.mut();
        for (const auto& [e, c] : terms()) t.emplace_hint(t.end(), e, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_compatible(b);
        Polynomial r(a.cls_, a.rank_);
        for (const auto& [ea, ca] : a.terms())
            for (const auto& [eb, cb] : b.terms()) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_ = empty_terms();
            return *this;
        }
        if (is_zero()) return *this;
        for (auto& [e, v] : mut()) v *= c;
        return *this;
    }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.cls_ == b.cls_ && a.rank_ == b.rank_ && (a.terms_ == b.terms_ || a.terms() == b.terms());
    }

    Polynomial pow(long k) const {
        if (k < 0) throw Error("negative polynomial power");
        Polynomial r = constant(cls_, rank_, Rational(1));
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base = k > 1 ? base * base : base;
            k >>= 1;
        }
        return r;
    }

    // Canonical form: terms in descending graded-lex order, coefficients as
    // "a" or "a/b", explicit "*" and "^". Reparses to the same polynomial.
    std::string to_string() const {
        if (terms().empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms()) {
            const bool negative = c < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (first) {
                if (negative) out += "-";
                first = false;
            } else {
                out += negative ? " - " : " + ";
            }
            std::string mono;
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_name(cls_, rank_, static_cast<int>(v));
                if (e[v] > 1) mono += "^" + std::to_string(e[v]);
            }
            if (mono.empty()) {
                out += flagpush::to_string(mag);
            } else if (mag == 1) {
                out += mono;
            } else {
                out += flagpush::to_string(mag) + "*" + mono;
            }
        }
        return out;
    }

    static long degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); }

private:
    void require_compatible(const Polynomial& o) const {
        if (rank_ != o.rank_) throw RankMismatch("polynomial rank mismatch");
        if (cls_ != o.cls_) throw Error("polynomial variable class mismatch");
    }

    static const std::shared_ptr<TermMap>& empty_terms() {
        static const std::shared_ptr<TermMap> empty = std::make_shared<TermMap>();
        return empty;
    }

    // Clone-on-write access. The shared empty map always reports extra
    // owners, so zero polynomials clone before their first mutation.
    TermMap& mut() {
        if (terms_.use_count() > 1) terms_ = std::make_shared<TermMap>(*terms_);
        return *terms_;
    }

    VarClass cls_ = VarClass::z;
    int rank_ = 0;
    std::shared_ptr<TermMap> terms_;
};

// Exact quotient p / q. Leading-term elimination in graded-lex order: when p
// is divisible the leading monomials divide at every step, otherwise the
// first failing step reports NotDivisible. The quotient is re-multiplied as a
// final consistency check.
inline Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    if (p.var_class() != q.var_class() || p.rank() != q.rank())
        throw RankMismatch("polynomial division with mismatched variables");
    Polynomial quot(p.var_class(), p.rank());
    if (p.is_zero()) return quot;

    const auto& [eq, cq] = *q.terms().begin();
    Polynomial rem = p;
    while (!rem.is_zero()) {
        const auto& [er, cr] = *rem.terms().begin();
        Exponents e(er.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = er[i] - eq[i];
            if (e[i] < 0)
                throw NotDivisible("polynomial " + p.to_string() + " is not divisible by " + q.to_string());
        }
        Polynomial mono(p.var_class(), p.rank());
        mono.add_term(e, cr / cq);
        quot += mono;
        rem -= mono * q;
    }
    if (!(quot * q == p)) throw NotDivisible("exact division postcondition failed");
    return quot;
}

// Substitutes images[v] for variable slot v. All images must share one
// variable class and rank; powers are cached per slot.
inline Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (static_cast<int>(images.size()) != p.nvars()) throw RankMismatch("substitution image count mismatch");
    const VarClass tc = images.empty() ? p.var_class() : images[0].var_class();
    const int tr = images.empty() ? p.rank() : images[0].rank();
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t v = 0; v < images.size(); ++v) powers[v].push_back(Polynomial::constant(tc, tr, Rational(1)));

    auto power = [&](std::size_t v, int k) -> const Polynomial& {
        while (static_cast<int>(powers[v].size()) <= k) powers[v].push_back(powers[v].back() * images[v]);
        return powers[v][static_cast<std::size_t>(k)];
    };

    Polynomial result(tc, tr);
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(tc, tr, c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) term *= power(v, e[v]);
        result += term;
    }
    return result;
}

// Reinterprets the exponent vectors under a new variable class of the same
// arity (y <-> z relabelling and the like).
inline Polynomial relabel(const Polynomial& p, VarClass to) {
    if (var_count(to, p.rank()) != p.nvars()) throw RankMismatch("relabel changes variable count");
    Polynomial r(to, p.rank());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c);
    return r;
}

// Widens a rank-l polynomial in y (or z) variables to the uy class, placing
// it in the y slots.
inline Polynomial embed_as_y(const Polynomial& p) {
    const int l = p.rank();
    Polynomial r(VarClass::uy, l);
    for (const auto& [e, c] : p.terms()) {
        Exponents w(static_cast<std::size_t>(2 * l), 0);
        std::copy(e.begin(), e.end(), w.begin() + l);
        r.add_term(std::move(w), c);
    }
    return r;
}

// Widens a rank-l polynomial in u variables to the uy class (u slots).
inline Polynomial embed_as_u(const Polynomial& p) {
    const int l = p.rank();
    Polynomial r(VarClass::uy, l);
    for (const auto& [e, c] : p.terms()) {
        Exponents w(static_cast<std::size_t>(2 * l), 0);
        std::copy(e.begin(), e.end(), w.begin());
        r.add_term(std::move(w), c);
    }
    return r;
}

// The fiber restriction h^*: u_i -> 0, y_i -> z_i. Accepts uy or y input.
inline Polynomial restrict_to_fiber(const Polynomial& p) {
    const int l = p.rank();
    if (p.var_class() == VarClass::y) return relabel(p, VarClass::z);
    if (p.var_class() != VarClass::uy) throw Error("fiber restriction expects uy or y variables");
    Polynomial r(VarClass::z, l);
    for (const auto& [e, c] : p.terms()) {
        if (std::any_of(e.begin(), e.begin() + l, [](int x) { return x != 0; })) continue;
        r.add_term(Exponents(e.begin() + l, e.end()), c);
    }
    return r;
}

} // namespace flagpush
