#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flagpush/poly.hpp"
#include "flagpush/weyl_action.hpp"

namespace flagpush {

// Quotient of two polynomials in the same variables. Canonical form keeps an
// integer-primitive denominator with positive leading coefficient; gcd
// reduction beyond the exact-quotient collapse is deliberately not attempted,
// so equality goes through cross-multiplication, which is exact either way.
// Keeping denominators structurally intact is what lets localization sums
// accumulate over one shared denominator instead of cross-multiplying.
class RationalFunction {
public:
    explicit RationalFunction(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::constant(num_.var_class(), num_.rank(), Rational(1))) {}

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZeroPoly("rational function with zero denominator");
        canonicalize();
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    // The polynomial value when the canonical denominator is constant.
    std::optional<Polynomial> as_polynomial() const {
        if (!den_.is_constant()) return std::nullopt;
        const Rational c = den_.constant_term();
        if (c == 1) return num_;
        Polynomial p = num_;
        p *= Rational(1) / c;
        return p;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    RationalFunction& operator+=(const RationalFunction& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ = den_ * o.den_;
        }
        canonicalize();
        return *this;
    }
    RationalFunction& operator-=(const RationalFunction& o) {
        if (den_ == o.den_) {
            num_ -= o.num_;
        } else {
            num_ = num_ * o.den_ - o.num_ * den_;
            den_ = den_ * o.den_;
        }
        canonicalize();
        return *this;
    }
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        RationalFunction r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) throw DivisionByZeroPoly("rational function division by zero");
        RationalFunction r;
        r.num_ = a.num_ * b.den_;
        r.den_ = a.den_ * b.num_;
        r.canonicalize();
        return r;
    }

    std::string to_string() const {
        if (is_polynomial()) return as_polynomial()->to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    RationalFunction() = default; // 0/0 placeholder, only for internal assembly

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(num_.var_class(), num_.rank(), Rational(1));
            return;
        }
        if (den_.is_constant()) {
            const Rational c = den_.constant_term();
            if (c != 1) {
                num_ *= Rational(1) / c;
                den_ = Polynomial::constant(num_.var_class(), num_.rank(), Rational(1));
            }
            return;
        }
        // Collapse exact quotients (only possible when degrees allow it).
        if (num_.degree() >= den_.degree()) {
            try {
                num_ = exact_div(num_, den_);
                den_ = Polynomial::constant(num_.var_class(), num_.rank(), Rational(1));
                return;
            } catch (const NotDivisible&) {
            }
        }
        // Make the denominator integer-primitive with positive leading term.
        Rational c = content(den_);
        if (den_.terms().begin()->second < 0) c = -c;
        num_ *= Rational(1) / c;
        den_ *= Rational(1) / c;
    }

    static Rational content(const Polynomial& p) {
        Integer g = 0, l = 1;
        for (const auto& [e, c] : p.terms()) {
            (void)e;
            Integer num = c.get_num();
            if (num < 0) num = -num;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        }
        return make_rational(g, l);
    }

    Polynomial num_, den_;
};

// sum_{v in subgroup} v.f with the Weyl action applied to numerator and
// denominator separately; exact throughout.
inline RationalFunction symmetrize_sum(const RationalFunction& f, const WeylGroup& W,
                                       const std::vector<int>& subgroup) {
    RationalFunction acc(Polynomial::zero(f.numerator().var_class(), f.numerator().rank()));
    for (int v : subgroup) {
        const WeylElement& el = W.elements[static_cast<std::size_t>(v)];
        acc += RationalFunction(weyl_act_poly(el, f.numerator()), weyl_act_poly(el, f.denominator()));
    }
    return acc;
}

} // namespace flagpush
