#pragma once

#include <cctype>
#include <string>

#include "flagpush/poly.hpp"

namespace flagpush {

// Recursive-descent parser for the polynomial expression grammar:
//
//   expr    := term (("+"|"-") term)*
//   term    := factor ("*" factor)*            (no implicit multiplication)
//   factor  := base ("^" NAT)?
//   base    := RATIONAL | VARIABLE | "(" expr ")" | "-" factor
//   RATIONAL := NAT ("/" NAT)?
//   VARIABLE := ("u"|"y"|"z") NAT
//
// Whitespace is insignificant. Positions in errors are 0-based offsets.
namespace parse_detail {

class Parser {
public:
    Parser(const std::string& text, int rank, VarClass cls) : text_(text), rank_(rank), cls_(cls) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw SyntaxError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        for (;;) {
            skip_ws();
            if (accept('*'))
                p *= factor();
            else
                return p;
        }
    }

    Polynomial factor() {
        Polynomial p = base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                throw ExponentNotNonnegativeInteger("negative exponent at position " + std::to_string(pos_));
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError("expected exponent", pos_);
            const long k = natural_long();
            return p.pow(k);
        }
        return p;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (accept('(')) {
            Polynomial p = expr();
            skip_ws();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return p;
        }
        if (accept('-')) return -factor();
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (c == 'u' || c == 'y' || c == 'z') return variable();
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    Polynomial rational_literal() {
        const Integer num = natural();
        Integer den = 1;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError("expected denominator", pos_);
            const std::size_t at = pos_;
            den = natural();
            if (den == 0) throw SyntaxError("zero denominator", at);
        }
        return Polynomial::constant(cls_, rank_, make_rational(num, den));
    }

    Polynomial variable() {
        const std::size_t at = pos_;
        const char letter = text_[pos_++];
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected variable index", pos_);
        const long idx = natural_long();
        const std::string name = std::string(1, letter) + std::to_string(idx);

        bool letter_ok = false;
        switch (cls_) {
            case VarClass::u: letter_ok = letter == 'u'; break;
            case VarClass::y: letter_ok = letter == 'y'; break;
            case VarClass::z: letter_ok = letter == 'z'; break;
            case VarClass::uy: letter_ok = letter == 'u' || letter == 'y'; break;
        }
        if (!letter_ok)
            throw UnknownVariable("unknown variable " + name + " at position " + std::to_string(at) +
                                  " (expected class " + var_class_name(cls_) + ")");
        if (idx < 1 || idx > rank_)
            throw UnknownVariable("unknown variable " + name + " at position " + std::to_string(at) +
                                  " (rank is " + std::to_string(rank_) + ")");
        const int slot = (cls_ == VarClass::uy && letter == 'y') ? rank_ + static_cast<int>(idx) - 1
                                                                 : static_cast<int>(idx) - 1;
        return Polynomial::variable(cls_, rank_, slot);
    }

    Integer natural() {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
        return Integer(digits);
    }

    long natural_long() {
        const std::size_t at = pos_;
        const Integer n = natural();
        if (!n.fits_slong_p()) throw SyntaxError("number too large", at);
        return n.get_si();
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int rank_;
    VarClass cls_;
};

} // namespace parse_detail

inline Polynomial parse_poly(const std::string& text, int rank, VarClass cls) {
    return parse_detail::Parser(text, rank, cls).run();
}

} // namespace flagpush
