#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "cla/algebra.hpp"

namespace cla {

// Text grammar for algebra elements:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'Y[' int ']' | 'Ys[' int ']' | '1'
// Example: 1/2*Y[-1]*Ys[0] - Y[2]

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    AlgebraElement parse() {
        AlgebraElement e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    AlgebraElement parse_expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (s_[pos_++] == '-');
        AlgebraElement acc = parse_term(neg);
        for (;;) {
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
            bool minus = (s_[pos_++] == '-');
            acc += parse_term(minus);
        }
        return acc;
    }

    AlgebraElement parse_term(bool negated) {
        Rat coeff = negated ? Rat(-1) : Rat(1);
        Word word;
        bool any = false;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == 'Y') {
                word.push_back(parse_generator());
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_rational();
            } else if (!any) {
                throw ParseError("expected a rational, 'Y[n]', 'Ys[n]' or '1'", pos_);
            } else {
                throw ParseError("expected a factor after '*'", pos_);
            }
            any = true;
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
        }
        AlgebraElement e;
        e.add_term(word, coeff);
        return e;
    }

    Generator parse_generator() {
        ++pos_;  // 'Y'
        Kind kind = Kind::Y;
        if (peek() == 's') {
            kind = Kind::Ystar;
            ++pos_;
        }
        if (peek() != '[') throw ParseError("expected '[' after generator name", pos_);
        ++pos_;
        long n = parse_integer();
        if (peek() != ']') throw ParseError("expected ']' after generator index", pos_);
        ++pos_;
        return Generator{kind, n};
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an integer", pos_);
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::stol(s_.substr(start, pos_ - start));
    }

    Rat parse_rational() {
        long p = parse_integer();
        if (peek() == '/') {
            ++pos_;
            std::size_t qpos = pos_;
            long q = parse_integer();
            if (q == 0) throw ParseError("zero denominator", qpos);
            return rat(p, q);
        }
        return Rat(p);
    }
};

}  // namespace detail

inline AlgebraElement parse_element(const std::string& s) {
    return detail::ExprParser(s).parse();
}

}  // namespace cla
