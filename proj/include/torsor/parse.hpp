#pragma once

#include <cctype>
#include <string>

#include "torsor/param.hpp"

namespace torsor {

// Tiny expression parser for coefficient-field elements over a fixed variable
// table: integers, rationals "p/q", variables, + - * / ^ and parentheses.
// Juxtaposition is not supported; write 2*a*(b-1).
class ExprParser {
  public:
    ExprParser(std::string text, VarTablePtr vars)
        : s_(std::move(text)), vars_(std::move(vars)) {}

    ParamElement parse() {
        ParamElement v = expr();
        skip_ws();
        require(pos_ == s_.size(), "trailing input in expression: " + s_.substr(pos_));
        return v;
    }

  private:
    ParamElement expr() {
        ParamElement v = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v = v + term();
            } else if (peek() == '-') {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }
    ParamElement term() {
        ParamElement v = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v = v * factor();
            } else if (peek() == '/') {
                ++pos_;
                v = v / factor();
            } else {
                return v;
            }
        }
    }
    ParamElement factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        ParamElement v = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::string digits;
            while (std::isdigit(peek())) digits += s_[pos_++];
            require(!digits.empty(), "exponent expected after '^'");
            v = v.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return v;
    }
    ParamElement atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            ParamElement v = expr();
            skip_ws();
            require(peek() == ')', "missing ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(c)) {
            std::string digits;
            while (std::isdigit(peek())) digits += s_[pos_++];
            return ParamElement::constant(vars_, Rational(digits));
        }
        if (std::isalpha(c) || c == '_') {
            std::string name;
            while (std::isalnum(peek()) || peek() == '_' || peek() == '\'') name += s_[pos_++];
            return ParamElement::variable(vars_, name);
        }
        throw InvalidInput("unexpected character in expression: " + s_.substr(pos_));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string s_;
    VarTablePtr vars_;
    std::size_t pos_ = 0;
};

inline ParamElement parse_param(const std::string& text, VarTablePtr vars) {
    return ExprParser(text, std::move(vars)).parse();
}

inline Poly parse_poly(const std::string& text, VarTablePtr vars) {
    ParamElement e = parse_param(text, std::move(vars));
    require(e.den().is_one(), "expected a polynomial, got a proper fraction: " + text);
    return e.num();
}

} // namespace torsor
