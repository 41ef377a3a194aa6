/*
   Copyright 2026 The polarctl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file expr.hpp
 * @brief Expression parser, canonical printer, and the ring DSL.
 *
 * Grammar (whitespace ignored):
 *
 *     expr   := ['-'] term (('+' | '-') term)*
 *     term   := factor (('*' | '/') factor)*
 *     factor := base ('^' exponent)?
 *     exponent := ['-'] digits | '(' ['-'] digits ')'
 *     base   := digits | 'i' | var | '(' expr ')'
 *
 * Exactly one variable letter is legal per parse. Negative exponents are
 * accepted only on the variable t.
 */

#ifndef POLAR_EXPR_HPP
#define POLAR_EXPR_HPP

#include "ringctx.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace polar {

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Imag, Var, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    Integer number;         // Number
    long long exponent = 0; // Pow
    ExprPtr lhs, rhs;       // Neg uses lhs

    static ExprPtr make(Kind k, ExprPtr a = nullptr, ExprPtr b = nullptr) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }
    static ExprPtr num(Integer n) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Number;
        e->number = std::move(n);
        return e;
    }
    static ExprPtr power(ExprPtr base, long long k) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Pow;
        e->lhs = std::move(base);
        e->exponent = k;
        return e;
    }
};

inline bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind || a->number != b->number || a->exponent != b->exponent) return false;
    return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

namespace detail {

inline constexpr long long kMaxExponent = 512;

class ExprParser {
   public:
    ExprParser(const std::string& src, char var) : src_(src), var_(var) {}

    ExprPtr parse() {
        skip();
        if (pos_ >= src_.size()) throw ParseError("empty expression", pos_);
        ExprPtr e = expr();
        skip();
        if (pos_ < src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return e;
    }

   private:
    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr expr() {
        ExprPtr left;
        if (accept('-'))
            left = Expr::make(Expr::Kind::Neg, term());
        else
            left = term();
        while (true) {
            if (accept('+'))
                left = Expr::make(Expr::Kind::Add, left, term());
            else if (accept('-'))
                left = Expr::make(Expr::Kind::Sub, left, term());
            else
                return left;
        }
    }

    ExprPtr term() {
        ExprPtr left = factor();
        while (true) {
            if (accept('*'))
                left = Expr::make(Expr::Kind::Mul, left, factor());
            else if (accept('/'))
                left = Expr::make(Expr::Kind::Div, left, factor());
            else
                return left;
        }
    }

    ExprPtr factor() {
        ExprPtr b = base();
        skip();
        if (!accept('^')) return b;
        std::size_t at = pos_;
        long long k = exponent();
        if (k < 0 && !(b->kind == Expr::Kind::Var && var_ == 't'))
            throw ParseError("negative exponents are only allowed on the variable t", at);
        return Expr::power(b, k);
    }

    long long exponent() {
        skip();
        bool parens = accept('(');
        skip();
        bool negative = accept('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("exponent must be an integer", start);
        std::string digits = src_.substr(start, pos_ - start);
        if (digits.size() > 6 || std::stoll(digits) > kMaxExponent)
            throw ParseError("exponent too large (limit " + std::to_string(kMaxExponent) + ")", start);
        if (parens && !accept(')')) throw ParseError("exponent must be an integer", pos_);
        long long k = std::stoll(digits);
        return negative ? -k : k;
    }

    ExprPtr base() {
        skip();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return Expr::num(Integer(src_.substr(start, pos_ - start)));
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            std::string word = src_.substr(start, pos_ - start);
            if (word == "i") return Expr::make(Expr::Kind::Imag);
            if (word.size() == 1 && word[0] == var_) return Expr::make(Expr::Kind::Var);
            if (word == "x" || word == "t")
                throw ParseError("variable " + word + " is not valid in this ring (use " + std::string(1, var_) + ")",
                                 start);
            throw ParseError("unknown symbol '" + word + "'", start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    const std::string& src_;
    char var_;
    std::size_t pos_ = 0;
};

inline int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Neg:
            return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div:
            return 2;
        case Expr::Kind::Pow:
            return 3;
        default:
            return 4;
    }
}

inline std::string print_expr(const ExprPtr& e, char var, bool leading);

/// Child printed in parentheses when its precedence is below min_prec.
inline std::string child(const ExprPtr& e, char var, int min_prec) {
    if (precedence(e->kind) < min_prec) return "(" + print_expr(e, var, true) + ")";
    return print_expr(e, var, false);
}

inline std::string print_expr(const ExprPtr& e, char var, bool leading) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::Number:
            return e->number.str();
        case K::Imag:
            return "i";
        case K::Var:
            return std::string(1, var);
        case K::Neg: {
            std::string s = "-" + child(e->lhs, var, 2);
            return leading ? s : "(" + s + ")";
        }
        case K::Add:
        case K::Sub: {
            std::string l = print_expr(e->lhs, var, leading);
            std::string r = child(e->rhs, var, 2);
            return l + (e->kind == K::Add ? " + " : " - ") + r;
        }
        case K::Mul:
        case K::Div:
            return child(e->lhs, var, 2) + (e->kind == K::Mul ? "*" : "/") + child(e->rhs, var, 3);
        case K::Pow:
            return child(e->lhs, var, 4) + "^" + std::to_string(e->exponent);
    }
    return "";
}

}  // namespace detail

inline ExprPtr parse_expr(const std::string& src, char var) { return detail::ExprParser(src, var).parse(); }

/// Canonical text; parse_expr(print_expr(e)) is structurally equal to e.
inline std::string print_expr(const ExprPtr& e, char var) { return detail::print_expr(e, var, true); }

inline RatFuncQi evaluate(const ExprPtr& e) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::Number:
            return RatFuncQi(GaussianRational(Rational(e->number)));
        case K::Imag:
            return RatFuncQi(kI);
        case K::Var:
            return RatFuncQi::var_power(1);
        case K::Neg:
            return -evaluate(e->lhs);
        case K::Add:
            return evaluate(e->lhs) + evaluate(e->rhs);
        case K::Sub:
            return evaluate(e->lhs) - evaluate(e->rhs);
        case K::Mul:
            return evaluate(e->lhs) * evaluate(e->rhs);
        case K::Div: {
            RatFuncQi d = evaluate(e->rhs);
            if (d.is_zero()) throw DomainError("division by zero");
            return evaluate(e->lhs) / d;
        }
        case K::Pow: {
            RatFuncQi b = evaluate(e->lhs);
            if (b.is_zero() && e->exponent < 0) throw DomainError("division by zero");
            return pow(b, e->exponent);
        }
    }
    return RatFuncQi();
}

/// Parses and evaluates; a zero value is rejected.
inline RatFuncQi parse_value(const std::string& src, char var) {
    RatFuncQi v = evaluate(parse_expr(src, var));
    if (v.is_zero()) throw DomainError("expression evaluates to zero");
    return v;
}

inline RatFuncQi parse_value(const std::string& src, const RingContext& c) { return parse_value(src, c.variable()); }

/// A constant expression such as (3+4*i)/5.
inline GaussianRational parse_scalar(const std::string& src) {
    RatFuncQi v = evaluate(parse_expr(src, 'x'));
    if (!v.is_constant()) throw ParseError("expected a constant, got an expression in x", 0);
    return v.constant_value();
}

// ---------------------------------------------------------------------------
// Ring DSL
// ---------------------------------------------------------------------------

namespace detail {

/// Splits at commas that are not inside parentheses.
inline std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\n\r");
    return s.substr(a, b - a + 1);
}

}  // namespace detail

/**
 * line | line[inv=ITEM,...] | prime-local[z] | circle | icircle | proj-line | conic | cusp
 *
 * An inv item that is a number inverts x - z (and x - conj(z)); an item in x
 * inverts every root of that polynomial, which must split over Q(i).
 */
inline RingContext parse_ring(const std::string& raw) {
    const std::string s = detail::trim(raw);
    if (s == "line") return RingContext::affine_line();
    if (s == "circle") return RingContext::circle();
    if (s == "icircle") return RingContext::imaginary_circle();
    if (s == "proj-line") return RingContext::projective_line();
    if (s == "conic") return RingContext::projective_conic();
    if (s == "cusp") return RingContext::cusp_cubic();
    auto bracketed = [&](const std::string& head) -> std::optional<std::string> {
        if (s.size() <= head.size() + 1 || s.compare(0, head.size(), head) != 0 || s.back() != ']') return std::nullopt;
        std::string inner = detail::trim(s.substr(head.size()));
        if (inner.empty() || inner.front() != '[') return std::nullopt;
        return inner.substr(1, inner.size() - 2);
    };
    if (auto inner = bracketed("prime-local")) {
        GaussianRational z = parse_scalar(*inner);
        if (z.im() <= 0) throw DomainError("prime-local point must have Im > 0");
        return RingContext::prime_local(z);
    }
    if (auto inner = bracketed("line")) {
        std::string body = detail::trim(*inner);
        if (body.compare(0, 4, "inv=") != 0) throw ParseError("expected inv= in line[...]", 5);
        std::vector<GaussianRational> points;
        for (const auto& item : detail::split_top_level(body.substr(4))) {
            RatFuncQi v = evaluate(parse_expr(detail::trim(item), 'x'));
            if (v.is_constant()) {
                points.push_back(v.constant_value());
                points.push_back(conj(v.constant_value()));
                continue;
            }
            if (!v.is_polynomial()) throw DomainError("inv item must be a number or a polynomial in x");
            SplitForm sf = split_or_throw(v.numerator());
            for (const auto& [z, e] : sf.roots) {
                points.push_back(z);
                points.push_back(conj(z));
            }
        }
        return RingContext::affine_line(std::move(points));
    }
    throw ParseError("unknown ring '" + s + "'", 0);
}

}  // namespace polar

#endif  // POLAR_EXPR_HPP
