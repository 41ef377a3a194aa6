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
 * @file format.hpp
 * @brief Text rendering of polynomials and rational functions.
 *
 * Output is in the CLI expression syntax, so everything printed here parses
 * back to the same value.
 */

#ifndef POLAR_FORMAT_HPP
#define POLAR_FORMAT_HPP

#include "ratfunc.hpp"

#include <string>
#include <vector>

namespace polar {

namespace detail {

inline std::string monomial_text(char var, long long k) {
    if (k == 0) return "";
    if (k == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(k);
}

// Real or purely imaginary coefficients carry their sign into the join.
inline bool coefficient_is_negative(const GaussianRational& c) {
    if (c.is_real()) return c.re() < 0;
    if (c.re() == 0) return c.im() < 0;
    return false;
}

inline std::string term_text(const GaussianRational& magnitude, char var, long long k) {
    std::string mono = monomial_text(var, k);
    std::string lit = to_literal(magnitude);
    bool needs_parens = !magnitude.is_real() && magnitude.re() != 0 && lit.front() != '(';
    if (needs_parens) lit = "(" + lit + ")";
    if (mono.empty()) return lit;
    if (magnitude == GaussianRational(1)) return mono;
    return lit + "*" + mono;
}

}  // namespace detail

/// Terms from highest exponent down; exponent k of coeffs[j] is low + j.
inline std::string format_terms(const std::vector<GaussianRational>& coeffs, long long low, char var) {
    std::string out;
    bool first = true;
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        const GaussianRational& c = coeffs[j];
        if (c.is_zero()) continue;
        bool negative = detail::coefficient_is_negative(c);
        std::string term = detail::term_text(negative ? -c : c, var, low + static_cast<long long>(j));
        if (first)
            out += negative ? "-" + term : term;
        else
            out += negative ? " - " + term : " + " + term;
        first = false;
    }
    return first ? "0" : out;
}

inline std::string format_poly(const PolyQi& p, char var) { return format_terms(p.coefficients(), 0, var); }

inline std::string format_laurent(const LaurentQi& f, char var) {
    return format_terms(f.body().coefficients(), f.order(), var);
}

namespace detail {

inline std::size_t term_count(const PolyQi& p) {
    std::size_t n = 0;
    for (const auto& c : p.coefficients())
        if (!c.is_zero()) ++n;
    return n;
}

}  // namespace detail

/**
 * Laurent-shaped values print with negative exponents when allow_negative is
 * set; anything else prints as numerator/denominator, parenthesized where the
 * parser needs it.
 */
inline std::string format_ratfunc(const RatFuncQi& f, char var, bool allow_negative = false) {
    if (f.is_polynomial()) return format_poly(f.numerator(), var);
    if (allow_negative && f.is_laurent() && !f.is_zero()) return format_laurent(f.to_laurent(), var);
    std::string num = format_poly(f.numerator(), var);
    if (detail::term_count(f.numerator()) > 1) num = "(" + num + ")";
    std::string den = format_poly(f.denominator(), var);
    // The denominator is monic, so a single term is a bare power of the variable.
    if (detail::term_count(f.denominator()) > 1) den = "(" + den + ")";
    return num + "/" + den;
}

}  // namespace polar

#endif  // POLAR_FORMAT_HPP
