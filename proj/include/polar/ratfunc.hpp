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
 * @file ratfunc.hpp
 * @brief Laurent polynomials and reduced rational functions over Q(i).
 */

#ifndef POLAR_RATFUNC_HPP
#define POLAR_RATFUNC_HPP

#include "poly.hpp"

#include <stdexcept>
#include <utility>

namespace polar {

/**
 * t^order * body with body(0) != 0. Zero is not representable; any
 * operation whose result would be zero throws std::domain_error.
 */
class LaurentQi {
   public:
    LaurentQi() : order_(0), body_(1) {}
    LaurentQi(const PolyQi& p, long long shift = 0) {
        if (p.is_zero()) throw std::domain_error("LaurentQi: zero is not representable");
        std::size_t low = p.low_order();
        body_ = p.shifted_down(low);
        order_ = shift + static_cast<long long>(low);
    }
    static LaurentQi t_power(long long k) { return LaurentQi(PolyQi(1), k); }

    long long order() const noexcept { return order_; }
    const PolyQi& body() const noexcept { return body_; }
    /// Highest exponent present.
    long long top() const noexcept { return order_ + body_.degree(); }
    GaussianRational coeff(long long k) const {
        if (k < order_) return GaussianRational(0);
        return body_.coeff(static_cast<std::size_t>(k - order_));
    }

    friend LaurentQi operator*(const LaurentQi& a, const LaurentQi& b) {
        return LaurentQi(a.body_ * b.body_, a.order_ + b.order_);
    }
    friend LaurentQi operator+(const LaurentQi& a, const LaurentQi& b) { return combine(a, b, false); }
    friend LaurentQi operator-(const LaurentQi& a, const LaurentQi& b) { return combine(a, b, true); }
    LaurentQi operator-() const { return LaurentQi(-body_, order_); }
    friend bool operator==(const LaurentQi& a, const LaurentQi& b) {
        return a.order_ == b.order_ && a.body_ == b.body_;
    }
    friend bool operator!=(const LaurentQi& a, const LaurentQi& b) { return !(a == b); }

    /// Units of C[t, 1/t] are c t^k, so only monomials invert.
    bool is_unit() const { return body_.degree() == 0; }

   private:
    static LaurentQi combine(const LaurentQi& a, const LaurentQi& b, bool subtract) {
        long long base = std::min(a.order_, b.order_);
        PolyQi pa = a.body_.shifted_up(static_cast<std::size_t>(a.order_ - base));
        PolyQi pb = b.body_.shifted_up(static_cast<std::size_t>(b.order_ - base));
        PolyQi sum = subtract ? pa - pb : pa + pb;
        return LaurentQi(sum, base);
    }

    long long order_;
    PolyQi body_;
};

inline LaurentQi conj_poly(const LaurentQi& f) { return LaurentQi(conj_poly(f.body()), f.order()); }

inline LaurentQi pow(const LaurentQi& f, long long n) {
    if (n < 0) {
        if (!f.is_unit()) throw std::domain_error("LaurentQi: negative power of a non-unit");
        return LaurentQi(PolyQi(pow(f.body().leading(), n)), f.order() * n);
    }
    return LaurentQi(pow(f.body(), static_cast<unsigned long long>(n)), f.order() * n);
}

/**
 * numerator / denominator, stored reduced with a monic denominator. The zero
 * function is 0/1. Laurent polynomials embed as body * t^k / t^m.
 */
class RatFuncQi {
   public:
    RatFuncQi() : num_(), den_(1) {}
    RatFuncQi(const GaussianRational& c) : num_(c), den_(1) {}
    RatFuncQi(int c) : RatFuncQi(GaussianRational(c)) {}
    RatFuncQi(PolyQi p) : num_(std::move(p)), den_(1) {}
    RatFuncQi(PolyQi num, PolyQi den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    RatFuncQi(const LaurentQi& f) {
        if (f.order() >= 0) {
            num_ = f.body().shifted_up(static_cast<std::size_t>(f.order()));
            den_ = PolyQi(1);
        } else {
            num_ = f.body();
            den_ = PolyQi(1).shifted_up(static_cast<std::size_t>(-f.order()));
        }
    }

    /// The variable raised to k (negative k allowed).
    /// num/den for coprime num, den (den nonzero); only the leading coefficient is normalized.
    static RatFuncQi from_coprime(PolyQi num, PolyQi den) {
        if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num.is_zero()) return RatFuncQi();
        GaussianRational lead = den.leading();
        if (lead != GaussianRational(1)) {
            GaussianRational inv = polar::inverse(lead);
            num.scale(inv);
            den.scale(inv);
        }
        return RatFuncQi(std::move(num), std::move(den), Reduced{});
    }
    static RatFuncQi var_power(long long k) {
        if (k >= 0) return RatFuncQi(PolyQi::monomial(GaussianRational(1), static_cast<std::size_t>(k)));
        return RatFuncQi(PolyQi(1), PolyQi::monomial(GaussianRational(1), static_cast<std::size_t>(-k)));
    }

    const PolyQi& numerator() const noexcept { return num_; }
    const PolyQi& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    bool is_constant() const noexcept { return den_.degree() == 0 && num_.degree() <= 0; }
    GaussianRational constant_value() const { return num_.constant_term(); }
    /// Denominator is a power of the variable.
    bool is_laurent() const { return den_.degree() == static_cast<int>(den_.low_order()); }
    /// deg(num) - deg(den); the function has degree 0 iff it extends to P^1
    /// with neither a zero nor a pole at infinity.
    long long degree() const { return static_cast<long long>(num_.degree()) - den_.degree(); }

    LaurentQi to_laurent() const {
        if (!is_laurent() || is_zero()) throw std::domain_error("not a nonzero Laurent polynomial");
        return LaurentQi(num_, -static_cast<long long>(den_.degree()));
    }

    RatFuncQi operator-() const { return RatFuncQi(-num_, den_, Reduced{}); }

    friend RatFuncQi operator+(const RatFuncQi& a, const RatFuncQi& b) {
        if (a.den_ == b.den_) return RatFuncQi(a.num_ + b.num_, a.den_);
        return RatFuncQi(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncQi operator-(const RatFuncQi& a, const RatFuncQi& b) { return a + (-b); }
    // Both operands are reduced, so only cross gcds can be nontrivial.
    friend RatFuncQi operator*(const RatFuncQi& a, const RatFuncQi& b) {
        return cross_reduced(a.num_, a.den_, b.num_, b.den_);
    }
    friend RatFuncQi operator/(const RatFuncQi& a, const RatFuncQi& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return cross_reduced(a.num_, a.den_, b.den_, b.num_);
    }
    RatFuncQi& operator+=(const RatFuncQi& o) { return *this = *this + o; }
    RatFuncQi& operator-=(const RatFuncQi& o) { return *this = *this - o; }
    RatFuncQi& operator*=(const RatFuncQi& o) { return *this = *this * o; }
    RatFuncQi& operator/=(const RatFuncQi& o) { return *this = *this / o; }

    friend bool operator==(const RatFuncQi& a, const RatFuncQi& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFuncQi& a, const RatFuncQi& b) { return !(a == b); }

    RatFuncQi inverse() const {
        if (is_zero()) throw std::domain_error("inverse of the zero rational function");
        return RatFuncQi(den_, num_);
    }

   private:
    struct Reduced {};
    RatFuncQi(PolyQi num, PolyQi den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    /// (n1/d1)(n2/d2) where n1/d1 and n2/d2 are each in lowest terms.
    static RatFuncQi cross_reduced(PolyQi n1, PolyQi d1, PolyQi n2, PolyQi d2) {
        if (n1.is_zero() || n2.is_zero()) return RatFuncQi();
        cancel(n1, d2);
        cancel(n2, d1);
        return from_coprime(n1 * n2, d1 * d2);
    }
    static void cancel(PolyQi& a, PolyQi& b) {
        if (a.degree() <= 0 || b.degree() <= 0) return;
        PolyQi g = gcd_monic(a, b);
        if (g.degree() <= 0) return;
        a = a / g;
        b = b / g;
    }

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = PolyQi(1);
            return;
        }
        if (den_.degree() > 0 && num_.degree() > 0) {
            PolyQi g = gcd_monic(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        GaussianRational lead = den_.leading();
        if (lead != GaussianRational(1)) {
            GaussianRational inv = polar::inverse(lead);
            num_.scale(inv);
            den_.scale(inv);
        }
    }

    PolyQi num_;
    PolyQi den_;
};

inline RatFuncQi pow(const RatFuncQi& f, long long n) {
    if (n < 0) return pow(f.inverse(), -n);
    RatFuncQi acc(1);
    RatFuncQi base = f;
    for (auto k = static_cast<unsigned long long>(n); k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        if (k > 1) base *= base;
    }
    return acc;
}

inline RatFuncQi conj_coefficients(const RatFuncQi& f) {
    return RatFuncQi(conj_poly(f.numerator()), conj_poly(f.denominator()));
}

/// Coefficient-level split of a Laurent polynomial. Either part may vanish,
/// which LaurentQi cannot hold, so the parts come back as rational functions.
inline RealImagPair<RatFuncQi> real_imag_split(const LaurentQi& f) {
    auto parts = real_imag_split(f.body());
    RatFuncQi shift = RatFuncQi::var_power(f.order());
    return {RatFuncQi(parts.f1) * shift, RatFuncQi(parts.f2) * shift};
}

inline NormTrace<RatFuncQi> norm_trace(const LaurentQi& f) {
    RatFuncQi g(f);
    auto parts = real_imag_split(f);
    return {g * RatFuncQi(conj_poly(f)), parts.f1 * RatFuncQi(2)};
}

}  // namespace polar

#endif  // POLAR_RATFUNC_HPP
