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
 * @file exactnum.hpp
 * @brief Exact scalars: Q, Q(i) and the Gaussian integers Z[i].
 *
 * GaussianRational is the scalar type of every polynomial in the library.
 * All comparisons are exact. GaussianInteger exists to support the
 * rational-root search in splitter.hpp (divisor enumeration in Z[i]).
 */

#ifndef POLAR_EXACTNUM_HPP
#define POLAR_EXACTNUM_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num, den);
}

/// Renders a rational as `a` or `a/b`.
inline std::string to_string(const Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Exact square root of a nonnegative rational, if it is a rational square.
inline bool rational_sqrt(const Rational& q, Rational& out) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (q < 0) return false;
    Integer n = numerator(q), d = denominator(q);
    Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return false;
    out = Rational(rn, rd);
    return true;
}

enum class CircleLocation { Inside, On, Outside };
enum class HalfPlane { Upper, Real, Lower };

class GaussianRational {
   public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long long re) : re_(re) {}
    GaussianRational(int re) : re_(re) {}

    static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    // Lexicographic on (re, im); only used to key ordered containers.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

   private:
    Rational re_{0};
    Rational im_{0};
};

inline const GaussianRational kI = GaussianRational::imaginary_unit();

inline GaussianRational conj(const GaussianRational& z) { return {z.re(), -z.im()}; }

/// z * conj(z), kept squared so that it stays in Q.
inline Rational norm_sq(const GaussianRational& z) { return z.re() * z.re() + z.im() * z.im(); }

inline GaussianRational inverse(const GaussianRational& z) { return GaussianRational(1) / z; }

inline GaussianRational pow(GaussianRational z, long long n) {
    if (n < 0) {
        z = inverse(z);
        n = -n;
    }
    GaussianRational acc(1);
    while (n > 0) {
        if (n & 1) acc *= z;
        z *= z;
        n >>= 1;
    }
    return acc;
}

inline CircleLocation circle_location(const GaussianRational& z) {
    Rational n = norm_sq(z);
    if (n < 1) return CircleLocation::Inside;
    if (n == 1) return CircleLocation::On;
    return CircleLocation::Outside;
}

inline HalfPlane half_plane_location(const GaussianRational& z) {
    if (z.im() > 0) return HalfPlane::Upper;
    if (z.im() < 0) return HalfPlane::Lower;
    return HalfPlane::Real;
}

/// Exact square root in Q(i) when one exists.
inline bool gaussian_sqrt(const GaussianRational& z, GaussianRational& out) {
    if (z.is_zero()) {
        out = GaussianRational(0);
        return true;
    }
    Rational modulus;
    if (!rational_sqrt(norm_sq(z), modulus)) return false;
    Rational c, d;
    if (!rational_sqrt((z.re() + modulus) / 2, c)) return false;
    if (!rational_sqrt((modulus - z.re()) / 2, d)) return false;
    // c^2 - d^2 = re holds by construction; fix the sign so that 2cd = im.
    if (z.im() < 0) d = -d;
    out = GaussianRational(c, d);
    return out * out == z;
}

/**
 * Literal syntax shared with the expression parser: `3`, `-1/2`, `i`,
 * `-2*i/3`, `3+4*i`, `(3+4*i)/5`. Parsing the output yields the same value.
 */
inline std::string to_literal(const GaussianRational& z) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (z.is_real()) return to_string(z.re());
    Integer d = boost::multiprecision::lcm(denominator(z.re()), denominator(z.im()));
    Integer a = numerator(z.re()) * (d / denominator(z.re()));
    Integer b = numerator(z.im()) * (d / denominator(z.im()));
    auto imag_part = [](const Integer& v) -> std::string {
        if (v == 1) return "i";
        if (v == -1) return "-i";
        return v.str() + "*i";
    };
    if (a == 0) {
        std::string s = imag_part(b);
        return d == 1 ? s : s + "/" + d.str();
    }
    std::string body = a.str();
    if (b > 0)
        body += "+" + imag_part(b);
    else
        body += imag_part(b);
    return d == 1 ? body : "(" + body + ")/" + d.str();
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_literal(z); }

/**
 * Hilbert 90 for Q(i)/Q: for w with |w|^2 = 1 returns u != 0 with
 * conj(u)/u = w. Uses u = 1 + conj(w), with w = 1 and w = -1 special-cased.
 */
inline GaussianRational hilbert90(const GaussianRational& w) {
    if (norm_sq(w) != 1) throw std::domain_error("hilbert90: argument must have square norm 1");
    if (w == GaussianRational(1)) return GaussianRational(1);
    if (w == GaussianRational(-1)) return kI;
    return GaussianRational(1) + conj(w);
}

// ---------------------------------------------------------------------------
// Gaussian integers
// ---------------------------------------------------------------------------

struct GaussianInteger {
    Integer a{0};
    Integer b{0};

    GaussianInteger() = default;
    GaussianInteger(Integer a_, Integer b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    GaussianInteger(long long a_, long long b_ = 0) : a(a_), b(b_) {}

    bool is_zero() const { return a == 0 && b == 0; }
    Integer norm() const { return a * a + b * b; }

    friend GaussianInteger operator+(const GaussianInteger& x, const GaussianInteger& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend GaussianInteger operator-(const GaussianInteger& x, const GaussianInteger& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend GaussianInteger operator*(const GaussianInteger& x, const GaussianInteger& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const GaussianInteger& x, const GaussianInteger& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const GaussianInteger& x, const GaussianInteger& y) { return !(x == y); }
    friend bool operator<(const GaussianInteger& x, const GaussianInteger& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }

    GaussianRational to_rational() const { return {Rational(a), Rational(b)}; }
};

inline GaussianInteger conj(const GaussianInteger& z) { return {z.a, -z.b}; }

inline const std::array<GaussianInteger, 4>& gaussian_units() {
    static const std::array<GaussianInteger, 4> units{GaussianInteger(1, 0), GaussianInteger(0, 1),
                                                      GaussianInteger(-1, 0), GaussianInteger(0, -1)};
    return units;
}

/// Exact quotient x / y when y divides x in Z[i].
inline bool gaussian_divides(const GaussianInteger& y, const GaussianInteger& x, GaussianInteger& quotient) {
    if (y.is_zero()) return false;
    GaussianInteger num = x * conj(y);
    Integer n = y.norm();
    if (num.a % n != 0 || num.b % n != 0) return false;
    quotient = {num.a / n, num.b / n};
    return true;
}

/// The associate with a > 0 and b >= 0 (first quadrant, positive real axis included).
inline GaussianInteger canonical_associate(const GaussianInteger& z) {
    if (z.is_zero()) return z;
    for (const auto& u : gaussian_units()) {
        GaussianInteger w = z * u;
        if (w.a > 0 && w.b >= 0) return w;
    }
    return z;  // unreachable
}

struct GaussianFactorization {
    GaussianInteger unit{1, 0};
    std::vector<std::pair<GaussianInteger, int>> primes;  // canonical associates, sorted by (norm, a, b)

    GaussianInteger expand() const {
        GaussianInteger acc = unit;
        for (const auto& [p, e] : primes)
            for (int k = 0; k < e; ++k) acc = acc * p;
        return acc;
    }
};

namespace detail {

// x^2 + y^2 = p for a prime p = 1 mod 4, by direct search (desk-scale primes).
inline GaussianInteger split_prime(const Integer& p) {
    for (Integer x = 1; x * x < p; ++x) {
        Integer rest = p - x * x;
        Integer y = boost::multiprecision::sqrt(rest);
        if (y * y == rest) return canonical_associate(GaussianInteger(x, y));
    }
    throw std::logic_error("split_prime: no two-square decomposition");
}

inline int divide_out(GaussianInteger& n, const GaussianInteger& p) {
    int e = 0;
    GaussianInteger q;
    while (gaussian_divides(p, n, q)) {
        n = q;
        ++e;
    }
    return e;
}

}  // namespace detail

/**
 * Factors n != 0 in Z[i] by trial division of its norm. Each listed prime has
 * prime norm, or is an inert rational prime p = 3 mod 4 (norm p^2).
 */
inline GaussianFactorization factor_gaussian(const GaussianInteger& n) {
    if (n.is_zero()) throw std::domain_error("factor_gaussian: zero has no factorization");
    GaussianFactorization out;
    GaussianInteger rest = n;
    auto push = [&](const GaussianInteger& p, int e) {
        if (e > 0) out.primes.emplace_back(p, e);
    };

    Integer norm = rest.norm();
    for (Integer p = 2; p * p <= norm; ++p) {
        if (norm % p != 0) continue;
        if (p == 2) {
            push(GaussianInteger(1, 1), detail::divide_out(rest, GaussianInteger(1, 1)));
        } else if (p % 4 == 3) {
            push(GaussianInteger(p, 0), detail::divide_out(rest, GaussianInteger(p, 0)));
        } else {
            GaussianInteger pi = detail::split_prime(p);
            GaussianInteger pi_bar = canonical_associate(conj(pi));
            push(pi, detail::divide_out(rest, pi));
            push(pi_bar, detail::divide_out(rest, pi_bar));
        }
        norm = rest.norm();
    }
    if (norm > 1) {
        // Remaining norm is a prime, so rest itself is a Gaussian prime.
        GaussianInteger p = canonical_associate(rest);
        push(p, detail::divide_out(rest, p));
    }
    out.unit = rest;
    std::sort(out.primes.begin(), out.primes.end(), [](const auto& x, const auto& y) {
        Integer nx = x.first.norm(), ny = y.first.norm();
        if (nx != ny) return nx < ny;
        return x.first < y.first;
    });
    return out;
}

/// All divisors of n up to units, as canonical associates.
inline std::vector<GaussianInteger> gaussian_divisors(const GaussianInteger& n) {
    GaussianFactorization f = factor_gaussian(n);
    std::vector<GaussianInteger> divisors{GaussianInteger(1, 0)};
    for (const auto& [p, e] : f.primes) {
        std::vector<GaussianInteger> next;
        next.reserve(divisors.size() * static_cast<std::size_t>(e + 1));
        for (const auto& d : divisors) {
            GaussianInteger power(1, 0);
            for (int k = 0; k <= e; ++k) {
                next.push_back(canonical_associate(d * power));
                power = power * p;
            }
        }
        divisors = std::move(next);
    }
    std::sort(divisors.begin(), divisors.end());
    divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
    return divisors;
}

}  // namespace polar

#endif  // POLAR_EXACTNUM_HPP
