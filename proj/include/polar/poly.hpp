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
 * @file poly.hpp
 * @brief Dense univariate polynomials over an exact field.
 *
 * Coefficients are stored low degree first; the zero polynomial is the
 * empty sequence, so a nonzero polynomial always has a nonzero leading
 * coefficient. The variable is anonymous; rendering picks a name.
 */

#ifndef POLAR_POLY_HPP
#define POLAR_POLY_HPP

#include "exactnum.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polar {

template <class Field>
class Polynomial {
   public:
    using value_type = Field;

    Polynomial() = default;
    Polynomial(const Field& c) {
        if (!is_zero_scalar(c)) coeffs_.push_back(c);
    }
    Polynomial(int c) : Polynomial(Field(c)) {}
    Polynomial(std::initializer_list<Field> low_to_high) : coeffs_(low_to_high) { trim(); }
    explicit Polynomial(std::vector<Field> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

    /// The monomial c * x^k.
    static Polynomial monomial(const Field& c, std::size_t k) {
        if (is_zero_scalar(c)) return {};
        std::vector<Field> v(k + 1, Field(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }
    static Polynomial x() { return monomial(Field(1), 1); }
    /// x - root
    static Polynomial linear(const Field& root) { return Polynomial({-root, Field(1)}); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Field>& coefficients() const noexcept { return coeffs_; }
    Field coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Field(0); }
    Field leading() const { return coeffs_.empty() ? Field(0) : coeffs_.back(); }
    Field constant_term() const { return coeff(0); }

    /// Multiplicity of x as a factor (index of the lowest nonzero coefficient).
    std::size_t low_order() const {
        std::size_t k = 0;
        while (k < coeffs_.size() && is_zero_scalar(coeffs_[k])) ++k;
        return k;
    }

    Field operator()(const Field& at) const {
        Field acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= at;
            acc += *it;
        }
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Field(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Field(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) {
        if (is_zero() || o.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<Field> r(coeffs_.size() + o.coeffs_.size() - 1, Field(0));
        for (std::size_t a = 0; a < coeffs_.size(); ++a) {
            if (is_zero_scalar(coeffs_[a])) continue;
            for (std::size_t b = 0; b < o.coeffs_.size(); ++b) r[a + b] += coeffs_[a] * o.coeffs_[b];
        }
        coeffs_ = std::move(r);
        trim();
        return *this;
    }
    Polynomial& scale(const Field& c) {
        if (is_zero_scalar(c)) {
            coeffs_.clear();
            return *this;
        }
        for (auto& v : coeffs_) v *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(const Field& c, Polynomial p) { return p.scale(c); }
    friend Polynomial operator*(Polynomial p, const Field& c) { return p.scale(c); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Multiplies by x^k.
    Polynomial shifted_up(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Field> v(k, Field(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(v));
    }
    /// Divides by x^k; the low k coefficients must vanish.
    Polynomial shifted_down(std::size_t k) const {
        if (k > low_order() && !is_zero()) throw std::domain_error("shifted_down: x^k does not divide");
        if (k >= coeffs_.size()) return {};
        return Polynomial(std::vector<Field>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
    }
    /// x^deg * p(1/x).
    Polynomial reversed() const {
        std::vector<Field> v(coeffs_.rbegin(), coeffs_.rend());
        return Polynomial(std::move(v));
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Field> v(coeffs_.size() - 1, Field(0));
        for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Field(static_cast<long long>(k));
        return Polynomial(std::move(v));
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        Polynomial r = *this;
        Field inv = Field(1) / leading();
        return r.scale(inv);
    }

    template <class F>
    Polynomial map_coefficients(F&& f) const {
        std::vector<Field> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(f(c));
        return Polynomial(std::move(v));
    }

   private:
    static bool is_zero_scalar(const Field& c) { return c == Field(0); }
    void trim() {
        while (!coeffs_.empty() && is_zero_scalar(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Field> coeffs_;
};

using PolyQi = Polynomial<GaussianRational>;

template <class Field>
struct DivMod {
    Polynomial<Field> quotient;
    Polynomial<Field> remainder;
};

template <class Field>
DivMod<Field> divmod(const Polynomial<Field>& num, const Polynomial<Field>& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial<Field>(), num};
    std::vector<Field> rem = num.coefficients();
    const std::size_t dd = static_cast<std::size_t>(den.degree());
    std::vector<Field> quot(rem.size() - dd, Field(0));
    const Field lead_inv = Field(1) / den.leading();
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (rem[k] == Field(0)) continue;
        Field c = rem[k] * lead_inv;
        quot[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den.coefficients()[j];
    }
    rem.resize(dd);
    return {Polynomial<Field>(std::move(quot)), Polynomial<Field>(std::move(rem))};
}

template <class Field>
Polynomial<Field> operator/(const Polynomial<Field>& a, const Polynomial<Field>& b) {
    return divmod(a, b).quotient;
}
template <class Field>
Polynomial<Field> operator%(const Polynomial<Field>& a, const Polynomial<Field>& b) {
    return divmod(a, b).remainder;
}

template <class Field>
bool divides(const Polynomial<Field>& d, const Polynomial<Field>& p) {
    return divmod(p, d).remainder.is_zero();
}

template <class Field>
Polynomial<Field> pow(Polynomial<Field> base, unsigned long long n) {
    Polynomial<Field> acc(Field(1));
    while (n > 0) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

/// Monic gcd by the Euclidean algorithm; gcd(f, 0) = monic(f).
template <class Field>
Polynomial<Field> gcd_monic(Polynomial<Field> a, Polynomial<Field> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Polynomial<Field> r = divmod(a, b).remainder;
        a = std::move(b);
        // Keep intermediate remainders monic to slow coefficient growth.
        b = r.monic();
    }
    return a.monic();
}

/// Number of times (x - root) divides p (p nonzero).
template <class Field>
int root_multiplicity(Polynomial<Field> p, const Field& root) {
    if (p.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
    int e = 0;
    const Polynomial<Field> lin = Polynomial<Field>::linear(root);
    while (true) {
        auto qr = divmod(p, lin);
        if (!qr.remainder.is_zero()) return e;
        p = std::move(qr.quotient);
        ++e;
    }
}

// ---------------------------------------------------------------------------
// Q(i)-specific operations
// ---------------------------------------------------------------------------

inline PolyQi conj_poly(const PolyQi& f) {
    return f.map_coefficients([](const GaussianRational& c) { return conj(c); });
}

inline bool has_real_coefficients(const PolyQi& f) {
    for (const auto& c : f.coefficients())
        if (!c.is_real()) return false;
    return true;
}

/// f = f1 + i f2 with f1, f2 real.
template <class P>
struct RealImagPair {
    P f1;
    P f2;
};

inline RealImagPair<PolyQi> real_imag_split(const PolyQi& f) {
    return {f.map_coefficients([](const GaussianRational& c) { return GaussianRational(c.re()); }),
            f.map_coefficients([](const GaussianRational& c) { return GaussianRational(c.im()); })};
}

/// Determinant and trace of the matrix form [[f1, -f2], [f2, f1]].
template <class P>
struct NormTrace {
    P norm;
    P trace;
};

inline NormTrace<PolyQi> norm_trace(const PolyQi& f) {
    auto parts = real_imag_split(f);
    return {f * conj_poly(f), parts.f1 * GaussianRational(2)};
}

}  // namespace polar

#endif  // POLAR_POLY_HPP
