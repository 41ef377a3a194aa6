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
 * @file splitter.hpp
 * @brief Q(i)-rational roots and the divisor-level SplitForm.
 *
 * Root search works on the square-free part. Floating-point root
 * approximations are used only to propose candidates; every accepted root
 * is checked by exact evaluation. Completeness comes from the exact stages:
 * closed forms in degree <= 2, and in degree >= 3 an exhaustive search over
 * p/q * u with p | a_0, q | a_n in Z[i] and u a unit.
 */

#ifndef POLAR_SPLITTER_HPP
#define POLAR_SPLITTER_HPP

#include "ratfunc.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace polar {

/// Nonzero exponents keyed by point.
using RootMultiset = std::map<GaussianRational, long long>;

struct SplitForm {
    GaussianRational unit{1};
    long long t_exp = 0;
    RootMultiset roots;

    friend bool operator==(const SplitForm& a, const SplitForm& b) {
        return a.unit == b.unit && a.t_exp == b.t_exp && a.roots == b.roots;
    }
};

struct UnsplitReport {
    SplitForm split_part;
    PolyQi residual;  // monic, degree >= 2, no root in Q(i)
};

struct RootSearch {
    RootMultiset roots;
    PolyQi residual;  // monic
};

class UnsplittableError : public std::runtime_error {
   public:
    UnsplittableError(PolyQi residual)
        : std::runtime_error("input does not split into linear factors over Q(i)"), residual_(std::move(residual)) {}
    const PolyQi& residual() const noexcept { return residual_; }

   private:
    PolyQi residual_;
};

namespace detail {

inline void add_root(RootMultiset& m, const GaussianRational& z, long long e) {
    if (e == 0) return;
    long long& slot = m[z];
    slot += e;
    if (slot == 0) m.erase(z);
}

/// Scales f to Z[i] coefficients (multiplies by the lcm of all denominators).
inline std::vector<GaussianInteger> clear_denominators(const PolyQi& f) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Integer l = 1;
    for (const auto& c : f.coefficients()) {
        l = boost::multiprecision::lcm(l, denominator(c.re()));
        l = boost::multiprecision::lcm(l, denominator(c.im()));
    }
    std::vector<GaussianInteger> out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) {
        Rational a = c.re() * l, b = c.im() * l;
        out.emplace_back(numerator(a), numerator(b));
    }
    return out;
}

inline std::complex<long double> to_complex(const GaussianRational& z) {
    return {z.re().convert_to<long double>(), z.im().convert_to<long double>()};
}

/// Aberth-Ehrlich iteration; approximations only.
inline std::vector<std::complex<long double>> approximate_roots(const PolyQi& f) {
    using C = std::complex<long double>;
    const int n = f.degree();
    std::vector<C> a;
    for (const auto& c : f.coefficients()) a.push_back(to_complex(c));
    const C lead = a.back();
    for (auto& c : a) c /= lead;

    long double bound = 0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(k)]));
    bound += 1;

    std::vector<C> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        long double angle = 2.0L * 3.14159265358979323846L * (k + 0.25L) / n;
        z[static_cast<std::size_t>(k)] = std::polar(bound * 0.7L, angle);
    }
    auto eval = [&](C x, C& deriv) {
        C p = a.back(), d = 0;
        for (int k = n - 1; k >= 0; --k) {
            d = d * x + p;
            p = p * x + a[static_cast<std::size_t>(k)];
        }
        deriv = d;
        return p;
    };
    for (int iter = 0; iter < 500; ++iter) {
        long double worst = 0;
        for (int k = 0; k < n; ++k) {
            C d;
            C p = eval(z[static_cast<std::size_t>(k)], d);
            if (p == C(0)) continue;
            C ratio = p / d;
            C sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += C(1) / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            C step = ratio / (C(1) - ratio * sum);
            z[static_cast<std::size_t>(k)] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[static_cast<std::size_t>(k)])));
        }
        if (worst < 1e-17L) break;
    }
    return z;
}

/// Candidate roots near each numeric approximation: every Q(i) root z of a
/// Z[i] polynomial satisfies a_n * z in Z[i].
inline std::vector<GaussianRational> numeric_candidates(const PolyQi& f) {
    auto ints = clear_denominators(f);
    GaussianRational lead = ints.back().to_rational();
    std::complex<long double> lead_c = to_complex(lead);
    std::vector<GaussianRational> out;
    for (const auto& r : approximate_roots(f)) {
        std::complex<long double> m = r * lead_c;
        if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) continue;
        if (std::abs(m.real()) > 1e15L || std::abs(m.imag()) > 1e15L) continue;
        long long re0 = std::llround(m.real()), im0 = std::llround(m.imag());
        for (long long dr = -1; dr <= 1; ++dr)
            for (long long di = -1; di <= 1; ++di)
                out.push_back(GaussianRational(Rational(re0 + dr), Rational(im0 + di)) / lead);
    }
    return out;
}

inline std::vector<GaussianRational> exhaustive_candidates(const PolyQi& f) {
    auto ints = clear_denominators(f);
    std::vector<GaussianInteger> tops = gaussian_divisors(ints.front());
    std::vector<GaussianInteger> bottoms = gaussian_divisors(ints.back());
    std::set<GaussianRational> seen;
    std::vector<GaussianRational> out;
    for (const auto& p : tops)
        for (const auto& q : bottoms)
            for (const auto& u : gaussian_units()) {
                GaussianRational z = (p * u).to_rational() / q.to_rational();
                if (seen.insert(z).second) out.push_back(z);
            }
    return out;
}

/// Distinct Q(i) roots of a square-free polynomial with nonzero constant term.
inline std::vector<GaussianRational> squarefree_roots(PolyQi p) {
    std::vector<GaussianRational> found;
    while (p.degree() >= 1) {
        if (p.degree() == 1) {
            found.push_back(-p.coeff(0) / p.coeff(1));
            break;
        }
        if (p.degree() == 2) {
            const GaussianRational a = p.coeff(2);
            const GaussianRational b = p.coeff(1);
            const GaussianRational c = p.coeff(0);
            GaussianRational disc = b * b - GaussianRational(4) * a * c;
            GaussianRational s;
            if (gaussian_sqrt(disc, s)) {
                found.push_back((-b + s) / (GaussianRational(2) * a));
                found.push_back((-b - s) / (GaussianRational(2) * a));
            }
            break;
        }
        std::vector<GaussianRational> hits;
        for (const auto& z : numeric_candidates(p))
            if (p(z).is_zero() && std::find(hits.begin(), hits.end(), z) == hits.end()) hits.push_back(z);
        if (hits.empty()) {
            for (const auto& z : exhaustive_candidates(p))
                if (p(z).is_zero()) {
                    hits.push_back(z);
                    break;
                }
        }
        if (hits.empty()) break;  // certified: no candidate divisor is a root
        for (const auto& z : hits) {
            found.push_back(z);
            p = divmod(p, PolyQi::linear(z)).quotient;
        }
    }
    return found;
}

}  // namespace detail

/// All Q(i) roots of f with multiplicity; the monic residual has none.
inline RootSearch find_roots(const PolyQi& f) {
    if (f.is_zero()) throw std::domain_error("find_roots: zero polynomial");
    RootSearch out;
    std::size_t zero_mult = f.low_order();
    PolyQi work = f.shifted_down(zero_mult).monic();
    if (zero_mult > 0) out.roots[GaussianRational(0)] = static_cast<long long>(zero_mult);
    if (work.degree() >= 1) {
        PolyQi g = gcd_monic(work, work.derivative());
        PolyQi squarefree = g.degree() > 0 ? work / g : work;
        for (const auto& z : detail::squarefree_roots(squarefree)) {
            int e = 0;
            const PolyQi lin = PolyQi::linear(z);
            while (true) {
                auto qr = divmod(work, lin);
                if (!qr.remainder.is_zero()) break;
                work = std::move(qr.quotient);
                ++e;
            }
            detail::add_root(out.roots, z, e);
        }
    }
    out.residual = work;
    return out;
}

using SplitResult = std::variant<SplitForm, UnsplitReport>;

inline SplitResult split(const PolyQi& f) {
    RootSearch rs = find_roots(f);
    SplitForm s{f.leading(), 0, std::move(rs.roots)};
    if (rs.residual.degree() >= 2) return UnsplitReport{std::move(s), std::move(rs.residual)};
    return s;
}

/// Laurent split: the point 0 never appears, it is carried by t_exp.
inline SplitResult split(const LaurentQi& f) {
    RootSearch rs = find_roots(f.body());
    SplitForm s{f.body().leading(), f.order(), std::move(rs.roots)};
    if (rs.residual.degree() >= 2) return UnsplitReport{std::move(s), std::move(rs.residual)};
    return s;
}

inline SplitForm split_or_throw(const PolyQi& f) {
    SplitResult r = split(f);
    if (auto* u = std::get_if<UnsplitReport>(&r)) throw UnsplittableError(u->residual);
    return std::get<SplitForm>(r);
}

/**
 * Splits numerator and denominator of a nonzero rational function and merges
 * them. With fold_zero the multiplicity of the root 0 moves into t_exp.
 */
inline SplitForm split_rational(const RatFuncQi& f, bool fold_zero) {
    if (f.is_zero()) throw std::domain_error("split: zero rational function");
    SplitForm num = split_or_throw(f.numerator());
    SplitForm den = split_or_throw(f.denominator());
    SplitForm out{num.unit / den.unit, 0, std::move(num.roots)};
    for (const auto& [z, e] : den.roots) detail::add_root(out.roots, z, -e);
    if (fold_zero) {
        auto it = out.roots.find(GaussianRational(0));
        if (it != out.roots.end()) {
            out.t_exp = it->second;
            out.roots.erase(it);
        }
    }
    return out;
}

/// unit * var^t_exp * prod (var - z)^e as a reduced rational function.
inline RatFuncQi assemble(const SplitForm& s) {
    PolyQi num(s.unit), den(1);
    if (s.t_exp >= 0)
        num = num.shifted_up(static_cast<std::size_t>(s.t_exp));
    else
        den = den.shifted_up(static_cast<std::size_t>(-s.t_exp));
    for (const auto& [z, e] : s.roots) {
        if (e > 0)
            num *= pow(PolyQi::linear(z), static_cast<unsigned long long>(e));
        else
            den *= pow(PolyQi::linear(z), static_cast<unsigned long long>(-e));
    }
    return RatFuncQi(num, den);
}

/// Conjugate unit and roots; exponents and t_exp unchanged.
inline SplitForm conj(const SplitForm& s) {
    SplitForm out{conj(s.unit), s.t_exp, {}};
    for (const auto& [z, e] : s.roots) out.roots[conj(z)] = e;
    return out;
}

/// Product of two split forms (roots merge, units multiply).
inline SplitForm multiply(const SplitForm& a, const SplitForm& b) {
    SplitForm out{a.unit * b.unit, a.t_exp + b.t_exp, a.roots};
    for (const auto& [z, e] : b.roots) detail::add_root(out.roots, z, e);
    return out;
}

}  // namespace polar

#endif  // POLAR_SPLITTER_HPP
