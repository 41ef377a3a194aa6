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
 * @file polar.hpp
 * @brief Normal forms for polar classes, Delta membership, polar factorization
 *        and the homomorphisms between class groups.
 *
 * Every class is stored as an exponent table over a fundamental region of
 * points (plus one parity bit for the circle). The regions:
 *
 *   line, proj-line, cusp  Im z > 0, inverted points removed
 *   prime-local[z0]        the single point z0
 *   circle                 0 < |z| < 1, plus a Z/2 generator [t - i]
 *   icircle                0 < |z| < 1, and |z| = 1 with Im > 0 or z = 1
 *   conic                  as icircle, plus the point 0 standing for [t]
 */

#ifndef POLAR_POLAR_HPP
#define POLAR_POLAR_HPP

#include "ringctx.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polar {

struct PolarClass {
    RingContext ctx;
    RootMultiset free;     // nonzero exponents at region points
    bool torsion = false;  // circle only: the class carries [t - i]

    explicit PolarClass(RingContext c) : ctx(std::move(c)) {}

    bool is_identity() const { return free.empty() && !torsion; }

    friend bool operator==(const PolarClass& a, const PolarClass& b) {
        return a.ctx == b.ctx && a.free == b.free && a.torsion == b.torsion;
    }
    friend bool operator!=(const PolarClass& a, const PolarClass& b) { return !(a == b); }
};

/// Representative of the circle's torsion generator.
inline GaussianRational circle_torsion_point() { return kI; }

// ---------------------------------------------------------------------------
// Regions and the point involutions
// ---------------------------------------------------------------------------

/// z -> 1/conj(z) (circle) or -1/conj(z) (icircle, conic).
inline GaussianRational partner_point(const GaussianRational& z, const RingContext& c) {
    GaussianRational p = inverse(conj(z));
    return c.kind() == ContextKind::Circle ? p : -p;
}

inline bool in_generator_region(const GaussianRational& z, const RingContext& c) {
    switch (c.kind()) {
        case ContextKind::AffineLine:
        case ContextKind::ProjectiveLine:
        case ContextKind::CuspCubic:
            return z.im() > 0 && !c.is_inverted(z);
        case ContextKind::PrimeLocal:
            return z == c.point();
        case ContextKind::Circle:
            return !z.is_zero() && circle_location(z) == CircleLocation::Inside;
        case ContextKind::ImaginaryCircle:
        case ContextKind::ProjectiveConic: {
            if (z.is_zero()) return c.kind() == ContextKind::ProjectiveConic;
            CircleLocation loc = circle_location(z);
            if (loc == CircleLocation::Inside) return true;
            if (loc == CircleLocation::Outside) return false;
            return z.im() > 0 || (z.im() == 0 && z.re() > 0);
        }
    }
    return false;
}

/// Text description of the generator region.
inline std::string region_description(const RingContext& c) {
    switch (c.kind()) {
        case ContextKind::AffineLine:
            return c.inverted().empty() ? "upper half plane Im z > 0"
                                        : "upper half plane Im z > 0 without the inverted points";
        case ContextKind::ProjectiveLine:
        case ContextKind::CuspCubic:
            return "upper half plane Im z > 0";
        case ContextKind::PrimeLocal:
            return "the single point " + to_literal(c.point());
        case ContextKind::Circle:
            return "punctured open disc 0 < |z| < 1 (free), one Z/2 generator [t - i] for the unit circle";
        case ContextKind::ImaginaryCircle:
            return "punctured open disc 0 < |z| < 1 with the boundary arc Im z > 0 and the point 1";
        case ContextKind::ProjectiveConic:
            return "open disc |z| < 1 with the boundary arc Im z > 0 and the point 1; 0 stands for [t]";
    }
    return "";
}

// ---------------------------------------------------------------------------
// Group operations
// ---------------------------------------------------------------------------

inline PolarClass class_identity(const RingContext& c) { return PolarClass(c); }

inline PolarClass class_mul(const PolarClass& a, const PolarClass& b) {
    require_same_context(a.ctx, b.ctx);
    PolarClass out = a;
    for (const auto& [z, e] : b.free) detail::add_root(out.free, z, e);
    out.torsion = a.torsion != b.torsion;
    return out;
}

inline PolarClass class_inv(const PolarClass& a) {
    PolarClass out = a;
    for (auto& entry : out.free) entry.second = -entry.second;
    return out;
}

inline PolarClass class_pow(const PolarClass& a, long long n) {
    PolarClass out(a.ctx);
    if (n == 0) return out;
    for (const auto& [z, e] : a.free) out.free[z] = e * n;
    out.torsion = a.torsion && (n % 2 != 0);
    return out;
}

enum class ClassOrder { One, Two, Infinite };

inline std::string to_string(ClassOrder o) {
    switch (o) {
        case ClassOrder::One:
            return "1";
        case ClassOrder::Two:
            return "2";
        case ClassOrder::Infinite:
            return "inf";
    }
    return "";
}

inline ClassOrder class_order(const PolarClass& a) {
    if (a.is_identity()) return ClassOrder::One;
    if (a.free.empty()) return ClassOrder::Two;
    return ClassOrder::Infinite;
}

// ---------------------------------------------------------------------------
// class_of
// ---------------------------------------------------------------------------

namespace detail {

inline void fold_upper(PolarClass& out, const GaussianRational& z, long long e) {
    if (z.is_real() || out.ctx.is_inverted(z)) return;
    if (z.im() > 0)
        add_root(out.free, z, e);
    else
        add_root(out.free, conj(z), -e);
}

}  // namespace detail

inline PolarClass class_of(const RatFuncQi& f, const RingContext& c) {
    if (!is_in_field(f, c)) {
        if (f.is_zero()) throw DomainError("class of zero is undefined");
        throw DomainError("value outside the domain of " + c.name());
    }
    PolarClass out(c);
    switch (c.kind()) {
        case ContextKind::PrimeLocal: {
            long long e = ord(f, c.point()) - ord(f, conj(c.point()));
            if (e != 0) out.free[c.point()] = e;
            return out;
        }
        case ContextKind::AffineLine:
        case ContextKind::ProjectiveLine:
        case ContextKind::CuspCubic: {
            SplitForm s = split_rational(f, false);
            for (const auto& [z, e] : s.roots) detail::fold_upper(out, z, e);
            return out;
        }
        case ContextKind::Circle: {
            SplitForm s = split_rational(f, true);
            long long parity = 0;
            for (const auto& [z, e] : s.roots) {
                switch (circle_location(z)) {
                    case CircleLocation::Inside:
                        detail::add_root(out.free, z, e);
                        break;
                    case CircleLocation::Outside:
                        detail::add_root(out.free, partner_point(z, c), -e);
                        break;
                    case CircleLocation::On:
                        parity += e;
                        break;
                }
            }
            out.torsion = parity % 2 != 0;
            return out;
        }
        case ContextKind::ImaginaryCircle:
        case ContextKind::ProjectiveConic: {
            const bool conic = c.kind() == ContextKind::ProjectiveConic;
            SplitForm s = split_rational(f, true);
            long long t0 = s.t_exp;
            for (const auto& [z, e] : s.roots) {
                if (in_generator_region(z, c)) {
                    detail::add_root(out.free, z, e);
                } else {
                    // [t - z] = [t] [t - p(z)]^-1
                    detail::add_root(out.free, partner_point(z, c), -e);
                    t0 += e;
                }
            }
            if (conic) detail::add_root(out.free, GaussianRational(0), t0);
            return out;
        }
    }
    return out;
}

inline PolarClass class_of(const ContextElement& e) { return class_of(e.value, e.ctx); }

/// A rational function whose class is a (the free table and torsion bit read back).
inline RatFuncQi class_representative(const PolarClass& a) {
    SplitForm s;
    for (const auto& [z, e] : a.free) {
        if (z.is_zero())
            s.t_exp += e;
        else
            detail::add_root(s.roots, z, e);
    }
    if (a.torsion) detail::add_root(s.roots, circle_torsion_point(), 1);
    if (a.ctx.kind() == ContextKind::ProjectiveLine) {
        // Balance the degree at the real point 0, which carries no class.
        long long d = 0;
        for (const auto& [z, e] : s.roots) d += e;
        detail::add_root(s.roots, GaussianRational(0), -d);
    }
    return assemble(s);
}

// ---------------------------------------------------------------------------
// Delta membership and polar factorization
// ---------------------------------------------------------------------------

namespace detail {

inline void require_ring_element(const RatFuncQi& f, const RingContext& c) {
    if (!is_in_ring(f, c)) throw DomainError("value is not a nonzero element of the ring " + c.name());
}

inline void require_affine_ring(const RingContext& c, const char* what) {
    if (c.kind() == ContextKind::ProjectiveLine || c.kind() == ContextKind::ProjectiveConic)
        throw UnsupportedContext(std::string(what) + " is defined for affine contexts only");
}

/// Numerator of sigma(N) for a polynomial N with N(0) != 0 under t -> s/t.
inline PolyQi sigma_numerator(const PolyQi& n, const RingContext& c) {
    if (!c.inverts_variable()) return conj_poly(n);
    return substitute_inverse(n, c.inversion_sign());
}

/// Largest factor of the numerator of f that is real up to a unit (gcd method).
inline PolyQi real_gcd(const RatFuncQi& f, const RingContext& c) {
    PolyQi n = f.numerator();
    if (c.is_laurent()) n = n.shifted_down(n.low_order());
    if (!c.inverts_variable()) {
        auto parts = real_imag_split(n);
        return gcd_monic(parts.f1, parts.f2);
    }
    return gcd_monic(n, sigma_numerator(n, c));
}

/// The pairing rule: pairs of roots whose product is real up to a unit.
inline RootMultiset paired_roots(const SplitForm& s, const RingContext& c) {
    RootMultiset out;
    switch (c.kind()) {
        case ContextKind::AffineLine:
        case ContextKind::PrimeLocal:
        case ContextKind::CuspCubic:
            for (const auto& [z, e] : s.roots) {
                if (e <= 0) continue;
                if (z.is_real()) {
                    add_root(out, z, e);
                    continue;
                }
                auto it = s.roots.find(conj(z));
                if (it != s.roots.end() && it->second > 0) add_root(out, z, std::min(e, it->second));
            }
            break;
        case ContextKind::Circle: {
            long long on_circle = 0;
            for (const auto& [z, e] : s.roots) {
                if (e <= 0) continue;
                if (circle_location(z) == CircleLocation::On) {
                    on_circle += e;
                    continue;
                }
                auto it = s.roots.find(partner_point(z, c));
                if (it != s.roots.end() && it->second > 0) add_root(out, z, std::min(e, it->second));
            }
            // Any two circle roots multiply to a real element up to a unit.
            long long keep = on_circle - on_circle % 2;
            for (const auto& [z, e] : s.roots) {
                if (keep == 0) break;
                if (e <= 0 || circle_location(z) != CircleLocation::On) continue;
                long long take = std::min(e, keep);
                add_root(out, z, take);
                keep -= take;
            }
            break;
        }
        case ContextKind::ImaginaryCircle:
            for (const auto& [z, e] : s.roots) {
                if (e <= 0) continue;
                auto it = s.roots.find(partner_point(z, c));
                if (it != s.roots.end() && it->second > 0) add_root(out, z, std::min(e, it->second));
            }
            break;
        default:
            throw UnsupportedContext("pairing rule is not defined for " + c.name());
    }
    return out;
}

inline PolyQi product_of_roots(const RootMultiset& roots) {
    PolyQi p(1);
    for (const auto& [z, e] : roots) p *= pow(PolyQi::linear(z), static_cast<unsigned long long>(e));
    return p;
}

}  // namespace detail

/// f in Delta(B): f has no real non-unit divisor.
inline bool delta_membership(const RatFuncQi& f, const RingContext& c) {
    detail::require_affine_ring(c, "Delta membership");
    detail::require_ring_element(f, c);
    switch (c.kind()) {
        case ContextKind::AffineLine: {
            PolyQi g = detail::real_gcd(f, c);
            return detail::supported_on(g, c.inverted());
        }
        case ContextKind::PrimeLocal: {
            PolyQi g = detail::real_gcd(f, c);
            return !g(c.point()).is_zero();
        }
        case ContextKind::ImaginaryCircle:
            return detail::real_gcd(f, c).degree() == 0;
        case ContextKind::Circle: {
            SplitForm s = split_rational(f, true);
            return detail::paired_roots(s, c).empty();
        }
        case ContextKind::CuspCubic:
            throw UnsupportedContext("Delta membership in the cusp context: use delta_T_membership");
        default:
            break;
    }
    return false;
}

inline bool delta_membership(const ContextElement& e) { return delta_membership(e.value, e.ctx); }

struct PolarFactorization {
    RatFuncQi real_part;
    RatFuncQi delta_part;
};

/// Gcd method: the real part is the largest real divisor, made sigma-fixed.
inline PolarFactorization polar_factorize(const RatFuncQi& f, const RingContext& c) {
    detail::require_affine_ring(c, "polar factorization");
    detail::require_ring_element(f, c);
    switch (c.kind()) {
        case ContextKind::AffineLine:
        case ContextKind::PrimeLocal:
        case ContextKind::ImaginaryCircle: {
            RatFuncQi g(detail::real_gcd(f, c));
            RatFuncQi real = c.kind() == ContextKind::ImaginaryCircle ? make_sigma_fixed(g, c) : g;
            return {real, f / real};
        }
        case ContextKind::Circle: {
            SplitForm s = split_rational(f, true);
            RatFuncQi g(detail::product_of_roots(detail::paired_roots(s, c)));
            RatFuncQi real = make_sigma_fixed(g, c);
            return {real, f / real};
        }
        default:
            throw UnsupportedContext("polar factorization is not available for " + c.name());
    }
}

/// Split-pairing method; requires the value to split over Q(i).
inline PolarFactorization polar_factorize_by_pairing(const RatFuncQi& f, const RingContext& c) {
    detail::require_affine_ring(c, "polar factorization");
    detail::require_ring_element(f, c);
    if (c.kind() == ContextKind::CuspCubic) throw UnsupportedContext("polar factorization is not available for cusp");
    SplitForm s = split_rational(f, c.is_laurent());
    RatFuncQi g(detail::product_of_roots(detail::paired_roots(s, c)));
    RatFuncQi real = make_sigma_fixed(g, c);
    return {real, f / real};
}

inline PolarFactorization polar_factorize(const ContextElement& e) { return polar_factorize(e.value, e.ctx); }

// ---------------------------------------------------------------------------
// Orbit representatives
// ---------------------------------------------------------------------------

struct OrbitRepresentative {
    PolyQi rep;             // monic, var - root
    GaussianRational root;  // in the generator region
    bool conjugated = false;
};

/// Canonical representative of the orbit of an irreducible Delta element
/// under multiplication by units and sigma.
inline OrbitRepresentative orbit_normalize(const RatFuncQi& f, const RingContext& c) {
    detail::require_ring_element(f, c);
    switch (c.kind()) {
        case ContextKind::AffineLine:
        case ContextKind::PrimeLocal:
        case ContextKind::Circle:
        case ContextKind::ImaginaryCircle:
            break;
        default:
            throw UnsupportedContext("orbit normalization is not available for " + c.name());
    }
    SplitForm s = split_rational(f, c.is_laurent());
    RootMultiset nonunit;
    for (const auto& [z, e] : s.roots) {
        if (c.kind() == ContextKind::AffineLine && c.is_inverted(z)) continue;
        if (c.kind() == ContextKind::PrimeLocal && z != c.point() && z != conj(c.point())) continue;
        nonunit[z] = e;
    }
    if (nonunit.size() != 1 || nonunit.begin()->second != 1)
        throw DomainError("orbit normalization needs an irreducible element (one simple non-unit root)");
    GaussianRational z = nonunit.begin()->first;
    if (!delta_membership(f, c)) throw DomainError("orbit normalization needs an element of Delta(B)");

    OrbitRepresentative out{PolyQi(), z, false};
    switch (c.kind()) {
        case ContextKind::AffineLine:
        case ContextKind::PrimeLocal:
            if (z.im() < 0) {
                out.root = conj(z);
                out.conjugated = true;
            }
            break;
        case ContextKind::Circle:
            if (circle_location(z) == CircleLocation::Outside) {
                out.root = partner_point(z, c);
                out.conjugated = true;
            }
            break;
        default:
            if (!in_generator_region(z, c)) {
                out.root = partner_point(z, c);
                out.conjugated = true;
            }
            break;
    }
    out.rep = PolyQi::linear(out.root);
    return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

namespace detail {

inline void require_nested_lines(const RingContext& small, const RingContext& large) {
    if (small.kind() != ContextKind::AffineLine || large.kind() != ContextKind::AffineLine)
        throw ContextMismatch("localization maps connect line contexts");
    for (const auto& p : small.inverted())
        if (!large.is_inverted(p))
            throw ContextMismatch("localization needs nested inverted sets: " + small.name() + " -> " + large.name());
}

}  // namespace detail

/// Pi(A) -> Pi(S^-1 A): forgets exponents at newly inverted points.
inline PolarClass localization_map(const PolarClass& a, const RingContext& target) {
    detail::require_nested_lines(a.ctx, target);
    PolarClass out(target);
    for (const auto& [z, e] : a.free)
        if (!target.is_inverted(z)) out.free[z] = e;
    return out;
}

/// Section of localization_map: the same table, read in the smaller localization.
inline PolarClass localization_section(const PolarClass& a, const RingContext& target) {
    detail::require_nested_lines(target, a.ctx);
    PolarClass out(target);
    out.free = a.free;
    return out;
}

/// The affine context a projective class is restricted to.
inline RingContext affine_chart(const RingContext& c) {
    switch (c.kind()) {
        case ContextKind::ProjectiveLine:
            return RingContext::affine_line();
        case ContextKind::ProjectiveConic:
            return RingContext::imaginary_circle();
        default:
            throw UnsupportedContext("projective inclusion starts from proj-line or conic");
    }
}

/**
 * proj-line -> line is the identity on tables. conic -> icircle restricts to
 * the chart t != 0, infinity; [t] becomes a unit there, so the 0-entry drops.
 */
inline PolarClass projective_include(const PolarClass& a) {
    PolarClass out(affine_chart(a.ctx));
    for (const auto& [z, e] : a.free)
        if (!z.is_zero()) out.free[z] = e;
    return out;
}

/// Class of a cusp element in Pi(R[x]); T* = C* so nothing collapses.
inline PolarClass subalgebra_embed(const RatFuncQi& f) {
    RingContext cusp = RingContext::cusp_cubic();
    if (!is_in_ring(f, cusp)) throw DomainError("value is not in C[x^2, x^3]");
    return class_of(f, RingContext::affine_line());
}

/// No root z of f has conj(z) as a root as well.
inline bool delta_T_membership(const RatFuncQi& f) {
    RingContext cusp = RingContext::cusp_cubic();
    if (!is_in_ring(f, cusp)) throw DomainError("value is not in C[x^2, x^3]");
    SplitForm s = split_or_throw(f.numerator());
    for (const auto& [z, e] : s.roots)
        if (s.roots.count(conj(z))) return false;
    return true;
}

struct ReciprocalSumCheck {
    bool derivative_vanishes = false;  // f'(0) = 0
    bool reciprocal_sum_zero = false;  // sum over roots (with multiplicity) of 1/w = 0
    GaussianRational reciprocal_sum;

    bool consistent() const { return derivative_vanishes == reciprocal_sum_zero; }
};

/// For monic split f with f(0) != 0: f'(0)/f(0) = -sum 1/w, so the two vanish together.
inline ReciprocalSumCheck reciprocal_sum_check(const PolyQi& f) {
    if (f.is_zero() || f.leading() != GaussianRational(1)) throw DomainError("reciprocal sum check needs a monic polynomial");
    if (f.constant_term().is_zero()) throw DomainError("reciprocal sum check needs f(0) != 0");
    SplitForm s = split_or_throw(f);
    ReciprocalSumCheck out;
    for (const auto& [w, e] : s.roots) out.reciprocal_sum += GaussianRational(e) * inverse(w);
    out.reciprocal_sum_zero = out.reciprocal_sum.is_zero();
    out.derivative_vanishes = f.coeff(1).is_zero();
    return out;
}

struct PrimeReduction {
    PolyQi prime;
    std::string residue_field;  // "R" or "C"
    bool trivial = true;        // Pi of a field is trivial
};

/// Reduction modulo a maximal ideal p of R[x]; the target Pi(A/p) is trivial.
inline PrimeReduction prime_reduction(const RatFuncQi& f, const PolyQi& p) {
    if (!f.is_polynomial() || f.is_zero()) throw DomainError("prime reduction needs a nonzero polynomial");
    if (p.leading() != GaussianRational(1) || !has_real_coefficients(p))
        throw DomainError("p must be a monic real polynomial");
    std::string field;
    if (p.degree() == 1) {
        field = "R";
    } else if (p.degree() == 2) {
        GaussianRational disc = p.coeff(1) * p.coeff(1) - GaussianRational(4) * p.coeff(0);
        if (disc.re() >= 0) throw DomainError("p has real roots, so it is not irreducible over R");
        field = "C";
    } else {
        throw DomainError("p must have degree 1 or 2");
    }
    if (divides(p, f.numerator())) throw DomainError("f lies in pB");
    return {p, field, true};
}

}  // namespace polar

#endif  // POLAR_POLAR_HPP
