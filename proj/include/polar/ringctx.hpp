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
 * @file ringctx.hpp
 * @brief Ring contexts (B, sigma, units, element domain) and the triviality oracle.
 *
 * A context fixes the complex ring B, the conjugation sigma whose fixed ring
 * is the real form A, the unit group B*, and which rational functions are
 * admissible inputs. The oracle decides [f] = 1 in L* / B* K* by solving
 * sigma(f)/f = sigma(u)/u for a unit u; it never looks at normal forms.
 */

#ifndef POLAR_RINGCTX_HPP
#define POLAR_RINGCTX_HPP

#include "errors.hpp"
#include "format.hpp"
#include "splitter.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace polar {

enum class ContextKind { AffineLine, PrimeLocal, Circle, ImaginaryCircle, ProjectiveLine, ProjectiveConic, CuspCubic };

namespace ctx {

/// S^-1 C[x] with S the multiplicative set generated by (x - p), p in inverted.
struct AffineLine {
    std::vector<GaussianRational> inverted;  // sorted, closed under conj
};
/// C[x] localized away from the maximal ideals at point and conj(point).
struct PrimeLocal {
    GaussianRational point;  // Im > 0
};
/// C[t, 1/t] with t -> 1/t.
struct Circle {};
/// C[t, 1/t] with t -> -1/t.
struct ImaginaryCircle {};
/// Degree-zero functions in C(x), x -> x.
struct ProjectiveLine {};
/// C(t) with t -> -1/t.
struct ProjectiveConic {};
/// C[x^2, x^3] inside C[x].
struct CuspCubic {};

}  // namespace ctx

class RingContext {
   public:
    using Variant = std::variant<ctx::AffineLine, ctx::PrimeLocal, ctx::Circle, ctx::ImaginaryCircle,
                                 ctx::ProjectiveLine, ctx::ProjectiveConic, ctx::CuspCubic>;

    static RingContext affine_line(std::vector<GaussianRational> inverted = {}) {
        std::sort(inverted.begin(), inverted.end());
        inverted.erase(std::unique(inverted.begin(), inverted.end()), inverted.end());
        for (const auto& p : inverted)
            if (!std::binary_search(inverted.begin(), inverted.end(), conj(p)))
                throw DomainError("inverted set must be closed under conjugation (missing " + to_literal(conj(p)) +
                                  ")");
        return RingContext(ctx::AffineLine{std::move(inverted)});
    }
    static RingContext prime_local(const GaussianRational& point) {
        if (point.im() <= 0) throw DomainError("prime-local point must lie in the upper half plane");
        return RingContext(ctx::PrimeLocal{point});
    }
    static RingContext circle() { return RingContext(ctx::Circle{}); }
    static RingContext imaginary_circle() { return RingContext(ctx::ImaginaryCircle{}); }
    static RingContext projective_line() { return RingContext(ctx::ProjectiveLine{}); }
    static RingContext projective_conic() { return RingContext(ctx::ProjectiveConic{}); }
    static RingContext cusp_cubic() { return RingContext(ctx::CuspCubic{}); }

    ContextKind kind() const noexcept { return static_cast<ContextKind>(data_.index()); }
    const Variant& data() const noexcept { return data_; }

    /// 'x' for line-like contexts, 't' for the Laurent and conic contexts.
    char variable() const noexcept {
        switch (kind()) {
            case ContextKind::Circle:
            case ContextKind::ImaginaryCircle:
            case ContextKind::ProjectiveConic:
                return 't';
            default:
                return 'x';
        }
    }
    /// Negative powers of the variable are admissible literals.
    bool allows_negative_powers() const noexcept { return variable() == 't'; }
    /// B = C[t, 1/t]; the root 0 is carried by a t-exponent.
    bool is_laurent() const noexcept {
        return kind() == ContextKind::Circle || kind() == ContextKind::ImaginaryCircle;
    }
    /// sigma sends the variable to s/t (s = +-1) rather than fixing it.
    bool inverts_variable() const noexcept { return variable() == 't'; }
    /// s in t -> s/t.
    int inversion_sign() const noexcept { return kind() == ContextKind::Circle ? 1 : -1; }

    const std::vector<GaussianRational>& inverted() const {
        static const std::vector<GaussianRational> none;
        if (auto* a = std::get_if<ctx::AffineLine>(&data_)) return a->inverted;
        return none;
    }
    const GaussianRational& point() const {
        if (auto* p = std::get_if<ctx::PrimeLocal>(&data_)) return p->point;
        throw UnsupportedContext("context has no distinguished point");
    }
    bool is_inverted(const GaussianRational& z) const {
        const auto& s = inverted();
        return std::binary_search(s.begin(), s.end(), z);
    }

    /// Ring DSL spelling; parses back to an equal context.
    std::string name() const {
        switch (kind()) {
            case ContextKind::AffineLine: {
                const auto& s = inverted();
                if (s.empty()) return "line";
                std::string parts;
                for (const auto& p : s) {
                    if (p.im() < 0) continue;
                    if (!parts.empty()) parts += ",";
                    if (p.is_real()) {
                        parts += to_literal(p);
                    } else {
                        PolyQi q = PolyQi::linear(p) * PolyQi::linear(conj(p));
                        parts += "(" + format_poly(q, 'x') + ")";
                    }
                }
                return "line[inv=" + parts + "]";
            }
            case ContextKind::PrimeLocal:
                return "prime-local[" + to_literal(point()) + "]";
            case ContextKind::Circle:
                return "circle";
            case ContextKind::ImaginaryCircle:
                return "icircle";
            case ContextKind::ProjectiveLine:
                return "proj-line";
            case ContextKind::ProjectiveConic:
                return "conic";
            case ContextKind::CuspCubic:
                return "cusp";
        }
        return "";
    }

    friend bool operator==(const RingContext& a, const RingContext& b) {
        if (a.kind() != b.kind()) return false;
        if (a.kind() == ContextKind::AffineLine) return a.inverted() == b.inverted();
        if (a.kind() == ContextKind::PrimeLocal) return a.point() == b.point();
        return true;
    }
    friend bool operator!=(const RingContext& a, const RingContext& b) { return !(a == b); }

   private:
    explicit RingContext(Variant v) : data_(std::move(v)) {}
    Variant data_;
};

inline void require_same_context(const RingContext& a, const RingContext& b) {
    if (a != b) throw ContextMismatch("context mismatch: " + a.name() + " vs " + b.name());
}

// ---------------------------------------------------------------------------
// sigma
// ---------------------------------------------------------------------------

namespace detail {

/// conj-coefficients of p evaluated at s/t, returned as (q, d) with value q / t^d.
inline PolyQi substitute_inverse(const PolyQi& p, int sign) {
    std::vector<GaussianRational> out(p.coefficients().size());
    const std::size_t d = out.size() - 1;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        GaussianRational c = conj(p.coefficients()[k]);
        if (sign < 0 && (k % 2 == 1)) c = -c;
        out[d - k] = c;
    }
    return PolyQi(std::move(out));
}

}  // namespace detail

inline RatFuncQi sigma(const RatFuncQi& f, const RingContext& c) {
    if (!c.inverts_variable()) return conj_coefficients(f);
    if (f.is_zero()) return f;
    const PolyQi& n = f.numerator();
    const PolyQi& d = f.denominator();
    PolyQi sn = detail::substitute_inverse(n, c.inversion_sign());
    PolyQi sd = detail::substitute_inverse(d, c.inversion_sign());
    // (sn / t^deg n) / (sd / t^deg d). sigma preserves coprimality away from
    // t = 0, so only a common power of t can cancel.
    PolyQi num = sn.shifted_up(static_cast<std::size_t>(d.degree()));
    PolyQi den = sd.shifted_up(static_cast<std::size_t>(n.degree()));
    const std::size_t common = std::min(num.low_order(), den.low_order());
    return RatFuncQi::from_coprime(num.shifted_down(common), den.shifted_down(common));
}

// ---------------------------------------------------------------------------
// Element domains
// ---------------------------------------------------------------------------

/// Order of vanishing of f at z (negative for poles).
inline long long ord(const RatFuncQi& f, const GaussianRational& z) {
    if (f.is_zero()) throw DomainError("order of the zero function");
    return static_cast<long long>(root_multiplicity(f.numerator(), z)) - root_multiplicity(f.denominator(), z);
}

namespace detail {

/// Removes every factor (x - p), p inverted, and reports whether 1 remains.
inline bool supported_on(PolyQi p, const std::vector<GaussianRational>& points) {
    p = p.monic();
    for (const auto& z : points) {
        const PolyQi lin = PolyQi::linear(z);
        while (p.degree() > 0) {
            auto qr = divmod(p, lin);
            if (!qr.remainder.is_zero()) break;
            p = std::move(qr.quotient);
        }
    }
    return p.degree() == 0;
}

inline bool is_monomial(const PolyQi& p) { return !p.is_zero() && p.low_order() == static_cast<std::size_t>(p.degree()); }

}  // namespace detail

/// f lies in the fraction-field domain the class group is defined on.
inline bool is_in_field(const RatFuncQi& f, const RingContext& c) {
    if (f.is_zero()) return false;
    if (c.kind() == ContextKind::ProjectiveLine) return f.degree() == 0;
    return true;
}

/// f is a nonzero element of B (for the cusp, of T = C[x^2, x^3]).
inline bool is_in_ring(const RatFuncQi& f, const RingContext& c) {
    if (f.is_zero()) return false;
    switch (c.kind()) {
        case ContextKind::AffineLine:
            return detail::supported_on(f.denominator(), c.inverted());
        case ContextKind::PrimeLocal: {
            const PolyQi& d = f.denominator();
            return !d(c.point()).is_zero() && !d(conj(c.point())).is_zero();
        }
        case ContextKind::Circle:
        case ContextKind::ImaginaryCircle:
            return f.is_laurent();
        case ContextKind::CuspCubic:
            return f.is_polynomial() && f.numerator().coeff(1).is_zero();
        case ContextKind::ProjectiveLine:
        case ContextKind::ProjectiveConic:
            return is_in_field(f, c);
    }
    return false;
}

inline bool is_unit(const RatFuncQi& f, const RingContext& c) {
    if (!is_in_ring(f, c)) return false;
    switch (c.kind()) {
        case ContextKind::AffineLine:
            return detail::supported_on(f.numerator(), c.inverted());
        case ContextKind::PrimeLocal:
            return ord(f, c.point()) == 0 && ord(f, conj(c.point())) == 0;
        case ContextKind::Circle:
        case ContextKind::ImaginaryCircle:
            return detail::is_monomial(f.numerator());
        default:
            return f.is_constant();
    }
}

/// A value paired with the context it is interpreted in.
struct ContextElement {
    RatFuncQi value;
    RingContext ctx;
};

enum class ElementDomain { Field, Ring };

inline ContextElement make_element(RatFuncQi value, const RingContext& c, ElementDomain domain = ElementDomain::Field) {
    if (value.is_zero()) throw DomainError("zero is not an element of the unit group");
    if (!is_in_field(value, c)) throw DomainError("value is not a degree-0 rational function");
    if (domain == ElementDomain::Ring && !is_in_ring(value, c)) {
        switch (c.kind()) {
            case ContextKind::CuspCubic:
                throw DomainError("value is not in C[x^2, x^3] (nonzero linear coefficient or a denominator)");
            case ContextKind::Circle:
            case ContextKind::ImaginaryCircle:
                throw DomainError("value is not a Laurent polynomial in t");
            default:
                throw DomainError("denominator is not a unit of " + c.name());
        }
    }
    return {std::move(value), c};
}

inline ContextElement apply_sigma(const ContextElement& e) { return {sigma(e.value, e.ctx), e.ctx}; }

inline bool is_sigma_fixed(const RatFuncQi& f, const RingContext& c) { return sigma(f, c) == f; }
inline bool is_sigma_fixed(const ContextElement& e) { return is_sigma_fixed(e.value, e.ctx); }

/// f = f1 + i f2 with f1 = (f + sigma f)/2 and f2 = (f - sigma f)/(2i).
inline RealImagPair<RatFuncQi> fixed_decomposition(const RatFuncQi& f, const RingContext& c) {
    RatFuncQi s = sigma(f, c);
    RatFuncQi half(GaussianRational(Rational(1, 2)));
    RatFuncQi minus_half_i(GaussianRational(Rational(0), Rational(-1, 2)));
    return {(f + s) * half, (f - s) * minus_half_i};
}

// ---------------------------------------------------------------------------
// Fixed-ring presentations
// ---------------------------------------------------------------------------

struct Generator {
    std::string name;
    RatFuncQi value;
};

struct FixedRingPresentation {
    RingContext ctx;
    std::vector<Generator> generators;
    std::string relation;             // e.g. "X^2 + Y^2 = 1"; empty when free
    RatFuncQi relation_lhs;           // value of the left side
    RatFuncQi relation_rhs;
    bool generators_fixed = false;    // every generator is sigma-fixed
    bool relation_holds = false;
    std::vector<Generator> unhalved;  // X = t + sigma(t), Y = i(t - sigma(t)) where that applies
    RatFuncQi unhalved_lhs;           // X^2 + Y^2 on the unhalved pair

    bool verified() const { return generators_fixed && relation_holds; }
};

inline FixedRingPresentation fixed_ring_generators(const RingContext& c) {
    FixedRingPresentation out{c, {}, {}, RatFuncQi(0), RatFuncQi(0), false, false, {}, RatFuncQi(0)};
    const RatFuncQi var = RatFuncQi::var_power(1);
    switch (c.kind()) {
        case ContextKind::AffineLine:
            if (c.inverted().empty()) {
                out.generators = {{"X", var}};
                out.relation_holds = true;
            } else if (c.inverted() == std::vector<GaussianRational>{GaussianRational(0)}) {
                out.generators = {{"X", var}, {"Y", RatFuncQi::var_power(-1)}};
                out.relation = "X*Y = 1";
                out.relation_lhs = out.generators[0].value * out.generators[1].value;
                out.relation_rhs = RatFuncQi(1);
                out.relation_holds = out.relation_lhs == out.relation_rhs;
            } else {
                throw UnsupportedContext("fixed-ring presentation is available for line, line[inv=0], circle, icircle");
            }
            break;
        case ContextKind::Circle:
        case ContextKind::ImaginaryCircle: {
            auto parts = fixed_decomposition(var, c);
            // For t -> -1/t the real part of t is (t - 1/t)/2; keep X, Y in the
            // same order as the decomposition.
            out.generators = {{"X", parts.f1}, {"Y", parts.f2}};
            int rhs = c.kind() == ContextKind::Circle ? 1 : -1;
            out.relation = rhs > 0 ? "X^2 + Y^2 = 1" : "X^2 + Y^2 = -1";
            out.relation_lhs = parts.f1 * parts.f1 + parts.f2 * parts.f2;
            out.relation_rhs = RatFuncQi(rhs);
            out.relation_holds = out.relation_lhs == out.relation_rhs;
            RatFuncQi s = sigma(var, c);
            RatFuncQi ux = var + s;
            RatFuncQi uy = RatFuncQi(kI) * (var - s);
            out.unhalved = {{"X", ux}, {"Y", uy}};
            out.unhalved_lhs = ux * ux + uy * uy;
            break;
        }
        default:
            throw UnsupportedContext("fixed-ring presentation is available for line, line[inv=0], circle, icircle");
    }
    out.generators_fixed = std::all_of(out.generators.begin(), out.generators.end(),
                                       [&](const Generator& g) { return is_sigma_fixed(g.value, c); });
    return out;
}

// ---------------------------------------------------------------------------
// Unit ratios and the triviality oracle
// ---------------------------------------------------------------------------

/**
 * A unit u with sigma(u)/u = q, if one exists.
 */
inline std::optional<RatFuncQi> unit_ratio_solve(const RatFuncQi& q, const RingContext& c) {
    if (q.is_zero()) throw DomainError("unit ratio of zero");
    switch (c.kind()) {
        case ContextKind::ProjectiveLine:
        case ContextKind::ProjectiveConic:
        case ContextKind::CuspCubic: {
            if (!q.is_constant() || norm_sq(q.constant_value()) != 1) return std::nullopt;
            return RatFuncQi(hilbert90(q.constant_value()));
        }
        case ContextKind::Circle:
        case ContextKind::ImaginaryCircle: {
            if (!q.is_laurent() || !detail::is_monomial(q.numerator())) return std::nullopt;
            LaurentQi m = q.to_laurent();
            const long long k = m.order();
            const GaussianRational w = m.body().leading();
            if (k % 2 != 0 || norm_sq(w) != 1) return std::nullopt;
            const long long half = -k / 2;
            GaussianRational target = w;
            if (c.kind() == ContextKind::ImaginaryCircle && half % 2 != 0) target = -target;
            return RatFuncQi(hilbert90(target)) * RatFuncQi::var_power(half);
        }
        case ContextKind::AffineLine: {
            if (!is_unit(q, c)) return std::nullopt;
            const GaussianRational w = q.numerator().leading();
            if (norm_sq(w) != 1) return std::nullopt;
            RatFuncQi u(hilbert90(w));
            for (const auto& p : c.inverted()) {
                long long d = ord(q, p);
                if (p.is_real()) {
                    if (d != 0) return std::nullopt;
                    continue;
                }
                if (ord(q, conj(p)) != -d) return std::nullopt;
                if (p.im() > 0 && d != 0) u *= pow(RatFuncQi(PolyQi::linear(p)), -d);
            }
            return u;
        }
        case ContextKind::PrimeLocal: {
            const RatFuncQi sq = sigma(q, c);
            if (q * sq != RatFuncQi(1) || ord(q, c.point()) != 0) return std::nullopt;
            RatFuncQi v = RatFuncQi(1) + sq;
            if (v.is_zero()) v = RatFuncQi(kI);
            const long long e = ord(v, c.point());
            const RatFuncQi r(PolyQi::linear(c.point()) * PolyQi::linear(conj(c.point())));
            return v * pow(r, -e);
        }
    }
    return std::nullopt;
}

inline bool unit_ratio_test(const RatFuncQi& q, const RingContext& c) { return unit_ratio_solve(q, c).has_value(); }

/// [f] = 1, i.e. f in B* K*. Ground truth for every normal form.
inline bool triviality_oracle(const RatFuncQi& f, const RingContext& c) {
    if (!is_in_field(f, c)) throw DomainError("triviality oracle: value outside the context domain");
    if (c.kind() == ContextKind::PrimeLocal) return ord(f, c.point()) == ord(f, conj(c.point()));
    return unit_ratio_test(sigma(f, c) / f, c);
}

/// f in M = B* A', for f a nonzero element of B.
inline bool m_membership(const ContextElement& e) {
    if (!is_in_ring(e.value, e.ctx)) throw DomainError("M-membership needs an element of the ring");
    return triviality_oracle(e.value, e.ctx);
}

/// Multiplies g by a unit so that the result is sigma-fixed; g must be real up to a unit.
inline RatFuncQi make_sigma_fixed(const RatFuncQi& g, const RingContext& c) {
    auto u = unit_ratio_solve(g / sigma(g, c), c);
    if (!u) throw DomainError("value is not sigma-fixed up to a unit");
    RatFuncQi r = *u * g;
    return r;
}

}  // namespace polar

#endif  // POLAR_RINGCTX_HPP
