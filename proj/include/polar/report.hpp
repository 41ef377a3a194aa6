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
 * @file report.hpp
 * @brief The worked computations as a text document with computed checks.
 *
 * Every [ok] / [FAIL] mark comes from evaluating the statement next to it.
 */

#ifndef POLAR_REPORT_HPP
#define POLAR_REPORT_HPP

#include "expr.hpp"
#include "render.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace polar {

struct ReportResult {
    std::string text;
    int passed = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

inline const std::vector<std::string>& report_sections() {
    static const std::vector<std::string> ids{"forms-of-cstar", "forms-of-p1", "localizations", "circle-identities",
                                              "cusp-cubic"};
    return ids;
}

namespace detail {

class ReportWriter {
   public:
    void heading(const std::string& id, const std::string& title) {
        if (!first_) out_ << "\n";
        first_ = false;
        out_ << "== " << id << ": " << title << " ==\n";
    }
    void line(const std::string& s) { out_ << "  " << s << "\n"; }
    void check(const std::string& statement, bool holds) {
        out_ << "  [" << (holds ? "ok" : "FAIL") << "] " << statement << "\n";
        (holds ? passed_ : failed_) += 1;
    }

    ReportResult finish() {
        out_ << "\nchecks: " << passed_ << " passed, " << failed_ << " failed\n";
        return {out_.str(), passed_, failed_};
    }

   private:
    std::ostringstream out_;
    bool first_ = true;
    int passed_ = 0;
    int failed_ = 0;
};

inline RatFuncQi rf(const std::string& src, const RingContext& c) { return parse_value(src, c); }
inline std::string show(const RatFuncQi& f, const RingContext& c) { return format_value(f, c); }

inline void presentation_block(ReportWriter& w, const RingContext& c, const std::string& sigma_text) {
    FixedRingPresentation p = fixed_ring_generators(c);
    w.line(c.name() + "    sigma: " + sigma_text);
    for (const auto& g : p.generators) w.line("  " + g.name + " = " + show(g.value, c));
    w.check("generators are sigma-fixed", p.generators_fixed);
    if (!p.relation.empty()) w.check("relation " + p.relation, p.relation_holds);
    if (!p.unhalved.empty()) {
        w.line("  unhalved pair X = " + show(p.unhalved[0].value, c) + ", Y = " + show(p.unhalved[1].value, c) +
               " gives X^2 + Y^2 = " + show(p.unhalved_lhs, c));
    }
}

inline void section_forms_of_cstar(ReportWriter& w) {
    w.heading("forms-of-cstar", "three real forms of C*");
    const RingContext hyperbola = RingContext::affine_line({GaussianRational(0)});
    const RingContext circle = RingContext::circle();
    const RingContext icircle = RingContext::imaginary_circle();
    presentation_block(w, hyperbola, "x -> x");
    presentation_block(w, circle, "t -> t^-1");
    presentation_block(w, icircle, "t -> -t^-1");

    w.line("generator regions");
    w.line("  " + hyperbola.name() + ": " + region_description(hyperbola));
    w.line("  " + circle.name() + ": " + region_description(circle));
    w.line("  " + icircle.name() + ": " + region_description(icircle));

    PolarClass hyp = class_of(rf("x - i", hyperbola), hyperbola);
    w.check(hyperbola.name() + ": [x - i] = " + format_class(hyp) + " has infinite order",
            class_order(hyp) == ClassOrder::Infinite);

    RatFuncQi boundary = rf("t - (3+4*i)/5", circle);
    PolarClass bc = class_of(boundary, circle);
    w.check("circle: [t - (3+4*i)/5] = " + format_class(bc) + " is nontrivial", !triviality_oracle(boundary, circle));
    w.check("circle: [t - (3+4*i)/5]^2 = 1", triviality_oracle(boundary * boundary, circle));
    w.check("circle: [t - (3+4*i)/5] has order 2", class_order(bc) == ClassOrder::Two);
    RatFuncQi two_points = rf("(t - (3+4*i)/5)*(t - i)", circle);
    w.check("circle: [t - (3+4*i)/5] = [t - i] (all circle points give one class)", triviality_oracle(two_points, circle));
    RatFuncQi inside = rf("t - i/2", circle);
    w.check("circle: [t - i/2] = " + format_class(class_of(inside, circle)) + " has infinite order",
            class_order(class_of(inside, circle)) == ClassOrder::Infinite && !triviality_oracle(inside * inside, circle));

    RatFuncQi ib = rf("t - i", icircle);
    PolarClass ic = class_of(ib, icircle);
    w.check("icircle: [t - i] = " + format_class(ic) + " has infinite order",
            class_order(ic) == ClassOrder::Infinite && !triviality_oracle(pow(ib, 2), icircle));
    RatFuncQi antipodes = rf("(t - i)*(t + i)", icircle);
    w.check("icircle: [t + i] = [t - i]^-1", triviality_oracle(antipodes, icircle));
}

inline void section_forms_of_p1(ReportWriter& w) {
    w.heading("forms-of-p1", "two real forms of P^1");
    const RingContext pl = RingContext::projective_line();
    const RingContext conic = RingContext::projective_conic();

    w.line(pl.name() + "    sigma: x -> x, domain: degree-0 functions in C(x)");
    w.line("  generator region: " + region_description(pl));
    RatFuncQi f = rf("(x - i)/(x - 1)", pl);
    PolarClass fc = class_of(f, pl);
    w.check("[(x - i)/(x - 1)] = " + format_class(fc) + " is nontrivial", !triviality_oracle(f, pl));
    long long sum = 0;
    for (const auto& entry : fc.free) sum += entry.second;
    w.line("  exponent sum of that class is " + std::to_string(sum) +
           ", so the class group is the full table over the upper half plane, not only sum-zero tables");
    RatFuncQi g = rf("(x - i)*(x + i)/(x - 2)^2", pl);
    w.check("[(x^2 + 1)/(x - 2)^2] = 1", triviality_oracle(g, pl) && class_of(g, pl).is_identity());

    w.line(conic.name() + "    sigma: t -> -t^-1, t = (x1 + i*x2)/x0");
    w.line("  generator region: " + region_description(conic));
    for (const std::string z_src : {"i/2", "(1+2*i)/3", "3/5"}) {
        GaussianRational z = parse_scalar(z_src);
        GaussianRational zbar_inv = inverse(conj(z));
        RatFuncQi lhs = RatFuncQi(PolyQi::linear(z)) * RatFuncQi(PolyQi::linear(-zbar_inv));
        RatFuncQi t = RatFuncQi::var_power(1);
        RatFuncQi kappa = lhs / (RatFuncQi(-zbar_inv) * t);
        w.check("z = " + to_literal(z) + ": (t - z)(t + conj(z)^-1) = -conj(z)^-1 * kappa * t with kappa = " +
                    show(kappa, conic) + " sigma-fixed",
                is_sigma_fixed(kappa, conic) && RatFuncQi(-zbar_inv) * kappa * t == lhs);
        PolarClass cls = class_of(lhs, conic);
        PolarClass tcls = class_of(t, conic);
        w.check("z = " + to_literal(z) + ": class of (t - z)(t + conj(z)^-1) is " + format_class(cls) + " = [t]",
                cls == tcls && triviality_oracle(lhs / t, conic));
    }
    RatFuncQi t = RatFuncQi::var_power(1);
    w.check("[t] has infinite order", class_order(class_of(t, conic)) == ClassOrder::Infinite &&
                                          !triviality_oracle(pow(t, 2), conic));
}

inline void section_localizations(ReportWriter& w) {
    w.heading("localizations", "localizations of R[x]");
    const RingContext line = RingContext::affine_line();
    const RingContext hyperbola = RingContext::affine_line({GaussianRational(0)});
    const RingContext inv_i = parse_ring("line[inv=(x^2+1)]");
    const RingContext local = RingContext::prime_local(kI);

    RatFuncQi f1 = rf("x - 2*i", line);
    PolarClass c1 = class_of(f1, line);
    PolarClass m1 = localization_map(c1, hyperbola);
    w.check(line.name() + " -> " + hyperbola.name() + ": " + format_class(c1) + " -> " + format_class(m1),
            m1.free == c1.free && m1 == class_of(f1, hyperbola));

    RatFuncQi f2 = rf("(x - i)^2*(x - 1 - i)", line);
    PolarClass c2 = class_of(f2, line);
    PolarClass m2 = localization_map(c2, inv_i);
    w.check(line.name() + " -> " + inv_i.name() + ": " + format_class(c2) + " -> " + format_class(m2),
            m2 == class_of(f2, inv_i) && format_class(m2) == "{1+i:1}");
    PolarClass s2 = localization_section(m2, line);
    w.check("section: " + format_class(m2) + " -> " + format_class(s2) + ", and map(section) is the identity",
            localization_map(s2, inv_i) == m2);
    w.check("kernel: [x - i] maps to the identity in " + inv_i.name(),
            localization_map(class_of(rf("x - i", line), line), inv_i).is_identity());
    w.check("[x - i] is a unit class in " + inv_i.name() + " (oracle)", triviality_oracle(rf("x - i", inv_i), inv_i));

    w.line(local.name() + ": every class is [x - i]^e with e = ord_i - ord_-i");
    RatFuncQi f3 = rf("(x - i)^3*(x + i)*(x - 2*i)", local);
    PolarClass c3 = class_of(f3, local);
    w.check("[(x - i)^3 (x + i)(x - 2*i)] = " + format_class(c3), c3.free.size() == 1 && c3.free.begin()->second == 2);
    RatFuncQi quotient = f3 / pow(rf("x - i", local), 2);
    w.check("it equals [x - i]^2 (oracle)", triviality_oracle(quotient, local));
    RatFuncQi unit = rf("x - 2*i", local);
    w.check("x - 2*i is a unit of " + local.name(), is_unit(unit, local) && triviality_oracle(unit, local));
}

inline void section_circle_identities(ReportWriter& w) {
    w.heading("circle-identities", "identities on the circle");
    const RingContext circle = RingContext::circle();
    auto parts = fixed_decomposition(RatFuncQi::var_power(1), circle);
    const RatFuncQi& x = parts.f1;
    const RatFuncQi& y = parts.f2;
    const RatFuncQi t = RatFuncQi::var_power(1);
    w.line("x = " + show(x, circle) + ", y = " + show(y, circle));
    w.check("x and y are sigma-fixed", is_sigma_fixed(x, circle) && is_sigma_fixed(y, circle));
    w.check("t^2 + 1 = 2*x*t", rf("t^2 + 1", circle) == RatFuncQi(2) * x * t);
    w.check("t^2 - 1 = 2*i*y*t", rf("t^2 - 1", circle) == RatFuncQi(GaussianRational(0, 2)) * y * t);

    PolarFactorization pf = polar_factorize(rf("t^2 + 1", circle), circle);
    w.check("polar factorization of t^2 + 1: real part " + show(pf.real_part, circle) + ", Delta part " +
                show(pf.delta_part, circle),
            pf.real_part == RatFuncQi(2) * x && pf.delta_part == t);

    for (const std::string src : {"(3+4*i)/5", "(5+12*i)/13", "(-8+15*i)/17"}) {
        GaussianRational zeta = parse_scalar(src);
        RatFuncQi a = RatFuncQi(PolyQi::linear(zeta)) * RatFuncQi(PolyQi::linear(conj(zeta)));
        RatFuncQi b = RatFuncQi(PolyQi::linear(-zeta)) * RatFuncQi(PolyQi::linear(conj(zeta)));
        std::string z = to_literal(zeta);
        auto signed_term = [](const Rational& q) {
            return q < 0 ? " + " + to_string(Rational(-q)) : " - " + to_string(q);
        };
        w.check("zeta = " + z + ": (t - zeta)(t - conj(zeta)) = 2*(x" + signed_term(zeta.re()) + ")*t",
                a == RatFuncQi(2) * (x - RatFuncQi(GaussianRational(zeta.re()))) * t);
        w.check("zeta = " + z + ": (t + zeta)(t - conj(zeta)) = 2*i*(y" + signed_term(-zeta.im()) + ")*t",
                b == RatFuncQi(GaussianRational(0, 2)) * (y + RatFuncQi(GaussianRational(zeta.im()))) * t);
        RatFuncQi single(PolyQi::linear(zeta));
        w.check("zeta = " + z + ": [t - zeta] != 1 and [t - zeta]^2 = 1",
                !triviality_oracle(single, circle) && triviality_oracle(single * single, circle));
    }

    const RingContext hyperbola = RingContext::affine_line({GaussianRational(0)});
    w.line("nontriviality of [x^m - zeta] in " + hyperbola.name() + " (no parametrization by Laurent polynomials)");
    for (const std::string src : {"i", "(3+4*i)/5", "2*i"}) {
        GaussianRational zeta = parse_scalar(src);
        std::string row;
        bool all = true;
        for (std::size_t m = 1; m <= 6; ++m) {
            RatFuncQi f(PolyQi::monomial(GaussianRational(1), m) - PolyQi(zeta));
            bool nontrivial = !triviality_oracle(f, hyperbola);
            all = all && nontrivial;
            row += " m=" + std::to_string(m) + (nontrivial ? ":!=1" : ":=1");
        }
        w.check("zeta = " + to_literal(zeta) + ":" + row, all);
    }
}

inline void section_cusp_cubic(ReportWriter& w) {
    w.heading("cusp-cubic", "the cuspidal cubic T = C[x^2, x^3]");
    const RingContext cusp = RingContext::cusp_cubic();
    RatFuncQi f = rf("x^2 - 2*i", cusp);
    PolarClass c = subalgebra_embed(f);
    w.line("x^2 - 2*i has roots 1+i and -1-i");
    w.check("x^2 - 2*i is in Delta(T)", delta_T_membership(f));
    w.check("its class in Pi(R[x]) is " + format_class(c), format_class(c) == "{-1+i:-1, 1+i:1}");
    ReciprocalSumCheck r = reciprocal_sum_check(f.numerator());
    w.check("sum of 1/w over roots is " + to_literal(r.reciprocal_sum) + " and f'(0) = 0",
            r.reciprocal_sum_zero && r.derivative_vanishes);
    RatFuncQi g = rf("x^3", cusp);
    w.check("[x^3] = 1", subalgebra_embed(g).is_identity() && triviality_oracle(g, cusp));
    RatFuncQi h = rf("x^3 - 3*x^2 + 4", cusp);
    ReciprocalSumCheck rh = reciprocal_sum_check(h.numerator());
    w.check("x^3 - 3*x^2 + 4 = (x + 1)(x - 2)^2: reciprocal sum " + to_literal(rh.reciprocal_sum) + ", f'(0) = 0",
            rh.consistent() && rh.reciprocal_sum_zero);
    w.line("T* = C*, so Pi(T) -> Pi(R[x]) is injective: equal images force oracle-equal classes in T");
    RatFuncQi a = rf("x^2 - 2*i", cusp);
    for (const std::string src : {"(x^2 - 2*i)*(x^2 + 1)", "x^2 + 2*i"}) {
        RatFuncQi b = rf(src, cusp);
        bool same_image = subalgebra_embed(a) == subalgebra_embed(b);
        w.check("[x^2 - 2*i] vs [" + src + "]: images " + (same_image ? "agree" : "differ") +
                    ", and so do the classes in Pi(T)",
                same_image == triviality_oracle(a / b, cusp));
    }
}

}  // namespace detail

/// Runs one section id, or "all".
inline ReportResult run_report(const std::string& section) {
    detail::ReportWriter w;
    auto want = [&](const std::string& id) { return section == "all" || section == id; };
    bool known = section == "all";
    for (const auto& id : report_sections()) known = known || id == section;
    if (!known) throw DomainError("unknown report section '" + section + "'");
    if (want("forms-of-cstar")) detail::section_forms_of_cstar(w);
    if (want("forms-of-p1")) detail::section_forms_of_p1(w);
    if (want("localizations")) detail::section_localizations(w);
    if (want("circle-identities")) detail::section_circle_identities(w);
    if (want("cusp-cubic")) detail::section_cusp_cubic(w);
    return w.finish();
}

}  // namespace polar

#endif  // POLAR_REPORT_HPP
