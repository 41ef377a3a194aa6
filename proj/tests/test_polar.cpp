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

#include "polar/polar.hpp"
#include "polar/render.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace polar;
using polar::testing::Rng;

namespace polar {
void PrintTo(const PolarClass& a, std::ostream* os) { *os << a.ctx.name() << " " << format_class(a); }
}  // namespace polar

namespace {

RatFuncQi val(const std::string& s, const RingContext& c) { return parse_value(s, c); }
std::string table(const std::string& s, const RingContext& c) { return format_class(class_of(val(s, c), c)); }

std::vector<RingContext> factorable_contexts() {
    return {RingContext::affine_line(), RingContext::affine_line({GaussianRational(0)}),
            parse_ring("line[inv=(x^2+1)]"), RingContext::prime_local(kI), RingContext::prime_local(parse_scalar("1+2*i")),
            RingContext::circle(), RingContext::imaginary_circle()};
}

}  // namespace

TEST(ClassOf, LineExamples) {
    auto line = RingContext::affine_line();
    EXPECT_EQ(table("(x - i)*(x - 1)*(x + 2*i)", line), "{i:1, 2*i:-1}");
    EXPECT_EQ(table("x^2 + 1", line), "{}");
    EXPECT_EQ(table("(x - i)^3/(x + i)", line), "{i:4}");
    auto linei = parse_ring("line[inv=(x^2+1)]");
    EXPECT_EQ(table("(x - i)*(x - 2*i)", linei), "{2*i:1}");
}

TEST(ClassOf, OtherContexts) {
    auto prime = RingContext::prime_local(kI);
    EXPECT_EQ(table("(x - i)^2*(x + i)*(x - 2*i)", prime), "{i:1}");
    auto circle = RingContext::circle();
    EXPECT_EQ(table("t - i", circle), "torsion {i}, free {}");
    EXPECT_EQ(table("t - (3+4*i)/5", circle), "torsion {i}, free {}");
    EXPECT_EQ(table("(t - 1)*(t + 1)", circle), "torsion {}, free {}");
    EXPECT_EQ(table("t - 2", circle), "torsion {}, free {1/2:-1}");
    EXPECT_EQ(table("t - i/2", circle), "torsion {}, free {i/2:1}");
    auto icircle = RingContext::imaginary_circle();
    EXPECT_EQ(table("t - 2*i", icircle), "{-i/2:-1}");
    EXPECT_EQ(table("t - i", icircle), "{i:1}");
    EXPECT_EQ(table("t + i", icircle), "{i:-1}");
    auto conic = RingContext::projective_conic();
    EXPECT_EQ(table("t", conic), "{0:1}");
    EXPECT_EQ(table("t - 2*i", conic), "{-i/2:-1, 0:1}");
    auto proj = RingContext::projective_line();
    EXPECT_EQ(table("(x - i)/(x - 1)", proj), "{i:1}");
    auto cusp = RingContext::cusp_cubic();
    EXPECT_EQ(table("x^2 - 2*i", cusp), "{-1+i:-1, 1+i:1}");
    EXPECT_THROW(class_of(val("x", proj), proj), DomainError);
    EXPECT_THROW(class_of(RatFuncQi(0), circle), DomainError);
}

TEST(ClassGroup, Operations) {
    auto line = RingContext::affine_line();
    PolarClass a = class_of(val("x - i", line), line);
    PolarClass b = class_of(val("x + 2*i", line), line);
    EXPECT_EQ(format_class(class_mul(a, b)), "{i:1, 2*i:-1}");
    EXPECT_EQ(format_class(class_inv(a)), "{i:-1}");
    EXPECT_EQ(format_class(class_pow(a, 3)), "{i:3}");
    EXPECT_TRUE(class_mul(a, class_inv(a)).is_identity());
    EXPECT_EQ(class_order(a), ClassOrder::Infinite);
    EXPECT_EQ(class_order(class_identity(line)), ClassOrder::One);
    auto circle = RingContext::circle();
    PolarClass t = class_of(val("t - 1", circle), circle);
    EXPECT_EQ(class_order(t), ClassOrder::Two);
    EXPECT_TRUE(class_pow(t, 2).is_identity());
    EXPECT_EQ(to_string(class_order(t)), "2");
    EXPECT_THROW(class_mul(a, t), ContextMismatch);
}

TEST(Representative, ReadsBackTheClass) {
    auto circle = RingContext::circle();
    PolarClass a = class_of(val("(t - 1)*(t - i/2)^2", circle), circle);
    EXPECT_EQ(class_of(class_representative(a), circle), a);
}

TEST(Delta, Examples) {
    auto line = RingContext::affine_line();
    EXPECT_TRUE(delta_membership(val("x - i", line), line));
    EXPECT_FALSE(delta_membership(val("x^2 + 1", line), line));
    EXPECT_FALSE(delta_membership(val("(x - i)*(x - 3)", line), line));
    auto line0 = RingContext::affine_line({GaussianRational(0)});
    EXPECT_TRUE(delta_membership(val("x*(x - i)", line0), line0));
    auto circle = RingContext::circle();
    EXPECT_TRUE(delta_membership(val("t - i", circle), circle));
    EXPECT_FALSE(delta_membership(val("(t - i)*(t - 1)", circle), circle));
    EXPECT_FALSE(delta_membership(val("(t - 2)*(t - 1/2)", circle), circle));
    EXPECT_TRUE(delta_membership(val("t - 2", circle), circle));
    auto icircle = RingContext::imaginary_circle();
    EXPECT_TRUE(delta_membership(val("t - i", icircle), icircle));
    EXPECT_FALSE(delta_membership(val("(t - 2)*(t + 1/2)", icircle), icircle));
    EXPECT_THROW(delta_membership(val("x^2", RingContext::cusp_cubic()), RingContext::cusp_cubic()),
                 UnsupportedContext);
    EXPECT_THROW(delta_membership(val("t", RingContext::projective_conic()), RingContext::projective_conic()),
                 UnsupportedContext);
    EXPECT_THROW(delta_membership(val("1/(x - 1)", line), line), DomainError);
}

TEST(Factorize, Examples) {
    auto line = RingContext::affine_line();
    auto p = polar_factorize(val("x^3 - i*x^2 + x - i", line), line);
    EXPECT_EQ(p.real_part, val("x^2 + 1", line));
    EXPECT_EQ(p.delta_part, val("x - i", line));
    auto circle = RingContext::circle();
    RatFuncQi f = val("(t - 1)*(t - i)*(t - i/2)", circle);
    auto q = polar_factorize(f, circle);
    EXPECT_TRUE(is_sigma_fixed(q.real_part, circle));
    EXPECT_TRUE(delta_membership(q.delta_part, circle));
    EXPECT_EQ(q.real_part * q.delta_part, f);
}

TEST(Orbit, Examples) {
    auto line = RingContext::affine_line();
    auto a = orbit_normalize(val("3*(x + i)", line), line);
    EXPECT_EQ(a.rep, val("x - i", line).numerator());
    EXPECT_TRUE(a.conjugated);
    auto b = orbit_normalize(val("x - 2*i", line), line);
    EXPECT_EQ(b.root, GaussianRational(0, 2));
    EXPECT_FALSE(b.conjugated);
    auto circle = RingContext::circle();
    auto c = orbit_normalize(val("2*i*t^3*(t - 2*i)", circle), circle);
    EXPECT_EQ(c.root, parse_scalar("i/2"));
    EXPECT_TRUE(c.conjugated);
    auto d = orbit_normalize(val("t - (3+4*i)/5", circle), circle);
    EXPECT_EQ(d.root, parse_scalar("(3+4*i)/5"));
    EXPECT_FALSE(d.conjugated);
    EXPECT_THROW(orbit_normalize(val("x^2 + 1", line), line), DomainError);
    EXPECT_THROW(orbit_normalize(val("(x - i)*(x - 2*i)", line), line), DomainError);
}

TEST(Homomorphisms, Localization) {
    auto line = RingContext::affine_line();
    auto linei = parse_ring("line[inv=(x^2+1)]");
    PolarClass a = class_of(val("(x - i)^2*(x - 2*i)", line), line);
    EXPECT_EQ(format_class(localization_map(a, linei)), "{2*i:1}");
    PolarClass b = class_of(val("x - 2*i", linei), linei);
    EXPECT_EQ(localization_map(localization_section(b, line), linei), b);
    EXPECT_THROW(localization_map(b, line), ContextMismatch);
    EXPECT_THROW(localization_map(a, RingContext::circle()), ContextMismatch);
}

TEST(Homomorphisms, ProjectiveInclusion) {
    auto proj = RingContext::projective_line();
    PolarClass a = class_of(val("(x - i)/(x - 1)", proj), proj);
    EXPECT_EQ(projective_include(a), class_of(val("(x - i)/(x - 1)", RingContext::affine_line()), RingContext::affine_line()));
    auto conic = RingContext::projective_conic();
    EXPECT_TRUE(projective_include(class_of(val("t", conic), conic)).is_identity());
    EXPECT_EQ(format_class(projective_include(class_of(val("t - 2*i", conic), conic))), "{-i/2:-1}");
    EXPECT_THROW(projective_include(class_identity(RingContext::circle())), UnsupportedContext);
}

TEST(Cusp, Examples) {
    EXPECT_EQ(format_class(subalgebra_embed(val("x^2 - 2*i", RingContext::cusp_cubic()))), "{-1+i:-1, 1+i:1}");
    EXPECT_TRUE(delta_T_membership(val("x^2 - 2*i", RingContext::cusp_cubic())));
    EXPECT_FALSE(delta_T_membership(val("x^2 + 1", RingContext::cusp_cubic())));
    EXPECT_THROW(subalgebra_embed(val("x^2 + x", RingContext::cusp_cubic())), DomainError);
    auto r = reciprocal_sum_check(val("(x - 1)*(x + 1/2)*(x + 1)", RingContext::cusp_cubic()).numerator());
    EXPECT_TRUE(r.consistent());
    EXPECT_FALSE(r.derivative_vanishes);
    auto s = reciprocal_sum_check(val("(x - 1)*(x - 2)*(x + 2/3)", RingContext::cusp_cubic()).numerator());
    EXPECT_TRUE(s.reciprocal_sum_zero);
    EXPECT_TRUE(s.derivative_vanishes);
    EXPECT_THROW(reciprocal_sum_check(val("x*(x - 1)", RingContext::cusp_cubic()).numerator()), DomainError);
}

TEST(PrimeReduction, Examples) {
    auto line = RingContext::affine_line();
    EXPECT_EQ(prime_reduction(val("x - 3", line), PolyQi::x()).residue_field, "R");
    auto r = prime_reduction(val("x", line), val("x^2 + 1", line).numerator());
    EXPECT_EQ(r.residue_field, "C");
    EXPECT_TRUE(r.trivial);
    EXPECT_THROW(prime_reduction(val("x^2 + 1", line), val("x^2 + 1", line).numerator()), DomainError);
    EXPECT_THROW(prime_reduction(val("x", line), val("x^2 - 1", line).numerator()), DomainError);
    EXPECT_THROW(prime_reduction(val("x", line), val("x^3 + 1", line).numerator()), DomainError);
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

TEST(PolarProperty, ClassOfIsAHomomorphism) {
    Rng rng(501);
    for (const auto& c : polar::testing::all_contexts()) {
        for (int k = 0; k < 120; ++k) {
            RatFuncQi f = polar::testing::random_element(rng, c), g = polar::testing::random_element(rng, c);
            PolarClass a = class_of(f, c), b = class_of(g, c);
            ASSERT_EQ(class_of(f * g, c), class_mul(a, b)) << c.name();
            ASSERT_EQ(class_of(f.inverse(), c), class_inv(a)) << c.name();
            ASSERT_EQ(class_of(class_representative(a), c), a) << c.name();
            for (const auto& [z, e] : a.free) ASSERT_TRUE(in_generator_region(z, c)) << c.name();
            ASSERT_TRUE(class_of(polar::testing::random_trivial(rng, c), c).is_identity()) << c.name();
        }
    }
}

TEST(PolarProperty, PowersMatchClassPow) {
    Rng rng(502);
    for (const auto& c : polar::testing::all_contexts()) {
        for (int k = 0; k < 40; ++k) {
            RatFuncQi f = polar::testing::random_element(rng, c, 2);
            PolarClass a = class_of(f, c);
            for (long long n = 0; n <= 5; ++n) {
                ASSERT_EQ(class_of(pow(f, n), c), class_pow(a, n)) << c.name();
                ASSERT_EQ(class_of(pow(f, n), c).is_identity(), triviality_oracle(pow(f, n), c)) << c.name();
            }
        }
    }
}

TEST(PolarProperty, FactorizationMethodsAgree) {
    Rng rng(503);
    for (const auto& c : factorable_contexts()) {
        for (int k = 0; k < 100; ++k) {
            RatFuncQi f = polar::testing::random_element(rng, c, 4, true);
            auto g = polar_factorize(f, c);
            auto p = polar_factorize_by_pairing(f, c);
            ASSERT_EQ(g.real_part * g.delta_part, f) << c.name();
            ASSERT_TRUE(is_sigma_fixed(g.real_part, c)) << c.name();
            ASSERT_TRUE(is_in_ring(g.real_part, c) && is_in_ring(g.delta_part, c)) << c.name();
            ASSERT_TRUE(delta_membership(g.delta_part, c)) << c.name();
            ASSERT_TRUE(delta_membership(p.delta_part, c)) << c.name();
            ASSERT_TRUE(is_unit(g.delta_part / p.delta_part, c)) << c.name();
            ASSERT_EQ(delta_membership(f, c), is_unit(g.real_part, c)) << c.name();
            ASSERT_EQ(class_of(f, c), class_of(g.delta_part, c)) << c.name();
        }
    }
}

TEST(PolarProperty, OrbitRepresentativeCarriesTheClass) {
    Rng rng(504);
    for (const auto& c : factorable_contexts()) {
        auto pool = polar::testing::pool_for(c);
        int done = 0;
        for (int k = 0; k < 400 && done < 60; ++k) {
            GaussianRational z = polar::testing::pick(rng, pool);
            if (c.kind() == ContextKind::AffineLine && (z.is_real() || c.is_inverted(z))) continue;
            if (c.kind() == ContextKind::PrimeLocal && z != c.point() && z != conj(c.point())) continue;
            if (c.is_laurent() && z.is_zero()) continue;
            RatFuncQi f = polar::testing::random_unit(rng, c) * RatFuncQi(PolyQi::linear(z));
            auto o = orbit_normalize(f, c);
            PolarClass rep = class_of(RatFuncQi(o.rep), c);
            ASSERT_EQ(class_of(f, c), o.conjugated ? class_inv(rep) : rep) << c.name();
            ASSERT_TRUE(o.conjugated || o.root == z) << c.name();
            ++done;
        }
        ASSERT_GT(done, 10) << c.name();
    }
}

TEST(PolarProperty, LocalizationIsExactAtInvertedPoints) {
    Rng rng(505);
    auto line = RingContext::affine_line();
    for (const auto& target : {parse_ring("line[inv=(x^2+1)]"), parse_ring("line[inv=0,(x^2+4)]")}) {
        for (int k = 0; k < 150; ++k) {
            RatFuncQi f = polar::testing::random_element(rng, line);
            PolarClass a = class_of(f, line);
            PolarClass b = localization_map(a, target);
            ASSERT_EQ(b, class_of(f, target));
            ASSERT_EQ(localization_map(localization_section(b, line), target), b);
            bool only_inverted = true;
            for (const auto& [z, e] : a.free) only_inverted = only_inverted && target.is_inverted(z);
            ASSERT_EQ(b.is_identity(), only_inverted);
        }
    }
}

TEST(PolarProperty, ProjectiveInclusionKernels) {
    Rng rng(506);
    auto proj = RingContext::projective_line();
    auto conic = RingContext::projective_conic();
    for (int k = 0; k < 150; ++k) {
        RatFuncQi f = polar::testing::random_element(rng, proj);
        PolarClass a = projective_include(class_of(f, proj));
        ASSERT_EQ(a, class_of(f, RingContext::affine_line()));
        ASSERT_EQ(a.is_identity(), class_of(f, proj).is_identity());
        RatFuncQi g = polar::testing::random_element(rng, conic);
        PolarClass b = class_of(g, conic);
        PolarClass ib = projective_include(b);
        ASSERT_EQ(ib, class_of(g, RingContext::imaginary_circle()));
        // Kernel of the conic inclusion is generated by [t].
        PolarClass t_part(conic);
        auto it = b.free.find(GaussianRational(0));
        if (it != b.free.end()) t_part.free[GaussianRational(0)] = it->second;
        ASSERT_EQ(ib.is_identity(), b == t_part);
    }
}

TEST(PolarProperty, CuspEmbeddingIsInjective) {
    Rng rng(507);
    auto cusp = RingContext::cusp_cubic();
    for (int k = 0; k < 150; ++k) {
        RatFuncQi f = polar::testing::random_element(rng, cusp, 3, true);
        RatFuncQi g = polar::testing::random_element(rng, cusp, 3, true);
        bool same_image = subalgebra_embed(f) == subalgebra_embed(g);
        ASSERT_EQ(same_image, triviality_oracle(f / g, cusp));
        ASSERT_EQ(subalgebra_embed(f).free, class_of(f, cusp).free);
    }
}
