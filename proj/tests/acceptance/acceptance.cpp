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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "polar/render.hpp"
#include "polar/report.hpp"
#include "support/generators.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace polar;
using polar::testing::Rng;
namespace pt = polar::testing;

namespace {

/// Failure collector: the first few messages are kept for the report line.
struct Verdict {
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (notes.size() < 3) notes.push_back(what);
    }
};

std::string show(const RatFuncQi& f, const RingContext& c) { return format_value(f, c); }
RatFuncQi lin(const GaussianRational& z) { return RatFuncQi(PolyQi::linear(z)); }
RatFuncQi scalar(const GaussianRational& z) { return RatFuncQi(z); }

// 1. Circle and conic identities.
void identities(Verdict& v) {
    auto circle = RingContext::circle();
    auto conic = RingContext::projective_conic();
    const RatFuncQi t = RatFuncQi::var_power(1), tinv = RatFuncQi::var_power(-1);
    const RatFuncQi half(GaussianRational(Rational(1, 2)));
    const RatFuncQi x = (t + tinv) * half;
    const RatFuncQi y = (t - tinv) * half / scalar(kI);
    v.expect(is_sigma_fixed(x, circle) && is_sigma_fixed(y, circle), "x, y not sigma-fixed");
    v.expect(t * t + RatFuncQi(1) == RatFuncQi(2) * x * t, "t^2 + 1 = 2xt");
    v.expect(t * t - RatFuncQi(1) == scalar(GaussianRational(0, 2)) * y * t, "t^2 - 1 = 2iyt");

    Rng rng(1001);
    std::set<GaussianRational> seen;
    while (seen.size() < 25) {
        GaussianRational z = pt::pythagorean_point(rng, 20);
        if (z.is_real() || z.re().is_zero() || !seen.insert(z).second) continue;
        v.expect(norm_sq(z) == 1, "not on the unit circle");
        const RatFuncQi re(GaussianRational(z.re())), im(GaussianRational(z.im()));
        v.expect((t - scalar(z)) * (t - scalar(conj(z))) == RatFuncQi(2) * (x - re) * t,
                 "(t - z)(t - conj z) at " + to_literal(z));
        v.expect((t + scalar(z)) * (t - scalar(conj(z))) == scalar(GaussianRational(0, 2)) * (y + im) * t,
                 "(t + z)(t - conj z) at " + to_literal(z));
    }

    int conic_points = 0;
    while (conic_points < 25) {
        GaussianRational z = pt::small_gaussian(rng, 6, 5);
        if (z.is_zero()) continue;
        ++conic_points;
        const GaussianRational zb = conj(z);
        // kappa = -conj(z) t + (|z|^2 - 1) + z / t
        RatFuncQi kappa = scalar(-zb) * t + scalar(GaussianRational(norm_sq(z) - 1)) + scalar(z) * tinv;
        v.expect(is_sigma_fixed(kappa, conic), "kappa not sigma-fixed at " + to_literal(z));
        v.expect((t - scalar(z)) * (t + scalar(inverse(zb))) == scalar(-inverse(zb)) * kappa * t,
                 "conic relation at " + to_literal(z));
    }
}

// 2. Fixed-ring presentations.
void presentations(Verdict& v) {
    const RatFuncQi t = RatFuncQi::var_power(1), tinv = RatFuncQi::var_power(-1);
    const RatFuncQi half(GaussianRational(Rational(1, 2)));
    struct Case {
        RingContext ctx;
        std::string relation;
        RatFuncQi x, y, rhs;
        bool product;
    };
    const std::vector<Case> cases = {
        {RingContext::affine_line({GaussianRational(0)}), "X*Y = 1", t, tinv, RatFuncQi(1), true},
        {RingContext::circle(), "X^2 + Y^2 = 1", (t + tinv) * half, (t - tinv) * half / scalar(kI), RatFuncQi(1), false},
        {RingContext::imaginary_circle(), "X^2 + Y^2 = -1", (t - tinv) * half, (t + tinv) * half / scalar(kI),
         RatFuncQi(-1), false},
    };
    for (const auto& c : cases) {
        FixedRingPresentation p = fixed_ring_generators(c.ctx);
        v.expect(p.verified(), c.ctx.name() + " presentation not verified");
        v.expect(p.relation == c.relation, c.ctx.name() + " relation text " + p.relation);
        v.expect(p.generators.size() == 2 && p.generators[0].value == c.x && p.generators[1].value == c.y,
                 c.ctx.name() + " generators differ from the independent formulas");
        RatFuncQi lhs = c.product ? c.x * c.y : c.x * c.x + c.y * c.y;
        v.expect(lhs == c.rhs, c.ctx.name() + " relation fails on the independent generators");
        v.expect(is_sigma_fixed(c.x, c.ctx) && is_sigma_fixed(c.y, c.ctx), c.ctx.name() + " generators not fixed");
    }
}

// 3. Torsion and freeness.
void torsion(Verdict& v) {
    Rng rng(1003);
    auto circle = RingContext::circle();
    for (int k = 0; k < 100; ++k) {
        GaussianRational z = pt::pythagorean_point(rng, 20);
        RatFuncQi f = pt::random_unit(rng, circle) * (RatFuncQi(1) - RatFuncQi::var_power(1) * scalar(inverse(z))) *
                      pt::random_trivial(rng, circle);
        PolarClass a = class_of(f, circle);
        v.expect(class_order(a) == ClassOrder::Two, "circle class of order != 2: " + show(f, circle));
        v.expect(!triviality_oracle(f, circle), "circle boundary class trivial: " + show(f, circle));
        v.expect(triviality_oracle(f * f, circle), "square of a circle boundary class nontrivial");
    }
    for (const auto& c : {RingContext::affine_line(), RingContext::prime_local(kI), RingContext::imaginary_circle(),
                          RingContext::projective_conic()}) {
        const auto pool = pt::pool_for(c);
        int done = 0;
        while (done < 100) {
            // One or two simple factors keep the eighth powers desk-sized.
            RatFuncQi f(pt::nonzero_gaussian(rng, 3, 2));
            for (long long j = pt::uniform(rng, 1, 2); j > 0; --j)
                f *= pow(lin(pt::pick(rng, pool)), pt::coin(rng) ? 1 : -1);
            if (c.variable() == 't') f *= RatFuncQi::var_power(pt::uniform(rng, -1, 1));
            PolarClass a = class_of(f, c);
            if (a.is_identity()) continue;
            ++done;
            v.expect(!a.free.empty(), c.name() + ": nonidentity class without free payload");
            RatFuncQi p = f;
            for (int n = 1; n <= 8; ++n, p *= f)
                v.expect(!triviality_oracle(p, c), c.name() + ": power " + std::to_string(n) + " trivial for " +
                                                        show(f, c));
        }
    }
}

// 4. Normal form against the oracle.
void master_oracle(Verdict& v) {
    Rng rng(1004);
    for (const auto& c : pt::all_contexts()) {
        for (int k = 0; k < 1000; ++k) {
            auto [f, g] = pt::random_pair(rng, c);
            bool same = class_of(f, c) == class_of(g, c);
            v.expect(same == triviality_oracle(f / g, c), c.name() + ": " + show(f, c) + " vs " + show(g, c));
        }
    }
}

// 5. Polar factorization.
void factorization(Verdict& v) {
    Rng rng(1005);
    for (const auto& c : {RingContext::affine_line(), RingContext::affine_line({GaussianRational(0)}),
                          parse_ring("line[inv=(x^2+1)]"), RingContext::prime_local(kI),
                          RingContext::imaginary_circle(), RingContext::circle()}) {
        for (int k = 0; k < 500; ++k) {
            RatFuncQi f = pt::random_element(rng, c, 4, true);
            auto g = polar_factorize(f, c);
            v.expect(g.real_part * g.delta_part == f, c.name() + ": reassembly " + show(f, c));
            v.expect(is_sigma_fixed(g.real_part, c), c.name() + ": real part not sigma-fixed " + show(f, c));
            v.expect(delta_membership(g.delta_part, c), c.name() + ": delta part outside Delta " + show(f, c));
            auto p = polar_factorize_by_pairing(f, c);
            v.expect(is_unit(g.delta_part / p.delta_part, c), c.name() + ": methods disagree on " + show(f, c));
        }
    }
}

// 6. Localization exactness and prime-local classes.
void localization(Verdict& v) {
    Rng rng(1006);
    auto line = RingContext::affine_line();
    auto local = parse_ring("line[inv=(x^2+1)]");
    for (int k = 0; k < 200; ++k) {
        RatFuncQi f = k % 2 == 0 ? pt::random_element(rng, line)
                                 : pow(lin(kI), pt::uniform(rng, -3, 3)) * pt::random_trivial(rng, line);
        PolarClass a = class_of(f, line);
        bool supported_at_i = true;
        for (const auto& [z, e] : a.free) supported_at_i = supported_at_i && z == kI;
        bool in_kernel = localization_map(a, local).is_identity();
        v.expect(in_kernel == supported_at_i, "kernel mismatch on " + show(f, line));
        v.expect(in_kernel == triviality_oracle(f, local), "kernel disagrees with the oracle on " + show(f, line));
    }
    for (int k = 0; k < 100; ++k) {
        PolarClass b = class_of(pt::random_element(rng, local), local);
        v.expect(localization_map(localization_section(b, line), local) == b, "section round trip");
    }
    auto prime = RingContext::prime_local(kI);
    for (int k = 0; k < 100; ++k) {
        RatFuncQi f = pt::random_element(rng, prime);
        SplitForm s = split_rational(f, false);
        auto at = [&](const GaussianRational& z) {
            auto it = s.roots.find(z);
            return it == s.roots.end() ? 0LL : it->second;
        };
        long long e = at(kI) - at(-kI);
        PolarClass a = class_of(f, prime);
        long long got = a.free.empty() ? 0 : a.free.begin()->second;
        v.expect(got == e && a.free.size() <= 1, "prime-local class differs from ord difference on " + show(f, prime));
        // f (x+i)^e has equal orders at i and -i, so sigma(.)/. must be a unit ratio.
        RatFuncQi balanced = f * pow(lin(-kI), e);
        v.expect(unit_ratio_test(sigma(balanced, prime) / balanced, prime), "balanced element not trivial");
    }
}

// 7. x^m - zeta stays nontrivial after inverting x.
void laurent_table(Verdict& v) {
    auto c = RingContext::affine_line({GaussianRational(0)});
    for (const char* zs : {"i", "(3+4*i)/5", "2*i"}) {
        GaussianRational zeta = parse_scalar(zs);
        for (int m = 1; m <= 6; ++m) {
            RatFuncQi f(PolyQi::monomial(GaussianRational(1), static_cast<std::size_t>(m)) - PolyQi(zeta));
            v.expect(!triviality_oracle(f, c), "x^" + std::to_string(m) + " - " + zs + " trivial");
        }
    }
}

// 8. Cusp cubic.
void cusp(Verdict& v) {
    Rng rng(1008);
    for (int k = 0; k < 100; ++k) {
        std::vector<GaussianRational> roots;
        int n = static_cast<int>(pt::uniform(rng, 2, 4));
        for (int j = 0; j < n; ++j) roots.push_back(pt::nonzero_gaussian(rng, 4, 3));
        if (k % 2 == 0) {
            GaussianRational s;
            for (std::size_t j = 0; j + 1 < roots.size(); ++j) s += inverse(roots[j]);
            if (s.is_zero()) continue;
            roots.back() = -inverse(s);
        }
        PolyQi f(1);
        GaussianRational recip;
        for (const auto& w : roots) {
            f *= PolyQi::linear(w);
            recip += inverse(w);
        }
        ReciprocalSumCheck r = reciprocal_sum_check(f);
        v.expect(r.consistent(), "f'(0) = 0 and sum 1/w = 0 disagree");
        v.expect(r.reciprocal_sum == recip, "reciprocal sum differs from the chosen roots");
        v.expect(f.derivative()(GaussianRational(0)).is_zero() == recip.is_zero(), "derivative check");
        if (k % 2 == 0) v.expect(r.derivative_vanishes, "constructed zero reciprocal sum not detected");
    }
    auto cusp = RingContext::cusp_cubic();
    for (int k = 0; k < 100; ++k) {
        RatFuncQi f = pt::random_element(rng, cusp, 3, true);
        RatFuncQi g;
        if (k % 2 == 0) {
            GaussianRational w = pt::small_gaussian(rng, 3, 2);
            RatFuncQi h(PolyQi::monomial(GaussianRational(1), 2) - PolyQi(w * w));
            g = f * scalar(pt::nonzero_gaussian(rng, 3, 2)) * h * sigma(h, cusp);
        } else {
            g = pt::random_element(rng, cusp, 3, true);
        }
        bool same_image = subalgebra_embed(f) == subalgebra_embed(g);
        bool oracle_equal = triviality_oracle(f / g, cusp);
        v.expect(!same_image || oracle_equal, "equal images but distinct classes in T");
        v.expect(same_image == oracle_equal, "embedding disagrees with the oracle");
        if (k % 2 == 0) v.expect(same_image, "constructed equal pair has distinct images");
    }
}

// 9. Root finder.
void root_finder(Verdict& v) {
    Rng rng(1009);
    for (int k = 0; k < 200; ++k) {
        RootMultiset roots;
        int n = static_cast<int>(pt::uniform(rng, 1, 6));
        for (int j = 0; j < n; ++j) roots[pt::small_gaussian(rng, 9, 6)] += pt::uniform(rng, 1, 2);
        GaussianRational unit = pt::nonzero_gaussian(rng);
        PolyQi p(unit);
        for (const auto& [z, e] : roots) p *= pow(PolyQi::linear(z), static_cast<unsigned long long>(e));
        SplitForm s = split_or_throw(p);
        v.expect(s.unit == unit && s.roots == roots, "root-first recovery failed");
    }
    const char* rootless[] = {"x^2 - 2",       "x^2 - 3",     "x^2 + 2",     "x^2 - i",     "x^3 - 2",
                              "x^2 + x + 1",   "x^4 + 1",     "x^2 - 5",     "x^2 - 1 - 2*i", "x^3 - x - 1",
                              "x^5 - x - 1",   "x^2 - 3*i",   "x^4 - 2",     "x^2 + x + 2", "x^3 + 2",
                              "x^2 - 7",       "x^2 + 3",     "x^2 - 6",     "x^3 - 3",     "x^2 + 5"};
    for (const char* src : rootless) {
        PolyQi f = parse_value(src, 'x').numerator();
        RootSearch r = find_roots(f);
        v.expect(r.roots.empty() && r.residual == f, std::string(src) + " reported a root");
        // Independent certificate: a root of a monic Z[i] polynomial is a Gaussian integer divisor of f(0).
        GaussianRational c0 = f.constant_term();
        GaussianInteger n{numerator(c0.re()), numerator(c0.im())};
        bool none = true;
        for (const auto& d : gaussian_divisors(n)) none = none && !f(d.to_rational()).is_zero();
        v.expect(none, std::string(src) + " has a Gaussian integer root");
    }
}

// 10. Report golden file.
void golden(Verdict& v) {
    std::ifstream in(std::string(POLAR_GOLDEN_DIR) + "/report_all.txt", std::ios::binary);
    v.expect(static_cast<bool>(in), "golden file missing");
    std::string expected((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::string cmd = std::string("\"") + POLARCTL_PATH + "\" report all";
    FILE* p = popen(cmd.c_str(), "r");
    v.expect(p != nullptr, "cannot run polarctl");
    if (!p) return;
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    v.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "report all exit code");
    v.expect(out == expected, "report all output differs from the golden file");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Verdict&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "circle and conic identities", identities},
        {2, "fixed-ring presentations", presentations},
        {3, "torsion on the circle, freeness elsewhere", torsion},
        {4, "class equality matches the triviality oracle", master_oracle},
        {5, "polar factorization", factorization},
        {6, "localization exactness and prime-local classes", localization},
        {7, "x^m - zeta nontrivial with x inverted", laurent_table},
        {8, "cusp cubic", cusp},
        {9, "root finder", root_finder},
        {10, "report golden file", golden},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Verdict v;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (v.failures == 0 ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << v.checks
             << " checks, " << v.failures << " failed, " << std::fixed << std::setprecision(1) << secs << "s)";
        for (const auto& n : v.notes) line << "\n    " << n;
        std::cout << line.str() << std::endl;
        if (v.failures != 0) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
