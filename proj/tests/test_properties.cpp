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

// Cross-module agreement: the normal form, the triviality oracle and the
// splitter must tell the same story on random inputs in every context.

#include "polar/render.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace polar;
using polar::testing::Rng;

namespace {

std::string show(const RatFuncQi& f, const RingContext& c) { return format_value(f, c); }

}  // namespace

TEST(Agreement, ClassEqualityMatchesOracle) {
    Rng rng(701);
    for (const auto& c : polar::testing::all_contexts()) {
        int equal = 0;
        for (int k = 0; k < 250; ++k) {
            auto [f, g] = polar::testing::random_pair(rng, c);
            bool same = class_of(f, c) == class_of(g, c);
            ASSERT_EQ(same, triviality_oracle(f / g, c)) << c.name() << ": " << show(f, c) << " vs " << show(g, c);
            equal += same;
        }
        // Both outcomes must be exercised.
        EXPECT_GT(equal, 50) << c.name();
        EXPECT_LT(equal, 225) << c.name();
    }
}

TEST(Agreement, IdentityClassMatchesOracle) {
    Rng rng(702);
    for (const auto& c : polar::testing::all_contexts()) {
        for (int k = 0; k < 200; ++k) {
            RatFuncQi f = polar::testing::random_element(rng, c);
            ASSERT_EQ(class_of(f, c).is_identity(), triviality_oracle(f, c)) << c.name() << ": " << show(f, c);
        }
    }
}

TEST(Agreement, RingElementsOfDeltaHaveOnlyUnitRealDivisors) {
    Rng rng(703);
    for (const auto& c : {RingContext::affine_line(), RingContext::circle(), RingContext::imaginary_circle(),
                          RingContext::prime_local(kI)}) {
        for (int k = 0; k < 200; ++k) {
            RatFuncQi f = polar::testing::random_element(rng, c, 3, true);
            if (!delta_membership(f, c)) continue;
            ASSERT_TRUE(triviality_oracle(f * sigma(f, c), c)) << c.name();
            auto p = polar_factorize(f, c);
            ASSERT_TRUE(is_unit(p.real_part, c)) << c.name() << ": " << show(f, c);
        }
    }
}

TEST(Agreement, LineClassIsConjugationAsymmetry) {
    Rng rng(704);
    auto line = RingContext::affine_line();
    for (int k = 0; k < 300; ++k) {
        RatFuncQi f = polar::testing::random_element(rng, line);
        SplitForm s = split_rational(f, false);
        bool symmetric = true;
        for (const auto& [z, e] : s.roots) {
            auto it = s.roots.find(conj(z));
            symmetric = symmetric && it != s.roots.end() && it->second == e;
        }
        ASSERT_EQ(symmetric, triviality_oracle(f, line)) << show(f, line);
        ASSERT_EQ(symmetric, class_of(f, line).is_identity()) << show(f, line);
    }
}
