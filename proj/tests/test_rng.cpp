// SPDX-License-Identifier: Apache-2.0
//
// bandspec: Monte Carlo laboratory for random Hermitian finite-band matrices
// Copyright (C) 2026 The bandspec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cmath>
#include <vector>

#include "bandspec/rng.hpp"

using namespace bandspec;

TEST_CASE("philox4x32-10 known-answer vectors")
{
    CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == Counter4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          Counter4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          Counter4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("derived streams are reproducible and distinct")
{
    auto a = derive_stream(42, 0);
    auto b = derive_stream(42, 0);
    auto c = derive_stream(42, 1);
    bool all_equal = true;
    bool any_differ_from_c = false;
    for (int i = 0; i < 1000; ++i)
    {
        auto const x = a();
        all_equal = all_equal && x == b();
        any_differ_from_c = any_differ_from_c || x != c();
    }
    CHECK(all_equal);
    CHECK(any_differ_from_c);
}

TEST_CASE("paired uniforms from neighbouring streams are uncorrelated")
{
    auto s0 = derive_stream(2026, 0);
    auto s1 = derive_stream(2026, 1);
    int const n = 1'000'000;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (int i = 0; i < n; ++i)
    {
        double const x = s0.uniform();
        double const y = s1.uniform();
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    double const cov = sxy / n - sx / n * sy / n;
    double const corr = cov / std::sqrt((sxx / n - sx * sx / n / n) * (syy / n - sy * sy / n / n));
    CHECK(std::abs(corr) < 0.01);
    CHECK(sx / n == doctest::Approx(0.5).epsilon(0.005));
}

TEST_CASE("uniform ranges")
{
    auto s = derive_stream(1, 9);
    for (int i = 0; i < 100000; ++i)
    {
        double const u = s.uniform();
        double const v = s.uniform_positive();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        REQUIRE(v > 0.0);
        REQUIRE(v <= 1.0);
    }
}

TEST_CASE("stream identity is exposed")
{
    auto s = derive_stream(5, (3ull << 32) | 4);
    CHECK(s.key() == 5);
    CHECK(s.stream_index() == ((3ull << 32) | 4));
}
