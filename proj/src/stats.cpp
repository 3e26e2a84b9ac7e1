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

#include "bandspec/stats.hpp"

#include <cmath>

namespace bandspec {

double compensated_sum(std::span<double const> values)
{
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values)
    {
        double const t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            carry += (sum - t) + v;
        else
            carry += (v - t) + sum;
        sum = t;
    }
    return sum + carry;
}

Estimate summarize(std::span<double const> values)
{
    Estimate e;
    e.count = values.size();
    if (values.empty())
        return e;
    double const n = static_cast<double>(values.size());
    e.mean = compensated_sum(values) / n;
    if (values.size() < 2)
        return e;
    double ss = 0.0;
    for (double v : values)
        ss += (v - e.mean) * (v - e.mean);
    e.std_err = std::sqrt(ss / (n - 1.0) / n);
    return e;
}

} // namespace bandspec
