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

#pragma once

#include <cstddef>
#include <span>

namespace bandspec {

/// Mean of independent replicates with its standard error (sample std / sqrt R).
struct Estimate
{
    double mean = 0.0;
    double std_err = 0.0;
    std::size_t count = 0;
};

// Neumaier-compensated sum in index order.
double compensated_sum(std::span<double const> values);

Estimate summarize(std::span<double const> values);

} // namespace bandspec
