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
#include <vector>

#include "bandspec/fading.hpp"
#include "bandspec/rng.hpp"

namespace bandspec {

/// Two-slot chain state: the current pivot and the |a|^2 drawn with it. The
/// next pivot's correction term needs the previous row's |a|^2.
struct NarulaState
{
    double d = 1.0;
    double a_sq = 0.0;
};

// d_1 = 1 + P|a_1|^2 + P|b_1|^2
NarulaState narula_initial(cplx a, cplx b, double P);

// d_n = 1 + P|a_n|^2 + P|b_n|^2 (1 - P|a_{n-1}|^2 / d_{n-1})
NarulaState narula_step(NarulaState prev, cplx a, cplx b, double P);

struct ChainRun
{
    double P = 0.0;
    std::size_t n_steps = 0; // averaged steps, after burn-in
    std::size_t burn_in = 0;
    std::vector<double> samples; // first `retain` post-burn-in pivots
    double ergodic_log_mean = 0.0;
    double std_err = 0.0; // batch means, 100 batches
};

struct ChainOptions
{
    std::size_t n_steps = 1'000'000;
    std::size_t burn_in = 1'000;
    std::size_t retain = 0;
    FadingSpec fading = FadingSpec::rayleigh();
};

// Runs the chain with i.i.d. taps; each step draws a_n then b_n.
ChainRun simulate_chain(double P, ChainOptions const& opts, RandomStream& rng);

struct ChainLdlComparison
{
    std::vector<double> ldl;
    std::vector<double> recursion;
    double max_abs_diff = 0.0;
};

// Builds the two-diagonal channel (K = 1, alpha = 1, beta = 0) with Rayleigh
// taps, factors I + P H H^dagger, and replays the recursion on the same draws.
// Row 1 has no b tap in the matrix, so the recursion starts from b_1 = 0.
ChainLdlComparison chain_vs_ldl(std::size_t N, double P, RandomStream& rng);

} // namespace bandspec
