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

#include "bandspec/narula_chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bandspec/band_matrix.hpp"

namespace bandspec {

namespace {

constexpr std::size_t kBatches = 100;

} // namespace

NarulaState narula_initial(cplx a, cplx b, double P)
{
    double const a_sq = std::norm(a);
    return {1.0 + P * a_sq + P * std::norm(b), a_sq};
}

NarulaState narula_step(NarulaState prev, cplx a, cplx b, double P)
{
    double const a_sq = std::norm(a);
    double const d = 1.0 + P * a_sq + P * std::norm(b) * (1.0 - P * prev.a_sq / prev.d);
    return {d, a_sq};
}

ChainRun simulate_chain(double P, ChainOptions const& opts, RandomStream& rng)
{
    if (!(P > 0.0))
        throw std::invalid_argument("simulate_chain: P must be > 0");
    if (opts.n_steps < kBatches)
        throw std::invalid_argument("simulate_chain: need at least 100 averaged steps");

    ChainRun run;
    run.P = P;
    run.n_steps = opts.n_steps;
    run.burn_in = opts.burn_in;
    run.samples.reserve(std::min(opts.retain, opts.n_steps));

    auto draw = [&] { return sample(opts.fading, rng); };

    // Pivot t = 0 is d_1; the first burn_in pivots are discarded.
    std::size_t const batch = opts.n_steps / kBatches;
    std::vector<double> batch_sum(kBatches, 0.0);
    std::vector<std::size_t> batch_len(kBatches, 0);
    NarulaState state;
    std::size_t const total_pivots = opts.burn_in + opts.n_steps;
    for (std::size_t t = 0; t < total_pivots; ++t)
    {
        cplx const a = draw();
        cplx const b = draw();
        state = t == 0 ? narula_initial(a, b, P) : narula_step(state, a, b, P);
        if (!(state.d >= 1.0))
            throw NumericalError("simulate_chain: pivot fell below 1");
        if (t < opts.burn_in)
            continue;
        std::size_t const n = t - opts.burn_in;
        if (run.samples.size() < opts.retain)
            run.samples.push_back(state.d);
        // The remainder of an uneven split joins the last batch.
        std::size_t const k = std::min(n / batch, kBatches - 1);
        batch_sum[k] += std::log(state.d);
        batch_len[k] += 1;
    }

    double total = 0.0;
    std::vector<double> means(kBatches);
    for (std::size_t k = 0; k < kBatches; ++k)
    {
        total += batch_sum[k];
        means[k] = batch_sum[k] / static_cast<double>(batch_len[k]);
    }
    run.ergodic_log_mean = total / static_cast<double>(opts.n_steps);
    double var = 0.0;
    for (double m : means)
        var += (m - run.ergodic_log_mean) * (m - run.ergodic_log_mean);
    var /= static_cast<double>(kBatches - 1);
    run.std_err = std::sqrt(var / static_cast<double>(kBatches));
    return run;
}

ChainLdlComparison chain_vs_ldl(std::size_t N, double P, RandomStream& rng)
{
    if (N == 0)
        throw std::invalid_argument("chain_vs_ldl: N must be positive");
    // Offsets: -1 carries b_n (gain alpha = 1), 0 carries a_n.
    BlockBandedChannel H(N, 1, {-1, 0});
    FadingSpec const law = FadingSpec::rayleigh();
    for (std::size_t n = 0; n < N; ++n)
    {
        H.block(n, 1)[0] = sample(law, rng);
        if (H.has_block(n, 0))
            H.block(n, 0)[0] = sample(law, rng);
    }

    ChainLdlComparison out;
    out.ldl = ldl_shifted(gram(H), P);
    out.recursion.resize(N);
    NarulaState state = narula_initial(H.block(0, 1)[0], cplx{}, P);
    out.recursion[0] = state.d;
    for (std::size_t n = 1; n < N; ++n)
    {
        state = narula_step(state, H.block(n, 1)[0], H.block(n, 0)[0], P);
        out.recursion[n] = state.d;
    }
    for (std::size_t n = 0; n < N; ++n)
        out.max_abs_diff = std::max(out.max_abs_diff, std::abs(out.ldl[n] - out.recursion[n]));
    return out;
}

} // namespace bandspec
