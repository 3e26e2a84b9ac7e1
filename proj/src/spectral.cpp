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

#include "bandspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bandspec {

EmpiricalSpectrum::EmpiricalSpectrum(std::vector<double> eigenvalues) : values_(std::move(eigenvalues))
{
    std::sort(values_.begin(), values_.end());
}

double ecdf(EmpiricalSpectrum const& S, double x)
{
    if (S.size() == 0)
        return 0.0;
    auto const v = S.values();
    auto const it = std::upper_bound(v.begin(), v.end(), x);
    return static_cast<double>(it - v.begin()) / static_cast<double>(S.size());
}

double shannon_transform(EmpiricalSpectrum const& S, double rho)
{
    if (S.size() == 0 || rho == 0.0)
        return 0.0;
    double s = 0.0;
    for (double lambda : S.values())
        s += std::log1p(rho * lambda);
    return s / static_cast<double>(S.size());
}

double moment(EmpiricalSpectrum const& S, int p)
{
    if (p < 1)
        throw std::invalid_argument("moment: p must be >= 1");
    if (S.size() == 0)
        return 0.0;
    double s = 0.0;
    for (double lambda : S.values())
        s += std::pow(lambda, p);
    return s / static_cast<double>(S.size());
}

double trace_moment(BandedHermitian const& A, int p)
{
    std::size_t const n = A.order();
    if (n == 0)
        return 0.0;
    double const inv_n = 1.0 / static_cast<double>(n);
    std::size_t const b = A.bandwidth();
    switch (p)
    {
    case 1:
        return A.trace() * inv_n;
    case 2:
        return A.frobenius_norm_squared() * inv_n;
    case 3: {
        // trace(A^3) = sum_{i,j,k} A_ij A_jk A_ki over index triples inside
        // the band.
        cplx acc{};
        for (std::size_t i = 0; i < n; ++i)
        {
            std::size_t const jlo = i >= b ? i - b : 0;
            std::size_t const jhi = std::min(n - 1, i + b);
            for (std::size_t j = jlo; j <= jhi; ++j)
            {
                cplx const aij = A(i, j);
                std::size_t const klo = std::max(i >= b ? i - b : 0, j >= b ? j - b : 0);
                std::size_t const khi = std::min(jhi, std::min(n - 1, j + b));
                for (std::size_t k = klo; k <= khi; ++k)
                    acc += aij * A(j, k) * A(k, i);
            }
        }
        return acc.real() * inv_n;
    }
    default:
        throw std::invalid_argument("trace_moment: p must be 1, 2 or 3");
    }
}

double ks_distance(EmpiricalSpectrum const& S, Cdf const& F)
{
    auto const v = S.values();
    double const n = static_cast<double>(v.size());
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        double const f = F(v[i]);
        d = std::max({d, std::abs(f - static_cast<double>(i) / n),
                      std::abs(f - static_cast<double>(i + 1) / n)});
    }
    return d;
}

std::vector<HistogramBin> histogram(EmpiricalSpectrum const& S, std::size_t bins)
{
    if (bins == 0)
        throw std::invalid_argument("histogram: need at least one bin");
    double const top = S.size() == 0 ? 1.0 : std::max(S.max(), 1e-300);
    double const width = top / static_cast<double>(bins);
    std::vector<HistogramBin> out(bins);
    for (std::size_t k = 0; k < bins; ++k)
        out[k] = {width * static_cast<double>(k), width * static_cast<double>(k + 1), 0, 0.0};
    for (double lambda : S.values())
    {
        auto k = lambda <= 0.0 ? std::size_t{0} : static_cast<std::size_t>(lambda / width);
        out[std::min(k, bins - 1)].count++;
    }
    std::size_t running = 0;
    for (auto& b : out)
    {
        running += b.count;
        b.cum_fraction = S.size() == 0 ? 0.0 : static_cast<double>(running) / static_cast<double>(S.size());
    }
    return out;
}

PowerGrid power_profile(ChannelParams const& params, std::size_t rows, std::size_t cols)
{
    params.validate();
    std::size_t const n = params.N;
    std::size_t const ncols = params.N * params.K;
    if (rows == 0 || cols == 0 || rows % n != 0 || cols % ncols != 0)
        throw std::invalid_argument("power_profile: grid must refine the N x NK entry grid");

    std::size_t const rows_per_entry = rows / n;
    std::size_t const cols_per_entry = cols / ncols;

    // Expected power of one entry on each configured diagonal.
    std::vector<std::pair<int, double>> level;
    for (auto const& d : params.diagonals)
        level.emplace_back(d.offset, d.gain * d.gain * amplitude_moment(d.fading, 2));

    PowerGrid g{rows, cols, std::vector<double>(rows * cols, 0.0)};
    for (std::size_t r = 0; r < rows; ++r)
    {
        long const i = static_cast<long>(r / rows_per_entry);
        for (std::size_t c = 0; c < cols; ++c)
        {
            std::size_t const j = c / cols_per_entry;
            long const block_col = static_cast<long>(j / params.K);
            for (auto const& [offset, power] : level)
                if (block_col - i == offset)
                {
                    g.values[r * cols + c] = power;
                    break;
                }
        }
    }
    return g;
}

double power_profile_refinement_gap(ChannelParams const& params)
{
    ChannelParams finer = params;
    finer.N = 2 * params.N;
    std::size_t const rows = 2 * params.N;
    std::size_t const cols = 2 * params.N * params.K;
    auto const coarse = power_profile(params, rows, cols);
    auto const fine = power_profile(finer, rows, cols);
    double gap = 0.0;
    for (std::size_t k = 0; k < coarse.values.size(); ++k)
        gap = std::max(gap, std::abs(coarse.values[k] - fine.values[k]));
    return gap;
}

} // namespace bandspec
