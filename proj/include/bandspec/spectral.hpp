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
#include <functional>
#include <span>
#include <vector>

#include "bandspec/band_matrix.hpp"

namespace bandspec {

/// Sorted eigenvalue list of an order-N Hermitian matrix.
class EmpiricalSpectrum
{
  public:
    EmpiricalSpectrum() = default;
    // Sorts the input.
    explicit EmpiricalSpectrum(std::vector<double> eigenvalues);

    std::size_t size() const { return values_.size(); }
    std::span<double const> values() const { return values_; }
    double min() const { return values_.front(); }
    double max() const { return values_.back(); }

  private:
    std::vector<double> values_;
};

// (1/N) #{lambda_i <= x}
double ecdf(EmpiricalSpectrum const& S, double x);

// (1/N) sum log(1 + rho * lambda_i), natural log.
double shannon_transform(EmpiricalSpectrum const& S, double rho);

// (1/N) sum lambda_i^p
double moment(EmpiricalSpectrum const& S, int p);

// (1/N) trace(A^p) for p in {1, 2, 3}, straight from the band.
double trace_moment(BandedHermitian const& A, int p);

using Cdf = std::function<double(double)>;

// Kolmogorov-Smirnov distance sup |ECDF - F| over the jump points.
double ks_distance(EmpiricalSpectrum const& S, Cdf const& F);

struct HistogramBin
{
    double left;
    double right;
    std::size_t count;
    double cum_fraction;
};

// Equal-width bins over [0, max(lambda_max, tiny)].
std::vector<HistogramBin> histogram(EmpiricalSpectrum const& S, std::size_t bins);

/// Piecewise-constant expected power profile E|H_ij|^2 on a rows x cols
/// grid over [0,1)^2.
struct PowerGrid
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values; // row-major

    double operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

// `rows` must be a multiple of N and `cols` a multiple of N * K so that every
// grid cell lies inside one matrix entry.
PowerGrid power_profile(ChannelParams const& params, std::size_t rows, std::size_t cols);

// sup over the common (2N, 2NK) grid of |P_N - P_2N|.
double power_profile_refinement_gap(ChannelParams const& params);

} // namespace bandspec
