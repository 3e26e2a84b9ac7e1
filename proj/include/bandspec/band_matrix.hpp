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

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "bandspec/fading.hpp"
#include "bandspec/rng.hpp"

namespace bandspec {

/// Signals a loss of positive definiteness during factorization.
class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// One block diagonal of the channel: row i carries a 1 x K block at block
/// column i + offset, with i.i.d. entries drawn from `fading` and scaled by
/// `gain`.
struct Diagonal
{
    int offset = 0;
    double gain = 1.0;
    FadingSpec fading = FadingSpec::rayleigh();
};

/// Ensemble definition of a block-banded channel H (N x NK).
struct ChannelParams
{
    std::size_t N = 0;
    std::size_t K = 1;
    std::vector<Diagonal> diagonals;
    double power = 1.0; // total per-cell transmit power P

    // Linear Wyner model: offset -1 (gain alpha), 0 (gain 1), +1 (gain beta),
    // all diagonals sharing one fading law.
    static ChannelParams wyner(std::size_t N, std::size_t K, double alpha, double beta,
                               FadingSpec const& fading, double power = 1.0);

    // Per-user SNR rho = P / K.
    double rho() const { return power / static_cast<double>(K); }

    int min_offset() const;
    int max_offset() const;
    // Bandwidth of H H^dagger: max_offset - min_offset.
    std::size_t gram_bandwidth() const;

    // Throws std::invalid_argument describing the first violated invariant.
    void validate() const;
};

/// Storage for a sampled block-banded channel. Blocks that fall outside the
/// N x NK matrix are absent and read as zero.
class BlockBandedChannel
{
  public:
    BlockBandedChannel(std::size_t N, std::size_t K, std::vector<int> offsets);

    std::size_t rows() const { return N_; }
    std::size_t users() const { return K_; }
    std::size_t cols() const { return N_ * K_; }
    std::span<int const> offsets() const { return offsets_; }

    bool has_block(std::size_t row, std::size_t diag) const;
    std::span<cplx const> block(std::size_t row, std::size_t diag) const;
    std::span<cplx> block(std::size_t row, std::size_t diag);

    // Row-major N x NK dense copy; for small-instance oracles only.
    std::vector<cplx> dense() const;
    double frobenius_norm_squared() const;

  private:
    std::size_t N_;
    std::size_t K_;
    std::vector<int> offsets_;
    std::vector<cplx> entries_; // [row][diag][user]
};

/// Hermitian band matrix of order N and bandwidth b, stored diagonal-major:
/// the real main diagonal followed by b complex sub-diagonals, sub-diagonal
/// k holding A(j + k, j) for j = 0 .. N - k - 1.
class BandedHermitian
{
  public:
    BandedHermitian(std::size_t order, std::size_t bandwidth);

    // Builds from a dense row-major Hermitian matrix, keeping `bandwidth`
    // sub-diagonals of the lower triangle.
    static BandedHermitian from_dense(std::span<cplx const> dense, std::size_t order,
                                      std::size_t bandwidth);

    std::size_t order() const { return diag_.size(); }
    std::size_t bandwidth() const { return sub_.size(); }

    double diag(std::size_t i) const { return diag_[i]; }
    double& diag(std::size_t i) { return diag_[i]; }
    // A(j + k, j), 1 <= k <= bandwidth.
    cplx sub(std::size_t k, std::size_t j) const { return sub_[k - 1][j]; }
    cplx& sub(std::size_t k, std::size_t j) { return sub_[k - 1][j]; }
    std::span<double const> main_diagonal() const { return diag_; }
    std::span<cplx const> sub_diagonal(std::size_t k) const { return sub_[k - 1]; }

    // Full Hermitian accessor; zero outside the band.
    cplx operator()(std::size_t i, std::size_t j) const;

    std::vector<cplx> dense() const;
    double trace() const;
    double frobenius_norm_squared() const;
    // Infinity norm bound: max_i sum_j |A(i, j)|.
    double norm_inf() const;

    // Binary layout (little-endian): "BNDH", u32 version, u64 N, u32 bandwidth,
    // then the main diagonal (N complex doubles) and sub-diagonals k = 1..b
    // (N - k complex doubles each).
    void write_binary(std::ostream& os) const;
    static BandedHermitian read_binary(std::istream& is);

  private:
    std::vector<double> diag_;
    std::vector<std::vector<cplx>> sub_;
};

BlockBandedChannel generate_channel(ChannelParams const& params, RandomStream& rng);

// H H^dagger in band form, computed from row blocks.
BandedHermitian gram(BlockBandedChannel const& H);

// Diagonal of the unit-triangular LDL^H factorization of I + rho * A.
// Throws NumericalError when a pivot drops below 1e-14.
std::vector<double> ldl_shifted(BandedHermitian const& A, double rho);

// (1/N) log det(I + rho * A) via the LDL pivots, accumulated with log1p of
// the pivot excess so that small rho keeps full relative accuracy.
double log_det_shifted_per_dim(BandedHermitian const& A, double rho);

} // namespace bandspec
