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

#include "bandspec/band_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <string>

namespace bandspec {

// ---------------------------------------------------------------------------
// ChannelParams
// ---------------------------------------------------------------------------

ChannelParams ChannelParams::wyner(std::size_t N, std::size_t K, double alpha, double beta,
                                   FadingSpec const& fading, double power)
{
    ChannelParams p;
    p.N = N;
    p.K = K;
    p.power = power;
    p.diagonals = {{-1, alpha, fading}, {0, 1.0, fading}, {+1, beta, fading}};
    return p;
}

int ChannelParams::min_offset() const
{
    int m = 0;
    for (auto const& d : diagonals)
        m = std::min(m, d.offset);
    return m;
}

int ChannelParams::max_offset() const
{
    int m = 0;
    for (auto const& d : diagonals)
        m = std::max(m, d.offset);
    return m;
}

std::size_t ChannelParams::gram_bandwidth() const
{
    if (diagonals.empty())
        return 0;
    int lo = diagonals.front().offset;
    int hi = lo;
    for (auto const& d : diagonals)
    {
        lo = std::min(lo, d.offset);
        hi = std::max(hi, d.offset);
    }
    return static_cast<std::size_t>(hi - lo);
}

void ChannelParams::validate() const
{
    if (N == 0)
        throw std::invalid_argument("channel: N must be positive");
    if (K == 0)
        throw std::invalid_argument("channel: K must be positive");
    if (diagonals.empty())
        throw std::invalid_argument("channel: at least one diagonal is required");
    if (!(power >= 0.0) || !std::isfinite(power))
        throw std::invalid_argument("channel: power must be finite and >= 0");
    std::set<int> seen;
    int reach = 0;
    for (auto const& d : diagonals)
    {
        if (!seen.insert(d.offset).second)
            throw std::invalid_argument("channel: duplicate offset " + std::to_string(d.offset));
        if (!(d.gain >= 0.0 && d.gain <= 1.0))
            throw std::invalid_argument("channel: gain must lie in [0, 1]");
        reach = std::max(reach, std::abs(d.offset));
    }
    if (N < static_cast<std::size_t>(2 * reach + 1))
        throw std::invalid_argument("channel: N must be at least 2 * max|offset| + 1");
}

// ---------------------------------------------------------------------------
// BlockBandedChannel
// ---------------------------------------------------------------------------

BlockBandedChannel::BlockBandedChannel(std::size_t N, std::size_t K, std::vector<int> offsets)
    : N_(N), K_(K), offsets_(std::move(offsets)), entries_(N * K * offsets_.size())
{
}

bool BlockBandedChannel::has_block(std::size_t row, std::size_t diag) const
{
    long const col = static_cast<long>(row) + offsets_[diag];
    return col >= 0 && col < static_cast<long>(N_);
}

std::span<cplx const> BlockBandedChannel::block(std::size_t row, std::size_t diag) const
{
    return {entries_.data() + (row * offsets_.size() + diag) * K_, K_};
}

std::span<cplx> BlockBandedChannel::block(std::size_t row, std::size_t diag)
{
    return {entries_.data() + (row * offsets_.size() + diag) * K_, K_};
}

std::vector<cplx> BlockBandedChannel::dense() const
{
    std::vector<cplx> out(N_ * N_ * K_);
    std::size_t const ncols = N_ * K_;
    for (std::size_t i = 0; i < N_; ++i)
        for (std::size_t t = 0; t < offsets_.size(); ++t)
        {
            if (!has_block(i, t))
                continue;
            std::size_t const col0 = (i + offsets_[t]) * K_;
            auto const b = block(i, t);
            for (std::size_t k = 0; k < K_; ++k)
                out[i * ncols + col0 + k] = b[k];
        }
    return out;
}

double BlockBandedChannel::frobenius_norm_squared() const
{
    double s = 0.0;
    for (std::size_t i = 0; i < N_; ++i)
        for (std::size_t t = 0; t < offsets_.size(); ++t)
            if (has_block(i, t))
                for (auto const& v : block(i, t))
                    s += std::norm(v);
    return s;
}

BlockBandedChannel generate_channel(ChannelParams const& params, RandomStream& rng)
{
    params.validate();
    std::vector<int> offsets;
    offsets.reserve(params.diagonals.size());
    for (auto const& d : params.diagonals)
        offsets.push_back(d.offset);

    BlockBandedChannel H(params.N, params.K, std::move(offsets));
    // Draw order: row, then diagonal in configured order, then user.
    for (std::size_t i = 0; i < params.N; ++i)
        for (std::size_t t = 0; t < params.diagonals.size(); ++t)
        {
            if (!H.has_block(i, t))
                continue;
            auto const& d = params.diagonals[t];
            for (auto& v : H.block(i, t))
                v = d.gain * sample(d.fading, rng);
        }
    return H;
}

// ---------------------------------------------------------------------------
// BandedHermitian
// ---------------------------------------------------------------------------

BandedHermitian::BandedHermitian(std::size_t order, std::size_t bandwidth) : diag_(order)
{
    if (order > 0 && bandwidth >= order)
        bandwidth = order - 1;
    sub_.reserve(bandwidth);
    for (std::size_t k = 1; k <= bandwidth; ++k)
        sub_.emplace_back(order - k);
}

BandedHermitian BandedHermitian::from_dense(std::span<cplx const> dense, std::size_t order,
                                            std::size_t bandwidth)
{
    BandedHermitian A(order, bandwidth);
    for (std::size_t i = 0; i < order; ++i)
        A.diag_[i] = dense[i * order + i].real();
    for (std::size_t k = 1; k <= A.bandwidth(); ++k)
        for (std::size_t j = 0; j + k < order; ++j)
            A.sub_[k - 1][j] = dense[(j + k) * order + j];
    return A;
}

cplx BandedHermitian::operator()(std::size_t i, std::size_t j) const
{
    if (i == j)
        return diag_[i];
    if (i > j)
    {
        std::size_t const k = i - j;
        return k <= sub_.size() ? sub_[k - 1][j] : cplx{};
    }
    std::size_t const k = j - i;
    return k <= sub_.size() ? std::conj(sub_[k - 1][i]) : cplx{};
}

std::vector<cplx> BandedHermitian::dense() const
{
    std::size_t const n = order();
    std::vector<cplx> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        out[i * n + i] = diag_[i];
    for (std::size_t k = 1; k <= bandwidth(); ++k)
        for (std::size_t j = 0; j + k < n; ++j)
        {
            out[(j + k) * n + j] = sub_[k - 1][j];
            out[j * n + j + k] = std::conj(sub_[k - 1][j]);
        }
    return out;
}

double BandedHermitian::trace() const
{
    return std::accumulate(diag_.begin(), diag_.end(), 0.0);
}

double BandedHermitian::frobenius_norm_squared() const
{
    double s = 0.0;
    for (double d : diag_)
        s += d * d;
    for (auto const& sd : sub_)
        for (auto const& v : sd)
            s += 2.0 * std::norm(v);
    return s;
}

double BandedHermitian::norm_inf() const
{
    std::size_t const n = order();
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i)
        row[i] = std::abs(diag_[i]);
    for (std::size_t k = 1; k <= bandwidth(); ++k)
        for (std::size_t j = 0; j + k < n; ++j)
        {
            double const a = std::abs(sub_[k - 1][j]);
            row[j + k] += a;
            row[j] += a;
        }
    return n == 0 ? 0.0 : *std::max_element(row.begin(), row.end());
}

namespace {

constexpr char kMagic[4] = {'B', 'N', 'D', 'H'};
constexpr std::uint32_t kBinaryVersion = 1;

template <class T>
void put_le(std::ostream& os, T value)
{
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
    U bits = std::bit_cast<U>(value);
    char bytes[sizeof(U)];
    for (std::size_t i = 0; i < sizeof(U); ++i)
    {
        bytes[i] = static_cast<char>(bits & 0xFFu);
        bits >>= 8;
    }
    os.write(bytes, sizeof(U));
}

template <class T>
T get_le(std::istream& is)
{
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
    unsigned char bytes[sizeof(U)];
    if (!is.read(reinterpret_cast<char*>(bytes), sizeof(U)))
        throw std::runtime_error("BNDH: truncated input");
    U bits = 0;
    for (std::size_t i = sizeof(U); i-- > 0;)
        bits = (bits << 8) | bytes[i];
    return std::bit_cast<T>(bits);
}

} // namespace

void BandedHermitian::write_binary(std::ostream& os) const
{
    os.write(kMagic, 4);
    put_le<std::uint32_t>(os, kBinaryVersion);
    put_le<std::uint64_t>(os, order());
    put_le<std::uint32_t>(os, static_cast<std::uint32_t>(bandwidth()));
    for (double d : diag_)
    {
        put_le<double>(os, d);
        put_le<double>(os, 0.0);
    }
    for (auto const& sd : sub_)
        for (auto const& v : sd)
        {
            put_le<double>(os, v.real());
            put_le<double>(os, v.imag());
        }
}

BandedHermitian BandedHermitian::read_binary(std::istream& is)
{
    char magic[4];
    if (!is.read(magic, 4) || !std::equal(magic, magic + 4, kMagic))
        throw std::runtime_error("BNDH: bad magic");
    if (get_le<std::uint32_t>(is) != kBinaryVersion)
        throw std::runtime_error("BNDH: unsupported version");
    auto const n = static_cast<std::size_t>(get_le<std::uint64_t>(is));
    auto const b = static_cast<std::size_t>(get_le<std::uint32_t>(is));
    if (n > 0 && b >= n)
        throw std::runtime_error("BNDH: bandwidth exceeds order");
    BandedHermitian A(n, b);
    for (std::size_t i = 0; i < n; ++i)
    {
        A.diag_[i] = get_le<double>(is);
        (void)get_le<double>(is);
    }
    for (auto& sd : A.sub_)
        for (auto& v : sd)
        {
            double const re = get_le<double>(is);
            double const im = get_le<double>(is);
            v = {re, im};
        }
    return A;
}

// ---------------------------------------------------------------------------
// Gram matrix and LDL
// ---------------------------------------------------------------------------

BandedHermitian gram(BlockBandedChannel const& H)
{
    std::size_t const n = H.rows();
    std::size_t const K = H.users();
    auto const offsets = H.offsets();
    std::size_t const nd = offsets.size();

    int lo = 0, hi = 0;
    if (nd > 0)
    {
        lo = *std::min_element(offsets.begin(), offsets.end());
        hi = *std::max_element(offsets.begin(), offsets.end());
    }
    std::size_t const b = static_cast<std::size_t>(hi - lo);
    BandedHermitian A(n, b);
    std::size_t const bw = A.bandwidth();

    // partner[s][t]: index of the diagonal with offset offsets[t] + s, or nd.
    std::vector<std::vector<std::size_t>> partner(bw + 1, std::vector<std::size_t>(nd, nd));
    for (std::size_t s = 0; s <= bw; ++s)
        for (std::size_t t = 0; t < nd; ++t)
            for (std::size_t u = 0; u < nd; ++u)
                if (offsets[u] == offsets[t] + static_cast<int>(s))
                    partner[s][t] = u;

    // A(i, i - s) = sum over shared block columns c = i + d_t = (i - s) + d_u.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s <= bw && s <= i; ++s)
        {
            std::size_t const j = i - s;
            cplx acc{};
            for (std::size_t t = 0; t < nd; ++t)
            {
                std::size_t const u = partner[s][t];
                if (u == nd || !H.has_block(i, t) || !H.has_block(j, u))
                    continue;
                auto const x = H.block(i, t);
                auto const y = H.block(j, u);
                for (std::size_t k = 0; k < K; ++k)
                    acc += x[k] * std::conj(y[k]);
            }
            if (s == 0)
                A.diag(i) = acc.real();
            else
                A.sub(s, j) = acc;
        }
    return A;
}

namespace {

constexpr double kPivotFloor = 1e-14;

// Returns d_i - 1 for the LDL^H pivots of I + rho * A.
std::vector<double> ldl_pivot_excess(BandedHermitian const& A, double rho)
{
    std::size_t const n = A.order();
    std::size_t const b = A.bandwidth();
    // L(i, i - m) for m = 1..b lives at L[i * b + m - 1].
    std::vector<cplx> L(n * std::max<std::size_t>(b, 1));
    std::vector<double> excess(n);
    auto l_at = [&](std::size_t i, std::size_t j) -> cplx& { return L[i * b + (i - j) - 1]; };

    for (std::size_t i = 0; i < n; ++i)
    {
        std::size_t const first = i >= b ? i - b : 0;
        for (std::size_t j = first; j < i; ++j)
        {
            cplx acc = rho * A.sub(i - j, j);
            for (std::size_t k = first; k < j; ++k)
                acc -= l_at(i, k) * std::conj(l_at(j, k)) * (1.0 + excess[k]);
            l_at(i, j) = acc / (1.0 + excess[j]);
        }
        double e = rho * A.diag(i);
        for (std::size_t k = first; k < i; ++k)
            e -= std::norm(l_at(i, k)) * (1.0 + excess[k]);
        if (!(1.0 + e >= kPivotFloor))
            throw NumericalError("ldl_shifted: pivot " + std::to_string(1.0 + e) + " at row " +
                                 std::to_string(i));
        excess[i] = e;
    }
    return excess;
}

} // namespace

std::vector<double> ldl_shifted(BandedHermitian const& A, double rho)
{
    auto d = ldl_pivot_excess(A, rho);
    for (auto& v : d)
        v += 1.0;
    return d;
}

double log_det_shifted_per_dim(BandedHermitian const& A, double rho)
{
    auto const excess = ldl_pivot_excess(A, rho);
    double s = 0.0;
    for (double e : excess)
        s += std::log1p(e);
    return excess.empty() ? 0.0 : s / static_cast<double>(excess.size());
}

} // namespace bandspec
