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
#include <sstream>

#include "bandspec/band_matrix.hpp"
#include "oracle.hpp"

using namespace bandspec;

TEST_CASE("deterministic Wyner gram has the five-point stencil")
{
    double const alpha = 0.4;
    auto const p = ChannelParams::wyner(32, 1, alpha, alpha, FadingSpec::deterministic());
    auto rng = derive_stream(0, 0);
    auto const A = gram(generate_channel(p, rng));
    REQUIRE(A.bandwidth() == 2);
    for (std::size_t i = 2; i < 30; ++i)
    {
        CHECK(A.diag(i) == doctest::Approx(1 + 2 * alpha * alpha));
        CHECK(A.sub(1, i - 1).real() == doctest::Approx(2 * alpha));
        CHECK(A.sub(2, i - 2).real() == doctest::Approx(alpha * alpha));
        CHECK(A.sub(1, i - 1).imag() == 0.0);
    }
    // Boundary rows miss one neighbour column.
    CHECK(A.diag(0) == doctest::Approx(1 + alpha * alpha));
}

TEST_CASE("gram matches the dense product")
{
    for (std::size_t K : {1u, 3u})
    {
        ChannelParams p;
        p.N = 11;
        p.K = K;
        p.diagonals = {{-1, 0.7, FadingSpec::rayleigh()},
                       {0, 1.0, FadingSpec::rician(0.8, 0.36)},
                       {2, 0.3, FadingSpec::uniform_phase()}};
        CHECK(p.gram_bandwidth() == 3);
        auto rng = derive_stream(11, K);
        auto const H = generate_channel(p, rng);
        auto const A = gram(H);
        auto const Hd = oracle::channel_matrix(H);
        oracle::MatrixXc const G = Hd * Hd.adjoint();
        CHECK((oracle::hermitian_matrix(A) - G).cwiseAbs().maxCoeff() < 1e-13);
        CHECK(A.trace() == doctest::Approx(H.frobenius_norm_squared()));
        CHECK(A.frobenius_norm_squared() == doctest::Approx(G.squaredNorm()));
        CHECK(A.norm_inf() >= G.cwiseAbs().rowwise().sum().maxCoeff() - 1e-12);
    }
}

TEST_CASE("channel entries respect the block layout")
{
    auto const p = ChannelParams::wyner(6, 2, 0.5, 0.25, FadingSpec::deterministic());
    auto rng = derive_stream(0, 0);
    auto const H = generate_channel(p, rng);
    auto const D = oracle::channel_matrix(H);
    CHECK(D(3, 2 * 2).real() == 0.5);   // block column 2 for row 3: offset -1
    CHECK(D(3, 2 * 3 + 1).real() == 1.0);
    CHECK(D(3, 2 * 4).real() == 0.25);
    CHECK(D(3, 2 * 5) == std::complex<double>{});
    CHECK_FALSE(H.has_block(0, 0)); // no column -1
    CHECK_FALSE(H.has_block(5, 2)); // no column 6
}

TEST_CASE("log det via LDL matches the dense determinant")
{
    auto const p = ChannelParams::wyner(40, 2, 0.6, 0.9, FadingSpec::rayleigh());
    auto rng = derive_stream(5, 5);
    auto const A = gram(generate_channel(p, rng));
    auto const Ad = oracle::hermitian_matrix(A);
    for (double rho : {1e-3, 0.5, 10.0, 1e4})
    {
        oracle::MatrixXc const M = oracle::MatrixXc::Identity(40, 40) + rho * Ad;
        Eigen::LDLT<oracle::MatrixXc> ldlt(M);
        double const ref = ldlt.vectorD().real().array().log().sum() / 40.0;
        CHECK(log_det_shifted_per_dim(A, rho) == doctest::Approx(ref).epsilon(1e-12));
        for (double d : ldl_shifted(A, rho))
            CHECK(d >= 1.0 - 1e-12);
    }
}

TEST_CASE("log det keeps relative accuracy at tiny rho")
{
    auto const p = ChannelParams::wyner(64, 1, 0.5, 0.5, FadingSpec::rayleigh());
    auto rng = derive_stream(1, 2);
    auto const A = gram(generate_channel(p, rng));
    double const rho = 1e-12;
    // log det(I + rho A) = rho tr A - rho^2 tr A^2 / 2 + ...
    double const first = rho * A.trace() / 64.0;
    double const second = rho * rho * A.frobenius_norm_squared() / 2.0 / 64.0;
    CHECK(log_det_shifted_per_dim(A, rho) == doctest::Approx(first - second).epsilon(1e-10));
}

TEST_CASE("indefinite shift is reported")
{
    BandedHermitian A(4, 1);
    for (std::size_t i = 0; i < 4; ++i)
        A.diag(i) = -2.0;
    CHECK_THROWS_AS(ldl_shifted(A, 1.0), NumericalError);
    CHECK_THROWS_AS(log_det_shifted_per_dim(A, 1.0), NumericalError);
}

TEST_CASE("two-diagonal LDL pivots follow the first-order recursion")
{
    ChannelParams p;
    p.N = 50;
    p.K = 1;
    p.diagonals = {{0, 1.0, FadingSpec::rayleigh()}, {-1, 1.0, FadingSpec::rayleigh()}};
    auto rng = derive_stream(8, 1);
    auto const H = generate_channel(p, rng);
    auto const A = gram(H);
    double const P = 3.0;
    auto const d = ldl_shifted(A, P);
    // Row i holds a_i at column i (offset 0) and b_i at column i - 1.
    auto tap = [&](std::size_t row, int offset) {
        std::size_t slot = 0;
        while (H.offsets()[slot] != offset)
            ++slot;
        return H.has_block(row, slot) ? std::norm(H.block(row, slot)[0]) : 0.0;
    };
    double prev_d = 1.0, prev_a = 0.0;
    for (std::size_t i = 0; i < 50; ++i)
    {
        double const ai = tap(i, 0), bi = tap(i, -1);
        double const di = 1 + P * ai + P * bi * (1 - P * prev_a / prev_d);
        CHECK(d[i] == doctest::Approx(di).epsilon(1e-12));
        prev_d = di;
        prev_a = ai;
    }
}

TEST_CASE("binary round trip")
{
    auto const p = ChannelParams::wyner(17, 2, 0.3, 0.8, FadingSpec::rayleigh());
    auto rng = derive_stream(4, 4);
    auto const A = gram(generate_channel(p, rng));
    std::stringstream ss;
    A.write_binary(ss);
    CHECK(ss.str().substr(0, 4) == "BNDH");
    auto const B = BandedHermitian::read_binary(ss);
    REQUIRE(B.order() == A.order());
    REQUIRE(B.bandwidth() == A.bandwidth());
    CHECK(B.dense() == A.dense());

    std::stringstream bad("XXXX");
    CHECK_THROWS(BandedHermitian::read_binary(bad));
}

TEST_CASE("from_dense keeps the requested band")
{
    std::vector<cplx> M(9);
    M = {2, cplx(1, 1), 3, cplx(1, -1), 4, cplx(0, 2), 3, cplx(0, -2), 5};
    auto const A = BandedHermitian::from_dense(M, 3, 1);
    CHECK(A(1, 0) == cplx(1, -1));
    CHECK(A(0, 1) == cplx(1, 1));
    CHECK(A(2, 0) == cplx{});
    CHECK(A.trace() == 11.0);
    CHECK(BandedHermitian(3, 7).bandwidth() == 2);
}

TEST_CASE("parameter validation")
{
    auto ok = ChannelParams::wyner(3, 1, 0.5, 0.5, FadingSpec::rayleigh());
    CHECK_NOTHROW(ok.validate());
    auto small = ChannelParams::wyner(2, 1, 0.5, 0.5, FadingSpec::rayleigh());
    CHECK_THROWS_AS(small.validate(), std::invalid_argument);
    auto gain = ChannelParams::wyner(8, 1, 1.5, 0.5, FadingSpec::rayleigh());
    CHECK_THROWS_AS(gain.validate(), std::invalid_argument);
    ChannelParams dup;
    dup.N = 8;
    dup.diagonals = {{0, 1.0, FadingSpec::rayleigh()}, {0, 0.5, FadingSpec::rayleigh()}};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
    ChannelParams two;
    two.N = 8;
    two.diagonals = {{0, 1.0, FadingSpec::rayleigh()}, {-1, 1.0, FadingSpec::rayleigh()}};
    CHECK(two.gram_bandwidth() == 1);
    CHECK(ok.rho() == 1.0);
}
