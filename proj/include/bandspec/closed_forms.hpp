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

#include "bandspec/fading.hpp"

namespace bandspec {

// ---- Szego-type capacities ------------------------------------------------

// Per-cell sum-rate of the non-fading Wyner model (beta = alpha) as N -> inf:
// int_0^1 log(1 + P (1 + 2 alpha cos 2 pi f)^2) df.
double wyner_capacity_nonfading(double P, double alpha);

// Large-K limit with fading: int_0^1 log(1 + P [sigma2 (1 + 2 alpha^2)
// + |mu|^2 (1 + 2 alpha cos 2 pi t)^2]) dt with sigma2 = m2 - |mu|^2.
double wyner_capacity_large_k(double P, double alpha, double m2, cplx mu);

// ---- Limiting moments under uniform-phase fading (K = 1, beta = alpha) ----

struct LimitingMoments
{
    double m1;
    double m2;
    double m3;
};

LimitingMoments limiting_moments(double m2, double m4, double m6, double alpha);

// ---- Exponential integral and Narula's Cholesky chain ---------------------

// E1(x) = int_x^inf exp(-t) / t dt for x > 0; throws std::domain_error else.
double exp_integral(double x);
// exp(x) * E1(x); finite for large x where E1 itself underflows.
double exp_integral_scaled(double x);

// Stationary density of the pivot chain, supported on [1, inf).
double narula_stationary_pdf(double x, double pbar);
// Its CDF in closed form:
// 1 - [log(x) exp(-x/P) + E1(x/P)] / E1(1/P).
double narula_stationary_cdf(double x, double pbar);
// Ergodic mean of log d: int_1^inf log(x)^2 f(x) dx.
double narula_capacity(double pbar);

// ---- Extreme-SNR parameters -----------------------------------------------

struct ExtremeSnrParams
{
    double eb_n0_min = 0.0; // linear scale
    double s0 = 0.0;        // bits/s/Hz per 3 dB
    double s_inf = 0.0;
    double l_inf = 0.0;     // in 3-dB units
    double l_inf_std_err = 0.0;
};

struct LowSnrParams
{
    double eb_n0_min;
    double s0;
};

LowSnrParams low_snr_params(int K, double alpha, double m2, double m4);

struct MeanLog2
{
    double value;
    double std_err; // 0 when analytic
};

// E log2|h|. Analytic for deterministic, uniform-phase and Rayleigh laws;
// 10^7-sample Monte Carlo otherwise. Throws std::domain_error for a law with
// an atom at zero.
MeanLog2 mean_log2_amplitude(FadingSpec const& spec);

struct HighSnrParams
{
    double s_inf;
    double l_inf;
    double l_inf_std_err;
};

// Two-diagonal channel (K = 1, alpha = 1, beta = 0).
HighSnrParams high_snr_params(FadingSpec const& pi_a, FadingSpec const& pi_b);

// ---- Marchenko-Pastur reference -------------------------------------------

// Ratio y = 1/K, scale sigma2; support [sigma2 (1 - sqrt y)^2, sigma2 (1 + sqrt y)^2].
double marchenko_pastur_pdf(double x, int K, double sigma2);
double marchenko_pastur_cdf(double x, int K, double sigma2);

} // namespace bandspec
