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

#include "bandspec/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bandspec/quadrature.hpp"
#include "bandspec/rng.hpp"

namespace bandspec {

namespace {

constexpr double kCapacityTol = 1e-10;
constexpr double kNarulaTol = 1e-9;
constexpr double kMpTol = 1e-10;
constexpr double kEuler = std::numbers::egamma;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr std::uint64_t kMonteCarloSeed = 0x6c6f6732ULL;
constexpr std::size_t kMonteCarloDraws = 10'000'000;

} // namespace

double wyner_capacity_nonfading(double P, double alpha)
{
    return wyner_capacity_large_k(P, alpha, 1.0, 1.0);
}

double wyner_capacity_large_k(double P, double alpha, double m2, cplx mu)
{
    double const mean2 = std::norm(mu);
    double const sigma2 = m2 - mean2;
    if (sigma2 < -1e-12 * std::max(1.0, m2))
        throw std::invalid_argument("wyner_capacity_large_k: m2 < |mu|^2");
    if (P == 0.0)
        return 0.0;
    double const diffuse = std::max(sigma2, 0.0) * (1.0 + 2.0 * alpha * alpha);
    if (mean2 == 0.0 || alpha == 0.0)
        return std::log1p(P * (diffuse + mean2));
    auto integrand = [&](double f) {
        double const g = 1.0 + 2.0 * alpha * std::cos(kTwoPi * f);
        return std::log1p(P * (diffuse + mean2 * g * g));
    };
    // The symbol is even about f = 1/2.
    return 2.0 * integrate(integrand, 0.0, 0.5, 0.5 * kCapacityTol).value;
}

LimitingMoments limiting_moments(double m2, double m4, double m6, double alpha)
{
    double const a2 = alpha * alpha;
    double const a4 = a2 * a2;
    double const a6 = a4 * a2;
    double const m2sq = m2 * m2;
    double const m2cu = m2sq * m2;
    LimitingMoments M;
    M.m1 = m2 + 2.0 * m2 * a2;
    M.m2 = m4 + 8.0 * m2sq * a2 + (4.0 * m2sq + 2.0 * m4) * a4;
    M.m3 = m6 + (6.0 * m2cu + 12.0 * m2 * m4) * a2 + (36.0 * m2cu + 12.0 * m2 * m4) * a4 +
           (6.0 * m2cu + 12.0 * m2 * m4 + 2.0 * m6) * a6;
    return M;
}

double exp_integral_scaled(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("exp_integral: x must be > 0");
    if (x <= 1.0)
    {
        // E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
        double term = 1.0;
        double sum = 0.0;
        for (int k = 1; k < 200; ++k)
        {
            term *= -x / k;
            double const add = term / k;
            sum += add;
            if (std::abs(add) < 1e-17 * std::abs(sum))
                break;
        }
        return std::exp(x) * (-kEuler - std::log(x) - sum);
    }
    // Continued fraction, modified Lentz.
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i)
    {
        double const an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        double const del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            break;
    }
    return h;
}

double exp_integral(double x)
{
    return exp_integral_scaled(x) * std::exp(-x);
}

double narula_stationary_pdf(double x, double pbar)
{
    if (!(pbar > 0.0))
        throw std::domain_error("narula_stationary_pdf: pbar must be > 0");
    if (x < 1.0)
        return 0.0;
    // log(x) e^{-x/P} / (E1(1/P) P), with e^{-1/P} factored out of both.
    return std::log(x) * std::exp(-(x - 1.0) / pbar) / (exp_integral_scaled(1.0 / pbar) * pbar);
}

double narula_stationary_cdf(double x, double pbar)
{
    if (!(pbar > 0.0))
        throw std::domain_error("narula_stationary_cdf: pbar must be > 0");
    if (x <= 1.0)
        return 0.0;
    double const decay = std::exp(-(x - 1.0) / pbar);
    double const tail = decay * (std::log(x) + exp_integral_scaled(x / pbar));
    return 1.0 - tail / exp_integral_scaled(1.0 / pbar);
}

double narula_capacity(double pbar)
{
    if (!(pbar > 0.0))
        throw std::domain_error("narula_capacity: pbar must be > 0");
    // x = 1 + pbar t turns the integral into int_0^inf log(1 + pbar t)^2 e^{-t} dt
    // divided by e^{1/P} E1(1/P).
    auto integrand = [&](double t) {
        double const l = std::log1p(pbar * t);
        return l * l * std::exp(-t);
    };
    double const norm = exp_integral_scaled(1.0 / pbar);
    return integrate_to_infinity(integrand, 0.0, kNarulaTol * norm).value / norm;
}

LowSnrParams low_snr_params(int K, double alpha, double m2, double m4)
{
    if (!(m2 > 0.0))
        throw std::invalid_argument("low_snr_params: m2 must be > 0");
    if (K < 1)
        throw std::invalid_argument("low_snr_params: K must be >= 1");
    double const a2 = alpha * alpha;
    double const a4 = a2 * a2;
    double const kurt = m4 / (m2 * m2);
    double const spread = 1.0 + 2.0 * a2;
    LowSnrParams p;
    p.eb_n0_min = std::numbers::ln2 / (m2 * spread);
    p.s0 = 2.0 * K * spread * spread / (kurt + K - 1.0 + 4.0 * (1.0 + K) * a2 + 2.0 * (kurt + 2.0 * K) * a4);
    return p;
}

MeanLog2 mean_log2_amplitude(FadingSpec const& spec)
{
    switch (spec.kind())
    {
    case FadingKind::Deterministic:
    case FadingKind::UniformPhaseUnit:
        return {0.0, 0.0};
    case FadingKind::ComplexGaussianUnit:
        // E ln|h|^2 = -gamma for |h|^2 ~ Exp(1).
        return {-kEuler / (2.0 * std::numbers::ln2), 0.0};
    case FadingKind::Rician:
        break;
    }
    if (spec.s2() == 0.0)
    {
        if (std::abs(spec.nu()) == 0.0)
            throw std::domain_error("mean_log2_amplitude: atom at zero, offset diverges");
        return {std::log2(std::abs(spec.nu())), 0.0};
    }
    RandomStream rng = derive_stream(kMonteCarloSeed, 0);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t n = 1; n <= kMonteCarloDraws; ++n)
    {
        double const v = 0.5 * std::log2(std::norm(sample(spec, rng)));
        double const delta = v - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (v - mean);
    }
    double const var = m2 / static_cast<double>(kMonteCarloDraws - 1);
    return {mean, std::sqrt(var / static_cast<double>(kMonteCarloDraws))};
}

HighSnrParams high_snr_params(FadingSpec const& pi_a, FadingSpec const& pi_b)
{
    MeanLog2 const a = mean_log2_amplitude(pi_a);
    MeanLog2 const b = mean_log2_amplitude(pi_b);
    MeanLog2 const& top = a.value >= b.value ? a : b;
    return {1.0, 0.0 - 2.0 * top.value, 2.0 * top.std_err};
}

double marchenko_pastur_pdf(double x, int K, double sigma2)
{
    if (K < 1 || !(sigma2 > 0.0))
        throw std::invalid_argument("marchenko_pastur: need K >= 1 and sigma2 > 0");
    double const y = 1.0 / K;
    double const lo = sigma2 * (1.0 - std::sqrt(y)) * (1.0 - std::sqrt(y));
    double const hi = sigma2 * (1.0 + std::sqrt(y)) * (1.0 + std::sqrt(y));
    if (x <= lo || x >= hi || x <= 0.0)
        return 0.0;
    return std::sqrt((hi - x) * (x - lo)) / (kTwoPi * sigma2 * y * x);
}

double marchenko_pastur_cdf(double x, int K, double sigma2)
{
    if (K < 1 || !(sigma2 > 0.0))
        throw std::invalid_argument("marchenko_pastur: need K >= 1 and sigma2 > 0");
    double const y = 1.0 / K;
    double const lo = sigma2 * (1.0 - std::sqrt(y)) * (1.0 - std::sqrt(y));
    double const hi = sigma2 * (1.0 + std::sqrt(y)) * (1.0 + std::sqrt(y));
    if (x <= lo)
        return 0.0;
    if (x >= hi)
        return 1.0;
    // x = center + radius sin(phi) removes the square-root edges; the
    // integrand stays smooth even when lo = 0 (K = 1).
    double const center = 0.5 * (lo + hi);
    double const radius = 0.5 * (hi - lo);
    double const scale = radius * radius / (kTwoPi * sigma2 * y);
    auto integrand = [&](double phi) {
        double const c = std::cos(phi);
        return scale * c * c / (center + radius * std::sin(phi));
    };
    double const phi_x = std::asin(std::clamp((x - center) / radius, -1.0, 1.0));
    double const F = integrate(integrand, -0.5 * std::numbers::pi, phi_x, kMpTol).value;
    return std::clamp(F, 0.0, 1.0);
}

} // namespace bandspec
