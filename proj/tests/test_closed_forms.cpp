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
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/expint.hpp>

#include "bandspec/closed_forms.hpp"
#include "bandspec/quadrature.hpp"
#include "bandspec/spectral.hpp"

using namespace bandspec;

namespace {

double const kGamma = 0.57721566490153286061;

// Composite Simpson on [0, 1] with 2^20 panels.
template <class F>
double simpson(F f)
{
    std::size_t const n = std::size_t{1} << 20;
    double const h = 1.0 / n;
    double s = f(0.0) + f(1.0);
    for (std::size_t i = 1; i < n; ++i)
        s += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return s * h / 3.0;
}

} // namespace

TEST_CASE("adaptive quadrature")
{
    auto const r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    auto const e = integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0, 1e-12);
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-11));
    auto const g = integrate_to_infinity([](double x) { return x * x * std::exp(-x); }, 2.0, 1e-12);
    CHECK(g.value == doctest::Approx(10.0 * std::exp(-2.0)).epsilon(1e-11));
}

TEST_CASE("non-fading Wyner capacity against Simpson")
{
    for (double alpha : {0.0, 0.3, 0.5, 1.0})
        for (double P : {0.1, 10.0, 1000.0})
        {
            auto f = [&](double t) {
                double const s = 1 + 2 * alpha * std::cos(2 * std::numbers::pi * t);
                return std::log1p(P * s * s);
            };
            CAPTURE(alpha);
            CAPTURE(P);
            CHECK(wyner_capacity_nonfading(P, alpha) == doctest::Approx(simpson(f)).epsilon(1e-9));
        }
    CHECK(wyner_capacity_nonfading(7.0, 0.0) == doctest::Approx(std::log(8.0)));
}

TEST_CASE("large-K capacity")
{
    CHECK(wyner_capacity_large_k(10.0, 0.5, 1.0, 0.0) == doctest::Approx(std::log(16.0)));
    // Rician nu = 0.8, s2 = 0.36.
    double const P = 10.0, alpha = 0.5;
    auto f = [&](double t) {
        double const s = 1 + 2 * alpha * std::cos(2 * std::numbers::pi * t);
        return std::log1p(P * (0.36 * (1 + 2 * alpha * alpha) + 0.64 * s * s));
    };
    CHECK(wyner_capacity_large_k(P, alpha, 1.0, 0.8) == doctest::Approx(simpson(f)).epsilon(1e-9));
    // No diffuse part: reduces to the non-fading symbol.
    CHECK(wyner_capacity_large_k(P, alpha, 1.0, 1.0) == doctest::Approx(wyner_capacity_nonfading(P, alpha)).epsilon(1e-10));
}

TEST_CASE("limiting moments")
{
    // Unit modulus at alpha = 1.
    auto const U = limiting_moments(1, 1, 1, 1.0);
    CHECK(U.m1 == doctest::Approx(3));
    CHECK(U.m2 == doctest::Approx(15));
    for (double alpha : {0.3, 0.7})
    {
        auto const R = limiting_moments(1, 2, 6, alpha);
        double const a2 = alpha * alpha, a4 = a2 * a2;
        CHECK(R.m1 == doctest::Approx(1 + 2 * a2));
        // Second moment by summing E|A_ij|^2 over one interior row.
        CHECK(R.m2 == doctest::Approx(2 * (1 + 2 * a4) + 8 * a2 + 4 * a4));
    }
}

TEST_CASE("limiting moments against sampled trace moments")
{
    double const alpha = 0.7;
    auto const p = ChannelParams::wyner(4000, 1, alpha, alpha, FadingSpec::rayleigh());
    double s3 = 0.0;
    int const reps = 20;
    for (int r = 0; r < reps; ++r)
    {
        auto rng = derive_stream(99, r);
        s3 += trace_moment(gram(generate_channel(p, rng)), 3);
    }
    CHECK(s3 / reps == doctest::Approx(limiting_moments(1, 2, 6, alpha).m3).epsilon(0.02));
}

TEST_CASE("exponential integral")
{
    for (double x : {1e-6, 0.01, 0.5, 1.0, 1.5, 2.0, 5.0, 30.0, 200.0})
    {
        CAPTURE(x);
        CHECK(exp_integral(x) == doctest::Approx(boost::math::expint(1, x)).epsilon(1e-13));
        CHECK(exp_integral_scaled(x) == doctest::Approx(std::exp(x) * boost::math::expint(1, x)).epsilon(1e-12));
    }
    CHECK(exp_integral(1.0) == doctest::Approx(0.21938393439552).epsilon(1e-12));
    // e^x E1(x) ~ 1/x - 1/x^2 + 2/x^3 for large x.
    double const x = 1e4;
    CHECK(exp_integral_scaled(x) == doctest::Approx(1 / x - 1 / (x * x) + 2 / (x * x * x)).epsilon(1e-10));
    CHECK_THROWS_AS(exp_integral(0.0), std::domain_error);
}

TEST_CASE("stationary pivot density")
{
    boost::math::quadrature::exp_sinh<double> half_line;
    for (double P : {0.5, 1.0, 10.0, 100.0})
    {
        CAPTURE(P);
        auto pdf = [P](double t) { return narula_stationary_pdf(1.0 + t, P); };
        CHECK(half_line.integrate(pdf) == doctest::Approx(1.0).epsilon(1e-10));
        for (double x : {1.5, 3.0, 20.0})
        {
            boost::math::quadrature::tanh_sinh<double> ts;
            double const F = ts.integrate([P](double y) { return narula_stationary_pdf(y, P); }, 1.0, x);
            CHECK(narula_stationary_cdf(x, P) == doctest::Approx(F).epsilon(1e-10));
        }
        auto logpdf = [P](double t) { return std::log1p(t) * narula_stationary_pdf(1.0 + t, P); };
        CHECK(narula_capacity(P) == doctest::Approx(half_line.integrate(logpdf)).epsilon(1e-9));
    }
    CHECK(narula_stationary_pdf(0.5, 1.0) == 0.0);
    CHECK(narula_stationary_cdf(1.0, 1.0) == 0.0);
}

TEST_CASE("low-SNR parameters")
{
    auto const det = low_snr_params(1, 0.0, 1.0, 1.0);
    CHECK(det.eb_n0_min == doctest::Approx(std::numbers::ln2));
    CHECK(det.s0 == doctest::Approx(2.0));
    auto const ray = low_snr_params(1, 0.0, 1.0, 2.0);
    CHECK(ray.s0 == doctest::Approx(1.0));
    CHECK(low_snr_params(2, 0.5, 1.0, 2.0).eb_n0_min == doctest::Approx(std::numbers::ln2 / 1.5));
}

TEST_CASE("low-SNR slope from sampled trace moments")
{
    // S0 = 2 M1^2 / M2 with M the moments of the unnormalized gram.
    std::size_t const K = 2;
    double const alpha = 0.5;
    auto const p = ChannelParams::wyner(3000, K, alpha, alpha, FadingSpec::rayleigh());
    double m1 = 0.0, m2 = 0.0;
    int const reps = 20;
    for (int r = 0; r < reps; ++r)
    {
        auto rng = derive_stream(123, r);
        auto const A = gram(generate_channel(p, rng));
        m1 += trace_moment(A, 1) / reps;
        m2 += trace_moment(A, 2) / reps;
    }
    CHECK(low_snr_params(K, alpha, 1.0, 2.0).s0 == doctest::Approx(2 * m1 * m1 / m2).epsilon(0.01));
}

TEST_CASE("high-SNR parameters")
{
    auto const r = high_snr_params(FadingSpec::rayleigh(), FadingSpec::rayleigh());
    CHECK(r.s_inf == 1.0);
    CHECK(r.l_inf == doctest::Approx(kGamma / std::numbers::ln2));
    CHECK(high_snr_params(FadingSpec::uniform_phase(), FadingSpec::uniform_phase()).l_inf == 0.0);
    CHECK(high_snr_params(FadingSpec::deterministic(), FadingSpec::rayleigh()).l_inf == 0.0);
    auto const m = mean_log2_amplitude(FadingSpec::rician(0.0, 1.0));
    CHECK(m.value == doctest::Approx(-kGamma / (2 * std::numbers::ln2)).epsilon(1e-3));
    CHECK_THROWS_AS(mean_log2_amplitude(FadingSpec::rician(0.0, 0.0)), std::domain_error);
}

TEST_CASE("Marchenko-Pastur reference")
{
    boost::math::quadrature::tanh_sinh<double> ts;
    for (int K : {1, 4})
        for (double s2 : {1.0, 2.0})
        {
            double const y = 1.0 / K;
            double const lo = s2 * std::pow(1 - std::sqrt(y), 2), hi = s2 * std::pow(1 + std::sqrt(y), 2);
            auto pdf = [&](double x) { return marchenko_pastur_pdf(x, K, s2); };
            CHECK(ts.integrate(pdf, lo, hi) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(ts.integrate([&](double x) { return x * pdf(x); }, lo, hi) == doctest::Approx(s2).epsilon(1e-9));
            for (double frac : {0.1, 0.5, 0.9})
            {
                double const x = lo + frac * (hi - lo);
                CHECK(marchenko_pastur_cdf(x, K, s2) == doctest::Approx(ts.integrate(pdf, lo, x)).epsilon(1e-9));
            }
            CHECK(marchenko_pastur_cdf(hi + 1, K, s2) == 1.0);
            CHECK(marchenko_pastur_cdf(lo - 0.1, K, s2) == 0.0);
        }
}
